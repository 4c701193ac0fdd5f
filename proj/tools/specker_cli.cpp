// Command-line front end for the Specker-lattice library: evaluates
// vector-lattice expressions over named generators and runs the library's
// property suites. JSON in/out mirrors the library serialization exactly.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "specker/checks.hpp"
#include "specker/enumerate.hpp"
#include "specker/error.hpp"
#include "specker/serialize.hpp"
#include "specker/term.hpp"

namespace {

using namespace specker;

struct CommonOptions {
  int atoms = -1;
  int generators = -1;
  std::string term_text;
  std::string input_path;
  bool json = false;
  std::uint64_t seed = 1;
  int cases = 200;
};

void add_context_flags(CLI::App* cmd, CommonOptions& opt, bool with_term) {
  cmd->add_option("--atoms", opt.atoms, "evaluate in H(B_k) with one generator per atom");
  cmd->add_option("--generators", opt.generators, "evaluate in the free lattice on n generators");
  cmd->add_flag("--json", opt.json, "machine-readable output");
  if (with_term) {
    cmd->add_option("term", opt.term_text, "expression over u, g0..g(n-1)");
    cmd->add_option("--input", opt.input_path, "read the element from a JSON file instead");
  }
}

struct EvalContext {
  LatticeContext context;
  int generator_count;
};

EvalContext make_context(const CommonOptions& opt) {
  if (opt.atoms >= 0 && opt.generators >= 0) {
    throw PreconditionError("--atoms and --generators are mutually exclusive");
  }
  if (opt.generators >= 0) {
    FreeLattice f = free_uha(opt.generators);
    return {{f.lattice, f.generators}, f.generator_count};
  }
  int atoms = opt.atoms >= 0 ? opt.atoms : 3;
  LatticeContext ctx = atom_context(make_algebra(atoms));
  return {ctx, atoms};
}

SpeckerElement load_element(const CommonOptions& opt, const EvalContext& ctx,
                            std::string* shown_term) {
  if (!opt.input_path.empty()) {
    std::ifstream in(opt.input_path);
    if (!in) throw Error("cannot open " + opt.input_path);
    Json j = Json::parse(in);
    SpeckerElement v = specker_element_from_json(j);
    if (v.algebra() != ctx.context.lattice.base()) {
      throw AlgebraMismatchError("input element does not match the requested context");
    }
    return v;
  }
  if (opt.term_text.empty()) throw PreconditionError("a term or --input file is required");
  Term t = parse_term(opt.term_text, ctx.generator_count);
  if (shown_term) *shown_term = print_term(t);
  return eval_term(t, ctx.context);
}

std::string valuation_str(const SpeckerElement& v) {
  std::string s = "[";
  AtomValuation a = to_atom_valuation(v);
  for (int i = 0; i < v.algebra().atom_count(); ++i) {
    if (i > 0) s += ", ";
    s += a.at(i).str();
  }
  s += ']';
  return s;
}

Json valuation_json(const SpeckerElement& v) {
  Json out = Json::array();
  AtomValuation a = to_atom_valuation(v);
  for (const Rational& r : a.values()) out.push_back(r.str());
  return out;
}

int run_eval(const CommonOptions& opt) {
  EvalContext ctx = make_context(opt);
  std::string shown;
  SpeckerElement v = load_element(opt, ctx, &shown);
  if (opt.json) {
    Json out{{"result", to_json(v)}, {"valuation", valuation_json(v)}};
    if (!shown.empty()) out["term"] = shown;
    std::cout << out.dump() << "\n";
    return 0;
  }
  if (!shown.empty()) std::cout << "term: " << shown << "\n";
  std::cout << "result: " << v.str() << "\n";
  std::cout << "valuation: " << valuation_str(v) << "\n";
  return 0;
}

int run_decompose(const CommonOptions& opt) {
  EvalContext ctx = make_context(opt);
  std::string shown;
  SpeckerElement v = load_element(opt, ctx, &shown);
  std::vector<DecompositionTerm> terms = minimal_decomposition(v);
  if (opt.json) {
    Json list = Json::array();
    for (const DecompositionTerm& term : terms) {
      list.push_back(Json{{"coefficient", term.coefficient.str()},
                          {"indicator", to_json(term.indicator)}});
    }
    Json out{{"k", terms.size()}, {"terms", std::move(list)}};
    if (!shown.empty()) out["term"] = shown;
    std::cout << out.dump() << "\n";
    return 0;
  }
  if (!shown.empty()) std::cout << "term: " << shown << "\n";
  std::cout << "k: " << terms.size() << "\n";
  EtaIso iso = eta(ctx.context.lattice.base());
  for (const DecompositionTerm& term : terms) {
    std::cout << term.coefficient.str() << " * chi" << iso.forward(term.indicator).str() << "\n";
  }
  return 0;
}

int run_witness(const CommonOptions& opt) {
  EvalContext ctx = make_context(opt);
  std::string shown;
  SpeckerElement v = load_element(opt, ctx, &shown);
  std::int64_t n = hyperarchimedean_witness(v);
  SpeckerElement boolean = meet(Rational(n) * abs_val(v), ctx.context.lattice.unit());
  if (opt.json) {
    Json out{{"witness", n}, {"boolean", to_json(boolean)}};
    if (!shown.empty()) out["term"] = shown;
    std::cout << out.dump() << "\n";
    return 0;
  }
  if (!shown.empty()) std::cout << "term: " << shown << "\n";
  std::cout << "witness: " << n << "\n";
  std::cout << "boolean: " << boolean.str() << "\n";
  return 0;
}

int run_boolean(const CommonOptions& opt) {
  EvalContext ctx = make_context(opt);
  std::string shown;
  SpeckerElement v = load_element(opt, ctx, &shown);
  bool result = is_boolean_element(v);
  if (opt.json) {
    Json out{{"boolean", result}};
    if (!shown.empty()) out["term"] = shown;
    std::cout << out.dump() << "\n";
    return 0;
  }
  if (!shown.empty()) std::cout << "term: " << shown << "\n";
  std::cout << "boolean: " << (result ? "true" : "false") << "\n";
  return 0;
}

int run_roundtrip(const CommonOptions& opt) {
  int atoms = opt.atoms >= 0 ? opt.atoms : 3;
  BooleanAlgebra algebra = make_algebra(atoms);
  SpeckerLattice lattice(algebra);
  EtaIso eta_iso = eta(algebra);
  EpsilonIso eps_iso = epsilon(lattice);

  // Exhaustive below 5 atoms; seeded samples beyond, where the universes
  // grow as 2^k and 6^k.
  bool exhaustive = atoms <= 4;
  Sampler sampler(opt.seed);

  long eta_total = 0;
  long eta_good = 0;
  bool eta_ops = true;
  std::vector<Element> universe;
  if (exhaustive) {
    universe = all_elements(algebra);
  } else {
    for (int i = 0; i < 64; ++i) universe.push_back(sampler.element(algebra));
  }
  for (const Element& b : universe) {
    ++eta_total;
    if (eta_iso.forward(eta_iso.inverse(b)) == b) ++eta_good;
    for (const Element& c : universe) {
      eta_ops = eta_ops &&
                eta_iso.forward(meet(eta_iso.inverse(b), eta_iso.inverse(c))) == meet(b, c) &&
                eta_iso.forward(join(eta_iso.inverse(b), eta_iso.inverse(c))) == join(b, c);
    }
    eta_ops = eta_ops &&
              eta_iso.forward(lattice.unit() - eta_iso.inverse(b)) == complement(b);
  }

  long eps_total = 0;
  long eps_good = 0;
  std::vector<SpeckerElement> eps_universe;
  if (exhaustive) {
    eps_universe = all_grid_elements(algebra, default_value_grid());
  } else {
    for (int i = 0; i < opt.cases; ++i) eps_universe.push_back(sampler.specker_element(algebra, 4, 6));
  }
  for (const SpeckerElement& w : eps_universe) {
    ++eps_total;
    if (eps_iso.forward(eps_iso.inverse(eps_iso.forward(w))) == eps_iso.forward(w) &&
        eps_iso.inverse(eps_iso.forward(w)) == w) {
      ++eps_good;
    }
  }

  bool natural = check_naturality(BoolHom::identity(algebra)) &&
                 check_naturality(SpeckerMorphism::identity(lattice));
  bool pass = eta_good == eta_total && eta_ops && eps_good == eps_total && natural;

  if (opt.json) {
    Json out{{"atoms", atoms},
             {"eta_identities", Json{{"passed", eta_good}, {"total", eta_total}}},
             {"eta_operations", eta_ops},
             {"epsilon_identities", Json{{"passed", eps_good}, {"total", eps_total}}},
             {"naturality", natural},
             {"pass", pass}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "algebra: " << atoms << " atoms\n";
    std::cout << "eta identities: " << eta_good << "/" << eta_total << "\n";
    std::cout << "eta preserves operations: " << (eta_ops ? "yes" : "no") << "\n";
    std::cout << "epsilon identities: " << eps_good << "/" << eps_total << "\n";
    std::cout << "naturality squares (identity): " << (natural ? "yes" : "no") << "\n";
    std::cout << "roundtrip: " << (pass ? "pass" : "fail") << "\n";
  }
  return pass ? 0 : 1;
}

int run_free(const CommonOptions& opt) {
  int n = opt.generators >= 0 ? opt.generators : 2;
  FreeLattice f = free_uha(n);
  if (opt.json) {
    Json gens = Json::array();
    for (const SpeckerElement& g : f.generators) gens.push_back(to_json(g));
    std::cout << Json{{"generators", n},
                      {"base_atoms", f.lattice.base().atom_count()},
                      {"dimension", f.lattice.dimension()},
                      {"generator_elements", std::move(gens)}}
                     .dump()
              << "\n";
    return 0;
  }
  std::cout << "generators: " << n << "\n";
  std::cout << "base atoms: " << f.lattice.base().atom_count() << "\n";
  std::cout << "dimension: " << f.lattice.dimension() << "\n";
  std::cout << "note: dimension is the valuation dimension 2^n of the free construction,"
               " one coordinate per atom, not the generator count\n";
  for (int i = 0; i < n; ++i) {
    std::cout << "g" << i << " = " << f.generators[i].str() << "\n";
  }
  return 0;
}

int run_polar(const CommonOptions& opt) {
  EvalContext ctx = make_context(opt);
  std::string shown;
  SpeckerElement v = load_element(opt, ctx, &shown);
  PolarDescriptor polar = principal_polar(v);
  if (opt.json) {
    Json out = to_json(polar);
    if (!shown.empty()) out["term"] = shown;
    std::cout << out.dump() << "\n";
    return 0;
  }
  if (!shown.empty()) std::cout << "term: " << shown << "\n";
  std::cout << "generator: " << polar.generator().str() << "\n";
  return 0;
}

int run_factor(const CommonOptions& opt, const std::string& u1_text,
               const std::string& u2_text) {
  EvalContext ctx = make_context(opt);
  std::string shown;
  SpeckerElement v = load_element(opt, ctx, &shown);
  SpeckerElement u1 = eval_term(parse_term(u1_text, ctx.generator_count), ctx.context);
  SpeckerElement u2 = u2_text.empty()
                          ? ctx.context.lattice.unit() - u1
                          : eval_term(parse_term(u2_text, ctx.generator_count), ctx.context);
  DirectFactorDecomposition decomposition =
      direct_factor_decomposition(ctx.context.lattice, u1, u2);
  auto [v1, v2] = decomposition.masked_parts(v);
  SpeckerElement split = decomposition.split(v);
  if (opt.json) {
    Json out{{"part1", to_json(v1)},
             {"part2", to_json(v2)},
             {"split", to_json(split)},
             {"factor1_atoms", decomposition.factors().factor1().base().atom_count()},
             {"factor2_atoms", decomposition.factors().factor2().base().atom_count()}};
    if (!shown.empty()) out["term"] = shown;
    std::cout << out.dump() << "\n";
    return 0;
  }
  if (!shown.empty()) std::cout << "term: " << shown << "\n";
  std::cout << "part1: " << v1.str() << "\n";
  std::cout << "part2: " << v2.str() << "\n";
  std::cout << "split: " << split.str() << "\n";
  return 0;
}

int run_dual(const CommonOptions& opt) {
  if (opt.input_path.empty()) throw PreconditionError("--input morphism.json is required");
  std::ifstream in(opt.input_path);
  if (!in) throw Error("cannot open " + opt.input_path);
  SpeckerMorphism g = specker_morphism_from_json(Json::parse(in));
  SpectralMap dual = dual_map(g);
  if (opt.json) {
    Json pairs = Json::array();
    for (const MaxIdeal& m : max_spectrum(g.target())) {
      pairs.push_back(Json{{"target_atom", m.atom}, {"source_atom", dual(m).atom}});
    }
    std::cout << Json{{"map", std::move(pairs)}}.dump() << "\n";
    return 0;
  }
  std::cout << "dual map: Max(target, " << g.target().base().atom_count()
            << " atoms) -> Max(source, " << g.source().base().atom_count() << " atoms)\n";
  for (const MaxIdeal& m : max_spectrum(g.target())) {
    std::cout << "atom " << m.atom << " -> atom " << dual(m).atom << "\n";
  }
  return 0;
}

int run_checks_cmd(const CommonOptions& opt, const std::string& name) {
  CheckOptions check_opt{.seed = opt.seed, .cases = opt.cases,
                         .atoms = opt.atoms >= 0 ? opt.atoms : 3};
  std::vector<CheckResult> results;
  if (name == "all") {
    results = run_all_checks(check_opt);
  } else {
    results.push_back(run_check(name, check_opt));
  }
  bool all_pass = true;
  Json list = Json::array();
  for (const CheckResult& r : results) {
    all_pass = all_pass && r.passed;
    if (opt.json) {
      list.push_back(Json{{"name", r.name},
                          {"passed", r.passed},
                          {"cases", r.cases_run},
                          {"detail", r.detail}});
    } else {
      std::cout << "check " << r.name << ": " << (r.passed ? "pass" : "fail") << " ("
                << r.cases_run << " cases)";
      if (!r.passed) std::cout << " - " << r.detail;
      std::cout << "\n";
    }
  }
  if (opt.json) std::cout << Json{{"checks", std::move(list)}, {"pass", all_pass}}.dump() << "\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Specker-lattice calculator over finite Boolean algebras"};
  app.require_subcommand(1);

  CommonOptions opt;
  std::string u1_text;
  std::string u2_text;
  std::string check_name = "all";

  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a term");
  add_context_flags(eval_cmd, opt, true);

  CLI::App* decompose_cmd =
      app.add_subcommand("decompose", "shortest linear combination of Boolean indicators");
  add_context_flags(decompose_cmd, opt, true);

  CLI::App* witness_cmd =
      app.add_subcommand("witness", "least n with n*|v| /\\ u Boolean");
  add_context_flags(witness_cmd, opt, true);

  CLI::App* boolean_cmd = app.add_subcommand("boolean", "test for a Boolean element");
  add_context_flags(boolean_cmd, opt, true);

  CLI::App* roundtrip_cmd =
      app.add_subcommand("roundtrip", "verify the two natural isomorphisms on an algebra");
  roundtrip_cmd->add_option("--atoms", opt.atoms, "atom count (default 3)");
  roundtrip_cmd->add_option("--seed", opt.seed, "random seed (sampled mode, > 4 atoms)");
  roundtrip_cmd->add_option("--cases", opt.cases, "sample count (sampled mode)");
  roundtrip_cmd->add_flag("--json", opt.json, "machine-readable output");

  CLI::App* free_cmd = app.add_subcommand("free", "build a free lattice and report its size");
  free_cmd->add_option("--generators", opt.generators, "generator count (default 2)");
  free_cmd->add_flag("--json", opt.json, "machine-readable output");

  CLI::App* polar_cmd = app.add_subcommand("polar", "Boolean generator of the principal polar");
  add_context_flags(polar_cmd, opt, true);

  CLI::App* factor_cmd =
      app.add_subcommand("factor", "split along a complementary pair of Boolean elements");
  add_context_flags(factor_cmd, opt, true);
  factor_cmd->add_option("--u1", u1_text, "first Boolean part (term)")->required();
  factor_cmd->add_option("--u2", u2_text, "second Boolean part (default: u - u1)");

  CLI::App* dual_cmd = app.add_subcommand("dual", "dual map of a morphism on maximal spectra");
  dual_cmd->add_option("--input", opt.input_path, "morphism JSON file")->required();
  dual_cmd->add_flag("--json", opt.json, "machine-readable output");

  CLI::App* check_cmd = app.add_subcommand("check", "run a named property suite");
  check_cmd->add_option("suite", check_name, "suite name or \"all\"");
  check_cmd->add_option("--seed", opt.seed, "random seed");
  check_cmd->add_option("--cases", opt.cases, "sample count");
  check_cmd->add_option("--atoms", opt.atoms, "exhaustive bound");
  check_cmd->add_flag("--json", opt.json, "machine-readable output");
  check_cmd->add_flag_callback("--list", [] {
    for (const std::string& name : specker::check_suite_names()) std::cout << name << "\n";
    std::exit(0);
  });

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval_cmd->parsed()) return run_eval(opt);
    if (decompose_cmd->parsed()) return run_decompose(opt);
    if (witness_cmd->parsed()) return run_witness(opt);
    if (boolean_cmd->parsed()) return run_boolean(opt);
    if (roundtrip_cmd->parsed()) return run_roundtrip(opt);
    if (free_cmd->parsed()) return run_free(opt);
    if (polar_cmd->parsed()) return run_polar(opt);
    if (factor_cmd->parsed()) return run_factor(opt, u1_text, u2_text);
    if (dual_cmd->parsed()) return run_dual(opt);
    if (check_cmd->parsed()) return run_checks_cmd(opt, check_name);
  } catch (const specker::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const specker::Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
