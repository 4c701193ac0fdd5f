#include "specker/checks.hpp"

#include <functional>
#include <map>
#include <set>

#include "specker/enumerate.hpp"
#include "specker/error.hpp"
#include "specker/free.hpp"
#include "specker/spectra.hpp"
#include "specker/structure.hpp"

namespace specker {

namespace {

/// Collects pass/fail state plus the first failure for the report.
struct Tally {
  long cases = 0;
  bool ok = true;
  std::string detail;

  void expect(bool condition, const std::string& what) {
    ++cases;
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::vector<BooleanAlgebra> small_algebras(int max_atoms) {
  std::vector<BooleanAlgebra> out;
  for (int k = 0; k <= max_atoms; ++k) out.push_back(make_algebra(k));
  return out;
}

Rational oracle_value(const SpeckerElement& v, int atom) { return v.value_at_atom(atom); }

void check_partitions(const CheckOptions& options, Tally& t) {
  for (const BooleanAlgebra& algebra : small_algebras(std::min(options.atoms, 4))) {
    std::vector<Partition> parts = all_partitions(algebra);
    for (const Partition& p1 : parts) {
      t.expect(common_refinement(p1, p1) == p1, "refinement not idempotent");
      t.expect(common_refinement(p1, Partition::singleton(algebra)) == p1,
               "singleton partition is not neutral");
      t.expect(refines(Partition::atoms(algebra), p1), "atom partition does not refine");
      for (const Partition& p2 : parts) {
        Partition r = common_refinement(p1, p2);
        t.expect(r == common_refinement(p2, p1), "refinement not commutative");
        t.expect(refines(r, p1) && refines(r, p2), "refinement does not refine inputs");
        for (const Partition& p3 : parts) {
          if (algebra.atom_count() > 3) break;  // associativity cube only at <= 3 atoms
          t.expect(common_refinement(r, p3) == common_refinement(p1, common_refinement(p2, p3)),
                   "refinement not associative");
          if (refines(p3, p1) && refines(p3, p2)) {
            t.expect(refines(p3, r), "common refinement is not the coarsest");
          }
        }
      }
    }
  }
}

void check_homs(const CheckOptions& options, Tally& t) {
  int bound = std::min(options.atoms, 3);
  for (const BooleanAlgebra& src : small_algebras(bound)) {
    for (const BooleanAlgebra& tgt : small_algebras(bound)) {
      for (const BoolHom& f : all_homs(src, tgt)) {
        std::vector<Element> universe = all_elements(src);
        t.expect(apply_hom(f, top(src)) == top(tgt), "hom does not preserve top");
        t.expect(apply_hom(f, bottom(src)) == bottom(tgt), "hom does not preserve bottom");
        for (const Element& x : universe) {
          t.expect(apply_hom(f, complement(x)) == complement(apply_hom(f, x)),
                   "hom does not preserve complement");
          for (const Element& y : universe) {
            t.expect(apply_hom(f, meet(x, y)) == meet(apply_hom(f, x), apply_hom(f, y)),
                     "hom does not preserve meet");
            t.expect(apply_hom(f, join(x, y)) == join(apply_hom(f, x), apply_hom(f, y)),
                     "hom does not preserve join");
          }
        }
        for (const Partition& p1 : all_partitions(src)) {
          for (const Partition& p2 : all_partitions(src)) {
            t.expect(refines(image_partition(f, common_refinement(p1, p2)),
                             image_partition(f, p1)),
                     "image of refinement does not refine image");
          }
        }
      }
    }
  }
}

void check_subalgebras(const CheckOptions& options, Tally& t) {
  Sampler sampler(options.seed);
  for (int i = 0; i < options.cases; ++i) {
    BooleanAlgebra algebra = make_algebra(1 + static_cast<int>(sampler.next(4)));
    std::vector<Element> gens;
    for (std::uint64_t g = sampler.next(4); g > 0; --g) gens.push_back(sampler.element(algebra));
    GeneratedSubalgebra sub = generated_subalgebra(algebra, gens);
    t.expect(sub.elements.size() == (std::size_t{1} << sub.atom_partition.size()),
             "generated subalgebra is not a power of two");
    std::set<AtomMask> members;
    for (const Element& e : sub.elements) members.insert(e.mask());
    for (const Element& g : gens) {
      t.expect(members.count(g.mask()) == 1, "generator missing from its subalgebra");
    }
    for (const Element& x : sub.elements) {
      t.expect(members.count(complement(x).mask()) == 1, "subalgebra not complement-closed");
    }
  }
}

void check_oracle(const CheckOptions& options, Tally& t) {
  for (const BooleanAlgebra& algebra : small_algebras(std::min(options.atoms, 3))) {
    std::vector<SpeckerElement> universe = all_grid_elements(algebra, default_value_grid());
    for (const SpeckerElement& v : universe) {
      for (const SpeckerElement& w : universe) {
        SpeckerElement sum = v + w;
        SpeckerElement lo = meet(v, w);
        SpeckerElement hi = join(v, w);
        for (int a = 0; a < algebra.atom_count(); ++a) {
          t.expect(oracle_value(sum, a) == oracle_value(v, a) + oracle_value(w, a),
                   "addition disagrees with the pointwise oracle");
          t.expect(oracle_value(lo, a) == min(oracle_value(v, a), oracle_value(w, a)),
                   "meet disagrees with the pointwise oracle");
          t.expect(oracle_value(hi, a) == max(oracle_value(v, a), oracle_value(w, a)),
                   "join disagrees with the pointwise oracle");
        }
      }
    }
  }
}

void check_lattice_axioms(const CheckOptions& options, Tally& t) {
  Sampler sampler(options.seed);
  for (int i = 0; i < options.cases; ++i) {
    BooleanAlgebra algebra = make_algebra(1 + static_cast<int>(sampler.next(6)));
    SpeckerElement v = sampler.specker_element(algebra, 4, 6);
    SpeckerElement w = sampler.specker_element(algebra, 4, 6);
    SpeckerElement x = sampler.specker_element(algebra, 4, 6);
    t.expect(v + w == w + v, "+ not commutative");
    t.expect((v + w) + x == v + (w + x), "+ not associative");
    t.expect(meet(v, w) == meet(w, v), "meet not commutative");
    t.expect(join(v, join(w, x)) == join(join(v, w), x), "join not associative");
    t.expect(meet(v, join(w, x)) == join(meet(v, w), meet(v, x)), "distributivity fails");
    t.expect(join(v, meet(v, w)) == v, "absorption fails");
    if (leq(v, w)) {
      t.expect(leq(v + x, w + x), "translation invariance fails");
      t.expect(leq(Rational(2) * v, Rational(2) * w), "positive scalar monotonicity fails");
    }
    t.expect(abs_val(v) == join(join(v, SpeckerElement::zero(algebra)),
                                -meet(v, SpeckerElement::zero(algebra))),
             "absolute value formula fails");
  }
}

void check_strong_unit(const CheckOptions& options, Tally& t) {
  Sampler sampler(options.seed);
  for (int i = 0; i < options.cases; ++i) {
    BooleanAlgebra algebra = make_algebra(1 + static_cast<int>(sampler.next(6)));
    SpeckerElement v = sampler.specker_element(algebra, 8, 6);
    SpeckerElement magnitude = abs_val(v);
    Rational top_value(0);
    for (const Rational& r : magnitude.values()) top_value = max(top_value, r);
    std::int64_t n = top_value.ceil();
    t.expect(leq(abs_val(v), Rational(n) * SpeckerElement::unit(algebra)),
             "ceil of max |value| does not bound the element");
  }
}

void check_hyperarchimedean(const CheckOptions& options, Tally& t) {
  Sampler sampler(options.seed);
  for (int i = 0; i < options.cases; ++i) {
    BooleanAlgebra algebra = make_algebra(static_cast<int>(sampler.next(7)));
    SpeckerElement v = sampler.specker_element(algebra, 6, 9);
    std::int64_t n = hyperarchimedean_witness(v);
    SpeckerElement u = SpeckerElement::unit(algebra);
    t.expect(is_boolean_element(meet(Rational(n) * abs_val(v), u)),
             "witness does not produce a Boolean element");
    t.expect(n == 1 || !is_boolean_element(meet(Rational(n - 1) * abs_val(v), u)),
             "witness is not least");
  }
}

void check_decomposition(const CheckOptions& options, Tally& t) {
  Sampler sampler(options.seed);
  for (int i = 0; i < options.cases; ++i) {
    BooleanAlgebra algebra = make_algebra(static_cast<int>(sampler.next(7)));
    SpeckerElement v = sampler.specker_element(algebra, 4, 6);
    SpeckerElement sum = SpeckerElement::zero(algebra);
    Rational previous;
    bool first = true;
    for (const DecompositionTerm& term : minimal_decomposition(v)) {
      t.expect(!term.coefficient.is_zero(), "zero coefficient in decomposition");
      t.expect(is_boolean_element(term.indicator), "non-Boolean indicator");
      t.expect(first || previous < term.coefficient, "coefficients not ascending");
      previous = term.coefficient;
      first = false;
      sum = sum + term.coefficient * term.indicator;
    }
    t.expect(sum == v, "decomposition does not reconstruct the element");
  }
}

void check_boolean_test(const CheckOptions& options, Tally& t) {
  for (const BooleanAlgebra& algebra : small_algebras(std::min(options.atoms, 3))) {
    SpeckerElement zero = SpeckerElement::zero(algebra);
    SpeckerElement u = SpeckerElement::unit(algebra);
    for (const SpeckerElement& v : all_grid_elements(algebra, default_value_grid())) {
      bool definitional = leq(zero, v) && leq(v, u) && meet(v, u - v) == zero;
      t.expect(is_boolean_element(v) == definitional,
               "range test disagrees with the definitional Boolean test");
    }
  }
}

void check_functor_laws(const CheckOptions& options, Tally& t) {
  int bound = std::min(options.atoms, 2);
  std::vector<BooleanAlgebra> algebras = small_algebras(bound);
  for (const BooleanAlgebra& a : algebras) {
    SpeckerMorphism id_lift = lift_hom(BoolHom::identity(a));
    for (const SpeckerElement& v : all_grid_elements(a, default_value_grid())) {
      t.expect(apply(id_lift, v) == v, "H(id) is not the identity");
    }
    t.expect(boolean_restriction(SpeckerMorphism::identity(SpeckerLattice(a))) ==
                 BoolHom::identity(a),
             "B(id) is not the identity");
  }
  for (const BooleanAlgebra& a : algebras) {
    for (const BooleanAlgebra& b : algebras) {
      for (const BooleanAlgebra& c : algebras) {
        for (const BoolHom& f1 : all_homs(a, b)) {
          for (const BoolHom& f2 : all_homs(b, c)) {
            SpeckerMorphism composite = lift_hom(compose(f2, f1));
            SpeckerMorphism chained = compose(lift_hom(f2), lift_hom(f1));
            for (const SpeckerElement& v : all_grid_elements(a, default_value_grid())) {
              t.expect(apply(composite, v) == apply(chained, v),
                       "H does not preserve composition");
            }
            t.expect(boolean_restriction(composite) == compose(f2, f1),
                     "B does not preserve composition");
          }
        }
      }
    }
  }
}

void check_naturality_suite(const CheckOptions& options, Tally& t) {
  int bound = std::min(options.atoms, 3);
  for (const BooleanAlgebra& src : small_algebras(bound)) {
    for (const BooleanAlgebra& tgt : small_algebras(bound)) {
      for (const BoolHom& f : all_homs(src, tgt)) {
        t.expect(check_naturality(f), "eta square does not commute");
        t.expect(check_naturality(lift_hom(f)), "epsilon square does not commute");
      }
    }
  }
  Sampler sampler(options.seed);
  for (int i = 0; i < options.cases; ++i) {
    BooleanAlgebra src = make_algebra(4 + static_cast<int>(sampler.next(3)));
    BooleanAlgebra tgt = make_algebra(1 + static_cast<int>(sampler.next(6)));
    BoolHom f = sampler.hom(src, tgt);
    NaturalityOptions nat{.seed = options.seed + i, .cases = 25, .exhaustive_atom_limit = 3};
    t.expect(check_naturality(f, nat), "eta square does not commute (sampled)");
    t.expect(check_naturality(lift_hom(f), nat), "epsilon square does not commute (sampled)");
  }
}

void check_yosida(const CheckOptions& options, Tally& t) {
  for (const BooleanAlgebra& algebra : small_algebras(std::min(options.atoms, 3))) {
    SpeckerLattice lattice(algebra);
    std::vector<MaxIdeal> spectrum = max_spectrum(lattice);
    t.expect(static_cast<int>(spectrum.size()) == algebra.atom_count(),
             "spectrum size differs from the atom count");
    std::vector<SpeckerElement> universe = all_grid_elements(algebra, default_value_grid());
    for (const SpeckerElement& v : universe) {
      for (const SpeckerElement& w : universe) {
        if (v == w) continue;
        bool separated = false;
        for (const MaxIdeal& m : spectrum) {
          if (yosida_eval(v, m) != yosida_eval(w, m)) separated = true;
        }
        t.expect(separated, "evaluation map is not injective");
      }
    }
  }
}

void check_spectral_maps(const CheckOptions& options, Tally& t) {
  int bound = std::min(options.atoms, 3);
  for (const BooleanAlgebra& src : small_algebras(bound)) {
    for (const BooleanAlgebra& tgt : small_algebras(bound)) {
      for (const BoolHom& f : all_homs(src, tgt)) {
        SpeckerMorphism g = lift_hom(f);
        SpectralMap dual = dual_map(g);
        // Injectivity / surjectivity of g, decided on the Boolean universe.
        std::set<AtomMask> images;
        bool injective = true;
        for (const Element& b : all_elements(src)) {
          Element image = apply_hom(f, b);
          if (!images.insert(image.mask()).second) injective = false;
        }
        bool surjective = images.size() == (std::size_t{1} << tgt.atom_count());
        std::set<int> dual_image;
        std::set<int> dual_seen;
        bool dual_injective = true;
        for (const MaxIdeal& m : max_spectrum(g.target())) {
          MaxIdeal pulled = dual(m);
          dual_image.insert(pulled.atom);
          if (!dual_seen.insert(pulled.atom).second) dual_injective = false;
        }
        bool dual_surjective = static_cast<int>(dual_image.size()) == src.atom_count();
        t.expect(injective == dual_surjective, "injective <=> dual surjective fails");
        t.expect(!surjective || dual_injective, "surjective => dual injective fails");
      }
    }
  }
}

void check_separation(const CheckOptions& options, Tally& t) {
  Sampler sampler(options.seed);
  for (int i = 0; i < options.cases; ++i) {
    BooleanAlgebra algebra = make_algebra(1 + static_cast<int>(sampler.next(3)));
    SpeckerLattice lattice(algebra);
    std::vector<SpeckerElement> elements;
    for (std::uint64_t k = sampler.next(4); k > 0; --k) {
      elements.push_back(sampler.specker_element(algebra, 2, 3));
    }
    EtaIso iso = eta(algebra);
    std::vector<Element> boolean_parts;
    for (const SpeckerElement& s : elements) {
      for (const SpeckerElement& b : booleanization(s)) boolean_parts.push_back(iso.forward(b));
    }
    bool full = generated_subalgebra(algebra, boolean_parts).atom_partition.size() ==
                algebra.atom_count();
    t.expect(separates_points(lattice, elements) == full,
             "separation does not match the generated Boolean subalgebra");
  }
}

void check_polars(const CheckOptions& options, Tally& t) {
  for (const BooleanAlgebra& algebra : small_algebras(std::min(options.atoms, 3))) {
    SpeckerLattice lattice(algebra);
    std::set<AtomMask> generators;
    EtaIso iso = eta(algebra);
    for (const Element& b : all_elements(algebra)) {
      PolarDescriptor polar = principal_polar(SpeckerElement::indicator(b));
      generators.insert(iso.forward(polar.generator()).mask());
    }
    t.expect(generators.size() == (std::size_t{1} << algebra.atom_count()),
             "polars of distinct Boolean elements collide");
    // P(v) = P(n|v| /\ u) for every n >= 1.
    Sampler sampler(options.seed);
    for (int i = 0; i < 20; ++i) {
      SpeckerElement v = sampler.specker_element(algebra, 4, 6);
      std::int64_t witness = hyperarchimedean_witness(v);
      for (std::int64_t n = 1; n <= witness; ++n) {
        SpeckerElement scaled = meet(Rational(n) * abs_val(v), lattice.unit());
        t.expect(principal_polar(v).generator() == principal_polar(scaled).generator(),
                 "polar is not invariant under Boolean rescaling");
      }
    }
  }
}

void check_factors(const CheckOptions& options, Tally& t) {
  Sampler sampler(options.seed);
  for (int i = 0; i < options.cases; ++i) {
    BooleanAlgebra algebra = make_algebra(1 + static_cast<int>(sampler.next(6)));
    SpeckerLattice lattice(algebra);
    Element part = sampler.element(algebra);
    SpeckerElement u1 = SpeckerElement::indicator(part);
    SpeckerElement u2 = SpeckerElement::indicator(complement(part));
    DirectFactorDecomposition decomposition = direct_factor_decomposition(lattice, u1, u2);
    SpeckerElement v = sampler.specker_element(algebra, 4, 6);
    auto [v1, v2] = decomposition.masked_parts(v);
    t.expect(v1 + v2 == v, "masked parts do not add up");
    t.expect(meet(abs_val(v1), abs_val(v2)) == lattice.zero(), "masked parts are not disjoint");
    t.expect(principal_polar(u2).contains(v1) && principal_polar(u1).contains(v2),
             "masked parts are not in the expected polars");
    t.expect(decomposition.recombine(decomposition.split(v)) == v, "split does not round-trip");
  }
}

void check_free_adjunction(const CheckOptions& options, Tally& t) {
  for (int n = 0; n <= 2; ++n) {
    FreeLattice free_lattice = free_uha(n);
    for (const BooleanAlgebra& base : small_algebras(std::min(options.atoms, 3))) {
      SpeckerLattice target(base);
      std::vector<Element> boolean_universe = all_elements(base);
      // All assignments of Boolean elements to the n generators.
      std::vector<std::size_t> pick(n, 0);
      while (true) {
        std::vector<SpeckerElement> assignment;
        for (int i = 0; i < n; ++i) {
          assignment.push_back(SpeckerElement::indicator(boolean_universe[pick[i]]));
        }
        SpeckerMorphism extension = universal_extension(free_lattice, target, assignment);
        for (int i = 0; i < n; ++i) {
          t.expect(apply(extension, free_lattice.generators[i]) == assignment[i],
                   "triangle identity fails");
        }
        std::size_t j = 0;
        for (; j < pick.size(); ++j) {
          if (++pick[j] < boolean_universe.size()) break;
          pick[j] = 0;
        }
        if (j == pick.size()) break;
        if (n == 0) break;
      }
    }
  }
}

void check_free_support(const CheckOptions& options, Tally& t) {
  Sampler sampler(options.seed);
  for (int i = 0; i < options.cases; ++i) {
    int size = static_cast<int>(sampler.next(4));
    std::vector<int> support;
    for (int idx = 0; static_cast<int>(support.size()) < size && idx < 6; ++idx) {
      if (sampler.next(2) == 1) support.push_back(idx);
    }
    BooleanAlgebra body_base = free_boolean_algebra(static_cast<int>(support.size()), 32).algebra;
    std::vector<Rational> values;
    for (int a = 0; a < body_base.atom_count(); ++a) values.push_back(sampler.rational(2, 2));
    FreeElement x = FreeElement::from_parts(
        support, from_atom_valuation(AtomValuation(body_base, values)));
    // Soundness: the body depends on every retained index.
    for (std::size_t j = 0; j < x.support().size(); ++j) {
      bool depends = false;
      int atoms = x.body().algebra().atom_count();
      for (int a = 0; a < atoms; ++a) {
        if (x.body().value_at_atom(a) != x.body().value_at_atom(a ^ (1 << j))) depends = true;
      }
      t.expect(depends, "support retains an index the body ignores");
    }
    // Confluence: operating after a cylinder embedding matches direct ops.
    FreeElement y = FreeElement::generator(static_cast<int>(sampler.next(5)));
    std::vector<int> wide;
    std::set_union(x.support().begin(), x.support().end(), y.support().begin(), y.support().end(),
                   std::back_inserter(wide));
    if (wide.empty() || wide.back() < 5) {
      std::vector<int> wider = wide;
      wider.push_back(wider.empty() ? 0 : wider.back() + 1);
      FreeElement via_wide = FreeElement::from_parts(
          wider, cylinder_body(x, wider) + cylinder_body(y, wider));
      t.expect(via_wide == x + y, "cylinder embedding is not confluent");
    }
  }
}

void check_atomless(const CheckOptions& options, Tally& t) {
  Sampler sampler(options.seed);
  for (int i = 0; i < options.cases; ++i) {
    int size = 1 + static_cast<int>(sampler.next(4));
    std::vector<int> support;
    for (int idx = 0; static_cast<int>(support.size()) < size; ++idx) support.push_back(idx);
    BooleanAlgebra body_base = free_boolean_algebra(size, 32).algebra;
    std::vector<Rational> values;
    bool any = false;
    for (int a = 0; a < body_base.atom_count(); ++a) {
      bool one = sampler.next(2) == 1;
      any = any || one;
      values.push_back(one ? Rational(1) : Rational(0));
    }
    if (!any) values[0] = Rational(1);
    FreeElement b =
        FreeElement::from_parts(support, from_atom_valuation(AtomValuation(body_base, values)));
    CantorReport report = cantor_checks(b);
    t.expect(report.unit_nontrivial, "unit reported trivial");
    t.expect(report.atomless_split.has_value(), "no split for a nonzero Boolean element");
    if (report.atomless_split) {
      const FreeElement& c = *report.atomless_split;
      t.expect(is_boolean_element(c), "split is not Boolean");
      t.expect(!c.is_zero(), "split is zero");
      t.expect(c != b, "split equals the input");
      t.expect(leq(c, b), "split is not below the input");
    }
  }
}

using Suite = std::function<void(const CheckOptions&, Tally&)>;

const std::vector<std::pair<std::string, Suite>>& suites() {
  static const std::vector<std::pair<std::string, Suite>> table = {
      {"partitions", check_partitions},
      {"homs", check_homs},
      {"subalgebras", check_subalgebras},
      {"oracle", check_oracle},
      {"lattice-axioms", check_lattice_axioms},
      {"strong-unit", check_strong_unit},
      {"hyperarchimedean", check_hyperarchimedean},
      {"decomposition", check_decomposition},
      {"boolean-test", check_boolean_test},
      {"functor-laws", check_functor_laws},
      {"naturality", check_naturality_suite},
      {"yosida", check_yosida},
      {"spectral-maps", check_spectral_maps},
      {"separation", check_separation},
      {"polars", check_polars},
      {"factors", check_factors},
      {"free-adjunction", check_free_adjunction},
      {"free-support", check_free_support},
      {"atomless", check_atomless},
  };
  return table;
}

}  // namespace

std::vector<std::string> check_suite_names() {
  std::vector<std::string> names;
  names.reserve(suites().size());
  for (const auto& [name, _] : suites()) names.push_back(name);
  return names;
}

CheckResult run_check(const std::string& name, const CheckOptions& options) {
  for (const auto& [candidate, suite] : suites()) {
    if (candidate == name) {
      Tally tally;
      suite(options, tally);
      return {name, tally.ok, tally.cases, tally.detail};
    }
  }
  throw DomainError("unknown check suite \"" + name + "\"");
}

std::vector<CheckResult> run_all_checks(const CheckOptions& options) {
  std::vector<CheckResult> results;
  results.reserve(suites().size());
  for (const auto& [name, _] : suites()) results.push_back(run_check(name, options));
  return results;
}

}  // namespace specker
