#include "specker/free.hpp"

#include <algorithm>

#include "specker/error.hpp"

namespace specker {

namespace {

constexpr int kBodyAtomCapacity = 1 << kFreeSupportCapacity;

BooleanAlgebra body_algebra(int support_size) {
  return free_boolean_algebra(support_size, kBodyAtomCapacity).algebra;
}

/// Valuation of the body as a flat vector indexed by assignment words.
std::vector<Rational> body_valuation(const SpeckerElement& body) {
  return to_atom_valuation(body).values();
}

bool strictly_increasing(std::span<const int> xs) {
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (xs[i] >= xs[i + 1]) return false;
  }
  return xs.empty() || xs.front() >= 0;
}

/// Drops bit position j from every assignment word (the body must not depend
/// on it).
SpeckerElement project_out_bit(const SpeckerElement& body, int j) {
  int n = 0;
  while ((1 << n) != body.algebra().atom_count()) ++n;
  BooleanAlgebra smaller = body_algebra(n - 1);
  std::vector<Rational> values;
  values.reserve(smaller.atom_count());
  for (int w = 0; w < smaller.atom_count(); ++w) {
    int low = w & ((1 << j) - 1);
    int high = (w >> j) << (j + 1);
    values.push_back(body.value_at_atom(high | low));
  }
  return from_atom_valuation(AtomValuation(smaller, std::move(values)));
}

bool depends_on_bit(const SpeckerElement& body, int j) {
  int atoms = body.algebra().atom_count();
  for (int a = 0; a < atoms; ++a) {
    if (body.value_at_atom(a) != body.value_at_atom(a ^ (1 << j))) return true;
  }
  return false;
}

}  // namespace

FreeLattice free_uha(int n, int capacity) {
  FreeBooleanAlgebra base = free_boolean_algebra(n, capacity);
  SpeckerLattice lattice(base.algebra);
  std::vector<SpeckerElement> generators;
  generators.reserve(n);
  for (const Element& g : base.generators) {
    generators.push_back(SpeckerElement::indicator(g));
  }
  return {n, lattice, std::move(generators)};
}

SpeckerMorphism universal_extension(const FreeLattice& free_lattice,
                                    const SpeckerLattice& target,
                                    std::span<const SpeckerElement> assignment) {
  if (static_cast<int>(assignment.size()) != free_lattice.generator_count) {
    throw ShapeError("one Boolean element per generator required");
  }
  for (const SpeckerElement& b : assignment) {
    if (b.algebra() != target.base()) {
      throw AlgebraMismatchError("assignment does not live in the target lattice");
    }
    if (!is_boolean_element(b)) {
      throw PreconditionError("generators must be sent to Boolean elements");
    }
  }
  std::vector<int> pm(target.base().atom_count());
  for (int a = 0; a < target.base().atom_count(); ++a) {
    int word = 0;
    for (int i = 0; i < free_lattice.generator_count; ++i) {
      if (assignment[i].value_at_atom(a) == Rational(1)) word |= 1 << i;
    }
    pm[a] = word;
  }
  return SpeckerMorphism(free_lattice.lattice, target,
                         BoolHom(free_lattice.lattice.base(), target.base(), std::move(pm)));
}

FreeElement FreeElement::from_parts(std::vector<int> support, SpeckerElement body) {
  if (!strictly_increasing(support)) {
    throw ShapeError("support must be a strictly increasing list of nonnegative indices");
  }
  if (static_cast<int>(support.size()) > kFreeSupportCapacity) {
    throw CapacityError("free-element support exceeds " +
                        std::to_string(kFreeSupportCapacity) + " indices");
  }
  if (body.algebra().atom_count() != (1 << support.size())) {
    throw ShapeError("body must live over the free algebra on the support");
  }
  // Minimize: drop every index the body is invariant under.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j = static_cast<int>(support.size()) - 1; j >= 0; --j) {
      if (!depends_on_bit(body, j)) {
        body = project_out_bit(body, j);
        support.erase(support.begin() + j);
        changed = true;
      }
    }
  }
  return FreeElement(std::move(support), std::move(body));
}

FreeElement FreeElement::constant(const Rational& r) {
  return FreeElement({}, SpeckerElement::constant(body_algebra(0), r));
}

FreeElement FreeElement::generator(int index) {
  if (index < 0) throw ShapeError("negative generator index");
  FreeBooleanAlgebra base = free_boolean_algebra(1, kBodyAtomCapacity);
  return FreeElement({index}, SpeckerElement::indicator(base.generators[0]));
}

std::string FreeElement::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(support_[i]);
  }
  s += "] ";
  s += body_.str();
  return s;
}

SpeckerElement cylinder_body(const FreeElement& x, std::span<const int> superset) {
  if (!strictly_increasing(superset)) {
    throw PreconditionError("target support must be strictly increasing");
  }
  std::vector<int> positions;  // position of each x-support index inside superset
  positions.reserve(x.support().size());
  for (int idx : x.support()) {
    auto it = std::lower_bound(superset.begin(), superset.end(), idx);
    if (it == superset.end() || *it != idx) {
      throw PreconditionError("target support does not contain the element's support");
    }
    positions.push_back(static_cast<int>(it - superset.begin()));
  }
  if (static_cast<int>(superset.size()) > kFreeSupportCapacity) {
    throw CapacityError("free-element support exceeds " +
                        std::to_string(kFreeSupportCapacity) + " indices");
  }
  BooleanAlgebra wider = body_algebra(static_cast<int>(superset.size()));
  std::vector<Rational> values;
  values.reserve(wider.atom_count());
  for (int w = 0; w < wider.atom_count(); ++w) {
    int narrow = 0;
    for (std::size_t j = 0; j < positions.size(); ++j) {
      if ((w >> positions[j]) & 1) narrow |= 1 << j;
    }
    values.push_back(x.body().value_at_atom(narrow));
  }
  return from_atom_valuation(AtomValuation(wider, std::move(values)));
}

namespace {

std::vector<int> support_union(const FreeElement& x, const FreeElement& y) {
  std::vector<int> out;
  std::set_union(x.support().begin(), x.support().end(), y.support().begin(),
                 y.support().end(), std::back_inserter(out));
  return out;
}

template <typename Op>
FreeElement free_binary(const FreeElement& x, const FreeElement& y, Op op) {
  std::vector<int> sup = support_union(x, y);
  SpeckerElement bx = cylinder_body(x, sup);
  SpeckerElement by = cylinder_body(y, sup);
  return FreeElement::from_parts(std::move(sup), op(bx, by));
}

}  // namespace

FreeElement operator+(const FreeElement& x, const FreeElement& y) {
  return free_binary(x, y, [](const SpeckerElement& a, const SpeckerElement& b) { return a + b; });
}

FreeElement operator-(const FreeElement& x, const FreeElement& y) {
  return free_binary(x, y, [](const SpeckerElement& a, const SpeckerElement& b) { return a - b; });
}

FreeElement operator-(const FreeElement& x) {
  return FreeElement::from_parts(x.support(), -x.body());
}

FreeElement operator*(const Rational& r, const FreeElement& x) {
  return FreeElement::from_parts(x.support(), r * x.body());
}

FreeElement meet(const FreeElement& x, const FreeElement& y) {
  return free_binary(x, y,
                     [](const SpeckerElement& a, const SpeckerElement& b) { return meet(a, b); });
}

FreeElement join(const FreeElement& x, const FreeElement& y) {
  return free_binary(x, y,
                     [](const SpeckerElement& a, const SpeckerElement& b) { return join(a, b); });
}

FreeElement abs_val(const FreeElement& x) {
  return FreeElement::from_parts(x.support(), abs_val(x.body()));
}

bool leq(const FreeElement& x, const FreeElement& y) { return meet(x, y) == x; }

bool is_boolean_element(const FreeElement& x) { return is_boolean_element(x.body()); }

std::string PolarName::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(support[i]);
  }
  s += "]:";
  s += std::to_string(table);
  return s;
}

namespace {

PolarName polar_name_of(const FreeElement& boolean_elem) {
  std::uint64_t table = 0;
  const std::vector<Rational> values = body_valuation(boolean_elem.body());
  for (std::size_t a = 0; a < values.size(); ++a) {
    if (values[a] == Rational(1)) table |= std::uint64_t{1} << a;
  }
  return {boolean_elem.support(), table};
}

FreeElement free_zero_set_indicator(const FreeElement& x) {
  std::vector<Rational> values;
  for (const Rational& r : body_valuation(x.body())) {
    values.push_back(r.is_zero() ? Rational(1) : Rational(0));
  }
  return FreeElement::from_parts(
      x.support(), from_atom_valuation(AtomValuation(x.body().algebra(), std::move(values))));
}

}  // namespace

CantorReport cantor_checks(const FreeElement& x) {
  CantorReport report{.unit_nontrivial = !FreeElement::unit().is_zero(),
                      .atomless_split = std::nullopt,
                      .polar_generator = free_zero_set_indicator(x),
                      .polar_name = {}};
  report.polar_name = polar_name_of(report.polar_generator);
  if (is_boolean_element(x) && !x.is_zero()) {
    // Split along the smallest index not in the support: strictly between 0
    // and x because the new bit cuts every nonzero block in half.
    int fresh = 0;
    for (int idx : x.support()) {
      if (idx != fresh) break;
      ++fresh;
    }
    report.atomless_split = meet(x, FreeElement::generator(fresh));
  }
  return report;
}

}  // namespace specker
