#include "specker/structure.hpp"

#include "specker/error.hpp"

namespace specker {

namespace {

/// Atoms where the valuation vanishes.
Element zero_set(const SpeckerElement& v) {
  AtomMask m = 0;
  for (int i = 0; i < v.partition().size(); ++i) {
    if (v.values()[i].is_zero()) m |= v.partition().blocks()[i].mask();
  }
  return Element(v.algebra(), m);
}

Element support(const SpeckerElement& v) { return complement(zero_set(v)); }

}  // namespace

PolarDescriptor::PolarDescriptor(SpeckerLattice lattice, SpeckerElement generator)
    : lattice_(lattice), generator_(std::move(generator)) {
  if (generator_.algebra() != lattice_.base()) {
    throw AlgebraMismatchError("generator does not belong to the lattice");
  }
  if (!is_boolean_element(generator_)) {
    throw PreconditionError("polar generator must be a Boolean element");
  }
}

bool PolarDescriptor::contains(const SpeckerElement& w) const {
  if (w.algebra() != lattice_.base()) {
    throw AlgebraMismatchError("element does not belong to the lattice");
  }
  return leq(support(w), support(generator_));
}

PolarDescriptor principal_polar(const SpeckerElement& v) {
  return PolarDescriptor(SpeckerLattice(v.algebra()), SpeckerElement::indicator(zero_set(v)));
}

ProductLattice::ProductLattice(SpeckerLattice factor1, SpeckerLattice factor2)
    : factor1_(factor1),
      factor2_(factor2),
      lattice_(make_algebra(factor1.base().atom_count() + factor2.base().atom_count())) {}

ProductLattice product(const SpeckerLattice& v1, const SpeckerLattice& v2) {
  return ProductLattice(v1, v2);
}

SpeckerMorphism ProductLattice::projection1() const {
  std::vector<int> pm(factor1_.base().atom_count());
  for (int a = 0; a < factor1_.base().atom_count(); ++a) pm[a] = a;
  return SpeckerMorphism(lattice_, factor1_, BoolHom(lattice_.base(), factor1_.base(), pm));
}

SpeckerMorphism ProductLattice::projection2() const {
  int shift = factor1_.base().atom_count();
  std::vector<int> pm(factor2_.base().atom_count());
  for (int a = 0; a < factor2_.base().atom_count(); ++a) pm[a] = shift + a;
  return SpeckerMorphism(lattice_, factor2_, BoolHom(lattice_.base(), factor2_.base(), pm));
}

SpeckerElement ProductLattice::pair(const SpeckerElement& v1, const SpeckerElement& v2) const {
  if (v1.algebra() != factor1_.base() || v2.algebra() != factor2_.base()) {
    throw AlgebraMismatchError("pair components do not match the factors");
  }
  std::vector<Rational> values;
  values.reserve(lattice_.base().atom_count());
  for (int a = 0; a < factor1_.base().atom_count(); ++a) values.push_back(v1.value_at_atom(a));
  for (int a = 0; a < factor2_.base().atom_count(); ++a) values.push_back(v2.value_at_atom(a));
  return from_atom_valuation(AtomValuation(lattice_.base(), std::move(values)));
}

SpeckerElement ProductLattice::inject1(const SpeckerElement& v) const {
  return pair(v, factor2_.zero());
}

SpeckerElement ProductLattice::inject2(const SpeckerElement& v) const {
  return pair(factor1_.zero(), v);
}

DirectFactorDecomposition::DirectFactorDecomposition(SpeckerLattice lattice,
                                                     SpeckerElement part1_unit,
                                                     SpeckerElement part2_unit)
    : lattice_(lattice),
      part1_unit_(std::move(part1_unit)),
      part2_unit_(std::move(part2_unit)),
      atoms1_(support(part1_unit_).atoms()),
      atoms2_(support(part2_unit_).atoms()),
      factors_(SpeckerLattice(make_algebra(static_cast<int>(atoms1_.size()))),
               SpeckerLattice(make_algebra(static_cast<int>(atoms2_.size())))) {}

std::pair<SpeckerElement, SpeckerElement> DirectFactorDecomposition::masked_parts(
    const SpeckerElement& v) const {
  if (v.algebra() != lattice_.base()) {
    throw AlgebraMismatchError("element does not belong to the lattice");
  }
  SpeckerElement part1 = lattice_.zero();
  SpeckerElement part2 = lattice_.zero();
  for (const DecompositionTerm& term : minimal_decomposition(v)) {
    part1 = part1 + term.coefficient * meet(term.indicator, part1_unit_);
    part2 = part2 + term.coefficient * meet(term.indicator, part2_unit_);
  }
  return {part1, part2};
}

SpeckerElement DirectFactorDecomposition::split(const SpeckerElement& v) const {
  if (v.algebra() != lattice_.base()) {
    throw AlgebraMismatchError("element does not belong to the lattice");
  }
  std::vector<Rational> values;
  values.reserve(atoms1_.size() + atoms2_.size());
  for (int a : atoms1_) values.push_back(v.value_at_atom(a));
  for (int a : atoms2_) values.push_back(v.value_at_atom(a));
  return from_atom_valuation(AtomValuation(factors_.lattice().base(), std::move(values)));
}

SpeckerElement DirectFactorDecomposition::recombine(const SpeckerElement& w) const {
  if (w.algebra() != factors_.lattice().base()) {
    throw AlgebraMismatchError("element does not belong to the product lattice");
  }
  std::vector<Rational> values(lattice_.base().atom_count(), Rational(0));
  int k = 0;
  for (int a : atoms1_) values[a] = w.value_at_atom(k++);
  for (int a : atoms2_) values[a] = w.value_at_atom(k++);
  return from_atom_valuation(AtomValuation(lattice_.base(), std::move(values)));
}

DirectFactorDecomposition direct_factor_decomposition(const SpeckerLattice& lattice,
                                                      const SpeckerElement& u1,
                                                      const SpeckerElement& u2) {
  if (u1.algebra() != lattice.base() || u2.algebra() != lattice.base()) {
    throw AlgebraMismatchError("units do not belong to the lattice");
  }
  if (!is_boolean_element(u1) || !is_boolean_element(u2)) {
    throw PreconditionError("both parts must be Boolean elements");
  }
  if (meet(u1, u2) != lattice.zero() || join(u1, u2) != lattice.unit()) {
    throw PreconditionError("parts are not complementary Boolean elements");
  }
  return DirectFactorDecomposition(lattice, u1, u2);
}

}  // namespace specker
