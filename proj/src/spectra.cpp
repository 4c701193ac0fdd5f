#include "specker/spectra.hpp"

#include <algorithm>

#include "specker/error.hpp"

namespace specker {

bool MaxIdeal::contains(const SpeckerElement& v) const {
  return yosida_eval(v, *this).is_zero();
}

std::vector<MaxIdeal> max_spectrum(const SpeckerLattice& lattice) {
  std::vector<MaxIdeal> out;
  out.reserve(lattice.base().atom_count());
  for (int a = 0; a < lattice.base().atom_count(); ++a) out.push_back({lattice, a});
  return out;
}

Rational yosida_eval(const SpeckerElement& v, const MaxIdeal& m) {
  if (v.algebra() != m.lattice.base()) {
    throw AlgebraMismatchError("element does not belong to the ideal's lattice");
  }
  return v.value_at_atom(m.atom);
}

MaxIdeal SpectralMap::operator()(const MaxIdeal& target_ideal) const {
  if (target_ideal.lattice != morphism_.target()) {
    throw AlgebraMismatchError("ideal does not belong to the morphism's target");
  }
  return {morphism_.source(), morphism_.underlying().point_map()[target_ideal.atom]};
}

SpectralMap dual_map(const SpeckerMorphism& g) { return SpectralMap(g); }

bool separates_points(const SpeckerLattice& lattice,
                      std::span<const SpeckerElement> elements) {
  for (const SpeckerElement& s : elements) {
    if (s.algebra() != lattice.base()) {
      throw AlgebraMismatchError("element does not belong to the lattice");
    }
  }
  int n = lattice.base().atom_count();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      bool separated = false;
      for (const SpeckerElement& s : elements) {
        if (s.value_at_atom(i) != s.value_at_atom(j)) {
          separated = true;
          break;
        }
      }
      if (!separated) return false;
    }
  }
  return true;
}

std::vector<SpeckerElement> booleanization(const SpeckerElement& v) {
  BooleanElementsAlgebra bij = boolean_elements(SpeckerLattice(v.algebra()));
  std::vector<std::pair<AtomMask, SpeckerElement>> keyed;
  auto push = [&](const SpeckerElement& b) {
    AtomMask key = bij.to_element(b).mask();
    for (const auto& [k, _] : keyed) {
      if (k == key) return;
    }
    keyed.emplace_back(key, b);
  };
  SpeckerElement u = SpeckerElement::unit(v.algebra());
  SpeckerElement a = abs_val(v);
  std::int64_t witness = hyperarchimedean_witness(v);
  for (std::int64_t n = 1; n <= witness; ++n) {
    SpeckerElement candidate = meet(Rational(n) * a, u);
    if (is_boolean_element(candidate)) push(candidate);
  }
  for (const Element& block : v.partition().blocks()) {
    push(SpeckerElement::indicator(block));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<SpeckerElement> out;
  out.reserve(keyed.size());
  for (auto& [_, b] : keyed) out.push_back(std::move(b));
  return out;
}

}  // namespace specker
