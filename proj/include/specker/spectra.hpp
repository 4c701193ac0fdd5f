#pragma once

#include <span>
#include <vector>

#include "specker/functors.hpp"

namespace specker {

/// A maximal ideal of a Specker lattice, named by the atom of the base
/// algebra it evaluates at: the ideal is { v : v's valuation at `atom` = 0 }.
/// For hyperarchimedean lattices these exhaust the prime spectrum.
struct MaxIdeal {
  SpeckerLattice lattice;
  int atom;

  bool contains(const SpeckerElement& v) const;

  friend bool operator==(const MaxIdeal&, const MaxIdeal&) = default;
};

/// One maximal ideal per atom of the base; empty for the zero lattice.
std::vector<MaxIdeal> max_spectrum(const SpeckerLattice& lattice);

/// Evaluation of v at the ideal: the atom valuation of v at m.atom. The map
/// v -> (yosida_eval(v, m))_m is an injective unital morphism into functions
/// on the spectrum.
Rational yosida_eval(const SpeckerElement& v, const MaxIdeal& m);

/// The dual map Max(target) -> Max(source) of a morphism: the ideal at atom
/// a pulls back to the ideal at point_map(a).
class SpectralMap {
 public:
  explicit SpectralMap(SpeckerMorphism morphism) : morphism_(std::move(morphism)) {}

  const SpeckerMorphism& morphism() const { return morphism_; }

  MaxIdeal operator()(const MaxIdeal& target_ideal) const;

 private:
  SpeckerMorphism morphism_;
};

SpectralMap dual_map(const SpeckerMorphism& g);

/// True iff for every pair of distinct atoms some member of `elements` takes
/// different values at them.
bool separates_points(const SpeckerLattice& lattice, std::span<const SpeckerElement> elements);

/// The Boolean elements derived from v: the Boolean members of
/// { n*|v| /\ u : 1 <= n <= hyperarchimedean_witness(v) } together with the
/// indicators of v's canonical partition blocks. Deduplicated, sorted by the
/// mask of the corresponding base element.
std::vector<SpeckerElement> booleanization(const SpeckerElement& v);

}  // namespace specker
