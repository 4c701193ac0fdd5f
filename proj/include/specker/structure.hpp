#pragma once

#include <utility>

#include "specker/functors.hpp"

namespace specker {

/// A principal polar P(v) = { w : |v| /\ |w| = 0 }, stored intensionally by
/// the Boolean element that generates it: the indicator of v's zero set. A
/// member is any w whose support lies inside the generator's support.
class PolarDescriptor {
 public:
  PolarDescriptor(SpeckerLattice lattice, SpeckerElement generator);

  const SpeckerLattice& lattice() const { return lattice_; }
  const SpeckerElement& generator() const { return generator_; }

  bool contains(const SpeckerElement& w) const;

  friend bool operator==(const PolarDescriptor&, const PolarDescriptor&) = default;

 private:
  SpeckerLattice lattice_;
  SpeckerElement generator_;
};

PolarDescriptor principal_polar(const SpeckerElement& v);

/// The product lattice V1 x V2 over the disjoint union of the atom sets; the
/// first factor keeps its atom indices, the second is shifted. Projections
/// are unital morphisms; injections are the (non-unital) extension-by-zero
/// linear lattice embeddings.
class ProductLattice {
 public:
  ProductLattice(SpeckerLattice factor1, SpeckerLattice factor2);

  const SpeckerLattice& lattice() const { return lattice_; }
  const SpeckerLattice& factor1() const { return factor1_; }
  const SpeckerLattice& factor2() const { return factor2_; }

  SpeckerMorphism projection1() const;
  SpeckerMorphism projection2() const;

  SpeckerElement inject1(const SpeckerElement& v) const;
  SpeckerElement inject2(const SpeckerElement& v) const;

  /// The element (v1, v2).
  SpeckerElement pair(const SpeckerElement& v1, const SpeckerElement& v2) const;

 private:
  SpeckerLattice factor1_;
  SpeckerLattice factor2_;
  SpeckerLattice lattice_;
};

ProductLattice product(const SpeckerLattice& v1, const SpeckerLattice& v2);

/// The isomorphism V -> P(u2) x P(u1) induced by a complementary pair of
/// Boolean elements u1, u2. Each v splits as v = v' + v'' with
/// v'  = sum r_i (chi_i /\ u1)  supported inside u1,
/// v'' = sum r_i (chi_i /\ u2)  supported inside u2,
/// and |v'| /\ |v''| = 0; the product side relabels the split atom sets.
class DirectFactorDecomposition {
 public:
  DirectFactorDecomposition(SpeckerLattice lattice, SpeckerElement part1_unit,
                            SpeckerElement part2_unit);

  const SpeckerLattice& lattice() const { return lattice_; }
  const SpeckerElement& part1_unit() const { return part1_unit_; }
  const SpeckerElement& part2_unit() const { return part2_unit_; }
  const ProductLattice& factors() const { return factors_; }

  /// (v', v'') inside V, computed from the minimal decomposition.
  std::pair<SpeckerElement, SpeckerElement> masked_parts(const SpeckerElement& v) const;

  /// Image of v in the product of the two polars (relabeled atoms).
  SpeckerElement split(const SpeckerElement& v) const;

  /// Inverse of split.
  SpeckerElement recombine(const SpeckerElement& w) const;

 private:
  SpeckerLattice lattice_;
  SpeckerElement part1_unit_;
  SpeckerElement part2_unit_;
  std::vector<int> atoms1_;  // atoms in supp(u1), ascending
  std::vector<int> atoms2_;  // atoms in supp(u2), ascending
  ProductLattice factors_;
};

/// Throws PreconditionError unless u1, u2 are complementary Boolean elements
/// (u1 /\ u2 = 0 and u1 \/ u2 = u).
DirectFactorDecomposition direct_factor_decomposition(const SpeckerLattice& lattice,
                                                      const SpeckerElement& u1,
                                                      const SpeckerElement& u2);

}  // namespace specker
