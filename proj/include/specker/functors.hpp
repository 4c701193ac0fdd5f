#pragma once

#include <cstdint>

#include "specker/boolean.hpp"
#include "specker/specker_element.hpp"

namespace specker {

/// Descriptor of the Specker lattice H(B) over a finite Boolean algebra: the
/// unital vector lattice of all SpeckerElements over `base`. The element
/// universe is not materialized.
class SpeckerLattice {
 public:
  explicit SpeckerLattice(BooleanAlgebra base) : base_(base) {}

  BooleanAlgebra base() const { return base_; }
  SpeckerElement unit() const { return SpeckerElement::unit(base_); }
  SpeckerElement zero() const { return SpeckerElement::zero(base_); }

  /// Linear dimension of the lattice = number of atom-valuation coordinates.
  int dimension() const { return base_.atom_count(); }

  friend bool operator==(const SpeckerLattice&, const SpeckerLattice&) = default;

 private:
  BooleanAlgebra base_;
};

/// Functor H on objects.
SpeckerLattice specker_lattice(BooleanAlgebra base);

/// A morphism of unital vector lattices between Specker lattices, stored by
/// the Boolean homomorphism inducing it. Its element action is linear,
/// lattice-preserving and unit-preserving (verified by tests, not assumed).
class SpeckerMorphism {
 public:
  SpeckerMorphism(SpeckerLattice source, SpeckerLattice target, BoolHom underlying);
  static SpeckerMorphism identity(const SpeckerLattice& lattice);

  const SpeckerLattice& source() const { return source_; }
  const SpeckerLattice& target() const { return target_; }
  const BoolHom& underlying() const { return underlying_; }

  friend bool operator==(const SpeckerMorphism&, const SpeckerMorphism&) = default;

 private:
  SpeckerLattice source_;
  SpeckerLattice target_;
  BoolHom underlying_;
};

/// Functor H on morphisms: the induced map H(f) : H(source) -> H(target).
SpeckerMorphism lift_hom(const BoolHom& f);

/// Element action: transports v's values along the image partition of f; the
/// atom valuation of the result at atom a equals v's valuation at
/// point_map(a).
SpeckerElement apply(const SpeckerMorphism& g, const SpeckerElement& v);

SpeckerMorphism compose(const SpeckerMorphism& second, const SpeckerMorphism& first);

/// Functor B on objects: the algebra of Boolean elements of V. For a Specker
/// lattice over a finite base the Boolean elements are exactly the {0,1}
/// valuations, so the algebra is V.base itself together with the bijection
/// between its elements and indicator SpeckerElements.
class BooleanElementsAlgebra {
 public:
  explicit BooleanElementsAlgebra(SpeckerLattice lattice)
      : lattice_(lattice), algebra_(lattice.base()) {}

  BooleanAlgebra algebra() const { return algebra_; }
  const SpeckerLattice& lattice() const { return lattice_; }

  /// Element -> indicator Boolean element.
  SpeckerElement to_boolean(const Element& b) const;

  /// Boolean element -> preimage of 1. Throws DomainError if the input is
  /// not a Boolean element.
  Element to_element(const SpeckerElement& v) const;

 private:
  SpeckerLattice lattice_;
  BooleanAlgebra algebra_;
};

BooleanElementsAlgebra boolean_elements(const SpeckerLattice& lattice);

/// Functor B on morphisms: the restriction of g to Boolean elements,
/// expressed as a homomorphism between the Boolean-element algebras. Computed
/// from g's action on atom indicators.
BoolHom boolean_restriction(const SpeckerMorphism& g);

/// Natural isomorphism B(H(B)) -> B: a Boolean element of H(B) maps to the
/// join of the blocks where it takes value 1 (bottom for the zero element).
class EtaIso {
 public:
  explicit EtaIso(BooleanAlgebra algebra) : algebra_(algebra) {}

  BooleanAlgebra algebra() const { return algebra_; }

  /// Throws DomainError if `v` is not a Boolean element.
  Element forward(const SpeckerElement& v) const;
  SpeckerElement inverse(const Element& b) const;

 private:
  BooleanAlgebra algebra_;
};

EtaIso eta(BooleanAlgebra algebra);

/// Natural isomorphism H(B(V)) -> V: an element over the algebra of Boolean
/// elements maps to the linear combination sum v(a) * a computed inside V.
class EpsilonIso {
 public:
  explicit EpsilonIso(SpeckerLattice lattice) : lattice_(lattice) {}

  const SpeckerLattice& lattice() const { return lattice_; }

  SpeckerElement forward(const SpeckerElement& v) const;
  SpeckerElement inverse(const SpeckerElement& v) const;

 private:
  SpeckerLattice lattice_;
};

EpsilonIso epsilon(const SpeckerLattice& lattice);

struct NaturalityOptions {
  std::uint64_t seed = 1;
  int cases = 200;
  /// Below or at this atom count (on the source side) the check is
  /// exhaustive over Boolean elements and a bounded value grid.
  int exhaustive_atom_limit = 3;
};

/// Verifies commutativity of the eta naturality square for f.
bool check_naturality(const BoolHom& f, const NaturalityOptions& options = {});

/// Verifies commutativity of the epsilon naturality square for g.
bool check_naturality(const SpeckerMorphism& g, const NaturalityOptions& options = {});

}  // namespace specker
