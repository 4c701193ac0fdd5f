#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "specker/boolean.hpp"
#include "specker/rational.hpp"

namespace specker {

/// One rational per atom; the brute-force counterpart of a SpeckerElement.
class AtomValuation {
 public:
  AtomValuation(BooleanAlgebra algebra, std::vector<Rational> values);

  BooleanAlgebra algebra() const { return algebra_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& at(int atom) const { return values_.at(atom); }

  friend bool operator==(const AtomValuation&, const AtomValuation&) = default;

 private:
  BooleanAlgebra algebra_;
  std::vector<Rational> values_;
};

/// An element of the Specker lattice H(B) in canonical form: a partition of B
/// together with pairwise distinct rational values, one per block. Canonical
/// form makes equality structural; over the trivial algebra the partition is
/// empty and the element is the (only) zero.
class SpeckerElement {
 public:
  /// Merges equal-valued blocks of an arbitrary block/value assignment.
  /// Throws ShapeError if the value list length does not match.
  static SpeckerElement canonical(const Partition& partition, std::vector<Rational> values);

  /// Same, from unaligned (block, value) pairs; the pairs must cover a
  /// partition of the algebra.
  static SpeckerElement from_block_values(BooleanAlgebra algebra,
                                          std::vector<std::pair<Element, Rational>> entries);

  static SpeckerElement zero(BooleanAlgebra algebra) { return constant(algebra, Rational(0)); }
  static SpeckerElement unit(BooleanAlgebra algebra) { return constant(algebra, Rational(1)); }
  static SpeckerElement constant(BooleanAlgebra algebra, const Rational& r);

  /// Characteristic element of `b`: 1 on b, 0 elsewhere.
  static SpeckerElement indicator(const Element& b);

  BooleanAlgebra algebra() const { return partition_.algebra(); }
  const Partition& partition() const { return partition_; }
  const std::vector<Rational>& values() const { return values_; }

  const Rational& value_at_atom(int atom) const;
  bool is_zero() const;
  std::string str() const;

  friend bool operator==(const SpeckerElement&, const SpeckerElement&) = default;

 private:
  SpeckerElement(Partition partition, std::vector<Rational> values)
      : partition_(std::move(partition)), values_(std::move(values)) {}

  Partition partition_;
  std::vector<Rational> values_;
};

/// Free-function spelling of SpeckerElement::canonical.
SpeckerElement canonicalize(const Partition& partition, std::vector<Rational> values);

AtomValuation to_atom_valuation(const SpeckerElement& v);
SpeckerElement from_atom_valuation(const AtomValuation& a);

/// Blockwise operations on the common refinement, then canonicalized. They
/// agree pointwise with the corresponding operation on atom valuations.
SpeckerElement operator+(const SpeckerElement& v, const SpeckerElement& w);
SpeckerElement operator-(const SpeckerElement& v, const SpeckerElement& w);
SpeckerElement operator-(const SpeckerElement& v);
SpeckerElement operator*(const Rational& r, const SpeckerElement& v);
SpeckerElement meet(const SpeckerElement& v, const SpeckerElement& w);
SpeckerElement join(const SpeckerElement& v, const SpeckerElement& w);
SpeckerElement abs_val(const SpeckerElement& v);

/// Lattice order, derived from meet: v <= w iff v /\ w == v.
bool leq(const SpeckerElement& v, const SpeckerElement& w);

/// True iff every block value is 0 or 1; equivalent to 0 <= v <= u together
/// with v /\ (u - v) == 0.
bool is_boolean_element(const SpeckerElement& v);

/// Least n >= 1 such that n*|v| /\ u is a Boolean element. Closed form:
/// ceil(1 / m) for m the least nonzero absolute block value; 1 when v == 0.
std::int64_t hyperarchimedean_witness(const SpeckerElement& v);

struct DecompositionTerm {
  Rational coefficient;       // nonzero, pairwise distinct across terms
  SpeckerElement indicator;   // Boolean element: block indicator

  friend bool operator==(const DecompositionTerm&, const DecompositionTerm&) = default;
};

/// Shortest representation v = sum coefficient_i * indicator_i with pairwise
/// distinct nonzero coefficients, sorted by ascending coefficient. Empty for
/// v == 0.
std::vector<DecompositionTerm> minimal_decomposition(const SpeckerElement& v);

}  // namespace specker
