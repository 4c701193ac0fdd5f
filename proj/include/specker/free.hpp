#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "specker/functors.hpp"

namespace specker {

/// The free unital hyperarchimedean vector lattice on n generators: the
/// Specker lattice over the free Boolean algebra on n generators, with the
/// generator images as distinguished Boolean elements.
struct FreeLattice {
  int generator_count;
  SpeckerLattice lattice;                   // over free_boolean_algebra(n)
  std::vector<SpeckerElement> generators;   // iota(i): indicator of bit-i atoms
};

FreeLattice free_uha(int n, int capacity = kDefaultAtomCapacity);

/// The unique unital morphism F.lattice -> target sending generator i to
/// assignment[i]. Each assignment must be a Boolean element of the target
/// (PreconditionError otherwise). The point map sends a target atom to the
/// source atom whose bit i equals the valuation of assignment[i] there.
SpeckerMorphism universal_extension(const FreeLattice& free_lattice,
                                    const SpeckerLattice& target,
                                    std::span<const SpeckerElement> assignment);

/// Free-element bodies may use up to this many generator indices at once
/// (their base algebras have 2^support atoms, up to the hard mask width).
inline constexpr int kFreeSupportCapacity = 5;

/// An element of the countably generated free lattice, represented by its
/// finite generator support plus a SpeckerElement over the free algebra on
/// that support. Atom bit j of the body corresponds to support[j]. Canonical:
/// the support is sorted and minimal (the body depends on every index).
class FreeElement {
 public:
  /// Canonicalizes: sorts nothing (support must be strictly increasing,
  /// ShapeError otherwise) but drops indices the body does not depend on.
  static FreeElement from_parts(std::vector<int> support, SpeckerElement body);

  static FreeElement constant(const Rational& r);
  static FreeElement zero() { return constant(Rational(0)); }
  static FreeElement unit() { return constant(Rational(1)); }

  /// iota(i): the i-th free generator.
  static FreeElement generator(int index);

  const std::vector<int>& support() const { return support_; }
  const SpeckerElement& body() const { return body_; }
  bool is_zero() const { return support_.empty() && body_.is_zero(); }

  std::string str() const;

  friend bool operator==(const FreeElement&, const FreeElement&) = default;

 private:
  FreeElement(std::vector<int> support, SpeckerElement body)
      : support_(std::move(support)), body_(std::move(body)) {}

  std::vector<int> support_;
  SpeckerElement body_;
};

/// Cylinder extension of x to a superset support: the body over the free
/// algebra on `superset`, with valuations replicated across the new bits.
/// Operations compute on cylinder bodies over the support union and then
/// re-minimize. Throws PreconditionError if `superset` does not contain x's
/// support or is not strictly increasing.
SpeckerElement cylinder_body(const FreeElement& x, std::span<const int> superset);

FreeElement operator+(const FreeElement& x, const FreeElement& y);
FreeElement operator-(const FreeElement& x, const FreeElement& y);
FreeElement operator-(const FreeElement& x);
FreeElement operator*(const Rational& r, const FreeElement& x);
FreeElement meet(const FreeElement& x, const FreeElement& y);
FreeElement join(const FreeElement& x, const FreeElement& y);
FreeElement abs_val(const FreeElement& x);
bool leq(const FreeElement& x, const FreeElement& y);
bool is_boolean_element(const FreeElement& x);

/// Canonical name of a principal polar: the generator's support together
/// with its body truth table (bit a = value at atom a).
struct PolarName {
  std::vector<int> support;
  std::uint64_t table;

  std::string str() const;

  friend bool operator==(const PolarName&, const PolarName&) = default;
};

struct CantorReport {
  /// The unit is nonzero (the represented lattice is nontrivial).
  bool unit_nontrivial;
  /// Present when the input is a nonzero Boolean element b: a Boolean c with
  /// 0 < c < b, obtained by splitting b along the smallest fresh generator
  /// index. Witnesses that the Boolean-element algebra is atomless.
  std::optional<FreeElement> atomless_split;
  /// Boolean generator of the principal polar of the input (indicator of its
  /// zero set).
  FreeElement polar_generator;
  /// Canonical enumeration name of that polar; polars are named by Boolean
  /// FreeElements, a countable set.
  PolarName polar_name;
};

CantorReport cantor_checks(const FreeElement& x);

}  // namespace specker
