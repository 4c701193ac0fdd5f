// Test-side oracles, independent of the library paths they check: a direct
// block-scan expansion of elements to per-atom values, pointwise operations
// on those expansions, exact rational linear solving for decomposition
// minimality, and a linear-search witness.
#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "specker/specker_element.hpp"

namespace oracle {

using specker::Rational;
using specker::SpeckerElement;

/// Expands a SpeckerElement to one value per atom by scanning its blocks.
inline std::vector<Rational> expand(const SpeckerElement& v) {
  int atoms = v.algebra().atom_count();
  std::vector<Rational> out(atoms, Rational(0));
  for (int a = 0; a < atoms; ++a) {
    int hits = 0;
    for (int i = 0; i < v.partition().size(); ++i) {
      if (v.partition().blocks()[i].contains(a)) {
        out[a] = v.values()[i];
        ++hits;
      }
    }
    if (hits != 1) throw std::logic_error("blocks do not cover each atom exactly once");
  }
  return out;
}

enum class Op { add, meet, join };

inline std::vector<Rational> pointwise(Op op, const std::vector<Rational>& a,
                                       const std::vector<Rational>& b) {
  std::vector<Rational> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    switch (op) {
      case Op::add: out.push_back(a[i] + b[i]); break;
      case Op::meet: out.push_back(a[i] <= b[i] ? a[i] : b[i]); break;
      case Op::join: out.push_back(a[i] >= b[i] ? a[i] : b[i]); break;
    }
  }
  return out;
}

inline std::vector<Rational> pointwise_scale(const Rational& r, const std::vector<Rational>& a) {
  std::vector<Rational> out;
  out.reserve(a.size());
  for (const Rational& x : a) out.push_back(r * x);
  return out;
}

inline std::vector<Rational> pointwise_abs(const std::vector<Rational>& a) {
  std::vector<Rational> out;
  out.reserve(a.size());
  for (const Rational& x : a) out.push_back(x.abs());
  return out;
}

/// Can `target` be written as a linear combination of at most `terms`
/// pairwise disjoint characteristic functions? This is the decomposition
/// class of the uniqueness lemma: each chosen set must carry a constant
/// value and the function must vanish off their union. (Overlapping
/// characteristic functions are a strictly larger class in which no minimal
/// count is unique; they are deliberately excluded.)
inline bool representable_by_disjoint(const std::vector<Rational>& target,
                                      std::uint64_t support_left, std::size_t terms) {
  if (support_left == 0) return true;
  if (terms == 0) return false;
  int anchor = std::countr_zero(support_left);
  // Enumerate the candidate block through the anchor atom: any subset of the
  // remaining support containing the anchor on which the value is constant.
  std::uint64_t rest = support_left & ~(std::uint64_t{1} << anchor);
  std::vector<int> rest_atoms;
  for (int a = 0; a < static_cast<int>(target.size()); ++a) {
    if ((rest >> a) & 1) rest_atoms.push_back(a);
  }
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << rest_atoms.size()); ++pick) {
    std::uint64_t block = std::uint64_t{1} << anchor;
    bool constant = true;
    for (std::size_t j = 0; j < rest_atoms.size(); ++j) {
      if ((pick >> j) & 1) {
        if (target[rest_atoms[j]] != target[anchor]) {
          constant = false;
          break;
        }
        block |= std::uint64_t{1} << rest_atoms[j];
      }
    }
    if (constant && representable_by_disjoint(target, support_left & ~block, terms - 1)) {
      return true;
    }
  }
  return false;
}

/// Support mask of a valuation: atoms with nonzero value.
inline std::uint64_t support_mask(const std::vector<Rational>& values) {
  std::uint64_t mask = 0;
  for (std::size_t a = 0; a < values.size(); ++a) {
    if (!values[a].is_zero()) mask |= std::uint64_t{1} << a;
  }
  return mask;
}

/// Least n >= 1 with n*|v| /\ u Boolean, found by searching upward.
inline std::int64_t witness_by_search(const SpeckerElement& v, std::int64_t bound) {
  SpeckerElement magnitude = specker::abs_val(v);
  SpeckerElement u = SpeckerElement::unit(v.algebra());
  for (std::int64_t n = 1; n <= bound; ++n) {
    if (specker::is_boolean_element(specker::meet(Rational(n) * magnitude, u))) return n;
  }
  return -1;
}

}  // namespace oracle
