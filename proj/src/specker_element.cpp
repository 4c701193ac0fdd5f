#include "specker/specker_element.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "specker/error.hpp"

namespace specker {

namespace {

void require_same_algebra(const BooleanAlgebra& a, const BooleanAlgebra& b) {
  if (a != b) {
    throw AlgebraMismatchError("operands belong to algebras with " +
                               std::to_string(a.atom_count()) + " and " +
                               std::to_string(b.atom_count()) + " atoms");
  }
}

SpeckerElement merge_by_value(BooleanAlgebra algebra,
                              const std::vector<std::pair<Element, Rational>>& entries) {
  std::map<Rational, AtomMask> groups;
  for (const auto& [block, value] : entries) groups[value] |= block.mask();
  std::vector<std::pair<AtomMask, Rational>> merged;
  merged.reserve(groups.size());
  for (const auto& [value, mask] : groups) merged.emplace_back(mask, value);
  std::sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) {
    return std::countr_zero(a.first) < std::countr_zero(b.first);
  });
  std::vector<Element> blocks;
  std::vector<Rational> values;
  blocks.reserve(merged.size());
  values.reserve(merged.size());
  for (const auto& [mask, value] : merged) {
    blocks.emplace_back(algebra, mask);
    values.push_back(value);
  }
  return canonicalize(Partition::of_blocks(algebra, std::move(blocks)), std::move(values));
}

}  // namespace

AtomValuation::AtomValuation(BooleanAlgebra algebra, std::vector<Rational> values)
    : algebra_(algebra), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != algebra_.atom_count()) {
    throw ShapeError("valuation length must equal the atom count");
  }
}

SpeckerElement SpeckerElement::canonical(const Partition& partition,
                                         std::vector<Rational> values) {
  if (values.size() != partition.blocks().size()) {
    throw ShapeError("one value per partition block required");
  }
  // Already canonical iff values are pairwise distinct; blocks are sorted by
  // the Partition invariant.
  bool distinct = true;
  for (std::size_t i = 0; i < values.size() && distinct; ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (values[i] == values[j]) {
        distinct = false;
        break;
      }
    }
  }
  if (distinct) return SpeckerElement(partition, std::move(values));
  std::vector<std::pair<Element, Rational>> entries;
  entries.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    entries.emplace_back(partition.blocks()[i], values[i]);
  }
  return merge_by_value(partition.algebra(), entries);
}

SpeckerElement SpeckerElement::from_block_values(
    BooleanAlgebra algebra, std::vector<std::pair<Element, Rational>> entries) {
  std::vector<Element> blocks;
  blocks.reserve(entries.size());
  for (const auto& [block, value] : entries) blocks.push_back(block);
  if (!is_partition(algebra, blocks)) {
    throw PreconditionError("blocks do not form a partition");
  }
  return merge_by_value(algebra, entries);
}

SpeckerElement SpeckerElement::constant(BooleanAlgebra algebra, const Rational& r) {
  std::vector<Rational> values;
  if (!algebra.is_trivial()) values.push_back(r);
  return SpeckerElement(Partition::singleton(algebra), std::move(values));
}

SpeckerElement SpeckerElement::indicator(const Element& b) {
  std::vector<std::pair<Element, Rational>> entries;
  if (!b.is_bottom()) entries.emplace_back(b, Rational(1));
  if (!complement(b).is_bottom()) entries.emplace_back(complement(b), Rational(0));
  if (entries.empty()) return zero(b.algebra());
  return merge_by_value(b.algebra(), entries);
}

const Rational& SpeckerElement::value_at_atom(int atom) const {
  return values_[partition_.block_index_of(atom)];
}

bool SpeckerElement::is_zero() const { return *this == zero(algebra()); }

std::string SpeckerElement::str() const {
  std::string s = "(";
  for (int i = 0; i < partition_.size(); ++i) {
    if (i > 0) s += ", ";
    s += partition_.blocks()[i].str();
    s += ": ";
    s += values_[i].str();
  }
  s += ')';
  return s;
}

SpeckerElement canonicalize(const Partition& partition, std::vector<Rational> values) {
  return SpeckerElement::canonical(partition, std::move(values));
}

AtomValuation to_atom_valuation(const SpeckerElement& v) {
  std::vector<Rational> values;
  values.reserve(v.algebra().atom_count());
  for (int a = 0; a < v.algebra().atom_count(); ++a) values.push_back(v.value_at_atom(a));
  return AtomValuation(v.algebra(), std::move(values));
}

SpeckerElement from_atom_valuation(const AtomValuation& a) {
  if (a.algebra().is_trivial()) return SpeckerElement::zero(a.algebra());
  std::vector<std::pair<Element, Rational>> entries;
  entries.reserve(a.values().size());
  for (int atom = 0; atom < a.algebra().atom_count(); ++atom) {
    entries.emplace_back(atom_element(a.algebra(), atom), a.at(atom));
  }
  return SpeckerElement::from_block_values(a.algebra(), std::move(entries));
}

namespace {

template <typename Op>
SpeckerElement blockwise(const SpeckerElement& v, const SpeckerElement& w, Op op) {
  require_same_algebra(v.algebra(), w.algebra());
  Partition refined = common_refinement(v.partition(), w.partition());
  std::vector<Rational> values;
  values.reserve(refined.size());
  for (const Element& block : refined.blocks()) {
    int atom = block.least_atom();
    values.push_back(op(v.value_at_atom(atom), w.value_at_atom(atom)));
  }
  return SpeckerElement::canonical(refined, std::move(values));
}

template <typename Op>
SpeckerElement mapped(const SpeckerElement& v, Op op) {
  std::vector<Rational> values;
  values.reserve(v.values().size());
  for (const Rational& r : v.values()) values.push_back(op(r));
  return SpeckerElement::canonical(v.partition(), std::move(values));
}

}  // namespace

SpeckerElement operator+(const SpeckerElement& v, const SpeckerElement& w) {
  return blockwise(v, w, [](const Rational& a, const Rational& b) { return a + b; });
}

SpeckerElement operator-(const SpeckerElement& v, const SpeckerElement& w) {
  return blockwise(v, w, [](const Rational& a, const Rational& b) { return a - b; });
}

SpeckerElement operator-(const SpeckerElement& v) {
  return mapped(v, [](const Rational& r) { return -r; });
}

SpeckerElement operator*(const Rational& r, const SpeckerElement& v) {
  return mapped(v, [&](const Rational& x) { return r * x; });
}

SpeckerElement meet(const SpeckerElement& v, const SpeckerElement& w) {
  return blockwise(v, w, [](const Rational& a, const Rational& b) { return min(a, b); });
}

SpeckerElement join(const SpeckerElement& v, const SpeckerElement& w) {
  return blockwise(v, w, [](const Rational& a, const Rational& b) { return max(a, b); });
}

SpeckerElement abs_val(const SpeckerElement& v) {
  return mapped(v, [](const Rational& r) { return r.abs(); });
}

bool leq(const SpeckerElement& v, const SpeckerElement& w) { return meet(v, w) == v; }

bool is_boolean_element(const SpeckerElement& v) {
  for (const Rational& r : v.values()) {
    if (!r.is_zero() && r != Rational(1)) return false;
  }
  return true;
}

std::int64_t hyperarchimedean_witness(const SpeckerElement& v) {
  bool any = false;
  Rational least(0);
  for (const Rational& r : v.values()) {
    if (r.is_zero()) continue;
    Rational a = r.abs();
    if (!any || a < least) {
      least = a;
      any = true;
    }
  }
  if (!any) return 1;  // v == 0 is already Boolean
  return least.reciprocal().ceil();
}

std::vector<DecompositionTerm> minimal_decomposition(const SpeckerElement& v) {
  std::vector<DecompositionTerm> terms;
  for (int i = 0; i < v.partition().size(); ++i) {
    if (v.values()[i].is_zero()) continue;
    terms.push_back({v.values()[i], SpeckerElement::indicator(v.partition().blocks()[i])});
  }
  std::sort(terms.begin(), terms.end(), [](const DecompositionTerm& a, const DecompositionTerm& b) {
    return a.coefficient < b.coefficient;
  });
  return terms;
}

}  // namespace specker
