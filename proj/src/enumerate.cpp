#include "specker/enumerate.hpp"

#include <array>

#include "specker/error.hpp"

namespace specker {

std::vector<Element> all_elements(BooleanAlgebra algebra) {
  std::vector<Element> out;
  out.reserve(std::size_t{1} << algebra.atom_count());
  for (AtomMask m = 0; m <= algebra.top_mask(); ++m) {
    out.emplace_back(algebra, m);
    if (m == algebra.top_mask()) break;  // guard against wraparound at full width
  }
  return out;
}

std::vector<BoolHom> all_homs(BooleanAlgebra source, BooleanAlgebra target) {
  std::vector<BoolHom> out;
  if (source.is_trivial() && !target.is_trivial()) return out;  // no total point map
  std::vector<int> pm(target.atom_count(), 0);
  while (true) {
    out.emplace_back(source, target, pm);
    int i = 0;
    for (; i < target.atom_count(); ++i) {
      if (++pm[i] < source.atom_count()) break;
      pm[i] = 0;
    }
    if (i == target.atom_count()) break;
  }
  return out;
}

namespace {

void partitions_rec(BooleanAlgebra algebra, int atom, std::vector<AtomMask>& blocks,
                    std::vector<Partition>& out) {
  if (atom == algebra.atom_count()) {
    std::vector<Element> elems;
    elems.reserve(blocks.size());
    for (AtomMask m : blocks) elems.emplace_back(algebra, m);
    out.push_back(Partition::of_blocks(algebra, std::move(elems)));
    return;
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    blocks[i] |= AtomMask{1} << atom;
    partitions_rec(algebra, atom + 1, blocks, out);
    blocks[i] &= ~(AtomMask{1} << atom);
  }
  blocks.push_back(AtomMask{1} << atom);
  partitions_rec(algebra, atom + 1, blocks, out);
  blocks.pop_back();
}

}  // namespace

std::vector<Partition> all_partitions(BooleanAlgebra algebra) {
  std::vector<Partition> out;
  std::vector<AtomMask> blocks;
  partitions_rec(algebra, 0, blocks, out);
  return out;
}

std::vector<SpeckerElement> all_grid_elements(BooleanAlgebra algebra,
                                              std::span<const Rational> grid) {
  std::vector<SpeckerElement> out;
  if (algebra.is_trivial()) {
    out.push_back(SpeckerElement::zero(algebra));
    return out;
  }
  if (grid.empty()) throw ShapeError("empty value grid");
  std::vector<std::size_t> pick(algebra.atom_count(), 0);
  while (true) {
    std::vector<Rational> values;
    values.reserve(pick.size());
    for (std::size_t p : pick) values.push_back(grid[p]);
    out.push_back(from_atom_valuation(AtomValuation(algebra, std::move(values))));
    std::size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < grid.size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
  }
  return out;
}

std::span<const Rational> default_value_grid() {
  static const std::array<Rational, 6> grid = {Rational(-2), Rational(-1), Rational(0),
                                               Rational(1, 2), Rational(1), Rational(2)};
  return grid;
}

std::uint64_t Sampler::next(std::uint64_t bound) {
  return bound == 0 ? 0 : engine_() % bound;
}

Rational Sampler::rational(std::int64_t max_abs_num, std::int64_t max_den) {
  std::int64_t num = static_cast<std::int64_t>(next(2 * max_abs_num + 1)) - max_abs_num;
  std::int64_t den = 1 + static_cast<std::int64_t>(next(max_den));
  return Rational(num, den);
}

Element Sampler::element(BooleanAlgebra algebra) {
  AtomMask m = algebra.is_trivial() ? 0 : next(algebra.top_mask() + 1);
  return Element(algebra, m);
}

SpeckerElement Sampler::specker_element(BooleanAlgebra algebra, std::int64_t max_abs_num,
                                        std::int64_t max_den) {
  std::vector<Rational> values;
  values.reserve(algebra.atom_count());
  for (int a = 0; a < algebra.atom_count(); ++a) values.push_back(rational(max_abs_num, max_den));
  return from_atom_valuation(AtomValuation(algebra, std::move(values)));
}

BoolHom Sampler::hom(BooleanAlgebra source, BooleanAlgebra target) {
  if (source.is_trivial() && !target.is_trivial()) {
    throw PreconditionError("no homomorphism from the trivial algebra to a nontrivial one");
  }
  std::vector<int> pm(target.atom_count());
  for (int& p : pm) p = static_cast<int>(next(source.atom_count()));
  return BoolHom(source, target, std::move(pm));
}

}  // namespace specker
