#include "specker/boolean.hpp"

#include <algorithm>
#include <bit>

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

int least_bit(AtomMask m) { return m == 0 ? -1 : std::countr_zero(m); }

}  // namespace

BooleanAlgebra::BooleanAlgebra(int atom_count, int capacity) : atom_count_(atom_count) {
  int bound = std::min(capacity, kMaxAtomCapacity);
  if (atom_count < 0 || atom_count > bound) {
    throw CapacityError("atom count " + std::to_string(atom_count) +
                        " outside [0, " + std::to_string(bound) + "]");
  }
}

BooleanAlgebra make_algebra(int atom_count, int capacity) {
  return BooleanAlgebra(atom_count, capacity);
}

Element::Element(BooleanAlgebra algebra, AtomMask atoms) : algebra_(algebra), mask_(atoms) {
  if ((mask_ & ~algebra_.top_mask()) != 0) {
    throw ShapeError("element mask uses atoms outside the algebra");
  }
}

Element Element::from_atoms(BooleanAlgebra algebra, std::span<const int> atoms) {
  AtomMask m = 0;
  for (int a : atoms) {
    if (a < 0 || a >= algebra.atom_count()) {
      throw ShapeError("atom index " + std::to_string(a) + " out of range");
    }
    m |= AtomMask{1} << a;
  }
  return Element(algebra, m);
}

int Element::atom_count_in() const { return std::popcount(mask_); }

int Element::least_atom() const { return least_bit(mask_); }

std::vector<int> Element::atoms() const {
  std::vector<int> out;
  for (int a = 0; a < algebra_.atom_count(); ++a) {
    if (contains(a)) out.push_back(a);
  }
  return out;
}

std::string Element::str() const {
  std::string s = "{";
  bool first = true;
  for (int a : atoms()) {
    if (!first) s += ',';
    s += std::to_string(a);
    first = false;
  }
  s += '}';
  return s;
}

Element top(BooleanAlgebra algebra) { return Element(algebra, algebra.top_mask()); }
Element bottom(BooleanAlgebra algebra) { return Element(algebra, 0); }

Element atom_element(BooleanAlgebra algebra, int atom) {
  if (atom < 0 || atom >= algebra.atom_count()) {
    throw ShapeError("atom index " + std::to_string(atom) + " out of range");
  }
  return Element(algebra, AtomMask{1} << atom);
}

Element meet(const Element& x, const Element& y) {
  require_same_algebra(x.algebra(), y.algebra());
  return Element(x.algebra(), x.mask() & y.mask());
}

Element join(const Element& x, const Element& y) {
  require_same_algebra(x.algebra(), y.algebra());
  return Element(x.algebra(), x.mask() | y.mask());
}

Element complement(const Element& x) {
  return Element(x.algebra(), x.algebra().top_mask() & ~x.mask());
}

bool disjoint(const Element& x, const Element& y) {
  require_same_algebra(x.algebra(), y.algebra());
  return (x.mask() & y.mask()) == 0;
}

bool leq(const Element& x, const Element& y) {
  require_same_algebra(x.algebra(), y.algebra());
  return (x.mask() & y.mask()) == x.mask();
}

bool is_partition(BooleanAlgebra algebra, std::span<const Element> blocks) {
  AtomMask seen = 0;
  for (const Element& b : blocks) {
    require_same_algebra(algebra, b.algebra());
    if (b.is_bottom()) return false;
    if ((seen & b.mask()) != 0) return false;
    seen |= b.mask();
  }
  return seen == algebra.top_mask();
}

Partition::Partition(BooleanAlgebra algebra, std::vector<Element> blocks, Trusted)
    : algebra_(algebra), blocks_(std::move(blocks)) {
  std::sort(blocks_.begin(), blocks_.end(),
            [](const Element& a, const Element& b) { return a.least_atom() < b.least_atom(); });
}

Partition Partition::of_blocks(BooleanAlgebra algebra, std::vector<Element> blocks) {
  if (!is_partition(algebra, blocks)) {
    throw PreconditionError("blocks do not form a partition");
  }
  return Partition(algebra, std::move(blocks), Trusted{});
}

Partition Partition::singleton(BooleanAlgebra algebra) {
  std::vector<Element> blocks;
  if (!algebra.is_trivial()) blocks.push_back(top(algebra));
  return Partition(algebra, std::move(blocks), Trusted{});
}

Partition Partition::atoms(BooleanAlgebra algebra) {
  std::vector<Element> blocks;
  blocks.reserve(algebra.atom_count());
  for (int a = 0; a < algebra.atom_count(); ++a) blocks.push_back(atom_element(algebra, a));
  return Partition(algebra, std::move(blocks), Trusted{});
}

int Partition::block_index_of(int atom) const {
  for (int i = 0; i < size(); ++i) {
    if (blocks_[i].contains(atom)) return i;
  }
  throw ShapeError("atom index " + std::to_string(atom) + " out of range");
}

Partition common_refinement(const Partition& p1, const Partition& p2) {
  require_same_algebra(p1.algebra(), p2.algebra());
  std::vector<Element> blocks;
  for (const Element& b1 : p1.blocks()) {
    for (const Element& b2 : p2.blocks()) {
      AtomMask m = b1.mask() & b2.mask();
      if (m != 0) blocks.emplace_back(p1.algebra(), m);
    }
  }
  return Partition(p1.algebra(), std::move(blocks), Partition::Trusted{});
}

bool refines(const Partition& p1, const Partition& p2) {
  require_same_algebra(p1.algebra(), p2.algebra());
  for (const Element& b : p1.blocks()) {
    const Element& host = p2.blocks()[p2.block_index_of(b.least_atom())];
    if (!leq(b, host)) return false;
  }
  return true;
}

BoolHom::BoolHom(BooleanAlgebra source, BooleanAlgebra target, std::vector<int> point_map)
    : source_(source), target_(target), point_map_(std::move(point_map)) {
  if (static_cast<int>(point_map_.size()) != target_.atom_count()) {
    throw ShapeError("point map must assign one source atom per target atom");
  }
  for (int p : point_map_) {
    if (p < 0 || p >= source_.atom_count()) {
      throw PreconditionError("point map value " + std::to_string(p) +
                              " is not an atom of the source algebra");
    }
  }
}

BoolHom BoolHom::identity(BooleanAlgebra algebra) {
  std::vector<int> pm(algebra.atom_count());
  for (int a = 0; a < algebra.atom_count(); ++a) pm[a] = a;
  return BoolHom(algebra, algebra, std::move(pm));
}

Element apply_hom(const BoolHom& f, const Element& b) {
  require_same_algebra(f.source(), b.algebra());
  AtomMask m = 0;
  for (int a = 0; a < f.target().atom_count(); ++a) {
    if (b.contains(f.point_map()[a])) m |= AtomMask{1} << a;
  }
  return Element(f.target(), m);
}

Partition image_partition(const BoolHom& f, const Partition& p) {
  require_same_algebra(f.source(), p.algebra());
  std::vector<Element> blocks;
  for (const Element& b : p.blocks()) {
    Element image = apply_hom(f, b);
    if (!image.is_bottom()) blocks.push_back(image);
  }
  return Partition(f.target(), std::move(blocks), Partition::Trusted{});
}

BoolHom compose(const BoolHom& second, const BoolHom& first) {
  require_same_algebra(first.target(), second.source());
  std::vector<int> pm(second.target().atom_count());
  for (int a = 0; a < second.target().atom_count(); ++a) {
    pm[a] = first.point_map()[second.point_map()[a]];
  }
  return BoolHom(first.source(), second.target(), std::move(pm));
}

FreeBooleanAlgebra free_boolean_algebra(int n, int capacity) {
  if (n < 0) throw CapacityError("negative generator count");
  if (n >= 31 || (1 << n) > std::min(capacity, kMaxAtomCapacity)) {
    throw CapacityError("free algebra on " + std::to_string(n) +
                        " generators exceeds the atom capacity");
  }
  BooleanAlgebra algebra(1 << n, capacity);
  std::vector<Element> generators;
  generators.reserve(n);
  for (int i = 0; i < n; ++i) {
    AtomMask m = 0;
    for (int a = 0; a < algebra.atom_count(); ++a) {
      if ((a >> i) & 1) m |= AtomMask{1} << a;
    }
    generators.emplace_back(algebra, m);
  }
  return {algebra, std::move(generators)};
}

Partition separation_partition(BooleanAlgebra algebra, std::span<const Element> generators) {
  for (const Element& g : generators) require_same_algebra(algebra, g.algebra());
  // Signature of an atom = its membership pattern across the generators.
  std::vector<Element> blocks;
  std::vector<AtomMask> seen_signature_block;  // parallel: block mask per signature
  std::vector<std::vector<bool>> signatures;
  for (int a = 0; a < algebra.atom_count(); ++a) {
    std::vector<bool> sig;
    sig.reserve(generators.size());
    for (const Element& g : generators) sig.push_back(g.contains(a));
    bool placed = false;
    for (std::size_t i = 0; i < signatures.size(); ++i) {
      if (signatures[i] == sig) {
        seen_signature_block[i] |= AtomMask{1} << a;
        placed = true;
        break;
      }
    }
    if (!placed) {
      signatures.push_back(std::move(sig));
      seen_signature_block.push_back(AtomMask{1} << a);
    }
  }
  blocks.reserve(seen_signature_block.size());
  for (AtomMask m : seen_signature_block) blocks.emplace_back(algebra, m);
  return Partition::of_blocks(algebra, std::move(blocks));
}

GeneratedSubalgebra generated_subalgebra(BooleanAlgebra algebra,
                                         std::span<const Element> generators) {
  Partition parts = separation_partition(algebra, generators);
  int k = parts.size();
  if (k > 20) {
    throw CapacityError("generated subalgebra would have 2^" + std::to_string(k) +
                        " elements");
  }
  std::vector<Element> elements;
  elements.reserve(std::size_t{1} << k);
  for (AtomMask pick = 0; pick < (AtomMask{1} << k); ++pick) {
    AtomMask m = 0;
    for (int i = 0; i < k; ++i) {
      if ((pick >> i) & 1) m |= parts.blocks()[i].mask();
    }
    elements.emplace_back(algebra, m);
  }
  std::sort(elements.begin(), elements.end(),
            [](const Element& a, const Element& b) { return a.mask() < b.mask(); });
  return {std::move(parts), std::move(elements)};
}

}  // namespace specker
