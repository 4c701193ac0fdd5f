#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace specker {

/// Default bound on atom counts. Universes are bitmask-backed, so every
/// algebra stays cheap below this; the hard limit is the mask width.
inline constexpr int kDefaultAtomCapacity = 24;
inline constexpr int kMaxAtomCapacity = 32;

using AtomMask = std::uint64_t;

/// A finite Boolean algebra presented by its atom set. The element universe
/// is the powerset of {0, ..., atom_count-1}; atom_count == 0 gives the
/// trivial algebra in which top == bottom.
class BooleanAlgebra {
 public:
  explicit BooleanAlgebra(int atom_count, int capacity = kDefaultAtomCapacity);

  int atom_count() const { return atom_count_; }
  bool is_trivial() const { return atom_count_ == 0; }

  AtomMask top_mask() const {
    return atom_count_ == 0 ? 0 : (AtomMask{1} << atom_count_) - 1;
  }

  friend bool operator==(const BooleanAlgebra&, const BooleanAlgebra&) = default;

 private:
  int atom_count_;
};

/// Convenience constructor.
BooleanAlgebra make_algebra(int atom_count, int capacity = kDefaultAtomCapacity);

/// An element of a finite Boolean algebra: a subset of its atoms.
class Element {
 public:
  Element(BooleanAlgebra algebra, AtomMask atoms);
  static Element from_atoms(BooleanAlgebra algebra, std::span<const int> atoms);

  BooleanAlgebra algebra() const { return algebra_; }
  AtomMask mask() const { return mask_; }

  bool contains(int atom) const { return (mask_ >> atom) & 1; }
  bool is_bottom() const { return mask_ == 0; }
  bool is_top() const { return mask_ == algebra_.top_mask(); }
  int atom_count_in() const;

  /// Smallest atom index in the set, or -1 for bottom.
  int least_atom() const;

  /// Sorted atom indices.
  std::vector<int> atoms() const;

  std::string str() const;

  friend bool operator==(const Element&, const Element&) = default;

 private:
  BooleanAlgebra algebra_;
  AtomMask mask_;
};

Element top(BooleanAlgebra algebra);
Element bottom(BooleanAlgebra algebra);
Element atom_element(BooleanAlgebra algebra, int atom);

Element meet(const Element& x, const Element& y);
Element join(const Element& x, const Element& y);
Element complement(const Element& x);
bool disjoint(const Element& x, const Element& y);
bool leq(const Element& x, const Element& y);

/// A finite partition: nonbottom, pairwise disjoint elements joining to top,
/// kept sorted by least atom index so equality is structural. The trivial
/// algebra has exactly one partition, the empty one.
class Partition {
 public:
  /// Validates the blocks and sorts them; throws PreconditionError if the
  /// given set is not a partition.
  static Partition of_blocks(BooleanAlgebra algebra, std::vector<Element> blocks);

  /// The coarsest partition: {top}, or {} over the trivial algebra.
  static Partition singleton(BooleanAlgebra algebra);

  /// The finest partition: one block per atom.
  static Partition atoms(BooleanAlgebra algebra);

  BooleanAlgebra algebra() const { return algebra_; }
  const std::vector<Element>& blocks() const { return blocks_; }
  int size() const { return static_cast<int>(blocks_.size()); }

  /// Index of the block containing `atom`.
  int block_index_of(int atom) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  struct Trusted {};
  Partition(BooleanAlgebra algebra, std::vector<Element> blocks, Trusted);

  BooleanAlgebra algebra_;
  std::vector<Element> blocks_;

  friend Partition common_refinement(const Partition&, const Partition&);
  friend Partition image_partition(const class BoolHom&, const Partition&);
};

/// True iff the given elements form a partition of `algebra` (no bottom,
/// pairwise disjoint, join equals top).
bool is_partition(BooleanAlgebra algebra, std::span<const Element> blocks);

/// All nonbottom pairwise meets of blocks; refines both inputs.
Partition common_refinement(const Partition& p1, const Partition& p2);

/// True iff every block of `p1` is contained in some block of `p2`.
bool refines(const Partition& p1, const Partition& p2);

/// A homomorphism f : source -> target between finite Boolean algebras,
/// stored by its dual point map Atoms(target) -> Atoms(source). The element
/// map is f(b) = { a in Atoms(target) : point_map(a) in b }.
class BoolHom {
 public:
  BoolHom(BooleanAlgebra source, BooleanAlgebra target, std::vector<int> point_map);
  static BoolHom identity(BooleanAlgebra algebra);

  BooleanAlgebra source() const { return source_; }
  BooleanAlgebra target() const { return target_; }
  const std::vector<int>& point_map() const { return point_map_; }

  friend bool operator==(const BoolHom&, const BoolHom&) = default;

 private:
  BooleanAlgebra source_;
  BooleanAlgebra target_;
  std::vector<int> point_map_;
};

/// Element map of the homomorphism.
Element apply_hom(const BoolHom& f, const Element& b);

/// f(P) = { f(b) : f(b) != bottom }; a partition of the target algebra.
Partition image_partition(const BoolHom& f, const Partition& p);

/// Composition `second` after `first`; point maps compose in reverse.
BoolHom compose(const BoolHom& second, const BoolHom& first);

struct FreeBooleanAlgebra {
  BooleanAlgebra algebra;           // 2^n atoms, atom index read as an n-bit assignment
  std::vector<Element> generators;  // generator i = atoms whose bit i is 1
};

/// Free Boolean algebra on n generators.
FreeBooleanAlgebra free_boolean_algebra(int n, int capacity = kDefaultAtomCapacity);

struct GeneratedSubalgebra {
  /// Two atoms share a block iff no generator separates them.
  Partition atom_partition;
  /// The subalgebra itself: all unions of blocks, sorted by mask. Size 2^k
  /// where k is the number of blocks.
  std::vector<Element> elements;
};

/// Induced atom partition of the generating set (two atoms equivalent iff no
/// member of `generators` separates them), without materializing elements.
Partition separation_partition(BooleanAlgebra algebra, std::span<const Element> generators);

/// Smallest subalgebra containing `generators`.
GeneratedSubalgebra generated_subalgebra(BooleanAlgebra algebra,
                                         std::span<const Element> generators);

}  // namespace specker
