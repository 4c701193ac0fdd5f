#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "specker/boolean.hpp"
#include "specker/specker_element.hpp"

namespace specker {

/// All 2^k elements of the algebra, by ascending mask.
std::vector<Element> all_elements(BooleanAlgebra algebra);

/// All homomorphisms source -> target, i.e. all point maps
/// Atoms(target) -> Atoms(source). Empty when none exist (trivial source,
/// nontrivial target).
std::vector<BoolHom> all_homs(BooleanAlgebra source, BooleanAlgebra target);

/// All partitions of the algebra (set partitions of the atoms).
std::vector<Partition> all_partitions(BooleanAlgebra algebra);

/// All SpeckerElements whose atom valuations draw from `grid` (grid^k many,
/// before canonical merging; duplicates are not removed).
std::vector<SpeckerElement> all_grid_elements(BooleanAlgebra algebra,
                                              std::span<const Rational> grid);

/// The value grid used by the exhaustive small-scale checks.
std::span<const Rational> default_value_grid();

/// Deterministic seeded sampler for randomized checks. Uses raw engine draws
/// with modulo reduction so sequences are identical across platforms.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next(std::uint64_t bound);  // uniform-ish in [0, bound)
  Rational rational(std::int64_t max_abs_num, std::int64_t max_den);
  Element element(BooleanAlgebra algebra);
  SpeckerElement specker_element(BooleanAlgebra algebra, std::int64_t max_abs_num,
                                 std::int64_t max_den);
  BoolHom hom(BooleanAlgebra source, BooleanAlgebra target);

 private:
  std::mt19937_64 engine_;
};

}  // namespace specker
