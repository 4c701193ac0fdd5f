#pragma once

#include <initializer_list>
#include <string_view>
#include <vector>

#include "specker/specker_element.hpp"

namespace testutil {

inline specker::Rational rat(std::string_view s) { return specker::Rational::from_string(s); }

inline specker::Element elem(specker::BooleanAlgebra algebra, std::initializer_list<int> atoms) {
  std::vector<int> xs(atoms);
  return specker::Element::from_atoms(algebra, xs);
}

/// SpeckerElement from a per-atom valuation written as fraction strings.
inline specker::SpeckerElement sv(specker::BooleanAlgebra algebra,
                                  std::initializer_list<std::string_view> values) {
  std::vector<specker::Rational> rs;
  rs.reserve(values.size());
  for (std::string_view s : values) rs.push_back(rat(s));
  return specker::from_atom_valuation(specker::AtomValuation(algebra, std::move(rs)));
}

}  // namespace testutil
