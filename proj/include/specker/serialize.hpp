#pragma once

#include <json.hpp>

#include "specker/free.hpp"
#include "specker/spectra.hpp"
#include "specker/structure.hpp"

namespace specker {

using Json = nlohmann::json;

// All arrays are emitted sorted ascending and all rationals as reduced
// fraction strings, so serialization is bit-exact.

Json to_json(const BooleanAlgebra& algebra);            // {"atoms": k}
Json to_json(const Element& e);                         // {"atoms": [...]}
Json to_json(const Partition& p);                       // {"blocks": [[...], ...]}
Json to_json(const BoolHom& f);                         // {"source","target","point_map"}
Json to_json(const SpeckerElement& v);                  // {"algebra","blocks","values"}
Json to_json(const MaxIdeal& m);                        // {"atom": i}
Json to_json(const SpeckerMorphism& g);                 // {"kind":"specker_mor", ...}
Json morphism_to_json(const BoolHom& f);                // {"kind":"bool_hom", ...}
Json to_json(const PolarDescriptor& p);                 // {"generator": ...}
Json to_json(const FreeElement& x);                     // {"support","body"}

BooleanAlgebra algebra_from_json(const Json& j);
Element element_from_json(const Json& j, BooleanAlgebra algebra);
Partition partition_from_json(const Json& j, BooleanAlgebra algebra);
BoolHom hom_from_json(const Json& j);
SpeckerElement specker_element_from_json(const Json& j);
MaxIdeal max_ideal_from_json(const Json& j, const SpeckerLattice& lattice);
SpeckerMorphism specker_morphism_from_json(const Json& j);
PolarDescriptor polar_from_json(const Json& j);
FreeElement free_element_from_json(const Json& j);

}  // namespace specker
