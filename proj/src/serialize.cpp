#include "specker/serialize.hpp"

#include "specker/error.hpp"

namespace specker {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw ShapeError(std::string("missing field \"") + name + "\"");
  }
  return j.at(name);
}

int int_field(const Json& j, const char* name) {
  const Json& f = field(j, name);
  if (!f.is_number_integer()) throw ShapeError(std::string("field \"") + name + "\" must be an integer");
  return f.get<int>();
}

std::vector<int> int_array(const Json& j, const char* context) {
  if (!j.is_array()) throw ShapeError(std::string(context) + " must be an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const Json& x : j) {
    if (!x.is_number_integer()) throw ShapeError(std::string(context) + " must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

Json to_json(const BooleanAlgebra& algebra) { return Json{{"atoms", algebra.atom_count()}}; }

Json to_json(const Element& e) { return Json{{"atoms", e.atoms()}}; }

Json to_json(const Partition& p) {
  Json blocks = Json::array();
  for (const Element& b : p.blocks()) blocks.push_back(b.atoms());
  return Json{{"blocks", std::move(blocks)}};
}

Json to_json(const BoolHom& f) {
  return Json{{"source", f.source().atom_count()},
              {"target", f.target().atom_count()},
              {"point_map", f.point_map()}};
}

Json to_json(const SpeckerElement& v) {
  Json blocks = Json::array();
  for (const Element& b : v.partition().blocks()) blocks.push_back(b.atoms());
  Json values = Json::array();
  for (const Rational& r : v.values()) values.push_back(r.str());
  return Json{{"algebra", v.algebra().atom_count()},
              {"blocks", std::move(blocks)},
              {"values", std::move(values)}};
}

Json to_json(const MaxIdeal& m) { return Json{{"atom", m.atom}}; }

Json to_json(const SpeckerMorphism& g) {
  return Json{{"kind", "specker_mor"},
              {"source", g.source().base().atom_count()},
              {"target", g.target().base().atom_count()},
              {"point_map", g.underlying().point_map()}};
}

Json morphism_to_json(const BoolHom& f) {
  Json j = to_json(f);
  j["kind"] = "bool_hom";
  return j;
}

Json to_json(const PolarDescriptor& p) { return Json{{"generator", to_json(p.generator())}}; }

Json to_json(const FreeElement& x) {
  return Json{{"support", x.support()}, {"body", to_json(x.body())}};
}

BooleanAlgebra algebra_from_json(const Json& j) { return make_algebra(int_field(j, "atoms"), kMaxAtomCapacity); }

Element element_from_json(const Json& j, BooleanAlgebra algebra) {
  std::vector<int> atoms = int_array(field(j, "atoms"), "\"atoms\"");
  return Element::from_atoms(algebra, atoms);
}

Partition partition_from_json(const Json& j, BooleanAlgebra algebra) {
  const Json& blocks = field(j, "blocks");
  if (!blocks.is_array()) throw ShapeError("\"blocks\" must be an array");
  std::vector<Element> out;
  out.reserve(blocks.size());
  for (const Json& b : blocks) {
    out.push_back(Element::from_atoms(algebra, int_array(b, "block")));
  }
  return Partition::of_blocks(algebra, std::move(out));
}

BoolHom hom_from_json(const Json& j) {
  BooleanAlgebra source = make_algebra(int_field(j, "source"), kMaxAtomCapacity);
  BooleanAlgebra target = make_algebra(int_field(j, "target"), kMaxAtomCapacity);
  return BoolHom(source, target, int_array(field(j, "point_map"), "\"point_map\""));
}

SpeckerElement specker_element_from_json(const Json& j) {
  BooleanAlgebra algebra = make_algebra(int_field(j, "algebra"), kMaxAtomCapacity);
  Partition partition = partition_from_json(j, algebra);
  const Json& values = field(j, "values");
  if (!values.is_array()) throw ShapeError("\"values\" must be an array");
  std::vector<Rational> out;
  out.reserve(values.size());
  for (const Json& v : values) {
    if (!v.is_string()) throw ShapeError("\"values\" must hold fraction strings");
    out.push_back(Rational::from_string(v.get<std::string>()));
  }
  return SpeckerElement::canonical(partition, std::move(out));
}

MaxIdeal max_ideal_from_json(const Json& j, const SpeckerLattice& lattice) {
  int atom = int_field(j, "atom");
  if (atom < 0 || atom >= lattice.base().atom_count()) {
    throw ShapeError("ideal atom out of range");
  }
  return {lattice, atom};
}

SpeckerMorphism specker_morphism_from_json(const Json& j) {
  const Json& kind = field(j, "kind");
  if (kind != "specker_mor" && kind != "bool_hom") {
    throw ShapeError("morphism kind must be \"specker_mor\" or \"bool_hom\"");
  }
  return lift_hom(hom_from_json(j));
}

PolarDescriptor polar_from_json(const Json& j) {
  SpeckerElement generator = specker_element_from_json(field(j, "generator"));
  return PolarDescriptor(SpeckerLattice(generator.algebra()), std::move(generator));
}

FreeElement free_element_from_json(const Json& j) {
  std::vector<int> support = int_array(field(j, "support"), "\"support\"");
  SpeckerElement body = specker_element_from_json(field(j, "body"));
  return FreeElement::from_parts(std::move(support), std::move(body));
}

}  // namespace specker
