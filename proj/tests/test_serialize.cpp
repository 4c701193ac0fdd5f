#include <doctest.h>

#include "specker/enumerate.hpp"
#include "specker/error.hpp"
#include "specker/serialize.hpp"
#include "util.hpp"

using namespace specker;
using testutil::elem;
using testutil::sv;

TEST_CASE("documented JSON shapes") {
  BooleanAlgebra b3 = make_algebra(3);
  CHECK(to_json(b3).dump() == R"({"atoms":3})");
  CHECK(to_json(elem(b3, {2, 0})).dump() == R"({"atoms":[0,2]})");
  Partition p = Partition::of_blocks(b3, {elem(b3, {1, 2}), elem(b3, {0})});
  CHECK(to_json(p).dump() == R"({"blocks":[[0],[1,2]]})");
  BoolHom f(b3, make_algebra(2), {0, 2});
  CHECK(to_json(f).dump() == R"({"point_map":[0,2],"source":3,"target":2})");
  SpeckerElement v = sv(b3, {"2", "1/2", "1/2"});
  CHECK(to_json(v).dump() ==
        R"({"algebra":3,"blocks":[[0],[1,2]],"values":["2","1/2"]})");
  CHECK(to_json(MaxIdeal{specker_lattice(b3), 1}).dump() == R"({"atom":1})");
  CHECK(to_json(lift_hom(f)).dump() ==
        R"({"kind":"specker_mor","point_map":[0,2],"source":3,"target":2})");
  CHECK(morphism_to_json(f)["kind"] == "bool_hom");
  CHECK(to_json(principal_polar(v)).dump() ==
        R"({"generator":{"algebra":3,"blocks":[[0,1,2]],"values":["0"]}})");
  FreeElement x = meet(FreeElement::generator(0), FreeElement::generator(2));
  CHECK(to_json(x)["support"] == Json::array({0, 2}));
}

TEST_CASE("round trips") {
  Sampler sampler(101);
  for (int i = 0; i < 200; ++i) {
    BooleanAlgebra algebra = make_algebra(static_cast<int>(sampler.next(7)));
    SpeckerElement v = sampler.specker_element(algebra, 5, 7);
    CHECK(specker_element_from_json(to_json(v)) == v);
    Element e = sampler.element(algebra);
    CHECK(element_from_json(to_json(e), algebra) == e);
    if (!algebra.is_trivial()) {
      BooleanAlgebra target = make_algebra(1 + static_cast<int>(sampler.next(5)));
      BoolHom f = sampler.hom(algebra, target);
      CHECK(hom_from_json(to_json(f)) == f);
      CHECK(specker_morphism_from_json(to_json(lift_hom(f))) == lift_hom(f));
    }
    CHECK(partition_from_json(to_json(v.partition()), algebra) == v.partition());
    CHECK(polar_from_json(to_json(principal_polar(v))) == principal_polar(v));
  }
  FreeElement x = meet(FreeElement::generator(1), FreeElement::generator(3));
  CHECK(free_element_from_json(to_json(x)) == x);
}

TEST_CASE("serialization is deterministic and sorted") {
  BooleanAlgebra b3 = make_algebra(3);
  SpeckerElement v = sv(b3, {"1/2", "0", "1/2"});
  std::string once = to_json(v).dump();
  std::string twice = to_json(specker_element_from_json(to_json(v))).dump();
  CHECK(once == twice);
  CHECK(once.find("2/4") == std::string::npos);  // always reduced
}

TEST_CASE("malformed JSON is rejected with shape errors") {
  CHECK_THROWS_AS(algebra_from_json(Json{{"atom", 3}}), ShapeError);
  CHECK_THROWS_AS(element_from_json(Json{{"atoms", Json::array({9})}}, make_algebra(2)),
                  ShapeError);
  CHECK_THROWS_AS(specker_element_from_json(Json::parse(
                      R"({"algebra":2,"blocks":[[0],[1]],"values":["1"]})")),
                  ShapeError);
  CHECK_THROWS_AS(specker_element_from_json(Json::parse(
                      R"({"algebra":2,"blocks":[[0]],"values":["1"]})")),
                  PreconditionError);
  CHECK_THROWS_AS(specker_element_from_json(Json::parse(
                      R"({"algebra":2,"blocks":[[0],[1]],"values":["1","x"]})")),
                  ParseError);
  CHECK_THROWS_AS(hom_from_json(Json::parse(R"({"source":2,"target":2,"point_map":[0]})")),
                  ShapeError);
  CHECK_THROWS_AS(specker_morphism_from_json(Json::parse(
                      R"({"kind":"nope","source":1,"target":1,"point_map":[0]})")),
                  ShapeError);
}
