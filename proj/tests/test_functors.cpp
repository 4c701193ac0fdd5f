#include <doctest.h>

#include <set>

#include "specker/enumerate.hpp"
#include "specker/error.hpp"
#include "specker/functors.hpp"
#include "util.hpp"

using namespace specker;
using testutil::elem;
using testutil::rat;
using testutil::sv;

TEST_CASE("lattice descriptors") {
  CHECK(specker_lattice(make_algebra(0)).unit() == specker_lattice(make_algebra(0)).zero());
  CHECK(specker_lattice(make_algebra(1)).dimension() == 1);
  CHECK(specker_lattice(make_algebra(3)).dimension() == 3);
  CHECK(specker_lattice(make_algebra(3)).unit() == SpeckerElement::unit(make_algebra(3)));
}

TEST_CASE("morphism action") {
  BooleanAlgebra b3 = make_algebra(3);
  SpeckerElement v = sv(b3, {"2", "1/2", "1/2"});

  SUBCASE("identity acts trivially") {
    SpeckerMorphism id = SpeckerMorphism::identity(specker_lattice(b3));
    CHECK(apply(id, v) == v);
  }

  SUBCASE("pull back along a collapse to one atom") {
    BoolHom f(b3, make_algebra(1), {1});
    SpeckerMorphism g = lift_hom(f);
    CHECK(apply(g, v) == SpeckerElement::constant(make_algebra(1), rat("1/2")));
    CHECK(apply(g, specker_lattice(b3).unit()) == specker_lattice(make_algebra(1)).unit());
  }

  SUBCASE("action equals valuation pullback along the point map") {
    Sampler sampler(31);
    for (int i = 0; i < 200; ++i) {
      BooleanAlgebra src = make_algebra(1 + static_cast<int>(sampler.next(5)));
      BooleanAlgebra tgt = make_algebra(1 + static_cast<int>(sampler.next(5)));
      BoolHom f = sampler.hom(src, tgt);
      SpeckerElement w = sampler.specker_element(src, 4, 5);
      SpeckerElement image = apply(lift_hom(f), w);
      for (int a = 0; a < tgt.atom_count(); ++a) {
        CHECK(image.value_at_atom(a) == w.value_at_atom(f.point_map()[a]));
      }
    }
  }

  SUBCASE("morphisms preserve the unital vector lattice structure") {
    Sampler sampler(37);
    for (int i = 0; i < 100; ++i) {
      BooleanAlgebra src = make_algebra(1 + static_cast<int>(sampler.next(4)));
      BooleanAlgebra tgt = make_algebra(1 + static_cast<int>(sampler.next(4)));
      SpeckerMorphism g = lift_hom(sampler.hom(src, tgt));
      SpeckerElement v1 = sampler.specker_element(src, 3, 4);
      SpeckerElement v2 = sampler.specker_element(src, 3, 4);
      CHECK(apply(g, v1 + v2) == apply(g, v1) + apply(g, v2));
      CHECK(apply(g, rat("2/3") * v1) == rat("2/3") * apply(g, v1));
      CHECK(apply(g, meet(v1, v2)) == meet(apply(g, v1), apply(g, v2)));
      CHECK(apply(g, join(v1, v2)) == join(apply(g, v1), apply(g, v2)));
      CHECK(apply(g, g.source().unit()) == g.target().unit());
    }
  }
}

TEST_CASE("functor laws") {
  std::vector<BooleanAlgebra> algebras = {make_algebra(0), make_algebra(1), make_algebra(2)};
  for (const BooleanAlgebra& a : algebras) {
    for (const SpeckerElement& v : all_grid_elements(a, default_value_grid())) {
      CHECK(apply(lift_hom(BoolHom::identity(a)), v) == v);
    }
    CHECK(boolean_restriction(SpeckerMorphism::identity(specker_lattice(a))) ==
          BoolHom::identity(a));
  }
  for (const BooleanAlgebra& a : algebras) {
    for (const BooleanAlgebra& b : algebras) {
      for (const BooleanAlgebra& c : algebras) {
        for (const BoolHom& f1 : all_homs(a, b)) {
          for (const BoolHom& f2 : all_homs(b, c)) {
            SpeckerMorphism lifted = lift_hom(compose(f2, f1));
            SpeckerMorphism chained = compose(lift_hom(f2), lift_hom(f1));
            CHECK(lifted == chained);
            CHECK(boolean_restriction(lifted) == compose(f2, f1));
          }
        }
      }
    }
  }
}

TEST_CASE("the algebra of Boolean elements") {
  BooleanAlgebra b3 = make_algebra(3);
  BooleanElementsAlgebra bij = boolean_elements(specker_lattice(b3));
  CHECK(bij.algebra() == b3);

  SUBCASE("bijection between elements and indicators") {
    std::set<AtomMask> seen;
    for (const Element& e : all_elements(b3)) {
      SpeckerElement b = bij.to_boolean(e);
      CHECK(is_boolean_element(b));
      CHECK(bij.to_element(b) == e);
      seen.insert(e.mask());
    }
    CHECK(seen.size() == 8);  // H(3-atom) has exactly 8 Boolean elements
  }

  SUBCASE("complement is u - v") {
    SpeckerElement chi0 = bij.to_boolean(elem(b3, {0}));
    CHECK(specker_lattice(b3).unit() - chi0 == bij.to_boolean(elem(b3, {1, 2})));
  }

  SUBCASE("two-element base") {
    BooleanAlgebra b1 = make_algebra(1);
    BooleanElementsAlgebra small = boolean_elements(specker_lattice(b1));
    CHECK(small.to_boolean(bottom(b1)) == specker_lattice(b1).zero());
    CHECK(small.to_boolean(top(b1)) == specker_lattice(b1).unit());
  }

  SUBCASE("non-Boolean inputs are rejected") {
    CHECK_THROWS_AS(bij.to_element(SpeckerElement::constant(b3, rat("1/2"))), DomainError);
  }
}

TEST_CASE("eta is a Boolean isomorphism") {
  BooleanAlgebra b3 = make_algebra(3);
  EtaIso iso = eta(b3);
  CHECK(iso.forward(SpeckerElement::unit(b3)) == top(b3));
  CHECK(iso.forward(SpeckerElement::zero(b3)) == bottom(b3));
  CHECK(iso.forward(SpeckerElement::indicator(elem(b3, {0, 1}))) == elem(b3, {0, 1}));
  CHECK_THROWS_AS(iso.forward(SpeckerElement::constant(b3, rat("2"))), DomainError);

  for (const Element& x : all_elements(b3)) {
    CHECK(iso.forward(iso.inverse(x)) == x);
    for (const Element& y : all_elements(b3)) {
      CHECK(iso.forward(meet(iso.inverse(x), iso.inverse(y))) == meet(x, y));
      CHECK(iso.forward(join(iso.inverse(x), iso.inverse(y))) == join(x, y));
    }
    CHECK(iso.forward(SpeckerElement::unit(b3) - iso.inverse(x)) == complement(x));
  }
}

TEST_CASE("epsilon expands linear combinations inside the lattice") {
  BooleanAlgebra b3 = make_algebra(3);
  SpeckerLattice lattice = specker_lattice(b3);
  EpsilonIso iso = epsilon(lattice);

  CHECK(iso.forward(lattice.unit()) == lattice.unit());

  SUBCASE("single block") {
    SpeckerElement w = rat("3") * SpeckerElement::indicator(elem(b3, {0, 2}));
    CHECK(iso.forward(w) == w);
  }

  SUBCASE("frozen example: blocks {chi_{0}, chi_{1,2}} with values (2, 1/2)") {
    SpeckerElement w = SpeckerElement::canonical(
        Partition::of_blocks(b3, {elem(b3, {0}), elem(b3, {1, 2})}), {rat("2"), rat("1/2")});
    CHECK(iso.forward(w) == sv(b3, {"2", "1/2", "1/2"}));
  }

  SUBCASE("bijective on the grid universe") {
    for (const SpeckerElement& w : all_grid_elements(b3, default_value_grid())) {
      CHECK(iso.inverse(iso.forward(w)) == w);
      CHECK(iso.forward(iso.inverse(w)) == w);
    }
  }

  SUBCASE("linear and lattice preserving") {
    Sampler sampler(41);
    for (int i = 0; i < 100; ++i) {
      SpeckerElement w1 = sampler.specker_element(b3, 3, 4);
      SpeckerElement w2 = sampler.specker_element(b3, 3, 4);
      CHECK(iso.forward(w1 + w2) == iso.forward(w1) + iso.forward(w2));
      CHECK(iso.forward(meet(w1, w2)) == meet(iso.forward(w1), iso.forward(w2)));
    }
  }
}

TEST_CASE("round trip on morphisms") {
  BooleanAlgebra b3 = make_algebra(3);
  BooleanAlgebra b2 = make_algebra(2);
  for (const BoolHom& f : all_homs(b3, b2)) {
    CHECK(boolean_restriction(lift_hom(f)) == f);
    // Reconstruction from the Boolean restriction gives back the morphism.
    SpeckerMorphism g = lift_hom(f);
    CHECK(lift_hom(boolean_restriction(g)) == g);
  }
}

TEST_CASE("naturality squares commute") {
  std::vector<BooleanAlgebra> algebras = {make_algebra(0), make_algebra(1), make_algebra(2),
                                          make_algebra(3)};
  for (const BooleanAlgebra& src : algebras) {
    for (const BooleanAlgebra& tgt : algebras) {
      for (const BoolHom& f : all_homs(src, tgt)) {
        CHECK(check_naturality(f));
        CHECK(check_naturality(lift_hom(f)));
      }
    }
  }

  SUBCASE("sampled at larger sizes") {
    Sampler sampler(43);
    for (int i = 0; i < 20; ++i) {
      BooleanAlgebra src = make_algebra(4 + static_cast<int>(sampler.next(3)));
      BooleanAlgebra tgt = make_algebra(1 + static_cast<int>(sampler.next(6)));
      BoolHom f = sampler.hom(src, tgt);
      NaturalityOptions options{.seed = 100 + static_cast<std::uint64_t>(i), .cases = 50, .exhaustive_atom_limit = 3};
      CHECK(check_naturality(f, options));
      CHECK(check_naturality(lift_hom(f), options));
    }
  }
}
