#include <doctest.h>

#include <set>

#include "specker/enumerate.hpp"
#include "specker/error.hpp"
#include "specker/free.hpp"
#include "util.hpp"

using namespace specker;
using testutil::elem;
using testutil::rat;

TEST_CASE("free lattices") {
  FreeLattice f0 = free_uha(0);
  CHECK(f0.lattice.base().atom_count() == 1);  // constants only
  CHECK(f0.generators.empty());

  FreeLattice f1 = free_uha(1);
  CHECK(f1.lattice.base().atom_count() == 2);
  CHECK(f1.generators[0] ==
        SpeckerElement::indicator(elem(f1.lattice.base(), {1})));

  FreeLattice f2 = free_uha(2);
  CHECK(f2.lattice.base().atom_count() == 4);
  CHECK(f2.lattice.dimension() == 4);

  for (int n = 0; n <= 4; ++n) {
    CHECK(free_uha(n).lattice.dimension() == (1 << n));
  }
  CHECK_THROWS_AS(free_uha(5), CapacityError);
}

TEST_CASE("universal extension") {
  SUBCASE("identity assignment gives the identity") {
    FreeLattice f = free_uha(2);
    SpeckerMorphism ext = universal_extension(f, f.lattice, f.generators);
    CHECK(ext == SpeckerMorphism::identity(f.lattice));
  }

  SUBCASE("one generator into H(1-atom): top picks the bit-1 atom") {
    FreeLattice f = free_uha(1);
    SpeckerLattice target = specker_lattice(make_algebra(1));
    std::vector<SpeckerElement> to_top = {target.unit()};
    SpeckerMorphism ext = universal_extension(f, target, to_top);
    CHECK(ext.underlying().point_map() == std::vector<int>{1});
    std::vector<SpeckerElement> to_bottom = {target.zero()};
    CHECK(universal_extension(f, target, to_bottom).underlying().point_map() ==
          std::vector<int>{0});
  }

  SUBCASE("non-Boolean assignments are rejected") {
    FreeLattice f = free_uha(1);
    SpeckerLattice target = specker_lattice(make_algebra(1));
    std::vector<SpeckerElement> bad = {SpeckerElement::constant(target.base(), rat("1/2"))};
    CHECK_THROWS_AS(universal_extension(f, target, bad), PreconditionError);
  }

  SUBCASE("triangle identity and uniqueness, exhaustive for n <= 2 and <= 3 atoms") {
    for (int n = 0; n <= 2; ++n) {
      FreeLattice f = free_uha(n);
      for (int atoms = 0; atoms <= 3; ++atoms) {
        SpeckerLattice target = specker_lattice(make_algebra(atoms));
        std::vector<Element> universe = all_elements(target.base());
        std::vector<std::size_t> pick(n, 0);
        while (true) {
          std::vector<SpeckerElement> assignment;
          for (int i = 0; i < n; ++i) {
            assignment.push_back(SpeckerElement::indicator(universe[pick[i]]));
          }
          SpeckerMorphism ext = universal_extension(f, target, assignment);
          for (int i = 0; i < n; ++i) {
            CHECK(apply(ext, f.generators[i]) == assignment[i]);
          }
          // Uniqueness: among all morphisms out of the free lattice, exactly
          // one satisfies the triangle identity.
          int satisfying = 0;
          for (const BoolHom& h : all_homs(f.lattice.base(), target.base())) {
            SpeckerMorphism candidate = lift_hom(h);
            bool agrees = true;
            for (int i = 0; i < n; ++i) {
              agrees = agrees && apply(candidate, f.generators[i]) == assignment[i];
            }
            if (agrees) {
              ++satisfying;
              CHECK(candidate == ext);
            }
          }
          CHECK(satisfying == 1);
          std::size_t j = 0;
          for (; j < pick.size(); ++j) {
            if (++pick[j] < universe.size()) break;
            pick[j] = 0;
          }
          if (j == pick.size()) break;
        }
      }
    }
  }
}

TEST_CASE("free elements canonicalize their support") {
  FreeElement zero = FreeElement::zero();
  CHECK(zero.support().empty());
  CHECK(zero.is_zero());
  CHECK(FreeElement::unit() != zero);

  FreeElement g0 = FreeElement::generator(0);
  CHECK(g0.support() == std::vector<int>{0});

  SUBCASE("a body that ignores an index drops it") {
    // Body over two bits that only depends on the second.
    BooleanAlgebra b4 = free_boolean_algebra(2).algebra;
    std::vector<Rational> values = {0, 0, 1, 1};  // bit 1 decides
    FreeElement x = FreeElement::from_parts(
        {3, 7}, from_atom_valuation(AtomValuation(b4, values)));
    CHECK(x.support() == std::vector<int>{7});
    CHECK(x == FreeElement::generator(7));
  }

  SUBCASE("support must be strictly increasing and match the body") {
    BooleanAlgebra b2 = free_boolean_algebra(1).algebra;
    SpeckerElement body = SpeckerElement::indicator(elem(b2, {1}));
    CHECK_THROWS_AS(FreeElement::from_parts({2, 1}, body), ShapeError);
    CHECK_THROWS_AS(FreeElement::from_parts({-1}, body), ShapeError);
    CHECK_THROWS_AS(FreeElement::from_parts({1, 2}, body), ShapeError);
  }
}

TEST_CASE("free element operations") {
  FreeElement g0 = FreeElement::generator(0);
  FreeElement g1 = FreeElement::generator(1);
  FreeElement u = FreeElement::unit();

  SUBCASE("adding zero is neutral") {
    CHECK(g0 + FreeElement::zero() == g0);
  }

  SUBCASE("meet of two generators lives on the union support") {
    FreeElement both = meet(g0, g1);
    CHECK(both.support() == std::vector<int>{0, 1});
    CHECK(is_boolean_element(both));
    // Indicator of the 11 assignment class: value 1 exactly at atom 3.
    CHECK(both.body().value_at_atom(3) == rat("1"));
    CHECK(both.body().value_at_atom(0) == rat("0"));
    CHECK(both.body().value_at_atom(1) == rat("0"));
    CHECK(both.body().value_at_atom(2) == rat("0"));
  }

  SUBCASE("complement law minimizes back to the unit") {
    CHECK(join(g0, u - g0) == u);
    CHECK(meet(g0, u - g0) == FreeElement::zero());
  }

  SUBCASE("operations commute with cylinder embedding") {
    Sampler sampler(79);
    for (int i = 0; i < 100; ++i) {
      // Random elements on supports inside {0,...,3}.
      std::vector<int> sup1, sup2;
      for (int idx = 0; idx < 4; ++idx) {
        if (sampler.next(2)) sup1.push_back(idx);
        if (sampler.next(2)) sup2.push_back(idx);
      }
      auto random_free = [&](const std::vector<int>& sup) {
        BooleanAlgebra base = free_boolean_algebra(static_cast<int>(sup.size())).algebra;
        std::vector<Rational> values;
        for (int a = 0; a < base.atom_count(); ++a) values.push_back(sampler.rational(2, 2));
        return FreeElement::from_parts(sup, from_atom_valuation(AtomValuation(base, values)));
      };
      FreeElement x = random_free(sup1);
      FreeElement y = random_free(sup2);
      std::vector<int> wide = {0, 1, 2, 3, 4};
      FreeElement direct = x + y;
      FreeElement via_cylinder =
          FreeElement::from_parts(wide, cylinder_body(x, wide) + cylinder_body(y, wide));
      CHECK(direct == via_cylinder);
      CHECK(meet(x, y) ==
            FreeElement::from_parts(wide, meet(cylinder_body(x, wide), cylinder_body(y, wide))));
    }
  }

  SUBCASE("support minimization is sound, brute force over supports of size <= 3") {
    Sampler sampler(83);
    for (int i = 0; i < 200; ++i) {
      int size = static_cast<int>(sampler.next(4));
      std::vector<int> sup;
      for (int idx = 0; static_cast<int>(sup.size()) < size && idx < 5; ++idx) {
        if (sampler.next(2)) sup.push_back(idx);
      }
      BooleanAlgebra base = free_boolean_algebra(static_cast<int>(sup.size())).algebra;
      std::vector<Rational> values;
      for (int a = 0; a < base.atom_count(); ++a) values.push_back(sampler.rational(1, 2));
      SpeckerElement body = from_atom_valuation(AtomValuation(base, values));
      FreeElement x = FreeElement::from_parts(sup, body);
      // An index was kept iff flipping its original bit changes the body.
      std::vector<int> expected;
      for (std::size_t j = 0; j < sup.size(); ++j) {
        bool depends = false;
        for (int a = 0; a < base.atom_count(); ++a) {
          if (body.value_at_atom(a) != body.value_at_atom(a ^ (1 << j))) depends = true;
        }
        if (depends) expected.push_back(sup[j]);
      }
      CHECK(x.support() == expected);
    }
  }
}

TEST_CASE("cantor report") {
  SUBCASE("unit splits along the first generator") {
    CantorReport report = cantor_checks(FreeElement::unit());
    CHECK(report.unit_nontrivial);
    REQUIRE(report.atomless_split.has_value());
    CHECK(*report.atomless_split == FreeElement::generator(0));
  }

  SUBCASE("a generator splits along the next fresh index") {
    CantorReport report = cantor_checks(FreeElement::generator(0));
    REQUIRE(report.atomless_split.has_value());
    CHECK(*report.atomless_split == meet(FreeElement::generator(0), FreeElement::generator(1)));
  }

  SUBCASE("zero has the whole lattice as polar") {
    CantorReport report = cantor_checks(FreeElement::zero());
    CHECK(report.polar_generator == FreeElement::unit());
    CHECK_FALSE(report.atomless_split.has_value());
  }

  SUBCASE("splits are strictly between zero and the input") {
    Sampler sampler(89);
    for (int i = 0; i < 300; ++i) {
      int size = 1 + static_cast<int>(sampler.next(4));
      std::vector<int> sup;
      for (int idx = 0; static_cast<int>(sup.size()) < size; ++idx) {
        if (sampler.next(3) > 0) sup.push_back(idx);
      }
      BooleanAlgebra base = free_boolean_algebra(static_cast<int>(sup.size()), 32).algebra;
      std::vector<Rational> values;
      bool any = false;
      for (int a = 0; a < base.atom_count(); ++a) {
        bool one = sampler.next(2) == 1;
        any = any || one;
        values.push_back(one ? Rational(1) : Rational(0));
      }
      if (!any) values[0] = Rational(1);
      FreeElement b =
          FreeElement::from_parts(sup, from_atom_valuation(AtomValuation(base, values)));
      CantorReport report = cantor_checks(b);
      REQUIRE(report.atomless_split.has_value());
      const FreeElement& c = *report.atomless_split;
      CHECK(is_boolean_element(c));
      CHECK_FALSE(c.is_zero());
      CHECK(c != b);
      CHECK(leq(c, b));
    }
  }

  SUBCASE("polar names are canonical and distinct for distinct polars") {
    FreeElement g0 = FreeElement::generator(0);
    FreeElement g2 = FreeElement::generator(2);
    CantorReport r0 = cantor_checks(g0);
    CantorReport r2 = cantor_checks(g2);
    CHECK(r0.polar_name != r2.polar_name);
    CHECK(r0.polar_name.str() != r2.polar_name.str());
    // The polar of x only depends on the zero set.
    CHECK(cantor_checks(rat("7") * g0).polar_name == r0.polar_name);
    CHECK(cantor_checks(FreeElement::zero()).polar_name ==
          (PolarName{{}, 1}));  // table of the constant-1 body
  }
}
