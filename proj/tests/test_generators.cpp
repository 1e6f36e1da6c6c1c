#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "pamono/core.hpp"
#include "pamono/generators.hpp"
#include "pamono/nfold.hpp"

using namespace pamono;

TEST_CASE("pair double groupoid basics") {
  REQUIRE(pair_double_groupoid(1).n == 1);
  const auto d = pair_double_groupoid(2);
  REQUIRE(d.n == 16);
  REQUIRE(validate_double(d).valid());
  REQUIRE(detect_groupoid(d.h).valid());
  REQUIRE(detect_groupoid(d.v).valid());
  REQUIRE_THROWS_AS(pair_double_groupoid(0), std::invalid_argument);
}

TEST_CASE("ncube with k = 2 reproduces the pair double groupoid") {
  const auto d = pair_double_groupoid(2);
  const auto m = ncube_pair_groupoid(2, 2);
  REQUIRE(m.structures[0] == d.h);
  REQUIRE(m.structures[1] == d.v);
}

TEST_CASE("ncube base case is the pair groupoid") {
  const auto m = ncube_pair_groupoid(2, 1);
  REQUIRE(m.n == 4);
  REQUIRE(validate_nfold(m).valid());
  REQUIRE(detect_groupoid(m.structures[0]).valid());
}

TEST_CASE("ncube guards") {
  REQUIRE_THROWS_AS(ncube_pair_groupoid(0, 2), std::invalid_argument);
  REQUIRE_THROWS_AS(ncube_pair_groupoid(2, 5), std::invalid_argument);
  REQUIRE_THROWS_AS(ncube_pair_groupoid(10, 3), std::invalid_argument);  // 10^8
}

TEST_CASE("monoid lifts") {
  REQUIRE(validate_structure(monoid_to_pm({0}, 1)).valid());
  const auto z2 = fixtures::z2();
  REQUIRE(units(z2) == std::vector<int>{0});
  const auto s3 = monoid_to_pm(fixtures::s3_table(), 6);
  REQUIRE(validate_structure(s3).valid());
  REQUIRE(detect_groupoid(s3).valid());
}

TEST_CASE("monoid lift rejects bad tables") {
  // no two-sided unit
  REQUIRE_THROWS_AS(monoid_to_pm({0, 0, 0, 0}, 2), std::invalid_argument);
  // unit but not associative: 0 unit, 1*1=2, 2*anything=1 ...
  REQUIRE_THROWS_AS(monoid_to_pm({0, 1, 2, 1, 2, 1, 2, 1, 1}, 3),
                    std::invalid_argument);
}

TEST_CASE("commutative monoid double accepts commutative, rejects S3") {
  REQUIRE(validate_double(commutative_monoid_double(fixtures::z2_table(), 2)).valid());
  REQUIRE(validate_double(commutative_monoid_double(fixtures::klein4_table(), 4)).valid());
  const auto r = validate_double(commutative_monoid_double(fixtures::s3_table(), 6));
  REQUIRE(r.has_kind(ViolationKind::EXCHANGE));
}

TEST_CASE("category to partial monoid") {
  // discrete category on 2 objects
  CategoryPresentation disc;
  disc.objects = {"A", "B"};
  disc.morphisms = {"idA", "idB"};
  disc.src = {0, 1};
  disc.tgt = {0, 1};
  disc.identity = {0, 1};
  disc.comp[{0, 0}] = 0;
  disc.comp[{1, 1}] = 1;
  const auto p = category_to_pm(disc);
  REQUIRE(p.n == 2);
  REQUIRE(p.s == std::vector<int>({0, 1}));
  REQUIRE(p.t == std::vector<int>({0, 1}));
  REQUIRE(validate_structure(p).valid());

  REQUIRE(category_to_pm(fixtures::interval_category()) == fixtures::interval());
}

TEST_CASE("category with two parallel arrows") {
  CategoryPresentation c;
  c.objects = {"A", "B"};
  c.morphisms = {"idA", "idB", "f", "g"};
  c.src = {0, 1, 0, 0};
  c.tgt = {0, 1, 1, 1};
  c.identity = {0, 1};
  c.comp[{0, 0}] = 0;
  c.comp[{1, 1}] = 1;
  c.comp[{2, 0}] = 2;
  c.comp[{3, 0}] = 3;
  c.comp[{1, 2}] = 2;
  c.comp[{1, 3}] = 3;
  const auto p = category_to_pm(c);
  REQUIRE(p.n == 4);
  REQUIRE(validate_structure(p).valid());
}

TEST_CASE("partial monoid back to category") {
  const auto c = pm_to_category(fixtures::trivial());
  REQUIRE(c.n_obj() == 1);
  REQUIRE(c.n_mor() == 1);

  // round trip through the category side keeps the object/identity bijection
  const auto cat2 = pm_to_category(category_to_pm(fixtures::interval_category()));
  REQUIRE(cat2.n_obj() == 2);
  for (int a = 0; a < cat2.n_obj(); ++a) {
    const int u = cat2.identity[a];
    REQUIRE(cat2.src[u] == a);
    REQUIRE(cat2.tgt[u] == a);
  }
}

TEST_CASE("round trip at the partial monoid level is exact") {
  for (const auto& p : {fixtures::trivial(), fixtures::z2(), fixtures::idem2(),
                        fixtures::interval()})
    REQUIRE(category_to_pm(pm_to_category(p)) == p);
}

TEST_CASE("invalid category presentations are rejected") {
  CategoryPresentation c;
  c.objects = {"A"};
  c.morphisms = {"idA"};
  c.src = {0};
  c.tgt = {0};
  c.identity = {0};
  // missing comp entry for the matching pair (idA, idA)
  REQUIRE_THROWS_AS(category_to_pm(c), std::invalid_argument);
}
