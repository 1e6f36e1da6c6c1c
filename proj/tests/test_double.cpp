#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "pamono/double_structure.hpp"
#include "pamono/generators.hpp"

using namespace pamono;

namespace {

DoubleStructure one_element() {
  return {1, fixtures::trivial(), fixtures::trivial()};
}

}  // namespace

TEST_CASE("doubled commutative monoid validates") {
  const auto d = commutative_monoid_double(fixtures::z2_table(), 2);
  REQUIRE(validate_double(d).valid());
}

TEST_CASE("doubled S3 fails exchange with a witness quadruple") {
  const auto d = commutative_monoid_double(fixtures::s3_table(), 6);
  const auto r = validate_double(d);
  REQUIRE_FALSE(r.valid());
  REQUIRE(r.has_kind(ViolationKind::EXCHANGE));
  for (const auto& v : r.violations) {
    REQUIRE(v.kind == ViolationKind::EXCHANGE);
    REQUIRE(v.witnesses.size() == 4);
    // recompute the failure from the witnesses by hand
    const auto [x, y, w, z] = std::tuple{v.witnesses[0], v.witnesses[1],
                                         v.witnesses[2], v.witnesses[3]};
    const auto& t = d.h;
    REQUIRE(t.at(t.at(x, w), t.at(y, z)) != t.at(t.at(x, y), t.at(w, z)));
  }
}

TEST_CASE("pair double groupoid validates and classifies as class one") {
  const auto d = pair_double_groupoid(2);
  REQUIRE(d.n == 16);
  REQUIRE(validate_double(d).valid());
  const auto cls = classify_cubical(d);
  REQUIRE(cls.satisfied.count(CubicalClass::ONE) == 1);
}

TEST_CASE("pair double groupoid of 3 points classifies as class one") {
  const auto cls = classify_cubical(pair_double_groupoid(3));
  REQUIRE(cls.satisfied.count(CubicalClass::ONE) == 1);
}

TEST_CASE("degenerate doubled monoid satisfies all four classes") {
  const auto cls = classify_cubical(commutative_monoid_double(fixtures::z2_table(), 2));
  REQUIRE(cls.satisfied.size() == 4);
}

TEST_CASE("a broken commutation excludes class one with a witness") {
  // h: Z/2 with unit e0; v: Z/2 with unit e1 — each valid alone, but
  // sh(sv(x)) = e0 while sv(sh(x)) = e1
  const PartialMonoidStructure h = fixtures::z2();
  const PartialMonoidStructure v{2, {1, 1}, {1, 1}, {1, 0, 0, 1}};
  REQUIRE(validate_structure(v).valid());
  const DoubleStructure d{2, h, v};
  const auto cls = classify_cubical(d);
  REQUIRE(cls.satisfied.count(CubicalClass::ONE) == 0);
  REQUIRE(cls.first_failure.at(CubicalClass::ONE).identity == 0);
  REQUIRE_FALSE(validate_double(d).valid());
}

TEST_CASE("cells of the pair double groupoid") {
  const auto c = derive_cells(pair_double_groupoid(3));
  REQUIRE(c.d1v.size() == 9);
  REQUIRE(c.d1h.size() == 9);
  REQUIRE(c.d0.size() == 3);
}

TEST_CASE("cells of degenerate structures") {
  const auto c = derive_cells(commutative_monoid_double(fixtures::z2_table(), 2));
  REQUIRE(c.d1v == std::vector<int>{0});
  REQUIRE(c.d1h == std::vector<int>{0});
  REQUIRE(c.d0 == std::vector<int>{0});

  const auto c1 = derive_cells(one_element());
  REQUIRE(c1.d1v == std::vector<int>{0});
  REQUIRE(c1.d1h == std::vector<int>{0});
  REQUIRE(c1.d0 == std::vector<int>{0});
}

TEST_CASE("exchange witnesses") {
  const auto w1 = exchange_witnesses(one_element());
  REQUIRE(w1.size() == 1);
  REQUIRE(w1[0].lhs == 0);
  REQUIRE(w1[0].rhs == 0);

  const auto w2 = exchange_witnesses(commutative_monoid_double(fixtures::z2_table(), 2));
  REQUIRE(w2.size() == 16);
  for (const auto& w : w2) REQUIRE(w.lhs == w.rhs);

  // every emitted entry on the pair double groupoid has all four binary
  // composites defined
  const auto d = pair_double_groupoid(2);
  for (const auto& w : exchange_witnesses(d)) {
    REQUIRE(d.h.defined(w.x, w.y));
    REQUIRE(d.h.defined(w.w, w.z));
    REQUIRE(d.v.defined(w.x, w.w));
    REQUIRE(d.v.defined(w.y, w.z));
  }
}

TEST_CASE("two-category detection") {
  const auto z2d = commutative_monoid_double(fixtures::z2_table(), 2);
  REQUIRE(detect_two_category(z2d, TwoCatOrdering::HV).valid());
  REQUIRE(detect_two_category(z2d, TwoCatOrdering::VH).valid());

  const auto d = pair_double_groupoid(2);
  REQUIRE_FALSE(detect_two_category(d, TwoCatOrdering::VH).valid());

  REQUIRE(detect_two_category(one_element(), TwoCatOrdering::HV).valid());
  REQUIRE(detect_two_category(one_element(), TwoCatOrdering::VH).valid());
}

TEST_CASE("one-object detection") {
  REQUIRE(detect_one_object(commutative_monoid_double(fixtures::z2_table(), 2)).valid());
  REQUIRE(detect_one_object(one_element()).valid());

  const auto r = detect_one_object(pair_double_groupoid(2));
  REQUIRE_FALSE(r.valid());
  REQUIRE(derive_cells(pair_double_groupoid(2)).d0.size() == 2);
}

TEST_CASE("operations requiring validity reject broken input") {
  const DoubleStructure bad{2, fixtures::broken_off_support(),
                            fixtures::z2()};
  REQUIRE_THROWS_AS(derive_cells(bad), std::invalid_argument);
  REQUIRE_THROWS_AS(classify_cubical(bad), std::invalid_argument);
  const auto s3d = commutative_monoid_double(fixtures::s3_table(), 6);
  REQUIRE_THROWS_AS(derive_cells(s3d), std::invalid_argument);
}
