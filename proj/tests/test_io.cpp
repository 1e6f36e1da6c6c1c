#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "pamono/generators.hpp"
#include "pamono/io.hpp"

using namespace pamono;

TEST_CASE("parse the singleton document") {
  const std::string text =
      "pamono 1\n"
      "carrier: 1\n"
      "structure pm\n"
      "s: e0\n"
      "t: e0\n"
      "op:\n"
      "e0 e0 = e0\n"
      "end\n";
  const auto doc = parse_document(text);
  REQUIRE(doc.carrier == 1);
  REQUIRE(doc.blocks.size() == 1);
  REQUIRE(as_pm(doc) == fixtures::trivial());
}

TEST_CASE("unknown element is a tagged parse error") {
  const std::string text =
      "pamono 1\n"
      "carrier: 2\n"
      "structure pm\n"
      "s: e0 e1\n"
      "t: e0 e1\n"
      "op:\n"
      "e0 e1 = e2\n"
      "end\n";
  try {
    parse_document(text);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    REQUIRE(std::string(e.what()).find("unknown element e2") != std::string::npos);
    REQUIRE(e.line == 7);
  }
}

TEST_CASE("bad header, version, duplicate triple") {
  REQUIRE_THROWS_AS(parse_document("hello 1\n"), ParseError);
  REQUIRE_THROWS_AS(parse_document("pamono 2\ncarrier: 1\n"), ParseError);
  const std::string dup =
      "pamono 1\ncarrier: 1\nstructure pm\ns: e0\nt: e0\nop:\n"
      "e0 e0 = e0\ne0 e0 = e0\nend\n";
  REQUIRE_THROWS_AS(parse_document(dup), ParseError);
}

TEST_CASE("comments and custom names") {
  const std::string text =
      "# interval category\n"
      "pamono 1\n"
      "carrier: 3\n"
      "names: idA idB f\n"
      "structure pm\n"
      "s: idA idB idA   # source picks the identity at the domain\n"
      "t: idA idB idB\n"
      "op:\n"
      "idA idA = idA\n"
      "idB idB = idB\n"
      "idB f = f\n"
      "f idA = f\n"
      "end\n";
  const auto doc = parse_document(text);
  REQUIRE(doc.names == std::vector<std::string>({"idA", "idB", "f"}));
  REQUIRE(as_pm(doc) == fixtures::interval());
}

TEST_CASE("round trip of the pair double groupoid") {
  const auto d = pair_double_groupoid(2);
  const auto text = serialize(document_of(d));
  const auto doc = parse_document(text);
  REQUIRE(as_double(doc) == d);
  // canonical: serialize . parse . serialize = serialize
  REQUIRE(serialize(parse_document(text)) == text);
}

TEST_CASE("serialization is canonical on named documents") {
  auto doc = document_of(fixtures::interval(), {"idA", "idB", "f"});
  const auto text = serialize(doc);
  REQUIRE(serialize(parse_document(text)) == text);
  REQUIRE(text.find("names: idA idB f") != std::string::npos);
}

TEST_CASE("monoid table block has no s/t rows") {
  const std::string text =
      "pamono 1\ncarrier: 2\nstructure table\nop:\n"
      "e0 e0 = e0\ne0 e1 = e1\ne1 e0 = e1\ne1 e1 = e0\nend\n";
  const auto doc = parse_document(text);
  REQUIRE_FALSE(doc.blocks[0].has_st);
  REQUIRE_THROWS_AS(as_pm(doc), std::invalid_argument);
  REQUIRE(monoid_to_pm(doc.blocks[0].pm.op, 2) == fixtures::z2());
}

TEST_CASE("block with only one of s/t is rejected") {
  const std::string text =
      "pamono 1\ncarrier: 1\nstructure pm\ns: e0\nop:\ne0 e0 = e0\nend\n";
  REQUIRE_THROWS_AS(parse_document(text), ParseError);
}

TEST_CASE("multi-structure dispatch") {
  const auto m = ncube_pair_groupoid(2, 3);
  const auto text = serialize(document_of(m));
  const auto doc = parse_document(text);
  REQUIRE(doc.blocks.size() == 3);
  const auto m2 = as_multi(doc);
  REQUIRE(m2.structures == m.structures);
  REQUIRE(m2.axis_names == m.axis_names);
}

TEST_CASE("category format round trip") {
  const auto c = fixtures::interval_category();
  const auto text = serialize_category(c);
  const auto c2 = parse_category(text);
  REQUIRE(c2.objects == c.objects);
  REQUIRE(c2.morphisms == c.morphisms);
  REQUIRE(c2.src == c.src);
  REQUIRE(c2.tgt == c.tgt);
  REQUIRE(c2.identity == c.identity);
  REQUIRE(c2.comp == c.comp);
}
