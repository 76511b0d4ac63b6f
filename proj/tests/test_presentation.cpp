#include "catch_amalgamated.hpp"

#include "garside/presentation.hpp"

using namespace garside;

TEST_CASE("parse the text format") {
  auto p = parse_presentation("# the braid monoid on three strands\n"
                              "gens: s t\n"
                              "rel: s t s = t s t   # braid relation\n");
  REQUIRE(p.generators == std::vector<std::string>{"s", "t"});
  REQUIRE(p.relations.size() == 1);
  REQUIRE(p.relations[0] == std::vector<word_type>{{0, 1, 0}, {1, 0, 1}});
}

TEST_CASE("relation chains with more than two sides") {
  auto p = parse_presentation("gens: x1 x2 x3\nrel: x1 x2 = x2 x3 = x3 x1\n");
  REQUIRE(p.relations.size() == 1);
  REQUIRE(p.relations[0].size() == 3);
  REQUIRE(p.relations[0][2] == word_type{2, 0});
}

TEST_CASE("format and parse round trip") {
  auto p = parse_presentation("gens: a b c\nrel: a b = b a\nrel: a c a = c a c\n");
  auto q = parse_presentation(format_presentation(p));
  REQUIRE(q.generators == p.generators);
  REQUIRE(q.relations == p.relations);
}

TEST_CASE("words with and without separators") {
  auto p = parse_presentation("gens: s t\n");
  REQUIRE(p.parse_word("s t s") == word_type{0, 1, 0});
  REQUIRE(p.parse_word("sts") == word_type{0, 1, 0});
  REQUIRE(p.parse_word("st s") == word_type{0, 1, 0});
  REQUIRE(p.parse_word("1").empty());
  REQUIRE(p.parse_word("").empty());
  REQUIRE(p.to_string({}) == "1");
  REQUIRE(p.to_string({1, 0}) == "t s");
  REQUIRE_THROWS_AS(p.parse_word("u"), InputError);
}

TEST_CASE("ambiguous concatenated tokens are rejected") {
  Presentation p{{"a", "aa", "b"}, {}};
  REQUIRE_THROWS_AS(p.parse_word("aab"), InputError);
  REQUIRE(p.parse_word("a aa b") == word_type{0, 1, 2});
}

TEST_CASE("non-homogeneous relations are rejected with the chain") {
  try {
    parse_presentation("gens: a b\nrel: a a = b\n");
    FAIL("expected an InputError");
  } catch (InputError const& e) {
    REQUIRE(std::string(e.what()).find("non-homogeneous") != std::string::npos);
    REQUIRE(std::string(e.what()).find("aa = b") != std::string::npos);
  }
}

TEST_CASE("malformed presentations") {
  REQUIRE_THROWS_AS(parse_presentation("rel: a = b\n"), InputError);
  REQUIRE_THROWS_AS(parse_presentation("gens: a a\n"), InputError);
  REQUIRE_THROWS_AS(parse_presentation("gens: a\ngens: b\n"), InputError);
  REQUIRE_THROWS_AS(parse_presentation("gens: a b\nfoo: a\n"), InputError);
  REQUIRE_THROWS_AS(parse_presentation("gens: a b\nrel: a\n"), InputError);
  REQUIRE_THROWS_AS(parse_presentation("gens: a b\nrel: a = \n"), InputError);
  REQUIRE_THROWS_AS(parse_presentation("gens: a 1\n"), InputError);
  REQUIRE_THROWS_AS(validate(Presentation{{"a"}, {{{0}, {1}}}}), InputError);
}
