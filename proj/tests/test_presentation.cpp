#include "regmap/presentation.hpp"

#include <random>

#include "doctest.h"

using namespace regmap;

TEST_SUITE("presentation") {
  TEST_CASE("parses generators, relators and subgroup") {
    auto p = parse_presentation(
        "# a dihedral group of order 12\n"
        "generators: r s\n"
        "relators: r^6, s^2, (r*s)^2\n"
        "subgroup: s\n");
    CHECK(p.generator_names == std::vector<std::string>{"r", "s"});
    REQUIRE(p.relators.size() == 3);
    CHECK(p.relators[0] == Word::generator(0, 6));
    CHECK(p.relators[1] == Word::generator(1, 2));
    Word rs2 = word_pow(word_concat(Word::generator(0), Word::generator(1)), 2);
    CHECK(p.relators[2] == rs2);
    REQUIRE(p.subgroup_generators.size() == 1);
    CHECK(p.subgroup_generators[0] == Word::generator(1));
  }

  TEST_CASE("relator lists may span lines and carry comments") {
    auto p = parse_presentation(
        "generators: a b\n"
        "relators: a^2,    # involution\n"
        "  b^3,\n"
        "  (a*b)^5\n");
    CHECK(p.relators.size() == 3);
  }

  TEST_CASE("equations become lhs * rhs^-1") {
    auto p = parse_presentation(
        "generators: a b\n"
        "relators: a^2 = b^3\n");
    REQUIRE(p.relators.size() == 1);
    Word expect = word_concat(Word::generator(0, 2), Word::generator(1, -3));
    CHECK(p.relators[0] == expect);
  }

  TEST_CASE("conjugation and commutator syntax") {
    auto p = parse_presentation(
        "generators: x y\n"
        "relators: x^y = y, [x, y^2]\n");
    Word x = Word::generator(0), y = Word::generator(1);
    CHECK(p.relators[0] == word_concat(word_conjugate(x, y), word_invert(y)));
    CHECK(p.relators[1] == word_commutator(x, word_pow(y, 2)));
  }

  TEST_CASE("relators reducing to the empty word are dropped") {
    auto p = parse_presentation(
        "generators: a\n"
        "relators: a*a^-1, a^3\n");
    REQUIRE(p.relators.size() == 1);
    CHECK(p.relators[0] == Word::generator(0, 3));
  }

  TEST_CASE("errors carry location and reason") {
    CHECK_THROWS_AS(parse_presentation("relators: a^2\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("generators: a\nrelators: b^2\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("generators: a\nrelators: a^- \n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("generators: a\nrelators: a^2,,a\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("generators: a\ngenerators: b\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("generators: a a\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("generators: a\nrelators: (a\n"), ParseError);

    try {
      parse_presentation("generators: a\nrelators: a^2,\n  q^2\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 3);
      CHECK(std::string(e.what()).find("unknown generator") != std::string::npos);
    }
  }

  TEST_CASE("render then reparse is the identity") {
    // Random presentations over three generators; rendering uses only
    // '*' and '^int', which the parser must invert exactly.
    std::mt19937 rng(20240817);
    auto rand_word = [&] {
      Word w;
      int syls = 1 + static_cast<int>(rng() % 6);
      for (int i = 0; i < syls; ++i) {
        int exp = static_cast<int>(rng() % 9) - 4;
        w.push(static_cast<int>(rng() % 3), exp);
      }
      return w;
    };
    for (int trial = 0; trial < 200; ++trial) {
      Presentation p;
      p.generator_names = {"a", "b", "c"};
      for (int i = 0; i < 4; ++i) {
        Word w = rand_word();
        if (!w.empty()) p.relators.push_back(w);
      }
      if (trial % 3 == 0) {
        Word w = rand_word();
        if (!w.empty()) p.subgroup_generators.push_back(w);
      }
      Presentation q = parse_presentation(render_presentation(p));
      CHECK(q.generator_names == p.generator_names);
      CHECK(q.relators == p.relators);
      CHECK(q.subgroup_generators == p.subgroup_generators);
    }
  }
}
