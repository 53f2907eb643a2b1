#include "regmap/perm_group.hpp"

#include <unordered_set>

#include "doctest.h"
#include "regmap/presentation.hpp"

using namespace regmap;

namespace {

// Independent order oracle: breadth-first closure of the generating set.
std::uint64_t closure_order(const std::vector<Perm>& gens, std::int64_t degree) {
  std::unordered_set<Perm, PermHash> seen{Perm::identity(degree)};
  std::vector<Perm> frontier{Perm::identity(degree)};
  for (size_t i = 0; i < frontier.size(); ++i)
    for (const auto& g : gens) {
      Perm next = frontier[i] * g;
      if (seen.insert(next).second) frontier.push_back(next);
    }
  return frontier.size();
}

PermGroup group_of(std::vector<Perm> gens, std::int64_t degree) {
  PermGroup g;
  g.degree = degree;
  g.generators = std::move(gens);
  return g;
}

}  // namespace

TEST_SUITE("perm_group") {
  TEST_CASE("perm basics") {
    Perm a = Perm::from_cycles(4, {{0, 1, 2, 3}});
    Perm b = Perm::from_cycles(4, {{0, 1}});
    CHECK((a * a.inverse()).is_identity());
    CHECK(a.order() == 4);
    CHECK(b.order() == 2);
    CHECK(conjugate(b, a) == Perm::from_cycles(4, {{1, 2}}));
    // Left-to-right composition: 0 -> a -> 1 -> b -> 0.
    CHECK((a * b)[0] == 0);
  }

  TEST_CASE("stabilizer chain order matches brute-force closure") {
    struct Case {
      std::vector<Perm> gens;
      std::int64_t degree;
    };
    std::vector<Case> cases = {
        {{Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{0, 1, 2, 3}})}, 4},      // S4
        {{Perm::from_cycles(5, {{0, 1, 2}}), Perm::from_cycles(5, {{0, 1, 2, 3, 4}})}, 5},  // A5
        {{Perm::from_cycles(6, {{0, 1, 2, 3, 4, 5}}), Perm::from_cycles(6, {{1, 5}, {2, 4}})}, 6},  // D12
        {{Perm::from_cycles(7, {{0, 1, 2, 3, 4, 5, 6}}), Perm::from_cycles(7, {{1, 2, 4}, {3, 6, 5}})}, 7},  // F21
        {{Perm::from_cycles(8, {{0, 1, 2, 3}, {4, 5, 6, 7}}), Perm::from_cycles(8, {{0, 4, 2, 6}, {1, 7, 3, 5}})}, 8},  // Q8
    };
    for (const auto& c : cases) {
      auto g = group_of(c.gens, c.degree);
      CHECK(group_order(g) == closure_order(c.gens, c.degree));
    }
  }

  TEST_CASE("trivial and cyclic groups") {
    auto trivial = group_of({}, 5);
    CHECK(group_order(trivial) == 1);
    auto c3 = group_of({Perm::from_cycles(6, {{0, 1, 2}, {3, 4, 5}})}, 6);
    CHECK(group_order(c3) == 3);
  }

  TEST_CASE("membership") {
    auto a4 = group_of({Perm::from_cycles(4, {{0, 1, 2}}), Perm::from_cycles(4, {{1, 2, 3}})}, 4);
    CHECK(group_order(a4) == 12);
    CHECK(is_member(a4, Perm::from_cycles(4, {{0, 1}, {2, 3}})));
    CHECK_FALSE(is_member(a4, Perm::from_cycles(4, {{0, 1}})));
    CHECK(is_member(a4, Perm::identity(4)));
  }

  TEST_CASE("regular representation from a coset table") {
    auto pres = parse_presentation(
        "generators: R S\n"
        "relators: R^4, S^6, (R*S)^2, (S^-1*R)^3\n");
    auto table = enumerate(pres);
    auto g = permutation_rep(table);
    CHECK(g.degree == 120);
    CHECK(g.semiregular);
    CHECK(group_order(g) == 120);
    // Word evaluation agrees with the table action.
    Word w = word_concat(Word::generator(0, 2), Word::generator(1, -1));
    Perm pw = evaluate_word(g, w);
    for (std::int64_t c = 0; c < table.live_count(); ++c) CHECK(pw[c] == table.apply(c, w));
    CHECK(element_order(g, Word::generator(0)) == 4);
    CHECK(element_order(g, Word::generator(1)) == 6);
    CHECK(element_order(g, word_concat(Word::generator(0), Word::generator(1))) == 2);
  }

  TEST_CASE("orbits") {
    std::vector<Perm> gens = {Perm::from_cycles(6, {{0, 1, 2}}), Perm::from_cycles(6, {{3, 4}})};
    auto orb0 = orbit_of(gens, 0);
    CHECK(orb0 == std::vector<std::int32_t>{0, 1, 2});
    auto orb5 = orbit_of(gens, 5);
    CHECK(orb5 == std::vector<std::int32_t>{5});
  }

  TEST_CASE("normal closure in the symmetric group") {
    auto s4 = group_of({Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{0, 1, 2, 3}})}, 4);
    // The closure of a double transposition is the Klein four-group.
    auto v4 = normal_closure_of(s4, {Perm::from_cycles(4, {{0, 1}, {2, 3}})});
    CHECK(group_order(v4) == 4);
    CHECK(subgroup_index(s4, v4) == 6);
    // The closure of a 3-cycle is the alternating group.
    auto a4 = normal_closure_of(s4, {Perm::from_cycles(4, {{0, 1, 2}})});
    CHECK(group_order(a4) == 12);
    CHECK(subgroup_index(s4, a4) == 2);
  }

  TEST_CASE("normal closure in a regular representation") {
    // D12 = C6 : C2; the closure of the rotation word is all of C6.
    auto pres = parse_presentation(
        "generators: r s\n"
        "relators: r^6, s^2, (r*s)^2\n");
    auto g = permutation_rep(enumerate(pres));
    auto n = normal_closure(g, {Word::generator(0)});
    CHECK(group_order(n) == 6);
    CHECK(subgroup_index(g, n) == 2);
    CHECK(n.semiregular);
    // The reflection's closure is <r^2, s>: conjugating s by r^k gives
    // s*r^2k, so all even rotations appear. Index 2, order 6.
    auto m = normal_closure(g, {Word::generator(1)});
    CHECK(group_order(m) == 6);
    CHECK(subgroup_index(g, m) == 2);
  }

  TEST_CASE("simple groups have no proper closures") {
    auto pres = parse_presentation(
        "generators: a b\n"
        "relators: a^2, b^3, (a*b)^5\n");  // A5
    auto g = permutation_rep(enumerate(pres));
    CHECK(group_order(g) == 60);
    auto n = normal_closure(g, {word_commutator(Word::generator(0), Word::generator(1))});
    CHECK(group_order(n) == 60);
  }
}
