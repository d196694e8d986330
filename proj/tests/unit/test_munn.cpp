#include <random>

#include "catch_amalgamated.hpp"

#include "invmon/errors.hpp"
#include "invmon/munn.hpp"

#include "../support/oracles.hpp"

using namespace invmon;

namespace {
  Word const a = gen("a"), A = inv("a"), z = gen("z"), Z = inv("z");
}  // namespace

TEST_CASE("munn_tree shapes", "[munn]") {
  auto t1 = munn_tree(a * A);
  CHECK(t1.graph.num_vertices() == 2);
  CHECK(t1.graph.start() == t1.graph.end());
  CHECK(t1.graph.target(t1.graph.start(), 0) != undefined_vertex);

  auto t2 = munn_tree(Word());
  CHECK(t2.graph.num_vertices() == 1);
  CHECK(t2.graph.start() == t2.graph.end());

  Alphabet const az{"a", "z"};
  auto           t3 = munn_tree(az, a * A * z);
  CHECK(t3.graph.num_vertices() == 3);
  CHECK(t3.graph.end() == t3.graph.target(t3.graph.start(), 2));
  CHECK(t3.graph.target(t3.graph.start(), 0) != undefined_vertex);
}

TEST_CASE("fim_equal", "[munn]") {
  CHECK(fim_equal(a * A * a, a));
  CHECK(fim_equal(a * A * z * Z, z * Z * a * A));
  CHECK_FALSE(fim_equal(a * A, A * a));
  CHECK_FALSE(vagner_oracle(a * A, A * a, 6));
  CHECK_FALSE(fim_equal(a * A, Word()));
}

TEST_CASE("fim_leq", "[munn]") {
  CHECK(fim_leq(a * A * a, a));
  CHECK(fim_leq(a, a * A * a));
  CHECK(fim_leq(a * A * z, z));
  CHECK_FALSE(fim_leq(z, a * A * z));
  CHECK(fim_leq(a * A, Word()));
  CHECK_FALSE(fim_leq(Word(), a * A));
}

TEST_CASE("vagner_oracle", "[munn]") {
  CHECK(vagner_oracle(a * A * a, a, 5));
  CHECK(vagner_oracle(a, a, 1));
  CHECK_FALSE(vagner_oracle(a * A, A * a, 8));
  CHECK(vagner_oracle(a * A * z * Z, z * Z * a * A, 4));
  CHECK_THROWS_AS(vagner_oracle(a * z * A, z, 40, 50), BudgetExceeded);
}

TEST_CASE("Munn trees are congruence invariants", "[munn][property]") {
  std::mt19937   rng(7);
  Alphabet const az{"a", "z"};
  for (int i = 0; i < 300; ++i) {
    Word const u = oracle::random_word(az, rng() % 5, rng);
    Word const x = oracle::random_word(az, rng() % 4, rng);
    Word const y = oracle::random_word(az, rng() % 4, rng);
    // u and u u⁻¹ u are equal; so are their two-sided translates.
    Word const v = u * formal_inverse(u) * u;
    REQUIRE(fim_equal(u, v));
    CHECK(fim_equal(x * u * y, x * v * y));
    CHECK(fim_leq(u * formal_inverse(u) * y, y));
    CHECK(fim_leq(x * u, x * u));

    auto const tree = munn_tree(az, u).graph;
    CHECK(tree.is_tree());
    std::set<Word> reduced_prefixes;
    for (auto const& p : prefixes(u)) {
      reduced_prefixes.insert(reduce(p));
    }
    CHECK(tree.num_vertices() == reduced_prefixes.size());
  }
}

TEST_CASE("fim_equal is an equivalence on short words", "[munn][property]") {
  auto const ws = oracle::all_words(Alphabet{"a"}, 4);
  for (auto const& u : ws) {
    CHECK(fim_equal(u, u));
    for (auto const& v : ws) {
      if (fim_equal(u, v)) {
        CHECK(fim_equal(v, u));
        CHECK(fim_leq(u, v));
        CHECK(fim_leq(v, u));
      }
    }
  }
}
