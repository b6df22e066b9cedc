#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "twonil/errors.hpp"
#include "twonil/permutation.hpp"

using namespace twonil;

namespace {

Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }

}  // namespace

TEST_CASE("construction rejects non-bijections") {
  CHECK_THROWS_AS(P({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(P({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(P({1, 3}), std::invalid_argument);
  CHECK(Permutation::identity(4).is_identity());
}

TEST_CASE("composition and simple reflections") {
  const Permutation q = P({3, 1, 2, 4});
  CHECK(compose(Permutation::identity(4), q) == q);
  CHECK(evaluate(4, {1, 3, 2}) == P({2, 4, 1, 3}));
  CHECK(evaluate(4, {2, 1, 3}) == P({3, 1, 4, 2}));
  CHECK(simple_reflection(4, 1) * simple_reflection(4, 3) * simple_reflection(4, 2) == P({2, 4, 1, 3}));
  CHECK(simple_reflection(4, 1) == P({2, 1, 3, 4}));
  CHECK(transposition(4, 1, 4) == P({4, 2, 3, 1}));
  CHECK_THROWS_AS(simple_reflection(4, 4), std::out_of_range);
  CHECK_THROWS_AS(transposition(4, 2, 2), std::out_of_range);
  CHECK_THROWS_AS(compose(q, Permutation::identity(3)), SizeMismatch);

  // s_i on the left swaps the values i, i+1.
  const Permutation w = P({2, 4, 1, 3});
  CHECK(simple_reflection(4, 1) * w == P({1, 4, 2, 3}));
  CHECK(q * q.inverse() == Permutation::identity(4));
}

TEST_CASE("length agrees with bubble sort") {
  CHECK(length(Permutation::identity(5)) == 0);
  CHECK(length(P({2, 4, 1, 3})) == 3);
  CHECK(length(P({2, 4, 1, 6, 3, 5})) == 5);
  for (const Permutation& p : all_permutations(6)) REQUIRE(length(p) == oracle::bubble_length(p));
}

TEST_CASE("reduced words") {
  CHECK(reduced_word(Permutation::identity(4)).empty());
  CHECK(reduced_word(P({2, 1, 3, 4})) == Word{1});
  CHECK(reduced_word(P({2, 4, 1, 3})) == Word{1, 3, 2});
  const Word w = reduced_word(P({3, 4, 1, 2}));
  CHECK(w.size() == 4);
  CHECK(evaluate(4, w) == P({3, 4, 1, 2}));
  for (const Permutation& p : all_permutations(5)) {
    const Word word = reduced_word(p);
    REQUIRE(is_reduced(5, word));
    REQUIRE(evaluate(5, word) == p);
  }
  CHECK_FALSE(is_reduced(4, {1, 1}));
  CHECK(evaluate(6, {1, 3, 2, 5, 4}) == P({2, 4, 1, 6, 3, 5}));
}

TEST_CASE("bruhat order matches rank-matrix criterion on S_5") {
  const auto perms = all_permutations(5);
  for (const Permutation& u : perms) {
    for (const Permutation& w : perms) REQUIRE(bruhat_leq(u, w) == oracle::rank_matrix_leq(u, w));
  }
  CHECK_THROWS_AS(bruhat_leq(Permutation::identity(3), Permutation::identity(4)), SizeMismatch);
}

TEST_CASE("subword oracle and lower intervals") {
  const auto perms = all_permutations(4);
  for (const Permutation& u : perms) {
    for (const Permutation& w : perms) REQUIRE(bruhat_leq_oracle(u, w) == bruhat_leq(u, w));
  }
  CHECK(lower_interval(Permutation::identity(4)) == std::vector<Permutation>{Permutation::identity(4)});
  CHECK(lower_interval(simple_reflection(4, 1)).size() == 2);

  const Permutation top = P({3, 4, 1, 2});
  std::size_t scanned = 0;
  for (const Permutation& u : perms) {
    if (oracle::rank_matrix_leq(u, top)) ++scanned;
  }
  CHECK(lower_interval(top).size() == scanned);
  CHECK(lower_interval(P({4, 3, 2, 1})).size() == 24);

  const Permutation w0 = P({7, 6, 5, 4, 3, 2, 1});
  CHECK_THROWS_AS(lower_interval(w0, 20), CapExceeded);
  CHECK_THROWS_AS(bruhat_leq_oracle(w0, w0, 20), CapExceeded);
  CHECK_THROWS_AS(lower_interval(4, {1, 1}), std::invalid_argument);
}

TEST_CASE("pattern containment") {
  const Permutation p3142 = P({3, 1, 4, 2});
  const Permutation p3412 = P({3, 4, 1, 2});
  const Permutation p4231 = P({4, 2, 3, 1});
  CHECK(contains_pattern(p3412, p3412));
  CHECK(contains_pattern(p3142, p3142));
  CHECK(contains_pattern(p3142 * P({1, 3, 2, 4}), p3412));
  CHECK_FALSE(contains_pattern(Permutation::identity(5), P({2, 1})));

  const auto hit = find_pattern(P({5, 2, 4, 3, 1}), p4231);
  REQUIRE(hit.has_value());
  CHECK(hit->size() == 4);

  for (const Permutation& w : all_permutations(6)) {
    for (const Permutation* pattern : {&p3142, &p3412, &p4231}) {
      REQUIRE(contains_pattern(w, *pattern) == oracle::bitmask_contains(w, *pattern));
    }
  }
}

TEST_CASE("text round trips") {
  const Permutation p = P({2, 4, 1, 3});
  CHECK(to_string(p) == "2,4,1,3");
  CHECK(parse_permutation("2,4,1,3") == p);
  CHECK(parse_permutation("s1.s3.s2", 4) == p);
  CHECK(parse_permutation("id", 3) == Permutation::identity(3));
  CHECK(to_string(Word{1, 3, 2}) == "s1.s3.s2");
  CHECK(to_string(Word{}) == "e");
  CHECK(parse_word("s2.s1.s3.s2") == Word{2, 1, 3, 2});
  CHECK_THROWS_AS(parse_permutation("2,4,x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("2,1", 3), SizeMismatch);
  CHECK_THROWS_AS(parse_word("t1"), std::invalid_argument);
}
