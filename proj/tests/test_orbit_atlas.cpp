#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "twonil/errors.hpp"
#include "twonil/exact_verify.hpp"
#include "twonil/orbit_atlas.hpp"

using namespace twonil;

namespace {

Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }

std::uint64_t factorial(int m) {
  std::uint64_t f = 1;
  for (int i = 2; i <= m; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

const std::vector<std::pair<int, int>> kSmallContexts = {{1, 0}, {2, 0}, {2, 1}, {3, 1}, {4, 0}, {4, 1},
                                                         {4, 2}, {5, 1}, {5, 2}, {6, 1}, {6, 2}, {6, 3}};

}  // namespace

TEST_CASE("context bounds") {
  CHECK_NOTHROW(Context(64, 32));
  CHECK_THROWS_AS(Context(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(Context(65, 1), std::invalid_argument);
  CHECK_THROWS_AS(Context(4, 3), std::invalid_argument);
  CHECK_THROWS_AS(Context(4, -1), std::invalid_argument);
}

TEST_CASE("Z_k and W_k membership") {
  const Context ctx(4, 2);
  CHECK(in_Zk(ctx, Permutation::identity(4)));
  CHECK(in_Zk(ctx, P({2, 4, 1, 3})));
  CHECK_FALSE(in_Zk(ctx, P({4, 2, 1, 3})));
  int count = 0;
  for (const Permutation& p : all_permutations(4)) {
    if (in_Zk(ctx, p)) ++count;
  }
  CHECK(count == 6);
  CHECK(in_Wk(ctx, P({2, 1, 3, 4})));
  CHECK_FALSE(in_Wk(ctx, P({1, 2, 4, 3})));
  CHECK_THROWS_AS(make_label(ctx, P({4, 2, 1, 3}), Permutation::identity(4)), DomainError);
  CHECK_THROWS_AS(make_label(ctx, Permutation::identity(4), P({1, 3, 2, 4})), DomainError);
}

TEST_CASE("W(C_k) equals the group generated by paired and middle reflections") {
  for (auto [n, k] : kSmallContexts) {
    const Context ctx(n, k);
    const auto group = weyl_group_Ck(ctx);
    CHECK(group.size() == factorial(k) * factorial(n - 2 * k));
    CHECK(group == oracle::generated_weyl_group(n, k));
    for (const Permutation& c : group) REQUIRE(in_WCk(ctx, c));
  }
}

TEST_CASE("label counts match the coset partition") {
  CHECK(enumerate_labels(Context(4, 2)).size() == 12);
  CHECK(enumerate_labels(Context(5, 0)).size() == 1);
  // Seeded from the brute-force coset partition of S_6.
  const std::size_t cosets_62 = oracle::coset_count(6, 2);
  CHECK(cosets_62 == 180);
  CHECK(enumerate_labels(Context(6, 2)).size() == cosets_62);
  for (auto [n, k] : kSmallContexts) {
    const auto labels = enumerate_labels(Context(n, k));
    CHECK(labels.size() == oracle::coset_count(n, k));
    CHECK(labels.size() == factorial(n) / (factorial(k) * factorial(n - 2 * k)));
  }
  CHECK_THROWS_AS(enumerate_labels(Context(9, 2)), CapExceeded);
  CHECK_NOTHROW(enumerate_labels(Context(5, 2), 5));
  CHECK_THROWS_AS(enumerate_labels(Context(5, 2), 4), CapExceeded);
}

TEST_CASE("cosets and minimal representatives") {
  const Context ctx(4, 2);
  const OrbitCoset c = coset_of(ctx, simple_reflection(4, 1));
  CHECK(c.members == std::vector<Permutation>{P({1, 2, 4, 3}), P({2, 1, 3, 4})});
  CHECK(min_length_reps(c) == c.members);
  CHECK(c.canonical == P({1, 2, 4, 3}));
  CHECK(coset_of(ctx, Permutation::identity(4)).members == weyl_group_Ck(ctx));
  CHECK(min_length_reps(coset_of(ctx, Permutation::identity(4))) == std::vector{Permutation::identity(4)});

  std::set<Permutation> canonicals;
  for (const Permutation& w : all_permutations(4)) {
    const OrbitCoset coset = coset_of(ctx, w);
    CHECK(coset.members.size() == 2);
    canonicals.insert(coset.canonical);
  }
  CHECK(canonicals.size() == 12);

  for (auto [n, k] : kSmallContexts) {
    const Context cx(n, k);
    for (const OrbitLabel& l : enumerate_labels(cx)) {
      const OrbitCoset coset = coset_of(cx, l.product());
      const auto reps = min_length_reps(coset);
      REQUIRE(std::find(reps.begin(), reps.end(), l.product()) != reps.end());
      REQUIRE(length(reps.front()) == length(l.sigma) + length(l.alpha));
      REQUIRE(label_of_coset(cx, coset) == l);
    }
  }
}

TEST_CASE("dimensions") {
  const Context ctx(4, 2);
  CHECK(dimension(ctx, OrbitLabel{Permutation::identity(4), Permutation::identity(4)}) == 3);
  CHECK(dimension(ctx, make_label(ctx, parse_permutation("s2.s1.s3.s2", 4), Permutation::identity(4))) == 7);
  const Context ctx41(4, 1);
  CHECK(dimension(ctx41, make_label(ctx41, parse_permutation("s2.s1.s3", 4), Permutation::identity(4))) == 4);
  CHECK(dim_orbit(ctx) == 8);
  CHECK(dim_orbit(Context(7, 0)) == 0);
  CHECK(dim_orbit(Context(6, 2)) == 16);
  // n^2 - dim C_k from the block form.
  for (auto [n, k] : kSmallContexts) {
    const int stabilizer = k * k + (n - 2 * k) * (n - 2 * k) + 2 * k * (n - 2 * k) + k * k;
    CHECK(dim_orbit(Context(n, k)) == n * n - stabilizer);
  }
  CHECK(dim_closed_orbit(ctx) == 3);
  CHECK(dimension(Context(64, 32), OrbitLabel{Permutation::identity(64), Permutation::identity(64)}) == 32 * 33 / 2);
}

TEST_CASE("representative matrices, link patterns and tableaux") {
  const Context ctx(4, 2);
  const OrbitLabel base{Permutation::identity(4), Permutation::identity(4)};
  CHECK(exactly_equal(rep_matrix(ctx, base), x_matrix(ctx)));
  CHECK(link_pattern(ctx, base) == OrientedLinkPattern{{3, 1}, {4, 2}});
  CHECK(is_row_standard(tableau(ctx, base)));

  const OrbitLabel top = make_label(ctx, P({3, 4, 1, 2}), Permutation::identity(4));
  CHECK(exactly_equal(rep_matrix(ctx, top), RationalMatrix(elementary(4, 3, 1) + elementary(4, 4, 2))));

  const Context ctx62(6, 2);
  const OrbitLabel component = make_label(ctx62, P({2, 4, 1, 6, 3, 5}), Permutation::identity(6));
  CHECK(exactly_equal(rep_matrix(ctx62, component), RationalMatrix(elementary(6, 2, 3) + elementary(6, 4, 5))));
  const TwoColumnTableau t = tableau(ctx62, component);
  CHECK(t.left == std::vector<int>{2, 4, 1, 6});
  CHECK(t.right == std::vector<int>{3, 5});
  CHECK(is_row_standard(t));
  CHECK(involution_tau(ctx62, component) == P({1, 3, 2, 5, 4, 6}));
  CHECK(is_orbital_variety(ctx62, component));
  CHECK(springer_component_dim(ctx62) == 7);

  for (auto [n, k] : kSmallContexts) {
    const Context cx(n, k);
    for (const OrbitLabel& l : enumerate_labels(cx)) {
      const RationalMatrix u = rep_matrix(cx, l);
      REQUIRE(is_two_nilpotent_of_rank(u, k));
      REQUIRE(is_upper(cx, l) == is_strictly_upper(u));
      const auto arcs = link_pattern(cx, l);
      std::set<int> ends;
      for (const Arc& a : arcs) {
        ends.insert(a.source);
        ends.insert(a.target);
        REQUIRE(u(a.target - 1, a.source - 1) == 1);
      }
      REQUIRE(ends.size() == static_cast<std::size_t>(2 * k));
    }
  }
  CHECK(link_pattern(Context(3, 0), OrbitLabel{Permutation::identity(3), Permutation::identity(3)}).empty());
}

TEST_CASE("involutions biject upper labels onto S_n^2(k)") {
  const Context ctx(4, 2);
  CHECK(involution_tau(ctx, OrbitLabel{Permutation::identity(4), Permutation::identity(4)}) == P({3, 4, 1, 2}));
  CHECK_THROWS_AS(involution_tau(ctx, make_label(ctx, P({2, 4, 1, 3}), Permutation::identity(4))), DomainError);

  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; 2 * k <= n; ++k) {
      const Context cx(n, k);
      std::set<Permutation> image;
      std::size_t upper = 0;
      for (const OrbitLabel& l : enumerate_labels(cx)) {
        if (!is_upper(cx, l)) continue;
        ++upper;
        const Permutation tau = involution_tau(cx, l);
        REQUIRE((tau * tau).is_identity());
        image.insert(tau);
      }
      CHECK(upper == image.size());
      CHECK(upper == oracle::involution_count(n, k));
    }
  }
  CHECK(oracle::involution_count(4, 2) == 3);
}

TEST_CASE("orbital varieties and standard tableaux") {
  CHECK(count_standard_tableaux(Context(2, 1)) == 1);
  CHECK(count_standard_tableaux(Context(4, 2)) == 2);
  CHECK(count_standard_tableaux(Context(6, 2)) == 9);
  for (int n = 1; n <= 12; ++n) {
    for (int k = 0; 2 * k <= n; ++k) CHECK(count_standard_tableaux(Context(n, k)) == oracle::ballot_count(n, k));
  }
  for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 1}, {4, 2}, {5, 2}, {6, 2}, {6, 3}}) {
    const Context cx(n, k);
    std::size_t orbital = 0;
    for (const OrbitLabel& l : enumerate_labels(cx)) {
      if (is_orbital_variety(cx, l)) {
        ++orbital;
        REQUIRE(2 * dimension(cx, l) == dim_orbit(cx));
      }
    }
    CHECK(orbital == count_standard_tableaux(cx));
  }
}

TEST_CASE("serialization and parsing") {
  const Context ctx(4, 2);
  const OrbitLabel l = make_label(ctx, P({2, 4, 1, 3}), Permutation::identity(4));
  const nlohmann::json j = label_to_json(ctx, l);
  CHECK(j.dump() == R"({"alpha":"1,2,3,4","k":2,"n":4,"sigma":"2,4,1,3"})");
  CHECK(label_from_json(j) == l);
  CHECK(context_from_json(j) == ctx);
  CHECK(link_pattern_to_json(link_pattern(ctx, l)).dump() == "[[1,2],[3,4]]");
  CHECK(tableau_to_json(tableau(ctx, l)).dump() == R"({"left":[2,4],"right":[1,3]})");

  CHECK(parse_label(ctx, "sigma=2,4,1,3 alpha=id") == l);
  CHECK(parse_label(ctx, "sigma=s1.s3.s2;alpha=e") == l);
  CHECK(parse_label(ctx, "sigma=s1.s3.s2 alpha=2,1") == make_label(ctx, P({2, 4, 1, 3}), P({2, 1, 3, 4})));
  CHECK(parse_label(ctx, "sigma=2,4,1,3 alpha=s1").alpha == P({2, 1, 3, 4}));
  CHECK(to_string(l) == "(2,4,1,3 | 1,2,3,4)");
  CHECK_THROWS_AS(parse_label(ctx, "sigma=4,2,1,3"), DomainError);
  CHECK_THROWS_AS(parse_label(ctx, "alpha=id"), std::invalid_argument);
  CHECK_THROWS_AS(parse_label(ctx, "beta=1,2,3,4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_label(ctx, "sigma=1,2,3"), SizeMismatch);
}
