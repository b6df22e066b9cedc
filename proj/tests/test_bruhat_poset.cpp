#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <regex>
#include <set>

#include "twonil/bruhat_poset.hpp"
#include "twonil/errors.hpp"

using namespace twonil;

namespace {

Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }

OrbitLabel base_label(int n) { return OrbitLabel{Permutation::identity(n), Permutation::identity(n)}; }

// Closure of a relation given as adjacency, by Floyd-Warshall.
std::vector<std::vector<bool>> reflexive_closure(std::size_t count, const std::vector<Cover>& covers) {
  std::vector<std::vector<bool>> r(count, std::vector<bool>(count, false));
  for (std::size_t i = 0; i < count; ++i) r[i][i] = true;
  for (const Cover& c : covers) r[static_cast<std::size_t>(c.lower)][static_cast<std::size_t>(c.upper)] = true;
  for (std::size_t m = 0; m < count; ++m) {
    for (std::size_t i = 0; i < count; ++i) {
      if (!r[i][m]) continue;
      for (std::size_t j = 0; j < count; ++j) {
        if (r[m][j]) r[i][j] = true;
      }
    }
  }
  return r;
}

}  // namespace

TEST_CASE("leq basics on (4,2)") {
  const Context ctx(4, 2);
  const auto labels = enumerate_labels(ctx);
  for (const OrbitLabel& a : labels) {
    CHECK(leq(ctx, a, a));
    CHECK(leq(ctx, base_label(4), a));
  }
  const OrbitLabel s1 = label_of(ctx, simple_reflection(4, 1));
  const OrbitLabel s3 = label_of(ctx, simple_reflection(4, 3));
  CHECK(s1 == s3);
  CHECK(leq_oracle(ctx, s3, s1));

  const LeqCertificate cert = compare(ctx, s1, make_label(ctx, P({2, 4, 1, 3}), Permutation::identity(4)));
  REQUIRE(cert.holds);
  REQUIRE(cert.witness.has_value());
  CHECK(bruhat_leq(*cert.witness, P({2, 4, 1, 3})));
  CHECK_FALSE(compare(ctx, labels.back(), base_label(4)).witness.has_value());
}

TEST_CASE("leq agrees with the subword oracle") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 1}, {4, 2}, {5, 1}, {5, 2}, {6, 2}}) {
    const Context ctx(n, k);
    const auto labels = enumerate_labels(ctx);
    const auto order = leq_matrix(ctx, labels);
    LeqOracle oracle(ctx);
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      for (std::size_t j = 0; j < labels.size(); ++j) {
        REQUIRE(order[i][j] == oracle(labels[i], labels[j]));
        ++pairs;
      }
    }
    if (n == 4 && k == 2) CHECK(pairs == 144);
  }
}

TEST_CASE("leq is a partial order graded by dimension") {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; 2 * k <= n; ++k) {
      const Context ctx(n, k);
      const auto labels = enumerate_labels(ctx);
      const auto order = leq_matrix(ctx, labels);
      int maxima = 0;
      for (std::size_t i = 0; i < labels.size(); ++i) {
        bool is_max = true;
        for (std::size_t j = 0; j < labels.size(); ++j) {
          if (i != j && order[i][j]) {
            is_max = false;
            REQUIRE_FALSE(order[j][i]);
            REQUIRE(dimension(ctx, labels[i]) < dimension(ctx, labels[j]));
          }
          for (std::size_t m = 0; m < labels.size(); ++m) {
            if (order[i][j] && order[j][m]) REQUIRE(order[i][m]);
          }
        }
        if (is_max) {
          ++maxima;
          CHECK(dimension(ctx, labels[i]) == dim_orbit(ctx));
        }
      }
      CHECK(maxima == 1);
    }
  }
}

TEST_CASE("Hasse diagram of (4,2)") {
  const Context ctx(4, 2);
  const BruhatGraph g = hasse(ctx);
  REQUIRE(g.nodes.size() == 12);
  CHECK(g.nodes.front().label == base_label(4));
  CHECK(g.nodes.front().dim == 3);
  CHECK(g.nodes.back().dim == 8);
  CHECK(g.nodes.back().label == make_label(ctx, P({3, 4, 1, 2}), P({2, 1, 3, 4})));

  std::set<int> has_lower;
  std::set<int> has_upper;
  for (const Cover& c : g.covers) {
    has_upper.insert(c.lower);
    has_lower.insert(c.upper);
    CHECK(g.nodes[static_cast<std::size_t>(c.upper)].dim > g.nodes[static_cast<std::size_t>(c.lower)].dim);
  }
  CHECK(has_lower.size() == 11);
  CHECK(has_upper.size() == 11);
  CHECK(std::any_of(g.covers.begin(), g.covers.end(), [](const Cover& c) { return c.alpha_descent; }));

  std::vector<OrbitLabel> labels;
  for (const BruhatNode& node : g.nodes) labels.push_back(node.label);
  CHECK(reflexive_closure(labels.size(), g.covers) == leq_matrix(ctx, labels));
  CHECK(g.find(base_label(4)) == 0);
  CHECK(g.find(OrbitLabel{P({4, 3, 2, 1}), Permutation::identity(4)}) == -1);
}

TEST_CASE("weak edges are strong covers of codimension one") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {5, 1}, {6, 2}}) {
    const Context ctx(n, k);
    const BruhatGraph g = hasse(ctx);
    std::set<std::pair<int, int>> covers;
    for (const Cover& c : g.covers) covers.insert({c.lower, c.upper});
    std::set<int> reached;
    for (const WeakEdge& e : g.weak) {
      CHECK(covers.count({e.from, e.to}) == 1);
      CHECK(g.nodes[static_cast<std::size_t>(e.to)].dim == g.nodes[static_cast<std::size_t>(e.from)].dim + 1);
      reached.insert(e.to);
    }
    CHECK(reached.size() == g.nodes.size() - 1);
  }
  const Context ctx(4, 2);
  const BruhatGraph g = hasse(ctx);
  const int target = g.find(label_of(ctx, simple_reflection(4, 2)));
  CHECK(std::find(g.weak.begin(), g.weak.end(), WeakEdge{0, target, 2}) != g.weak.end());
}

TEST_CASE("degenerate rank zero") {
  const BruhatGraph g = hasse(Context(3, 0));
  CHECK(g.nodes.size() == 1);
  CHECK(g.covers.empty());
  CHECK(g.weak.empty());
  const std::string dot = export_dot(g);
  const std::regex node_statement(R"(\n  n\d+ \[label=")");
  CHECK(std::distance(std::sregex_iterator(dot.begin(), dot.end(), node_statement), std::sregex_iterator()) == 1);
  CHECK(dot.find("->") == std::string::npos);
}

TEST_CASE("DOT and JSON export") {
  const Context ctx(4, 2);
  BruhatGraph g = hasse(ctx);
  g.nodes[3].singular = true;
  g.nodes[4].singular = false;
  const std::string dot = export_dot(g);
  const std::regex node_statement(R"(\n  n\d+ \[label=")");
  CHECK(std::distance(std::sregex_iterator(dot.begin(), dot.end(), node_statement), std::sregex_iterator()) == 12);
  CHECK(dot.find("style=dashed") != std::string::npos);
  CHECK(dot.find("rank=same") != std::string::npos);
  CHECK(dot.find("color=red") != std::string::npos);
  CHECK(export_dot(hasse(ctx)) == export_dot(hasse(ctx)));

  const std::string json = export_json(g);
  const BruhatGraph back = read_graph_json(json);
  CHECK(back.ctx == g.ctx);
  REQUIRE(back.nodes.size() == g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    CHECK(back.nodes[i].label == g.nodes[i].label);
    CHECK(back.nodes[i].dim == g.nodes[i].dim);
    CHECK(back.nodes[i].singular == g.nodes[i].singular);
    CHECK(back.nodes[i].coset == g.nodes[i].coset);
  }
  CHECK(back.covers == g.covers);
  CHECK(back.weak == g.weak);
  CHECK(export_json(back) == json);
}

TEST_CASE("caps") {
  CHECK_THROWS_AS(hasse(Context(9, 1)), CapExceeded);
  // sigma*alpha has length 22 for the top orbit of (8,4).
  const Context ctx(8, 4);
  const OrbitLabel top = make_label(ctx, P({5, 6, 7, 8, 1, 2, 3, 4}), P({4, 3, 2, 1, 5, 6, 7, 8}));
  CHECK(length(top.product()) == 22);
  CHECK_THROWS_AS(leq_oracle(ctx, base_label(8), top, 20), CapExceeded);
  CHECK(leq(ctx, base_label(8), top));
}
