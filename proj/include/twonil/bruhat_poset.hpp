#pragma once

// Closure (strong Bruhat) order on B-orbits of O_k: a <= b iff some member
// of a's W(C_k)-coset lies below b's minimal representative in the Bruhat
// order of S_n.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twonil/orbit_atlas.hpp"

namespace twonil {

struct LeqCertificate {
  bool holds = false;
  /// A member tau of a's coset with tau <= sigma*alpha of b.
  std::optional<Permutation> witness;
};

LeqCertificate compare(const Context& ctx, const OrbitLabel& a, const OrbitLabel& b);
bool leq(const Context& ctx, const OrbitLabel& a, const OrbitLabel& b);

/// Subword route: expands the lower interval of b's representative and maps
/// it to cosets.
bool leq_oracle(const Context& ctx, const OrbitLabel& a, const OrbitLabel& b,
                int cap = kDefaultSubwordCap);

/// Caches lower-interval cosets per upper label for bulk oracle queries.
class LeqOracle {
 public:
  explicit LeqOracle(Context ctx, int cap = kDefaultSubwordCap);
  bool operator()(const OrbitLabel& a, const OrbitLabel& b);

 private:
  Context ctx_;
  int cap_;
  std::map<Permutation, std::vector<Permutation>> below_;  // rep -> sorted canonicals
};

/// Full leq matrix over `labels`: result[i][j] == leq(labels[i], labels[j]).
std::vector<std::vector<bool>> leq_matrix(const Context& ctx,
                                          const std::vector<OrbitLabel>& labels);

struct BruhatNode {
  OrbitCoset coset;
  OrbitLabel label;
  int dim = 0;
  /// Filled in by a singularity sweep; empty when not computed or undecided.
  std::optional<bool> singular;
};

struct Cover {
  int lower;
  int upper;
  /// lower.alpha is not below upper.alpha in the Bruhat order of S_k.
  bool alpha_descent;
  friend bool operator==(const Cover&, const Cover&) = default;
};

struct WeakEdge {
  int from;
  int to;
  int reflection;
  friend auto operator<=>(const WeakEdge&, const WeakEdge&) = default;
};

struct BruhatGraph {
  Context ctx;
  std::vector<BruhatNode> nodes;  // ordered by (dim, representative)
  std::vector<Cover> covers;      // sorted by (lower, upper)
  std::vector<WeakEdge> weak;     // sorted

  int find(const OrbitLabel& label) const;
};

/// Hasse diagram of the orbit poset: transitive reduction of leq plus the
/// weak-order edges.
BruhatGraph hasse(const Context& ctx, int cap = kDefaultEnumerationCap);

/// Edges c -i-> c' generated by left multiplication with s_i from a
/// minimal-length representative, raising the minimal length by one.
/// Indices refer to `labels`.
std::vector<WeakEdge> weak_edges(const Context& ctx, const std::vector<OrbitLabel>& labels);

std::string export_dot(const BruhatGraph& g);
std::string export_json(const BruhatGraph& g);
BruhatGraph read_graph_json(const std::string& text);

}  // namespace twonil
