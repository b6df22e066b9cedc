#pragma once

// B-orbits in the conjugacy class O_k of 2-nilpotent rank-k n x n matrices,
// labelled by pairs (sigma, alpha): sigma a minimal representative of the
// Levi cosets (increasing on the blocks 1..k, k+1..n-k, n-k+1..n) and alpha
// a permutation of 1..k. Each label names the left coset sigma*alpha*W(C_k).

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "twonil/linalg.hpp"
#include "twonil/permutation.hpp"

namespace twonil {

inline constexpr int kDefaultEnumerationCap = 8;
inline constexpr int kMaxPointwiseSize = 64;
/// Coset operations materialize W(C_k); beyond this order they refuse.
inline constexpr int kMaxWeylGroupOrder = 1000000;

class Context {
 public:
  /// Requires 1 <= n <= 64 and 0 <= 2k <= n.
  Context(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  /// Size n - 2k of the middle block.
  int middle() const { return n_ - 2 * k_; }

  friend bool operator==(const Context&, const Context&) = default;

 private:
  int n_;
  int k_;
};

struct OrbitLabel {
  Permutation sigma;
  Permutation alpha;

  /// The minimal coset representative sigma*alpha.
  Permutation product() const { return sigma * alpha; }

  friend auto operator<=>(const OrbitLabel&, const OrbitLabel&) = default;
  friend bool operator==(const OrbitLabel&, const OrbitLabel&) = default;
};

/// A full left coset w*W(C_k) with its canonical member (shortest, then
/// lexicographically smallest).
struct OrbitCoset {
  std::vector<Permutation> members;  // sorted
  Permutation canonical;

  friend bool operator==(const OrbitCoset& a, const OrbitCoset& b) {
    return a.canonical == b.canonical;
  }
};

struct Arc {
  int source;
  int target;
  friend bool operator==(const Arc&, const Arc&) = default;
};
using OrientedLinkPattern = std::vector<Arc>;

/// Two-column filling: left has n-k entries, right has k; row i pairs
/// left[i] with right[i] for i < k.
struct TwoColumnTableau {
  std::vector<int> left;
  std::vector<int> right;
  friend bool operator==(const TwoColumnTableau&, const TwoColumnTableau&) = default;
};

bool in_Zk(const Context& ctx, const Permutation& p);
bool in_Wk(const Context& ctx, const Permutation& p);
/// Membership in W(C_k): preserves the middle block and acts identically on
/// the first and last k letters (w(j+n-k) == w(j)+n-k).
bool in_WCk(const Context& ctx, const Permutation& p);
/// All k!(n-2k)! elements of W(C_k), sorted. Throws CapExceeded past
/// kMaxWeylGroupOrder.
std::vector<Permutation> weyl_group_Ck(const Context& ctx);

/// o_k = (k..1, n-k..k+1, n..n-k+1), longest element of the Levi Weyl group.
Permutation longest_levi(const Context& ctx);
/// omega_k = (k..1, k+1, ..., n), longest element of W_k.
Permutation longest_Wk(const Context& ctx);

/// Validates sigma in Z_k and alpha in W_k.
OrbitLabel make_label(const Context& ctx, Permutation sigma, Permutation alpha);

/// All labels: sigma over Z_k, then alpha over W_k, both lexicographic.
std::vector<OrbitLabel> enumerate_labels(const Context& ctx,
                                         int cap = kDefaultEnumerationCap);

OrbitCoset coset_of(const Context& ctx, const Permutation& w);
/// Unique (sigma, alpha) with sigma*alpha in the coset.
OrbitLabel label_of_coset(const Context& ctx, const OrbitCoset& coset);
inline OrbitLabel label_of(const Context& ctx, const Permutation& w) {
  return label_of_coset(ctx, coset_of(ctx, w));
}

/// Members of minimal length, lexicographically sorted.
std::vector<Permutation> min_length_reps(const OrbitCoset& coset);

/// dim Y0 = k(k+1)/2.
int dim_closed_orbit(const Context& ctx);
/// l(sigma) + l(alpha) + k(k+1)/2.
int dimension(const Context& ctx, const OrbitLabel& label);
/// dim O_k = 2k(n-k).
int dim_orbit(const Context& ctx);

/// sum_j E_{sigma alpha(j), sigma(n-k+j)}.
RationalMatrix rep_matrix(const Context& ctx, const OrbitLabel& label);

OrientedLinkPattern link_pattern(const Context& ctx, const OrbitLabel& label);
TwoColumnTableau tableau(const Context& ctx, const OrbitLabel& label);
bool is_row_standard(const TwoColumnTableau& t);
/// The representative matrix is strictly upper-triangular.
bool is_upper(const Context& ctx, const OrbitLabel& label);

/// prod_i (sigma alpha(i), sigma(n-k+i)); only for upper labels.
Permutation involution_tau(const Context& ctx, const OrbitLabel& label);

bool is_orbital_variety(const Context& ctx, const OrbitLabel& label);
int springer_component_dim(const Context& ctx);
/// Standard Young tableaux of the two-column shape (n-k, k), by hook lengths.
std::uint64_t count_standard_tableaux(const Context& ctx);

nlohmann::json label_to_json(const Context& ctx, const OrbitLabel& label);
OrbitLabel label_from_json(const nlohmann::json& j);
Context context_from_json(const nlohmann::json& j);
nlohmann::json link_pattern_to_json(const OrientedLinkPattern& arcs);
nlohmann::json tableau_to_json(const TwoColumnTableau& t);

/// "sigma=2,4,1,3 alpha=id", "sigma=s1.s3.s2;alpha=s1", or a bare sigma.
OrbitLabel parse_label(const Context& ctx, std::string_view text);
/// "(2,4,1,3 | 1,2,3,4)"
std::string to_string(const OrbitLabel& label);

}  // namespace twonil
