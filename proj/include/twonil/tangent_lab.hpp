#pragma once

// Tangent spaces at the base point x_k: roots of the stabilizer C_k, the
// T_k-stable lines through x_k, and the smooth/singular decision rules.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "twonil/bruhat_poset.hpp"
#include "twonil/linalg.hpp"
#include "twonil/orbit_atlas.hpp"

namespace twonil {

enum class RootFamily { InsideGLk, Delta, CrossFar, TopMiddle, MiddleBottom };

std::string to_string(RootFamily f);

struct Root {
  int i;
  int j;
  RootFamily family;

  friend auto operator<=>(const Root& a, const Root& b) {
    return std::pair(a.i, a.j) <=> std::pair(b.i, b.j);
  }
  friend bool operator==(const Root& a, const Root& b) { return a.i == b.i && a.j == b.j; }
};

/// Family of (i, j) inside phi+(C_k), or nothing when (i, j) is not a root.
std::optional<RootFamily> classify(const Context& ctx, int i, int j);

/// Sorted by (i, j).
std::vector<Root> phi_plus_Ck(const Context& ctx);
/// phi+(C_k) without the cross roots (i, j) with i + n - k >= j.
std::vector<Root> phi_plus_n_Ck(const Context& ctx);
bool in_phi_plus_n(const Context& ctx, const Root& e);

/// The transposition r_e.
Permutation reflection(const Context& ctx, const Root& e);

template <typename Scalar = Rational>
struct CurveSpec {
  Matrix<Scalar> constant;
  Matrix<Scalar> linear;
  Matrix<Scalar> quadratic;
  Matrix<Scalar> tangent_vector;

  Matrix<Scalar> point(const Scalar& t) const {
    Matrix<Scalar> out = constant;
    out += t * linear;
    out += Scalar(t * t) * quadratic;
    return out;
  }
};

/// The T_k-stable line C(e) through x_k, as u_{-e}(t) x_k u_{-e}(-t).
CurveSpec<Rational> curve(const Context& ctx, const Root& e);

/// Tangent space of the closed orbit at x_k: E_{r, n-k+c} for r <= c <= k.
std::vector<RationalMatrix> closed_orbit_tangent_basis(const Context& ctx);

/// Closed-orbit basis followed by every curve tangent, in root order.
std::vector<RationalMatrix> orbit_tangent_basis(const Context& ctx);

/// Roots whose reflection coset lies below the label.
std::vector<Root> t_k_set(const Context& ctx, const OrbitLabel& label);
/// Roots of phi+_n below the label; equals t_k_set on upper labels.
std::vector<Root> s_set(const Context& ctx, const OrbitLabel& label);

/// k(k+1)/2 + |t_k|.
int tangent_lower_bound(const Context& ctx, const OrbitLabel& label);
/// Exact tangent dimension; only defined on upper-triangular labels.
int tangent_dim_upper(const Context& ctx, const OrbitLabel& label);

/// Upper-triangular part of the Lie algebra of C_k (elementary-supported).
std::vector<RationalMatrix> borel_stabilizer_basis(const Context& ctx);

/// Dimension of the smallest subspace containing the closed-orbit tangent
/// and the t_k curve tangents that is stable under brackets with the
/// Borel stabilizer basis.
int bk_span(const Context& ctx, const OrbitLabel& label);

/// Exponent vector of a T_k-weight: (t_1..t_k, u_1..u_{n-2k}).
using Character = std::vector<int>;

/// Weight of E_{a,b} under T_k.
Character character_of(const Context& ctx, int a, int b);

/// Groups orbit_tangent_basis by T_k-weight.
std::map<Character, std::vector<RationalMatrix>> weight_decomposition(const Context& ctx);

enum class Smoothness { Smooth, Singular, Unknown };

std::string to_string(Smoothness s);

struct Verdict {
  Smoothness kind = Smoothness::Unknown;
  std::string rule;  // "R1".."R6", empty for Unknown
  nlohmann::json witness = nlohmann::json::object();
};

/// First applicable rule wins.
Verdict verdict(const Context& ctx, const OrbitLabel& label);
/// Every rule that reaches a conclusion, in rule order.
std::vector<Verdict> applicable_verdicts(const Context& ctx, const OrbitLabel& label);

nlohmann::json verdict_to_json(const Context& ctx, const OrbitLabel& label, const Verdict& v);

/// Fills the `singular` flag of every node (left empty for Unknown).
void mark_singularities(BruhatGraph& g);

}  // namespace twonil
