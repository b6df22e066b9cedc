#pragma once

// Exact checks on matrices: orbit representatives, flag compatibility,
// Schubert rank conditions, the curve identities at x_k and Bott-Samelson
// incidence blueprints.

#include <string>
#include <vector>

#include <json.hpp>

#include "twonil/linalg.hpp"
#include "twonil/orbit_atlas.hpp"
#include "twonil/tangent_lab.hpp"

namespace twonil {

/// x_k = E_{1,n-k+1} + ... + E_{k,n}.
template <typename Scalar = Rational>
Matrix<Scalar> x_matrix(const Context& ctx) {
  const int n = ctx.n();
  const int k = ctx.k();
  Matrix<Scalar> x = Matrix<Scalar>::Zero(n, n);
  for (int c = 1; c <= k; ++c) x(c - 1, n - k + c - 1) = Scalar(1);
  return x;
}

/// Column i is e_{p(i)}.
template <typename Scalar = Rational>
Matrix<Scalar> permutation_matrix(const Permutation& p) {
  const int n = p.size();
  Matrix<Scalar> m = Matrix<Scalar>::Zero(n, n);
  for (int i = 1; i <= n; ++i) m(p(i) - 1, i - 1) = Scalar(1);
  return m;
}

bool is_two_nilpotent_of_rank(const RationalMatrix& m, int k);

/// Block upper-triangular for (k, n-2k, k) with equal outer diagonal blocks.
bool in_Ck_block(const Context& ctx, const RationalMatrix& g);
/// g x_k == x_k g.
bool in_Ck_commutes(const Context& ctx, const RationalMatrix& g);
/// Runs both tests; throws DomainError on singular g and std::logic_error if
/// the tests disagree.
bool in_Ck(const Context& ctx, const RationalMatrix& g);

/// span(b) inside span(a), both given by columns.
bool subspace_contains(const RationalMatrix& a, const RationalMatrix& b);

/// Complete flag: V^i is spanned by the first i columns of an invertible basis.
class Flag {
 public:
  explicit Flag(RationalMatrix basis);

  static Flag standard(int n);
  /// Columns e_{p(1)}, ..., e_{p(n)}.
  static Flag of_permutation(const Permutation& p);

  int size() const { return static_cast<int>(basis_.cols()); }
  const RationalMatrix& basis() const { return basis_; }
  /// Columns spanning V^i (n x i).
  RationalMatrix subspace(int i) const { return basis_.leftCols(i); }

 private:
  RationalMatrix basis_;
};

/// First j standard basis vectors as columns (n x j).
RationalMatrix standard_subspace(int n, int j);

/// u V^i = 0 for i <= n-k and u V^i inside V^{i-(n-k)} beyond.
bool compatible(const Context& ctx, const RationalMatrix& u, const Flag& f);

struct RankCondition {
  int i;
  int j;
  int bound;
  friend bool operator==(const RankCondition&, const RankCondition&) = default;
};
using RankConditionSet = std::vector<RankCondition>;

/// All n^2 conditions dim(V^i + K^j) <= i + j - #{a <= i : tau(a) <= j}.
RankConditionSet schubert_conditions(const Permutation& tau);
/// Conditions whose bound is below the generic value min(i + j, n).
RankConditionSet nontrivial_conditions(const Permutation& tau);
/// dim(V^i + K^j).
int incidence_dim(const Flag& f, int i, int j);
bool flag_in_schubert(const Flag& f, const Permutation& tau);

bool incidence_member(const Context& ctx, const RationalMatrix& u, const Flag& f,
                      const OrbitLabel& label);

struct CurveCheck {
  Rational t;
  bool square_zero = false;
  bool rank_k = false;
  bool conjugation = false;
  bool factorization = false;
  bool upper_factor = false;
  bool tangent = false;

  bool ok() const { return square_zero && rank_k && conjugation && factorization && upper_factor && tangent; }
};

struct CurveReport {
  Root root;
  bool base_point = false;  // point(0) == x_k
  std::vector<CurveCheck> checks;

  bool ok() const;
  /// One line per failed identity, naming the offending t.
  std::vector<std::string> failures() const;
};

/// u_e(t) = I + t E_{i,j}; u_{-e}(t) = I + t E_{j,i}.
RationalMatrix root_unipotent(const Context& ctx, const Root& e, const Rational& t, bool negative);

/// The upper-triangular factor of u_{-e}(t) = M r_e u_e(1/t).
RationalMatrix factorization_factor(const Context& ctx, const Root& e, const Rational& t);

/// Samples must be nonzero.
CurveReport verify_curve(const Context& ctx, const Root& e, const std::vector<Rational>& samples);

/// Rank of the closed-orbit basis stacked with all curve tangents.
int tangent_rank(const Context& ctx);
/// tangent_rank == dim O_k and the stacked vectors are independent.
bool tangent_independence(const Context& ctx);

struct Blueprint {
  int flags = 0;
  Word moves;
  /// Human-readable chain relations, then compatibility relations.
  std::vector<std::string> relations;
  std::string compat;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Throws std::invalid_argument unless `word` is reduced and evaluates to
/// sigma*alpha.
Blueprint resolution_blueprint(const Context& ctx, const OrbitLabel& label, const Word& word);

}  // namespace twonil
