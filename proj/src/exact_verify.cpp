#include "twonil/exact_verify.hpp"

#include <sstream>

#include "twonil/errors.hpp"

namespace twonil {

std::string format_matrix(const RationalMatrix& m) {
  std::string out;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    if (r > 0) out += ';';
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ',';
      out += m(r, c).get_str();
    }
  }
  return out;
}

RationalMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t semi = text.find(';', start);
    const std::string_view line = text.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
    std::vector<Rational> row;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      const std::size_t comma = line.find(',', pos);
      std::string entry(line.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
      entry.erase(0, entry.find_first_not_of(" \t"));
      entry.erase(entry.find_last_not_of(" \t") + 1);
      Rational value;
      if (entry.empty() || value.set_str(entry, 10) != 0) {
        throw std::invalid_argument("parse_matrix: bad entry '" + entry + "'");
      }
      value.canonicalize();
      row.push_back(std::move(value));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    rows.push_back(std::move(row));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  const std::size_t cols = rows.front().size();
  RationalMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("parse_matrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
  }
  return m;
}

bool is_two_nilpotent_of_rank(const RationalMatrix& m, int k) {
  return m.rows() == m.cols() && is_zero(RationalMatrix(m * m)) && rank(m) == k;
}

bool in_Ck_block(const Context& ctx, const RationalMatrix& g) {
  const int n = ctx.n();
  const int k = ctx.k();
  const int shift = n - k;
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      const int row_block = r <= k ? 0 : (r <= shift ? 1 : 2);
      const int col_block = c <= k ? 0 : (c <= shift ? 1 : 2);
      if (row_block > col_block && g(r - 1, c - 1) != 0) return false;
    }
  }
  return exactly_equal(g.topLeftCorner(k, k), g.bottomRightCorner(k, k));
}

bool in_Ck_commutes(const Context& ctx, const RationalMatrix& g) {
  const RationalMatrix x = x_matrix(ctx);
  return exactly_equal(RationalMatrix(g * x), RationalMatrix(x * g));
}

bool in_Ck(const Context& ctx, const RationalMatrix& g) {
  if (g.rows() != ctx.n() || g.cols() != ctx.n()) throw SizeMismatch("in_Ck: matrix size differs from n");
  if (rank(g) != ctx.n()) throw DomainError("in_Ck: matrix is singular");
  const bool block = in_Ck_block(ctx, g);
  if (block != in_Ck_commutes(ctx, g)) throw std::logic_error("in_Ck: block and commutation tests disagree");
  return block;
}

bool subspace_contains(const RationalMatrix& a, const RationalMatrix& b) {
  if (b.cols() == 0) return true;
  RationalMatrix joined(a.rows(), a.cols() + b.cols());
  joined << a, b;
  return rank(joined) == rank(a);
}

Flag::Flag(RationalMatrix basis) : basis_(std::move(basis)) {
  if (basis_.rows() != basis_.cols() || rank(basis_) != basis_.rows()) {
    throw DomainError("Flag: basis is not an invertible square matrix");
  }
}

Flag Flag::standard(int n) { return Flag(RationalMatrix::Identity(n, n)); }

Flag Flag::of_permutation(const Permutation& p) { return Flag(permutation_matrix(p)); }

RationalMatrix standard_subspace(int n, int j) { return RationalMatrix::Identity(n, n).leftCols(j); }

bool compatible(const Context& ctx, const RationalMatrix& u, const Flag& f) {
  const int n = ctx.n();
  const int shift = n - ctx.k();
  if (f.size() != n || u.rows() != n || u.cols() != n) throw SizeMismatch("compatible: size differs from n");
  if (!is_zero(RationalMatrix(u * f.subspace(shift)))) return false;
  for (int i = shift + 1; i <= n; ++i) {
    if (!subspace_contains(f.subspace(i - shift), RationalMatrix(u * f.subspace(i)))) return false;
  }
  return true;
}

RankConditionSet schubert_conditions(const Permutation& tau) {
  const int n = tau.size();
  RankConditionSet out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      int small = 0;
      for (int a = 1; a <= i; ++a) {
        if (tau(a) <= j) ++small;
      }
      out.push_back(RankCondition{i, j, i + j - small});
    }
  }
  return out;
}

RankConditionSet nontrivial_conditions(const Permutation& tau) {
  RankConditionSet out;
  for (const RankCondition& c : schubert_conditions(tau)) {
    if (c.bound < std::min(c.i + c.j, tau.size())) out.push_back(c);
  }
  return out;
}

int incidence_dim(const Flag& f, int i, int j) {
  const int n = f.size();
  RationalMatrix joined(n, i + j);
  joined << f.subspace(i), standard_subspace(n, j);
  return rank(joined);
}

bool flag_in_schubert(const Flag& f, const Permutation& tau) {
  if (f.size() != tau.size()) throw SizeMismatch("flag_in_schubert: size mismatch");
  for (const RankCondition& c : nontrivial_conditions(tau)) {
    if (incidence_dim(f, c.i, c.j) > c.bound) return false;
  }
  return true;
}

bool incidence_member(const Context& ctx, const RationalMatrix& u, const Flag& f, const OrbitLabel& label) {
  return compatible(ctx, u, f) && flag_in_schubert(f, label.product());
}

bool CurveReport::ok() const {
  if (!base_point) return false;
  for (const CurveCheck& c : checks) {
    if (!c.ok()) return false;
  }
  return true;
}

std::vector<std::string> CurveReport::failures() const {
  std::vector<std::string> out;
  const std::string name = "root (" + std::to_string(root.i) + "," + std::to_string(root.j) + ")";
  if (!base_point) out.push_back(name + ": point(0) != x_k");
  for (const CurveCheck& c : checks) {
    const std::string at = name + " t=" + c.t.get_str() + ": ";
    if (!c.square_zero) out.push_back(at + "point(t)^2 != 0");
    if (!c.rank_k) out.push_back(at + "rank point(t) != k");
    if (!c.conjugation) out.push_back(at + "conjugation identity fails");
    if (!c.factorization) out.push_back(at + "factorization identity fails");
    if (!c.upper_factor) out.push_back(at + "first factor not invertible upper-triangular");
    if (!c.tangent) out.push_back(at + "tangent coefficient mismatch");
  }
  return out;
}

RationalMatrix root_unipotent(const Context& ctx, const Root& e, const Rational& t, bool negative) {
  const int n = ctx.n();
  RationalMatrix u = RationalMatrix::Identity(n, n);
  if (negative) {
    u(e.j - 1, e.i - 1) = t;
  } else {
    u(e.i - 1, e.j - 1) = t;
  }
  return u;
}

RationalMatrix factorization_factor(const Context& ctx, const Root& e, const Rational& t) {
  RationalMatrix m = permutation_matrix(reflection(ctx, e));
  m(e.j - 1, e.j - 1) += t;
  m(e.i - 1, e.i - 1) -= Rational(1) / t;
  m(e.j - 1, e.i - 1) -= 1;
  return m;
}

CurveReport verify_curve(const Context& ctx, const Root& e, const std::vector<Rational>& samples) {
  const CurveSpec<Rational> c = curve(ctx, e);
  const RationalMatrix x = x_matrix(ctx);
  const RationalMatrix r = permutation_matrix(reflection(ctx, e));
  CurveReport report{e, exactly_equal(c.point(Rational(0)), x), {}};
  for (const Rational& t : samples) {
    if (t == 0) throw std::invalid_argument("verify_curve: samples must be nonzero");
    CurveCheck check;
    check.t = t;
    const RationalMatrix p = c.point(t);
    check.square_zero = is_zero(RationalMatrix(p * p));
    check.rank_k = rank(p) == ctx.k();

    const RationalMatrix lower = root_unipotent(ctx, e, t, true);
    const RationalMatrix lower_inv = root_unipotent(ctx, e, -t, true);
    check.conjugation = exactly_equal(p, RationalMatrix(lower * x * lower_inv));

    const RationalMatrix m = factorization_factor(ctx, e, t);
    const RationalMatrix rebuilt = m * r * root_unipotent(ctx, e, Rational(1) / t, false);
    check.factorization = exactly_equal(lower, rebuilt);
    check.upper_factor = is_upper(m) && rank(m) == ctx.n();

    const RationalMatrix odd = (p - c.point(-t)) / Rational(2 * t);
    check.tangent = exactly_equal(odd, c.linear) && exactly_equal(c.tangent_vector, c.linear);
    report.checks.push_back(std::move(check));
  }
  return report;
}

int tangent_rank(const Context& ctx) { return rank(stack_flattened(orbit_tangent_basis(ctx))); }

bool tangent_independence(const Context& ctx) {
  const auto basis = orbit_tangent_basis(ctx);
  if (basis.empty()) return dim_orbit(ctx) == 0;
  const int r = rank(stack_flattened(basis));
  return r == static_cast<int>(basis.size()) && r == dim_orbit(ctx);
}

nlohmann::json Blueprint::to_json() const {
  return nlohmann::json{{"flags", flags}, {"moves", moves}, {"compat", compat}, {"relations", relations}};
}

std::string Blueprint::to_text() const {
  std::ostringstream os;
  os << "flags: " << flags << "\n";
  os << "moves: " << (moves.empty() ? std::string("-") : to_string(moves)) << "\n";
  for (const std::string& line : relations) os << "  " << line << "\n";
  os << "compat: " << compat << "\n";
  return os.str();
}

Blueprint resolution_blueprint(const Context& ctx, const OrbitLabel& label, const Word& word) {
  const int n = ctx.n();
  const int shift = n - ctx.k();
  if (!is_reduced(n, word)) throw std::invalid_argument("resolution_blueprint: word " + to_string(word) + " is not reduced");
  if (evaluate(n, word) != label.product()) {
    throw std::invalid_argument("resolution_blueprint: word " + to_string(word) + " does not evaluate to sigma*alpha = " +
                                to_string(label.product()));
  }
  Blueprint bp;
  bp.flags = static_cast<int>(word.size());
  bp.moves = word;
  bp.compat = "2-nilpotent rank <= " + std::to_string(ctx.k()) + ", V_" + std::to_string(bp.flags) + "-compatible";

  // names[m] is the current name of the m-th subspace of the latest flag.
  std::vector<std::string> names(static_cast<std::size_t>(n) + 1);
  names[0] = "0";
  for (int m = 1; m <= n; ++m) names[static_cast<std::size_t>(m)] = "K^" + std::to_string(m);
  for (std::size_t s = 0; s < word.size(); ++s) {
    const auto i = static_cast<std::size_t>(word[s]);
    const std::string fresh = "V_" + std::to_string(s + 1) + "^" + std::to_string(i);
    bp.relations.push_back("V_" + std::to_string(s + 1) + ": " + names[i - 1] + " < " + fresh + " < " + names[i + 1]);
    names[i] = fresh;
  }
  bp.relations.push_back("u^2 = 0, rank u <= " + std::to_string(ctx.k()));
  if (shift >= 1) bp.relations.push_back("u(" + names[static_cast<std::size_t>(shift)] + ") = 0");
  for (int m = shift + 1; m <= n; ++m) {
    bp.relations.push_back("u(" + names[static_cast<std::size_t>(m)] + ") <= " +
                           names[static_cast<std::size_t>(m - shift)]);
  }
  return bp;
}

}  // namespace twonil
