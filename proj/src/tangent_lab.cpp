#include "twonil/tangent_lab.hpp"

#include <algorithm>
#include <deque>

#include "twonil/errors.hpp"

namespace twonil {

std::string to_string(RootFamily f) {
  switch (f) {
    case RootFamily::InsideGLk: return "INSIDE_GLK";
    case RootFamily::Delta: return "DELTA";
    case RootFamily::CrossFar: return "CROSS_FAR";
    case RootFamily::TopMiddle: return "TOP_MIDDLE";
    case RootFamily::MiddleBottom: return "MIDDLE_BOTTOM";
  }
  return "?";
}

std::optional<RootFamily> classify(const Context& ctx, int i, int j) {
  const int n = ctx.n();
  const int k = ctx.k();
  if (i < 1 || j > n || i >= j) return std::nullopt;
  const bool i_top = i <= k;
  const bool i_mid = i > k && i <= n - k;
  const bool j_top = j <= k;
  const bool j_mid = j > k && j <= n - k;
  const bool j_bottom = j > n - k;
  if (i_top && j_top) return RootFamily::InsideGLk;
  if (i_top && j_bottom) return j == i + n - k ? RootFamily::Delta : RootFamily::CrossFar;
  if (i_top && j_mid) return RootFamily::TopMiddle;
  if (i_mid && j_bottom) return RootFamily::MiddleBottom;
  return std::nullopt;
}

std::vector<Root> phi_plus_Ck(const Context& ctx) {
  std::vector<Root> out;
  for (int i = 1; i <= ctx.n(); ++i) {
    for (int j = i + 1; j <= ctx.n(); ++j) {
      if (auto f = classify(ctx, i, j)) out.push_back(Root{i, j, *f});
    }
  }
  return out;
}

bool in_phi_plus_n(const Context& ctx, const Root& e) {
  const int n = ctx.n();
  const int k = ctx.k();
  const bool cross = e.i <= k && e.j >= n - k + 1;
  return !(cross && e.i + n - k >= e.j);
}

std::vector<Root> phi_plus_n_Ck(const Context& ctx) {
  std::vector<Root> out;
  for (const Root& e : phi_plus_Ck(ctx)) {
    if (in_phi_plus_n(ctx, e)) out.push_back(e);
  }
  return out;
}

Permutation reflection(const Context& ctx, const Root& e) { return transposition(ctx.n(), e.i, e.j); }

namespace {

RationalMatrix model_point(const Context& ctx) {
  RationalMatrix x = RationalMatrix::Zero(ctx.n(), ctx.n());
  for (int c = 1; c <= ctx.k(); ++c) x(c - 1, ctx.n() - ctx.k() + c - 1) = 1;
  return x;
}

}  // namespace

CurveSpec<Rational> curve(const Context& ctx, const Root& e) {
  const auto family = classify(ctx, e.i, e.j);
  if (!family) {
    throw DomainError("curve: (" + std::to_string(e.i) + "," + std::to_string(e.j) + ") is not a root of C_k");
  }
  const int n = ctx.n();
  const int shift = n - ctx.k();
  const int i = e.i;
  const int j = e.j;
  CurveSpec<Rational> c;
  c.constant = model_point(ctx);
  c.linear = RationalMatrix::Zero(n, n);
  c.quadratic = RationalMatrix::Zero(n, n);
  switch (*family) {
    case RootFamily::InsideGLk:
    case RootFamily::TopMiddle:
      c.linear = elementary(n, j, i + shift);
      break;
    case RootFamily::Delta:
      c.linear = elementary(n, j, j) - elementary(n, i, i);
      c.quadratic = -elementary(n, j, i);
      break;
    case RootFamily::CrossFar:
      c.linear = elementary(n, j, i + shift) - elementary(n, j - shift, i);
      break;
    case RootFamily::MiddleBottom:
      c.linear = -elementary(n, j - shift, i);
      break;
  }
  c.tangent_vector = c.linear;
  return c;
}

std::vector<RationalMatrix> closed_orbit_tangent_basis(const Context& ctx) {
  const int n = ctx.n();
  const int k = ctx.k();
  std::vector<RationalMatrix> out;
  for (int r = 1; r <= k; ++r) {
    for (int c = r; c <= k; ++c) out.push_back(elementary(n, r, n - k + c));
  }
  return out;
}

std::vector<RationalMatrix> orbit_tangent_basis(const Context& ctx) {
  std::vector<RationalMatrix> out = closed_orbit_tangent_basis(ctx);
  for (const Root& e : phi_plus_Ck(ctx)) out.push_back(curve(ctx, e).tangent_vector);
  return out;
}

std::vector<Root> t_k_set(const Context& ctx, const OrbitLabel& label) {
  const Permutation top = label.product();
  std::vector<Root> out;
  for (const Root& e : phi_plus_Ck(ctx)) {
    const auto members = coset_of(ctx, reflection(ctx, e)).members;
    if (std::any_of(members.begin(), members.end(), [&](const Permutation& p) { return bruhat_leq(p, top); })) {
      out.push_back(e);
    }
  }
  return out;
}

std::vector<Root> s_set(const Context& ctx, const OrbitLabel& label) {
  std::vector<Root> out;
  for (const Root& e : t_k_set(ctx, label)) {
    if (in_phi_plus_n(ctx, e)) out.push_back(e);
  }
  return out;
}

int tangent_lower_bound(const Context& ctx, const OrbitLabel& label) {
  return dim_closed_orbit(ctx) + static_cast<int>(t_k_set(ctx, label).size());
}

int tangent_dim_upper(const Context& ctx, const OrbitLabel& label) {
  if (!is_upper(ctx, label)) {
    throw DomainError("tangent_dim_upper: label " + to_string(label) + " is not upper-triangular");
  }
  return tangent_lower_bound(ctx, label);
}

std::vector<RationalMatrix> borel_stabilizer_basis(const Context& ctx) {
  const int n = ctx.n();
  const int k = ctx.k();
  const int shift = n - k;
  std::vector<RationalMatrix> out;
  for (int a = 1; a <= k; ++a) {
    for (int b = a; b <= k; ++b) out.push_back(elementary(n, a, b) + elementary(n, a + shift, b + shift));
  }
  for (int a = k + 1; a <= shift; ++a) {
    for (int b = a; b <= shift; ++b) out.push_back(elementary(n, a, b));
  }
  for (int a = 1; a <= k; ++a) {
    for (int b = k + 1; b <= n; ++b) out.push_back(elementary(n, a, b));
  }
  for (int a = k + 1; a <= shift; ++a) {
    for (int b = shift + 1; b <= n; ++b) out.push_back(elementary(n, a, b));
  }
  return out;
}

int bk_span(const Context& ctx, const OrbitLabel& label) {
  const int n = ctx.n();
  SpanTracker<Rational> span(static_cast<Eigen::Index>(n) * n);
  std::deque<RationalMatrix> pending;
  auto offer = [&](const RationalMatrix& m) {
    if (span.insert(flatten(m))) pending.push_back(m);
  };
  for (const RationalMatrix& m : closed_orbit_tangent_basis(ctx)) offer(m);
  for (const Root& e : t_k_set(ctx, label)) offer(curve(ctx, e).tangent_vector);

  // Each Borel basis element has at most two unit entries, so the bracket
  // [E_ab, v] (row a gains row b of v, column b loses column a) is cheap.
  struct Entry {
    Eigen::Index row;
    Eigen::Index col;
  };
  std::vector<std::vector<Entry>> borel;
  for (const RationalMatrix& b : borel_stabilizer_basis(ctx)) {
    std::vector<Entry> entries;
    for (Eigen::Index c = 0; c < n; ++c) {
      for (Eigen::Index r = 0; r < n; ++r) {
        if (b(r, c) != 0) entries.push_back(Entry{r, c});
      }
    }
    borel.push_back(std::move(entries));
  }
  while (!pending.empty()) {
    const RationalMatrix v = std::move(pending.front());
    pending.pop_front();
    for (const auto& entries : borel) {
      RationalMatrix bracket = RationalMatrix::Zero(n, n);
      for (const Entry& e : entries) {
        bracket.row(e.row) += v.row(e.col);
        bracket.col(e.col) -= v.col(e.row);
      }
      if (!is_zero(bracket)) offer(bracket);
    }
  }
  return span.dim();
}

Character character_of(const Context& ctx, int a, int b) {
  const int n = ctx.n();
  const int k = ctx.k();
  Character chi(static_cast<std::size_t>(n - k), 0);
  auto slot = [&](int index) -> std::size_t {
    if (index <= k) return static_cast<std::size_t>(index - 1);
    if (index > n - k) return static_cast<std::size_t>(index - (n - k) - 1);
    return static_cast<std::size_t>(index - 1);
  };
  chi[slot(a)] += 1;
  chi[slot(b)] -= 1;
  return chi;
}

std::map<Character, std::vector<RationalMatrix>> weight_decomposition(const Context& ctx) {
  std::map<Character, std::vector<RationalMatrix>> out;
  for (const RationalMatrix& m : orbit_tangent_basis(ctx)) {
    // Every basis vector is T_k-homogeneous, so its first nonzero entry
    // determines the weight.
    for (Eigen::Index idx = 0; idx < m.size(); ++idx) {
      const Eigen::Index r = idx % m.rows();
      const Eigen::Index c = idx / m.rows();
      if (m(r, c) == 0) continue;
      out[character_of(ctx, static_cast<int>(r) + 1, static_cast<int>(c) + 1)].push_back(m);
      break;
    }
  }
  return out;
}

std::string to_string(Smoothness s) {
  switch (s) {
    case Smoothness::Smooth: return "smooth";
    case Smoothness::Singular: return "singular";
    case Smoothness::Unknown: return "unknown";
  }
  return "?";
}

namespace {

const Permutation& pattern_3142() {
  static const Permutation p({3, 1, 4, 2});
  return p;
}
const Permutation& pattern_4231() {
  static const Permutation p({4, 2, 3, 1});
  return p;
}
const Permutation& pattern_3412() {
  static const Permutation p({3, 4, 1, 2});
  return p;
}

// Smooth iff w avoids 4231 and 3412; the witness names the first hit.
Verdict schubert_pattern_verdict(const Permutation& w, const std::string& rule) {
  Verdict v;
  v.rule = rule;
  v.witness["permutation"] = to_string(w);
  for (const Permutation* pattern : {&pattern_4231(), &pattern_3412()}) {
    if (w.size() < 4) break;
    if (auto positions = find_pattern(w, *pattern)) {
      v.kind = Smoothness::Singular;
      v.witness["pattern"] = std::vector<int>(pattern->images().begin(), pattern->images().end());
      v.witness["positions"] = *positions;
      return v;
    }
  }
  v.kind = Smoothness::Smooth;
  v.witness["avoids"] = {"4231", "3412"};
  return v;
}

Permutation restrict_prefix(const Permutation& p, int k) {
  return Permutation(std::vector<int>(p.images().begin(), p.images().begin() + k));
}

std::optional<Verdict> rule_r1(const Context& ctx, const OrbitLabel& label) {
  if (ctx.k() != 1) return std::nullopt;
  Verdict v;
  v.rule = "R1";
  if (label.sigma.size() >= 4) {
    if (auto positions = find_pattern(label.sigma, pattern_3142())) {
      v.kind = Smoothness::Singular;
      v.witness["pattern"] = {3, 1, 4, 2};
      v.witness["positions"] = *positions;
      return v;
    }
  }
  v.kind = Smoothness::Smooth;
  v.witness["avoids"] = {"3142"};
  return v;
}

std::optional<Verdict> rule_r2(const Context& ctx, const OrbitLabel& label) {
  if (label.alpha != longest_Wk(ctx)) return std::nullopt;
  return schubert_pattern_verdict(label.sigma * longest_levi(ctx), "R2");
}

std::optional<Verdict> rule_r3(const Context& ctx, const OrbitLabel& label) {
  if (!label.sigma.is_identity()) return std::nullopt;
  return schubert_pattern_verdict(restrict_prefix(label.alpha, ctx.k()), "R3");
}

std::optional<Verdict> rule_r4(const Context& ctx, const OrbitLabel& label) {
  if (!is_upper(ctx, label)) return std::nullopt;
  const int tk = static_cast<int>(t_k_set(ctx, label).size());
  const int l = length(label.sigma) + length(label.alpha);
  Verdict v;
  v.rule = "R4";
  v.kind = tk == l ? Smoothness::Smooth : Smoothness::Singular;
  v.witness["t_k"] = tk;
  v.witness["length"] = l;
  return v;
}

std::optional<Verdict> rule_r5(const Context& ctx, const OrbitLabel& label) {
  const int bound = tangent_lower_bound(ctx, label);
  const int dim = dimension(ctx, label);
  if (bound <= dim) return std::nullopt;
  Verdict v;
  v.rule = "R5";
  v.kind = Smoothness::Singular;
  v.witness["lower_bound"] = bound;
  v.witness["dimension"] = dim;
  return v;
}

std::optional<Verdict> rule_r6(const Context& ctx, const OrbitLabel& label) {
  const int span = bk_span(ctx, label);
  const int dim = dimension(ctx, label);
  if (span <= dim) return std::nullopt;
  Verdict v;
  v.rule = "R6";
  v.kind = Smoothness::Singular;
  v.witness["bk_span"] = span;
  v.witness["dimension"] = dim;
  return v;
}

using RuleFn = std::optional<Verdict> (*)(const Context&, const OrbitLabel&);
constexpr RuleFn kRules[] = {rule_r1, rule_r2, rule_r3, rule_r4, rule_r5, rule_r6};

}  // namespace

Verdict verdict(const Context& ctx, const OrbitLabel& label) {
  for (RuleFn rule : kRules) {
    if (auto v = rule(ctx, label)) return *v;
  }
  return Verdict{};
}

std::vector<Verdict> applicable_verdicts(const Context& ctx, const OrbitLabel& label) {
  std::vector<Verdict> out;
  for (RuleFn rule : kRules) {
    if (auto v = rule(ctx, label)) out.push_back(std::move(*v));
  }
  return out;
}

nlohmann::json verdict_to_json(const Context& ctx, const OrbitLabel& label, const Verdict& v) {
  nlohmann::json j;
  j["label"] = label_to_json(ctx, label);
  j["verdict"] = to_string(v.kind);
  j["rule"] = v.rule.empty() ? nlohmann::json(nullptr) : nlohmann::json(v.rule);
  j["witness"] = v.witness;
  return j;
}

void mark_singularities(BruhatGraph& g) {
  for (BruhatNode& node : g.nodes) {
    const Verdict v = verdict(g.ctx, node.label);
    if (v.kind == Smoothness::Unknown) {
      node.singular.reset();
    } else {
      node.singular = v.kind == Smoothness::Singular;
    }
  }
}

}  // namespace twonil
