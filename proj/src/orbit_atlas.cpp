#include "twonil/orbit_atlas.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "twonil/errors.hpp"

namespace twonil {

Context::Context(int n, int k) : n_(n), k_(k) {
  if (n < 1 || n > kMaxPointwiseSize) {
    throw std::invalid_argument("Context: n must lie in 1.." + std::to_string(kMaxPointwiseSize));
  }
  if (k < 0 || 2 * k > n) throw std::invalid_argument("Context: need 0 <= 2k <= n");
}

namespace {

void require_size(const Context& ctx, const Permutation& p, const char* what) {
  if (p.size() != ctx.n()) throw SizeMismatch(std::string(what) + ": permutation size differs from n");
}

bool increasing_on(const Permutation& p, int first, int last) {
  for (int i = first; i < last; ++i) {
    if (p(i) > p(i + 1)) return false;
  }
  return true;
}

// The permutation of 1..n whose first k images have the relative order of
// values[0..k), and which fixes k+1..n.
Permutation standardize_prefix(int n, const std::vector<int>& values) {
  const int k = static_cast<int>(values.size());
  std::vector<int> order(static_cast<std::size_t>(k));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return values[static_cast<std::size_t>(a)] < values[static_cast<std::size_t>(b)];
  });
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  for (int rank = 0; rank < k; ++rank) images[static_cast<std::size_t>(order[static_cast<std::size_t>(rank)])] = rank + 1;
  return Permutation(std::move(images));
}

}  // namespace

bool in_Zk(const Context& ctx, const Permutation& p) {
  require_size(ctx, p, "in_Zk");
  const int n = ctx.n();
  const int k = ctx.k();
  return increasing_on(p, 1, k) && increasing_on(p, k + 1, n - k) && increasing_on(p, n - k + 1, n);
}

bool in_Wk(const Context& ctx, const Permutation& p) {
  require_size(ctx, p, "in_Wk");
  for (int i = ctx.k() + 1; i <= ctx.n(); ++i) {
    if (p(i) != i) return false;
  }
  return true;
}

bool in_WCk(const Context& ctx, const Permutation& p) {
  require_size(ctx, p, "in_WCk");
  const int n = ctx.n();
  const int k = ctx.k();
  for (int i = k + 1; i <= n - k; ++i) {
    if (p(i) <= k || p(i) > n - k) return false;
  }
  for (int j = 1; j <= k; ++j) {
    if (p(j + n - k) != p(j) + n - k) return false;
  }
  return true;
}

namespace {

std::vector<Permutation> build_weyl_group_Ck(const Context& ctx) {
  const int n = ctx.n();
  const int k = ctx.k();
  const int m = ctx.middle();
  double order = 1;
  for (int i = 2; i <= k; ++i) order *= i;
  for (int i = 2; i <= m; ++i) order *= i;
  if (order > kMaxWeylGroupOrder) {
    throw CapExceeded("W(C_k) for n = " + std::to_string(n) + ", k = " + std::to_string(k) +
                      " has more than " + std::to_string(kMaxWeylGroupOrder) + " elements");
  }
  std::vector<Permutation> out;
  for (const Permutation& a : all_permutations(k)) {
    for (const Permutation& b : all_permutations(m)) {
      std::vector<int> images(static_cast<std::size_t>(n));
      for (int j = 1; j <= k; ++j) {
        images[static_cast<std::size_t>(j - 1)] = a(j);
        images[static_cast<std::size_t>(j - 1 + n - k)] = a(j) + n - k;
      }
      for (int j = 1; j <= m; ++j) images[static_cast<std::size_t>(k + j - 1)] = k + b(j);
      out.emplace_back(std::move(images));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Permutation> weyl_group_Ck(const Context& ctx) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::vector<Permutation>> cache;
  const std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find({ctx.n(), ctx.k()});
  if (it == cache.end()) it = cache.emplace(std::pair(ctx.n(), ctx.k()), build_weyl_group_Ck(ctx)).first;
  return it->second;
}

Permutation longest_levi(const Context& ctx) {
  const int n = ctx.n();
  const int k = ctx.k();
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int v = k; v >= 1; --v) images.push_back(v);
  for (int v = n - k; v >= k + 1; --v) images.push_back(v);
  for (int v = n; v >= n - k + 1; --v) images.push_back(v);
  return Permutation(std::move(images));
}

Permutation longest_Wk(const Context& ctx) {
  std::vector<int> images(static_cast<std::size_t>(ctx.n()));
  std::iota(images.begin(), images.end(), 1);
  std::reverse(images.begin(), images.begin() + ctx.k());
  return Permutation(std::move(images));
}

OrbitLabel make_label(const Context& ctx, Permutation sigma, Permutation alpha) {
  if (!in_Zk(ctx, sigma)) throw DomainError("label: sigma " + to_string(sigma) + " is not in Z_k");
  if (!in_Wk(ctx, alpha)) throw DomainError("label: alpha " + to_string(alpha) + " is not in W_k");
  return OrbitLabel{std::move(sigma), std::move(alpha)};
}

std::vector<OrbitLabel> enumerate_labels(const Context& ctx, int cap) {
  if (ctx.n() > cap) {
    throw CapExceeded("enumerate_labels: n = " + std::to_string(ctx.n()) +
                      " exceeds enumeration cap " + std::to_string(cap));
  }
  std::vector<Permutation> alphas;
  for (const Permutation& a : all_permutations(ctx.k())) {
    std::vector<int> images(a.images().begin(), a.images().end());
    for (int i = ctx.k() + 1; i <= ctx.n(); ++i) images.push_back(i);
    alphas.emplace_back(std::move(images));
  }
  std::vector<OrbitLabel> out;
  for (const Permutation& sigma : all_permutations(ctx.n())) {
    if (!in_Zk(ctx, sigma)) continue;
    for (const Permutation& alpha : alphas) out.push_back(OrbitLabel{sigma, alpha});
  }
  return out;
}

OrbitCoset coset_of(const Context& ctx, const Permutation& w) {
  require_size(ctx, w, "coset_of");
  OrbitCoset coset;
  for (const Permutation& c : weyl_group_Ck(ctx)) coset.members.push_back(w * c);
  std::sort(coset.members.begin(), coset.members.end());
  coset.canonical = *std::min_element(coset.members.begin(), coset.members.end(),
                                      [](const Permutation& a, const Permutation& b) {
                                        const int la = length(a);
                                        const int lb = length(b);
                                        return la != lb ? la < lb : a < b;
                                      });
  return coset;
}

OrbitLabel label_of_coset(const Context& ctx, const OrbitCoset& coset) {
  const int k = ctx.k();
  for (const Permutation& w : coset.members) {
    std::vector<int> prefix(w.images().begin(), w.images().begin() + k);
    Permutation alpha = standardize_prefix(ctx.n(), prefix);
    Permutation sigma = w * alpha.inverse();
    if (in_Zk(ctx, sigma)) return OrbitLabel{std::move(sigma), std::move(alpha)};
  }
  throw DomainError("label_of_coset: no member factors as sigma*alpha");
}

std::vector<Permutation> min_length_reps(const OrbitCoset& coset) {
  int best = -1;
  std::vector<Permutation> out;
  for (const Permutation& w : coset.members) {
    const int l = length(w);
    if (best < 0 || l < best) {
      best = l;
      out.clear();
    }
    if (l == best) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int dim_closed_orbit(const Context& ctx) { return ctx.k() * (ctx.k() + 1) / 2; }

int dimension(const Context& ctx, const OrbitLabel& label) {
  return length(label.sigma) + length(label.alpha) + dim_closed_orbit(ctx);
}

int dim_orbit(const Context& ctx) { return 2 * ctx.k() * (ctx.n() - ctx.k()); }

RationalMatrix rep_matrix(const Context& ctx, const OrbitLabel& label) {
  const int n = ctx.n();
  const int k = ctx.k();
  const Permutation tau = label.product();
  RationalMatrix m = RationalMatrix::Zero(n, n);
  for (int j = 1; j <= k; ++j) m(tau(j) - 1, label.sigma(n - k + j) - 1) += 1;
  return m;
}

OrientedLinkPattern link_pattern(const Context& ctx, const OrbitLabel& label) {
  const int n = ctx.n();
  const int k = ctx.k();
  const Permutation tau = label.product();
  OrientedLinkPattern arcs;
  for (int j = 1; j <= k; ++j) arcs.push_back(Arc{label.sigma(n - k + j), tau(j)});
  return arcs;
}

TwoColumnTableau tableau(const Context& ctx, const OrbitLabel& label) {
  const int n = ctx.n();
  const int k = ctx.k();
  const Permutation tau = label.product();
  TwoColumnTableau t;
  for (int i = 1; i <= n - k; ++i) t.left.push_back(tau(i));
  for (int i = n - k + 1; i <= n; ++i) t.right.push_back(tau(i));
  return t;
}

bool is_row_standard(const TwoColumnTableau& t) {
  for (std::size_t i = 0; i < t.right.size(); ++i) {
    if (t.left[i] > t.right[i]) return false;
  }
  return true;
}

bool is_upper(const Context& ctx, const OrbitLabel& label) {
  return is_row_standard(tableau(ctx, label));
}

Permutation involution_tau(const Context& ctx, const OrbitLabel& label) {
  if (!is_upper(ctx, label)) {
    throw DomainError("involution_tau: label " + to_string(label) + " is not upper-triangular");
  }
  const int n = ctx.n();
  const int k = ctx.k();
  const Permutation tau = label.product();
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  for (int i = 1; i <= k; ++i) {
    const int a = tau(i);
    const int b = label.sigma(n - k + i);
    images[static_cast<std::size_t>(a - 1)] = b;
    images[static_cast<std::size_t>(b - 1)] = a;
  }
  return Permutation(std::move(images));
}

bool is_orbital_variety(const Context& ctx, const OrbitLabel& label) {
  const int k = ctx.k();
  return is_upper(ctx, label) &&
         length(label.sigma) + length(label.alpha) == k * (ctx.n() - k) - dim_closed_orbit(ctx);
}

int springer_component_dim(const Context& ctx) {
  const int n = ctx.n();
  const int k = ctx.k();
  return (k * (k - 1) + (n - k) * (n - k - 1)) / 2;
}

std::uint64_t count_standard_tableaux(const Context& ctx) {
  const int n = ctx.n();
  const int k = ctx.k();
  const int rows = n - k;
  Integer numerator = 1;
  for (int i = 2; i <= n; ++i) numerator *= i;
  Integer hooks = 1;
  for (int r = 1; r <= rows; ++r) {
    const int arm = r <= k ? 1 : 0;
    hooks *= arm + (rows - r) + 1;
    if (r <= k) hooks *= (k - r) + 1;
  }
  const Integer count = numerator / hooks;
  if (!count.fits_ulong_p()) throw std::overflow_error("count_standard_tableaux: overflow");
  return count.get_ui();
}

nlohmann::json label_to_json(const Context& ctx, const OrbitLabel& label) {
  return nlohmann::json{{"n", ctx.n()},
                        {"k", ctx.k()},
                        {"sigma", to_string(label.sigma)},
                        {"alpha", to_string(label.alpha)}};
}

Context context_from_json(const nlohmann::json& j) {
  return Context(j.at("n").get<int>(), j.at("k").get<int>());
}

OrbitLabel label_from_json(const nlohmann::json& j) {
  const Context ctx = context_from_json(j);
  return make_label(ctx, parse_permutation(j.at("sigma").get<std::string>(), ctx.n()),
                    parse_permutation(j.at("alpha").get<std::string>(), ctx.n()));
}

nlohmann::json link_pattern_to_json(const OrientedLinkPattern& arcs) {
  nlohmann::json out = nlohmann::json::array();
  for (const Arc& a : arcs) out.push_back({a.source, a.target});
  return out;
}

nlohmann::json tableau_to_json(const TwoColumnTableau& t) {
  return nlohmann::json{{"left", t.left}, {"right", t.right}};
}

namespace {

Permutation parse_alpha(const Context& ctx, std::string_view text) {
  const bool symbolic = text == "id" || text == "e" || (!text.empty() && text.front() == 's');
  if (symbolic) return parse_permutation(text, ctx.n());
  Permutation p = parse_permutation(text);
  if (p.size() == ctx.n()) return p;
  if (p.size() == ctx.k()) {
    std::vector<int> images(p.images().begin(), p.images().end());
    for (int i = ctx.k() + 1; i <= ctx.n(); ++i) images.push_back(i);
    return Permutation(std::move(images));
  }
  throw SizeMismatch("parse_label: alpha must have n or k entries");
}

}  // namespace

OrbitLabel parse_label(const Context& ctx, std::string_view text) {
  std::string sigma_text;
  std::string alpha_text = "id";
  std::string token;
  auto flush = [&]() {
    if (token.empty()) return;
    const auto eq = token.find('=');
    if (eq == std::string::npos) {
      sigma_text = token;
    } else {
      const std::string key = token.substr(0, eq);
      const std::string value = token.substr(eq + 1);
      if (key == "sigma") {
        sigma_text = value;
      } else if (key == "alpha") {
        alpha_text = value;
      } else {
        throw std::invalid_argument("parse_label: unknown key '" + key + "'");
      }
    }
    token.clear();
  };
  for (char c : text) {
    if (c == ';' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  if (sigma_text.empty()) throw std::invalid_argument("parse_label: missing sigma");
  return make_label(ctx, parse_permutation(sigma_text, ctx.n()), parse_alpha(ctx, alpha_text));
}

std::string to_string(const OrbitLabel& label) {
  return "(" + to_string(label.sigma) + " | " + to_string(label.alpha) + ")";
}

}  // namespace twonil
