#include "twonil/bruhat_poset.hpp"

#include <algorithm>
#include <sstream>

#include "twonil/errors.hpp"

namespace twonil {

LeqCertificate compare(const Context& ctx, const OrbitLabel& a, const OrbitLabel& b) {
  const Permutation top = b.product();
  for (const Permutation& tau : coset_of(ctx, a.product()).members) {
    if (bruhat_leq(tau, top)) return LeqCertificate{true, tau};
  }
  return LeqCertificate{};
}

bool leq(const Context& ctx, const OrbitLabel& a, const OrbitLabel& b) {
  return compare(ctx, a, b).holds;
}

LeqOracle::LeqOracle(Context ctx, int cap) : ctx_(ctx), cap_(cap) {}

bool LeqOracle::operator()(const OrbitLabel& a, const OrbitLabel& b) {
  const Permutation top = b.product();
  auto it = below_.find(top);
  if (it == below_.end()) {
    std::vector<Permutation> canonicals;
    for (const Permutation& eps : lower_interval(top, cap_)) {
      canonicals.push_back(coset_of(ctx_, eps).canonical);
    }
    std::sort(canonicals.begin(), canonicals.end());
    canonicals.erase(std::unique(canonicals.begin(), canonicals.end()), canonicals.end());
    it = below_.emplace(top, std::move(canonicals)).first;
  }
  const Permutation target = coset_of(ctx_, a.product()).canonical;
  return std::binary_search(it->second.begin(), it->second.end(), target);
}

bool leq_oracle(const Context& ctx, const OrbitLabel& a, const OrbitLabel& b, int cap) {
  LeqOracle oracle(ctx, cap);
  return oracle(a, b);
}

std::vector<std::vector<bool>> leq_matrix(const Context& ctx, const std::vector<OrbitLabel>& labels) {
  std::vector<std::vector<Permutation>> members;
  std::vector<Permutation> tops;
  members.reserve(labels.size());
  for (const OrbitLabel& l : labels) {
    members.push_back(coset_of(ctx, l.product()).members);
    tops.push_back(l.product());
  }
  const std::size_t count = labels.size();
  std::vector<std::vector<bool>> out(count, std::vector<bool>(count, false));
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      out[i][j] = std::any_of(members[i].begin(), members[i].end(),
                              [&](const Permutation& tau) { return bruhat_leq(tau, tops[j]); });
    }
  }
  return out;
}

int BruhatGraph::find(const OrbitLabel& label) const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].label == label) return static_cast<int>(i);
  }
  return -1;
}

std::vector<WeakEdge> weak_edges(const Context& ctx, const std::vector<OrbitLabel>& labels) {
  std::map<Permutation, int> index_of;
  std::vector<OrbitCoset> cosets;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    cosets.push_back(coset_of(ctx, labels[i].product()));
    index_of.emplace(cosets.back().canonical, static_cast<int>(i));
  }
  std::vector<WeakEdge> out;
  for (std::size_t c = 0; c < labels.size(); ++c) {
    const int base = length(labels[c].product());
    for (const Permutation& w : min_length_reps(cosets[c])) {
      for (int i = 1; i < ctx.n(); ++i) {
        const Permutation next = simple_reflection(ctx.n(), i) * w;
        if (length(next) != base + 1) continue;
        const auto it = index_of.find(coset_of(ctx, next).canonical);
        if (it == index_of.end()) continue;
        const int target = it->second;
        if (target == static_cast<int>(c)) continue;
        if (length(labels[static_cast<std::size_t>(target)].product()) != base + 1) continue;
        out.push_back(WeakEdge{static_cast<int>(c), target, i});
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BruhatGraph hasse(const Context& ctx, int cap) {
  std::vector<OrbitLabel> labels = enumerate_labels(ctx, cap);
  std::sort(labels.begin(), labels.end(), [&](const OrbitLabel& a, const OrbitLabel& b) {
    const int da = dimension(ctx, a);
    const int db = dimension(ctx, b);
    return da != db ? da < db : a.product() < b.product();
  });

  BruhatGraph g{ctx, {}, {}, {}};
  for (const OrbitLabel& l : labels) {
    g.nodes.push_back(BruhatNode{coset_of(ctx, l.product()), l, dimension(ctx, l), std::nullopt});
  }

  const auto order = leq_matrix(ctx, labels);
  const std::size_t count = labels.size();
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      if (i == j || !order[i][j]) continue;
      bool covered = true;
      for (std::size_t m = 0; m < count && covered; ++m) {
        if (m != i && m != j && order[i][m] && order[m][j]) covered = false;
      }
      if (!covered) continue;
      const bool descent = !bruhat_leq(labels[i].alpha, labels[j].alpha);
      g.covers.push_back(Cover{static_cast<int>(i), static_cast<int>(j), descent});
    }
  }
  g.weak = weak_edges(ctx, labels);
  return g;
}

namespace {

std::string node_name(int i) { return "n" + std::to_string(i); }

}  // namespace

std::string export_dot(const BruhatGraph& g) {
  std::ostringstream os;
  os << "digraph bruhat {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box];\n";
  std::map<int, std::vector<int>> by_dim;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) by_dim[g.nodes[i].dim].push_back(static_cast<int>(i));
  for (const auto& [dim, ids] : by_dim) {
    os << "  { rank=same;";
    for (int id : ids) os << ' ' << node_name(id) << ';';
    os << " }\n";
  }
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const BruhatNode& node = g.nodes[i];
    os << "  " << node_name(static_cast<int>(i)) << " [label=\"" << to_string(node.label.product())
       << " | dim " << node.dim << "\"";
    if (node.singular.value_or(false)) os << ", color=red, fontcolor=red";
    os << "];\n";
  }
  std::map<std::pair<int, int>, std::vector<int>> weak_labels;
  for (const WeakEdge& e : g.weak) weak_labels[{e.from, e.to}].push_back(e.reflection);
  for (const Cover& c : g.covers) {
    os << "  " << node_name(c.lower) << " -> " << node_name(c.upper);
    std::vector<std::string> attrs;
    if (c.alpha_descent) attrs.emplace_back("style=dashed");
    if (auto it = weak_labels.find({c.lower, c.upper}); it != weak_labels.end()) {
      std::string text = "label=\"";
      for (std::size_t r = 0; r < it->second.size(); ++r) {
        if (r > 0) text += ",";
        text += "s" + std::to_string(it->second[r]);
      }
      attrs.push_back(text + "\"");
    }
    if (!attrs.empty()) {
      os << " [";
      for (std::size_t a = 0; a < attrs.size(); ++a) os << (a ? ", " : "") << attrs[a];
      os << "]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string export_json(const BruhatGraph& g) {
  nlohmann::json j;
  j["n"] = g.ctx.n();
  j["k"] = g.ctx.k();
  j["nodes"] = nlohmann::json::array();
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const BruhatNode& node = g.nodes[i];
    nlohmann::json entry{{"id", i},
                         {"sigma", to_string(node.label.sigma)},
                         {"alpha", to_string(node.label.alpha)},
                         {"dim", node.dim}};
    entry["singular"] = node.singular ? nlohmann::json(*node.singular) : nlohmann::json(nullptr);
    j["nodes"].push_back(std::move(entry));
  }
  j["covers"] = nlohmann::json::array();
  for (const Cover& c : g.covers) {
    j["covers"].push_back({c.lower, c.upper, {{"alpha_descent", c.alpha_descent}}});
  }
  j["weak"] = nlohmann::json::array();
  for (const WeakEdge& e : g.weak) j["weak"].push_back({e.from, e.to, e.reflection});
  return j.dump(2) + "\n";
}

BruhatGraph read_graph_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  const Context ctx(j.at("n").get<int>(), j.at("k").get<int>());
  BruhatGraph g{ctx, {}, {}, {}};
  for (const auto& entry : j.at("nodes")) {
    OrbitLabel label = make_label(ctx, parse_permutation(entry.at("sigma").get<std::string>(), ctx.n()),
                                  parse_permutation(entry.at("alpha").get<std::string>(), ctx.n()));
    BruhatNode node{coset_of(ctx, label.product()), label, entry.at("dim").get<int>(), std::nullopt};
    if (!entry.at("singular").is_null()) node.singular = entry.at("singular").get<bool>();
    g.nodes.push_back(std::move(node));
  }
  for (const auto& c : j.at("covers")) {
    g.covers.push_back(Cover{c.at(0).get<int>(), c.at(1).get<int>(), c.at(2).at("alpha_descent").get<bool>()});
  }
  for (const auto& e : j.at("weak")) {
    g.weak.push_back(WeakEdge{e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()});
  }
  return g;
}

}  // namespace twonil
