#include "twonil/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "twonil/bruhat_poset.hpp"
#include "twonil/errors.hpp"
#include "twonil/exact_verify.hpp"
#include "twonil/orbit_atlas.hpp"
#include "twonil/tangent_lab.hpp"

namespace twonil::cli {

using nlohmann::json;

Format parse_format(const std::string& text) {
  if (text == "table") return Format::Table;
  if (text == "json") return Format::Json;
  if (text == "dot") return Format::Dot;
  throw std::invalid_argument("unknown format '" + text + "' (expected json, dot or table)");
}

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Left-aligned columns separated by two spaces.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& os) const {
    std::vector<std::size_t> width;
    for (const auto& row : rows_) {
      if (width.size() < row.size()) width.resize(row.size(), 0);
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        line += row[c];
        if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
      }
      os << line << "\n";
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string join(const std::vector<int>& values, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::string root_name(const Root& e) { return "(" + std::to_string(e.i) + std::to_string(e.j) + ")"; }

std::string roots_text(const std::vector<Root>& roots) {
  std::string out;
  for (const Root& e : roots) out += (out.empty() ? "" : " ") + root_name(e);
  return out.empty() ? "-" : out;
}

json roots_json(const std::vector<Root>& roots) {
  json out = json::array();
  for (const Root& e : roots) out.push_back({{"i", e.i}, {"j", e.j}, {"family", to_string(e.family)}});
  return out;
}

std::string tableau_text(const TwoColumnTableau& t) {
  std::string out;
  for (std::size_t r = 0; r < t.left.size(); ++r) {
    if (r > 0) out += " ";
    out += "(" + std::to_string(t.left[r]);
    if (r < t.right.size()) out += "," + std::to_string(t.right[r]);
    out += ")";
  }
  return out;
}

std::string link_text(const OrientedLinkPattern& arcs) {
  std::string out;
  for (const Arc& a : arcs) out += (out.empty() ? "" : " ") + std::to_string(a.source) + "->" + std::to_string(a.target);
  return out.empty() ? "-" : out;
}

std::string witness_text(const json& w) {
  std::string out;
  for (auto it = w.begin(); it != w.end(); ++it) {
    if (!out.empty()) out += " ";
    out += it.key() + "=";
    if (it->is_string()) {
      out += it->get<std::string>();
    } else if (it->is_array()) {
      std::string items;
      for (const auto& x : *it) items += (items.empty() ? "" : ",") + (x.is_string() ? x.get<std::string>() : x.dump());
      out += items;
    } else {
      out += it->dump();
    }
  }
  return out;
}

struct Session {
  const RunConfig& config;
  Context ctx;
  Format format;
  std::ostream& out;
  std::ostream& err;

  int enumeration_cap() const { return config.cap.value_or(kDefaultEnumerationCap); }
  int subword_cap() const { return config.cap ? std::max(*config.cap, kDefaultSubwordCap) : kDefaultSubwordCap; }

  const std::string& arg(std::size_t i, const char* what) const {
    if (i >= config.args.size()) throw std::invalid_argument(config.subcommand + ": missing " + what);
    return config.args[i];
  }
};

int cmd_enumerate(Session& s) {
  const auto labels = enumerate_labels(s.ctx, s.enumeration_cap());
  if (s.format == Format::Json) {
    json rows = json::array();
    for (const OrbitLabel& l : labels) {
      json row = label_to_json(s.ctx, l);
      row["dim"] = dimension(s.ctx, l);
      row["tableau"] = tableau_to_json(tableau(s.ctx, l));
      row["link_pattern"] = link_pattern_to_json(link_pattern(s.ctx, l));
      row["upper"] = is_upper(s.ctx, l);
      row["orbital_variety"] = is_orbital_variety(s.ctx, l);
      rows.push_back(std::move(row));
    }
    s.out << rows.dump(2) << "\n";
    return kOk;
  }
  Table t({"sigma", "alpha", "sigma*alpha", "dim", "tableau", "link", "upper"});
  for (const OrbitLabel& l : labels) {
    t.add({to_string(l.sigma), to_string(l.alpha), to_string(l.product()), std::to_string(dimension(s.ctx, l)),
           tableau_text(tableau(s.ctx, l)), link_text(link_pattern(s.ctx, l)), is_upper(s.ctx, l) ? "yes" : "no"});
  }
  t.print(s.out);
  return kOk;
}

int cmd_order(Session& s) {
  const OrbitLabel a = parse_label(s.ctx, s.arg(0, "label A"));
  const OrbitLabel b = parse_label(s.ctx, s.arg(1, "label B"));
  const LeqCertificate cert = compare(s.ctx, a, b);
  if (s.format == Format::Json) {
    json j{{"a", label_to_json(s.ctx, a)}, {"b", label_to_json(s.ctx, b)}, {"leq", cert.holds}};
    j["witness"] = cert.witness ? json(to_string(*cert.witness)) : json(nullptr);
    s.out << j.dump(2) << "\n";
    return kOk;
  }
  s.out << to_string(a) << " <= " << to_string(b) << ": " << (cert.holds ? "yes" : "no");
  if (cert.witness) s.out << " (tau = " << to_string(*cert.witness) << " <= " << to_string(b.product()) << ")";
  s.out << "\n";
  return kOk;
}

int cmd_hasse(Session& s) {
  BruhatGraph g = hasse(s.ctx, s.enumeration_cap());
  mark_singularities(g);
  if (s.format == Format::Json) {
    s.out << export_json(g);
  } else if (s.format == Format::Dot) {
    s.out << export_dot(g);
  } else {
    Table t({"lower", "upper", "alpha_descent"});
    for (const Cover& c : g.covers) {
      t.add({to_string(g.nodes[static_cast<std::size_t>(c.lower)].label),
             to_string(g.nodes[static_cast<std::size_t>(c.upper)].label), c.alpha_descent ? "yes" : "no"});
    }
    t.print(s.out);
  }
  return kOk;
}

json weight_blocks_json(const Context& ctx) {
  json blocks = json::array();
  for (const auto& [chi, vectors] : weight_decomposition(ctx)) {
    blocks.push_back({{"character", chi}, {"dim", vectors.size()}});
  }
  return blocks;
}

int cmd_tangent(Session& s) {
  const OrbitLabel l = parse_label(s.ctx, s.arg(0, "LABEL"));
  const auto tk = t_k_set(s.ctx, l);
  const int lower = tangent_lower_bound(s.ctx, l);
  const int span = bk_span(s.ctx, l);
  const bool upper = is_upper(s.ctx, l);
  const Verdict v = verdict(s.ctx, l);
  if (s.format == Format::Json) {
    json j{{"label", label_to_json(s.ctx, l)},
           {"dim", dimension(s.ctx, l)},
           {"t_k", roots_json(tk)},
           {"s", roots_json(s_set(s.ctx, l))},
           {"tangent_lower_bound", lower},
           {"bk_span", span},
           {"upper", upper},
           {"weight_blocks", weight_blocks_json(s.ctx)},
           {"verdict", verdict_to_json(s.ctx, l, v)}};
    j["tangent_dim"] = upper ? json(tangent_dim_upper(s.ctx, l)) : json(nullptr);
    s.out << j.dump(2) << "\n";
    return kOk;
  }
  s.out << "label: " << to_string(l) << "\n";
  s.out << "dim: " << dimension(s.ctx, l) << "\n";
  s.out << "t_k (" << tk.size() << "): " << roots_text(tk) << "\n";
  s.out << "tangent lower bound: " << lower << "\n";
  if (upper) s.out << "tangent dim (upper): " << tangent_dim_upper(s.ctx, l) << "\n";
  s.out << "bk_span: " << span << "\n";
  s.out << "weight blocks:";
  for (const auto& [chi, vectors] : weight_decomposition(s.ctx)) s.out << " [" << join(chi) << "]:" << vectors.size();
  s.out << "\n";
  s.out << "verdict: " << to_string(v.kind) << (v.rule.empty() ? "" : " (" + v.rule + ")") << "\n";
  return kOk;
}

int cmd_smooth(Session& s) {
  const auto labels = enumerate_labels(s.ctx, s.enumeration_cap());
  if (s.format == Format::Json) {
    json rows = json::array();
    for (const OrbitLabel& l : labels) rows.push_back(verdict_to_json(s.ctx, l, verdict(s.ctx, l)));
    s.out << rows.dump(2) << "\n";
    return kOk;
  }
  Table t({"sigma", "alpha", "dim", "verdict", "rule", "witness"});
  for (const OrbitLabel& l : labels) {
    const Verdict v = verdict(s.ctx, l);
    t.add({to_string(l.sigma), to_string(l.alpha), std::to_string(dimension(s.ctx, l)), to_string(v.kind),
           v.rule.empty() ? "-" : v.rule, witness_text(v.witness)});
  }
  t.print(s.out);
  return kOk;
}

int cmd_springer(Session& s) {
  const auto labels = enumerate_labels(s.ctx, s.enumeration_cap());
  std::vector<OrbitLabel> orbital;
  for (const OrbitLabel& l : labels) {
    if (is_orbital_variety(s.ctx, l)) orbital.push_back(l);
  }
  if (s.format == Format::Json) {
    json rows = json::array();
    for (const OrbitLabel& l : orbital) {
      const Verdict v = verdict(s.ctx, l);
      json row = label_to_json(s.ctx, l);
      row["tableau"] = tableau_to_json(tableau(s.ctx, l));
      row["involution"] = to_string(involution_tau(s.ctx, l));
      row["verdict"] = to_string(v.kind);
      row["rule"] = v.rule;
      rows.push_back(std::move(row));
    }
    json j{{"n", s.ctx.n()},
           {"k", s.ctx.k()},
           {"orbital_variety_dim", s.ctx.k() * (s.ctx.n() - s.ctx.k())},
           {"springer_component_dim", springer_component_dim(s.ctx)},
           {"standard_tableaux", count_standard_tableaux(s.ctx)},
           {"orbital_varieties", rows}};
    s.out << j.dump(2) << "\n";
    return kOk;
  }
  s.out << "orbital variety dim: " << s.ctx.k() * (s.ctx.n() - s.ctx.k()) << "\n";
  s.out << "springer component dim: " << springer_component_dim(s.ctx) << "\n";
  s.out << "standard tableaux: " << count_standard_tableaux(s.ctx) << "\n";
  s.out << "orbital varieties: " << orbital.size() << "\n";
  Table t({"sigma", "alpha", "tableau", "involution", "verdict", "rule"});
  for (const OrbitLabel& l : orbital) {
    const Verdict v = verdict(s.ctx, l);
    t.add({to_string(l.sigma), to_string(l.alpha), tableau_text(tableau(s.ctx, l)),
           to_string(involution_tau(s.ctx, l)), to_string(v.kind), v.rule.empty() ? "-" : v.rule});
  }
  t.print(s.out);
  return kOk;
}

int cmd_blueprint(Session& s) {
  const OrbitLabel l = parse_label(s.ctx, s.arg(0, "LABEL"));
  const Word word = parse_word(s.arg(1, "WORD"));
  const Blueprint bp = resolution_blueprint(s.ctx, l, word);
  if (s.format == Format::Json) {
    s.out << bp.to_json().dump(2) << "\n";
  } else {
    s.out << bp.to_text();
  }
  return kOk;
}

// ---- verify ----------------------------------------------------------------

struct SuiteResult {
  std::string name;
  bool pass;
  std::string detail;
};

std::vector<Rational> parse_samples(const std::vector<std::string>& texts) {
  std::vector<Rational> out;
  for (const std::string& text : texts) {
    Rational q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad sample '" + text + "'");
    q.canonicalize();
    if (q == 0) throw std::invalid_argument("samples must be nonzero");
    out.push_back(q);
  }
  return out;
}

std::uint64_t factorial(int m) {
  std::uint64_t f = 1;
  for (int i = 2; i <= m; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

SuiteResult suite_bruhat_oracle(const Context& ctx, int cap) {
  // S_n x S_n is quadratic in n!; beyond S_6 the sweep stops being cheap.
  if (ctx.n() > 6) return {"bruhat order vs subword oracle", true, "skipped for n > 6"};
  const auto perms = all_permutations(ctx.n());
  std::size_t pairs = 0;
  for (const Permutation& w : perms) {
    const auto below = lower_interval(w, cap);
    for (const Permutation& u : perms) {
      ++pairs;
      if (bruhat_leq(u, w) != std::binary_search(below.begin(), below.end(), u)) {
        return {"bruhat order vs subword oracle", false, to_string(u) + " vs " + to_string(w)};
      }
    }
  }
  return {"bruhat order vs subword oracle", true, std::to_string(pairs) + " pairs"};
}

SuiteResult suite_label_count(const Context& ctx, const std::vector<OrbitLabel>& labels) {
  std::set<Permutation> canonicals;
  for (const Permutation& w : all_permutations(ctx.n())) canonicals.insert(coset_of(ctx, w).canonical);
  const std::uint64_t expected = factorial(ctx.n()) / (factorial(ctx.k()) * factorial(ctx.middle()));
  const bool pass = canonicals.size() == labels.size() && labels.size() == expected;
  return {"label count vs coset partition", pass,
          std::to_string(labels.size()) + " labels, " + std::to_string(canonicals.size()) + " cosets"};
}

SuiteResult suite_orbit_order(const Context& ctx, const std::vector<OrbitLabel>& labels, int cap) {
  const auto order = leq_matrix(ctx, labels);
  LeqOracle oracle(ctx, cap);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = 0; j < labels.size(); ++j) {
      if (order[i][j] != oracle(labels[i], labels[j])) {
        return {"orbit order vs subword oracle", false, to_string(labels[i]) + " vs " + to_string(labels[j])};
      }
    }
  }
  return {"orbit order vs subword oracle", true, std::to_string(labels.size() * labels.size()) + " pairs"};
}

SuiteResult suite_representatives(const Context& ctx, const std::vector<OrbitLabel>& labels) {
  if (!is_two_nilpotent_of_rank(x_matrix(ctx), ctx.k())) return {"orbit representatives", false, "x_k"};
  for (const OrbitLabel& l : labels) {
    const RationalMatrix u = rep_matrix(ctx, l);
    if (!is_two_nilpotent_of_rank(u, ctx.k())) return {"orbit representatives", false, to_string(l) + " rank"};
    if (!incidence_member(ctx, u, Flag::of_permutation(l.product()), l)) {
      return {"orbit representatives", false, to_string(l) + " witness flag"};
    }
    if (is_upper(ctx, l) != is_strictly_upper(u)) return {"orbit representatives", false, to_string(l) + " upper"};
  }
  return {"orbit representatives", true, std::to_string(labels.size()) + " labels"};
}

SuiteResult suite_curves(const Context& ctx, const std::vector<Rational>& samples) {
  const auto roots = phi_plus_Ck(ctx);
  for (const Root& e : roots) {
    const CurveReport report = verify_curve(ctx, e, samples);
    if (!report.ok()) return {"curve identities", false, report.failures().front()};
  }
  return {"curve identities", true, std::to_string(roots.size()) + " roots x " + std::to_string(samples.size()) + " samples"};
}

SuiteResult suite_tangent(const Context& ctx) {
  const auto blocks = weight_decomposition(ctx);
  const Character trivial(static_cast<std::size_t>(ctx.n() - ctx.k()), 0);
  const auto it = blocks.find(trivial);
  const std::size_t trivial_dim = it == blocks.end() ? 0 : it->second.size();
  const bool independent = tangent_independence(ctx);
  const bool pass = independent && trivial_dim == static_cast<std::size_t>(2 * ctx.k()) &&
                    static_cast<int>(phi_plus_Ck(ctx).size()) == dim_orbit(ctx) - dim_closed_orbit(ctx);
  return {"tangent decomposition", pass,
          "rank " + std::to_string(tangent_rank(ctx)) + " of " + std::to_string(dim_orbit(ctx)) + ", trivial block " +
              std::to_string(trivial_dim)};
}

SuiteResult suite_rules(const Context& ctx, const std::vector<OrbitLabel>& labels) {
  for (const OrbitLabel& l : labels) {
    const auto verdicts = applicable_verdicts(ctx, l);
    for (const Verdict& v : verdicts) {
      if (v.kind != verdicts.front().kind) {
        return {"decision rule agreement", false, to_string(l) + ": " + verdicts.front().rule + " vs " + v.rule};
      }
    }
    if (tangent_lower_bound(ctx, l) > bk_span(ctx, l)) return {"decision rule agreement", false, to_string(l) + " bk_span"};
    if (is_upper(ctx, l)) {
      for (const Root& e : t_k_set(ctx, l)) {
        if (!is_strictly_upper(curve(ctx, e).tangent_vector)) {
          return {"decision rule agreement", false, to_string(l) + " t_k curve leaves n"};
        }
      }
    }
  }
  return {"decision rule agreement", true, std::to_string(labels.size()) + " labels"};
}

SuiteResult suite_springer(const Context& ctx, const std::vector<OrbitLabel>& labels) {
  std::size_t orbital = 0;
  for (const OrbitLabel& l : labels) {
    if (is_orbital_variety(ctx, l)) ++orbital;
  }
  const std::uint64_t syt = count_standard_tableaux(ctx);
  return {"orbital varieties vs standard tableaux", orbital == syt,
          std::to_string(orbital) + " orbital varieties, " + std::to_string(syt) + " tableaux"};
}

// Root-by-root t_k membership for one label, in the layout of a hand table.
void print_tk_table(const Context& ctx, const OrbitLabel& l, std::ostream& os) {
  const auto tk = t_k_set(ctx, l);
  os << "t_k table for " << to_string(l) << " (sigma*alpha = " << to_string(l.product()) << ", l = "
     << length(l.sigma) + length(l.alpha) << ")\n";
  Table t({"root", "family", "phi+_n", "coset witness", "t_k"});
  for (const Root& e : phi_plus_Ck(ctx)) {
    std::string witness = "-";
    for (const Permutation& p : coset_of(ctx, reflection(ctx, e)).members) {
      if (bruhat_leq(p, l.product())) {
        witness = to_string(p);
        break;
      }
    }
    const bool in = std::find(tk.begin(), tk.end(), e) != tk.end();
    t.add({root_name(e), to_string(e.family), in_phi_plus_n(ctx, e) ? "yes" : "no", witness, in ? "in" : "out"});
  }
  t.print(os);
  os << "|t_k| = " << tk.size() << "\n";
}

int cmd_verify(Session& s) {
  const auto labels = enumerate_labels(s.ctx, s.enumeration_cap());
  const auto samples = parse_samples(s.config.samples);
  std::vector<SuiteResult> results;
  results.push_back(suite_bruhat_oracle(s.ctx, s.subword_cap()));
  results.push_back(suite_label_count(s.ctx, labels));
  results.push_back(suite_orbit_order(s.ctx, labels, s.subword_cap()));
  results.push_back(suite_representatives(s.ctx, labels));
  results.push_back(suite_curves(s.ctx, samples));
  results.push_back(suite_tangent(s.ctx));
  results.push_back(suite_rules(s.ctx, labels));
  results.push_back(suite_springer(s.ctx, labels));

  std::vector<OrbitLabel> singular_components;
  for (const OrbitLabel& l : labels) {
    if (is_orbital_variety(s.ctx, l) && verdict(s.ctx, l).kind == Smoothness::Singular) singular_components.push_back(l);
  }

  const bool pass = std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.pass; });
  if (s.format == Format::Json) {
    json suites = json::array();
    for (const SuiteResult& r : results) suites.push_back({{"suite", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    json tables = json::array();
    for (const OrbitLabel& l : singular_components) {
      const auto tk = t_k_set(s.ctx, l);
      json rows = json::array();
      for (const Root& e : phi_plus_Ck(s.ctx)) {
        rows.push_back({{"root", {e.i, e.j}},
                        {"phi_plus_n", in_phi_plus_n(s.ctx, e)},
                        {"in_t_k", std::find(tk.begin(), tk.end(), e) != tk.end()}});
      }
      tables.push_back({{"label", label_to_json(s.ctx, l)}, {"rows", rows}});
    }
    s.out << json{{"pass", pass}, {"suites", suites}, {"singular_orbital_varieties", tables}}.dump(2) << "\n";
  } else {
    for (const SuiteResult& r : results) {
      s.out << (r.pass ? "PASS" : "FAIL") << "  " << r.name << " (" << r.detail << ")\n";
    }
    for (const OrbitLabel& l : singular_components) {
      s.out << "\n";
      print_tk_table(s.ctx, l, s.out);
    }
  }
  return pass ? kOk : kVerifyFailed;
}

using Command = int (*)(Session&);

struct CommandInfo {
  const char* name;
  Command fn;
  Format default_format;
};

constexpr CommandInfo kCommands[] = {
    {"enumerate", cmd_enumerate, Format::Table}, {"order", cmd_order, Format::Table},
    {"hasse", cmd_hasse, Format::Dot},           {"tangent", cmd_tangent, Format::Table},
    {"smooth", cmd_smooth, Format::Table},       {"verify", cmd_verify, Format::Table},
    {"springer", cmd_springer, Format::Table},   {"blueprint", cmd_blueprint, Format::Table},
};

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const CommandInfo* command = nullptr;
  for (const CommandInfo& c : kCommands) {
    if (config.subcommand == c.name) command = &c;
  }
  if (command == nullptr) {
    err << "error: unknown subcommand '" << config.subcommand << "'\n";
    return kBadInput;
  }
  try {
    if (config.cap && *config.cap <= 0) throw std::invalid_argument("--cap must be positive");
    const Context ctx(config.n, config.k);
    const Format format = config.format.value_or(command->default_format);
    if (format == Format::Dot && config.subcommand != "hasse") {
      throw std::invalid_argument("--format dot is only available for hasse");
    }
    std::ostringstream buffer;
    Session session{config, ctx, format, buffer, err};
    const int status = command->fn(session);
    if (config.out_path.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(config.out_path, std::ios::binary);
      if (!file) throw IoError("cannot open '" + config.out_path + "' for writing");
      file << buffer.str();
      if (!file.flush()) throw IoError("write to '" + config.out_path + "' failed");
    }
    return status;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
}

}  // namespace twonil::cli
