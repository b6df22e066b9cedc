#include <iostream>

#include <CLI11.hpp>

#include "twonil/cli.hpp"

int main(int argc, char** argv) {
  twonil::cli::RunConfig config;
  std::string format;
  std::string samples;

  CLI::App app{"B-orbits of 2-nilpotent matrices: enumeration, closure order, tangent spaces"};
  app.require_subcommand(1);
  app.add_option("--n", config.n, "matrix size")->check(CLI::Range(1, 64));
  app.add_option("--k", config.k, "rank of the nilpotent")->check(CLI::NonNegativeNumber);
  app.add_option("--format", format, "json, dot or table");
  app.add_option("--out", config.out_path, "write the artifact to a file");
  app.add_option("--cap", config.cap, "enumeration cap on n (also raises the subword cap)");
  app.add_option("--samples", samples, "comma-separated nonzero rationals for curve checks");
  app.fallthrough();

  struct Spec {
    const char* name;
    const char* help;
    std::vector<const char*> positionals;
  };
  const Spec specs[] = {
      {"enumerate", "list orbit labels with dimensions, tableaux and link patterns", {}},
      {"order", "closure-order comparison with a certificate", {"A", "B"}},
      {"hasse", "Hasse diagram as DOT or JSON", {}},
      {"tangent", "t_k set, tangent bounds, B_k-span and weight blocks", {"LABEL"}},
      {"smooth", "smooth/singular verdict sweep", {}},
      {"verify", "run every oracle suite", {}},
      {"springer", "orbital varieties and Springer fiber data", {}},
      {"blueprint", "Bott-Samelson incidence system for a reduced word", {"LABEL", "WORD"}},
  };
  std::vector<std::vector<std::string>> positional_values(std::size(specs));
  std::vector<CLI::App*> subs;
  for (std::size_t i = 0; i < std::size(specs); ++i) {
    CLI::App* sub = app.add_subcommand(specs[i].name, specs[i].help);
    auto& values = positional_values[i];
    values.resize(specs[i].positionals.size());
    for (std::size_t p = 0; p < specs[i].positionals.size(); ++p) {
      sub->add_option(specs[i].positionals[p], values[p])->required();
    }
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? 0 : twonil::cli::kBadInput;
  }

  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i]->parsed()) {
      config.subcommand = specs[i].name;
      config.args = positional_values[i];
    }
  }
  try {
    if (!format.empty()) config.format = twonil::cli::parse_format(format);
    if (!samples.empty()) {
      config.samples.clear();
      std::string item;
      for (char c : samples + ",") {
        if (c == ',') {
          if (!item.empty()) config.samples.push_back(item);
          item.clear();
        } else {
          item.push_back(c);
        }
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return twonil::cli::kBadInput;
  }
  return twonil::cli::run(config, std::cout, std::cerr);
}
