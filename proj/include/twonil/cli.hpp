#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace twonil::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kBadInput = 2,
  kCapExceeded = 3,
  kIoError = 4,
};

enum class Format { Table, Json, Dot };

struct RunConfig {
  int n = 4;
  int k = 2;
  std::string subcommand;
  std::vector<std::string> args;
  std::optional<Format> format;  // per-subcommand default when empty
  std::string out_path;          // stdout when empty
  std::optional<int> cap;
  std::vector<std::string> samples{"1", "-1", "2", "1/3"};
};

Format parse_format(const std::string& text);

/// Executes one subcommand. Artifacts go to `out` (or the --out file),
/// diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace twonil::cli
