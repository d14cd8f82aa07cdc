#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sysrep/io.hpp"

namespace sysrep::cli {

using io::Json;

struct Options {
  std::optional<std::uint64_t> seed;  // overrides the document seed
  std::size_t trials = 256;
  std::uint64_t max_states = kDefaultMaxStates;
  unsigned workers = 1;
};

enum class CensusMethod { Analytic, Enumerate, Both };

struct Output {
  Json json;
  std::string text;
  int status = 0;
};

io::SystemDocument load_document(const std::string& path);

Output analyze(const io::SystemDocument& doc, const Options& opt);
Output factors(const io::SystemDocument& doc, const Options& opt);
Output decompose(const io::SystemDocument& doc, const Options& opt);
Output orbits(const io::SystemDocument& doc, const Options& opt, CensusMethod method);
Output simulate(const io::SystemDocument& doc, const std::string& x0_csv, std::int64_t steps);
/// Property suites; with a report path, also compares a stored analyze
/// report against a fresh run.
Output verify(const io::SystemDocument& doc, const Options& opt, const std::optional<std::string>& report_path);

/// 2 for input errors, 3 for guard violations, 4 for mathematical
/// preconditions, 1 otherwise.
int exit_code(ErrorCode code);

}  // namespace sysrep::cli
