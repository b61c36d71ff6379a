#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jetspace/groebner.hpp"
#include "jetspace/problem.hpp"

namespace jetspace {

enum ExitCode : int {
  exit_ok = 0,
  exit_usage = 1,
  exit_parse = 2,
  exit_precondition = 3,
  exit_budget = 4,
  exit_consistency = 5,
};

struct CorpusEntry {
  std::string name;
  std::string description;
  /// Problem file text.
  std::string spec;
  /// A rational smooth point of the variety, when one is known.
  std::optional<Point> smooth_point;
};

const std::vector<CorpusEntry>& corpus();
const CorpusEntry* find_corpus_entry(std::string_view name);

struct RunOptions {
  Budget budget;
  int jobs = 1;
};

struct Report {
  /// Human-readable section, separator, key-sorted JSON section.
  std::string text;
  int exit_code = exit_ok;
};

/// Runs one problem. Budget exhaustion yields a partial report with
/// exit_budget; other errors propagate as exceptions.
Report run_problem(const ProblemSpec& spec, const RunOptions& options);

/// Budget and job count from JETSPACE_MAX_PAIRS, JETSPACE_MAX_DEGREE and
/// JETSPACE_JOBS; throws PreconditionError on malformed values.
RunOptions options_from_environment();

/// Entry point of the `jetspace` executable.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jetspace
