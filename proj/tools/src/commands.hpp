#pragma once

#include <iosfwd>

#include "config.hpp"

namespace bettimap::cli {

enum ExitCode { kSuccess = 0, kConfigError = 1, kPartialFailure = 2 };

struct RunOutcome {
  int exit_code = kSuccess;
  json summary;  // everything except summary["timings"] is deterministic
};

// Runs the subcommand, writes its artifacts and summary.json into cfg.out.
RunOutcome run(const RunConfig& cfg);

// Summary without the timing block, for comparing runs.
json strip_timings(json summary);

}  // namespace bettimap::cli
