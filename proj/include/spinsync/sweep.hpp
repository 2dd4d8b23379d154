#pragma once

#include <iosfwd>

#include "spinsync/run_config.hpp"

namespace spinsync {

// CSV emitters behind the CLI subcommands. Output is deterministic: fixed
// 12-significant-digit formatting, '.' decimal separator, '\n' line endings,
// rows in sweep order regardless of the number of jobs.
void run_sweep(const RunConfig& config, std::ostream& out);
void run_husimi(const RunConfig& config, std::ostream& out);
void run_steady(const RunConfig& config, std::ostream& out);
void run_evolve(const RunConfig& config, std::ostream& out);

// 12-significant-digit float formatting shared by every CSV writer.
std::string format_value(double v);

} // namespace spinsync
