#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace scatlen::cli {

enum ExitCode : int {
  kOk = 0,
  kPartial = 2,   // some rows flagged, or a regenerated value missed its tolerance
  kUsage = 64,
  kInternal = 70,
};

/// Environment variable that overrides the fixture directory.
inline constexpr const char* kFixtureEnv = "SCATLEN_FIXTURES";

std::filesystem::path fixture_dir();

/// "start:stop:step"; the last point is the one within half a step of stop.
std::vector<double> parse_eta_range(const std::string& spec);

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scatlen::cli
