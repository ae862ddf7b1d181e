#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace leavitt {

struct RunConfig {
  std::string command;
  int n = 0;
  int d = 0;
  std::optional<int> m;
  std::optional<int> k;
  std::string placement = "canonical";
  std::uint64_t seed = 0;
  bool graded = false;
  bool lex = false;
  bool closure = false;
  int degree_bound = 6;
  int iteration_bound = 24;
  std::string set_path;
  std::string certificate_out;
  std::string fixture_dir;
  int grid_max = 8;
  bool pretty = false;
  bool timing = false;
};

inline constexpr int kExitVerified = 0;
inline constexpr int kExitRelationFailure = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitUsage = 64;

// Parses argv-style arguments (without the program name) and runs the command.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
// Runs an already validated configuration.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace leavitt
