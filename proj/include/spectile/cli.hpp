#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "spectile/classify.hpp"
#include "spectile/search.hpp"

namespace spectile::cli {

using Json = classify::Json;

enum class Command { Verify, Tiles, Classify2, Classify3, GV, Torus, Search };

/// Throws ParseError for unknown names.
Command parse_command(std::string_view name);
std::string to_string(Command command);

struct RunConfig {
  Command command = Command::Verify;
  std::optional<std::string> omega;
  std::optional<std::string> spectrum;
  std::optional<std::string> exponents;
  std::optional<std::string> system;
  std::optional<std::int64_t> d_max;
  std::optional<std::int64_t> grid;
  std::optional<std::int64_t> order;
  std::optional<std::int64_t> p_max;
  unsigned jobs = 1;
  /// "-" is standard output.
  std::string output = "-";
};

/// Worker count from SPECTILE_JOBS, or 1.
unsigned jobs_from_environment();

// One JSON object per operation; shared by the CLI and the Python module.
Json verify_json(std::string_view omega, std::string_view spectrum);
Json tiles_json(std::string_view omega, std::optional<std::int64_t> p_max = std::nullopt);
Json classify_json(std::string_view omega, std::string_view spectrum, int intervals);
Json gv_json(std::string_view exponents);
Json torus_json(std::string_view system, std::int64_t order, unsigned jobs);
Json search_config_json(const search::ConfigResult& config);

enum ExitStatus : int { kOk = 0, kCounterexample = 1, kInvalidInput = 2, kInternalFailure = 3 };

/// Runs the command, writing JSON lines to `out` and diagnostics to `err`.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace spectile::cli
