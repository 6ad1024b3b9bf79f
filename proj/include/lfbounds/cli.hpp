#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace lfb::cli {

enum class OutputFormat { kJson, kCsv, kHuman };

/// Exit codes, identical for every output format.
inline constexpr int kExitOk = 0;
inline constexpr int kExitHypothesis = 1;
inline constexpr int kExitNonConvergence = 2;
inline constexpr int kExitUsage = 64;

/// Malformed invocation: unknown key, unparsable value, or value outside the valid range.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string subcommand;  // profiles | constants | optimize | integrate | mertens | verify
  std::string action;      // e.g. "a1", "inv-zeta", "bound"; empty for profiles
  std::map<std::string, std::string> parameters;  // flag name without dashes -> raw value
  OutputFormat output_format = OutputFormat::kJson;
  std::optional<std::string> output_path;
  unsigned threads = 0;  // 0 = auto
};

struct DispatchResult {
  int exit_code = kExitOk;
  nlohmann::ordered_json report;
  std::optional<std::vector<std::vector<std::string>>> table;  // CSV rows (header first) for traces
};

/// Runs one pipeline stage. Throws UsageError for invalid configurations; module
/// failures are reported in the result with exit code 1 or 2.
DispatchResult dispatch(const RunConfig& config);

/// Renders a result in the configured format.
std::string render(const DispatchResult& result, OutputFormat format);

/// Worker count from LFB_THREADS, or 0 (auto) when unset.
unsigned default_threads();

/// Full command-line entry point.
int run(int argc, char** argv);

}  // namespace lfb::cli
