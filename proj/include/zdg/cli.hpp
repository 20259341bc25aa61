#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zdg/gf2.hpp"

namespace zdg::cli {

enum class Command { Graph, Invariants, Indices, Spectra, Code, Verify };
enum class Format { Json, Csv, Dot, Text, Matrix };

struct CliConfig {
  Command command = Command::Verify;
  std::vector<std::uint32_t> primes;
  std::optional<Format> format;  // unset: text
  MinDistanceMethod min_distance_method = MinDistanceMethod::Auto;
  std::optional<std::string> output_path;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitGate = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses argv into a config. Throws UsageError on bad flags or combinations.
/// --help output goes to `out` and yields nullopt.
std::optional<CliConfig> parse(int argc, const char* const* argv, std::ostream& out);

/// Throws UsageError when the format does not apply to the command, or the
/// prime list is empty or inadmissible for it.
void validate(const CliConfig& config);

/// Dispatches and writes the artifact to the output path or `out`. Returns the
/// process exit status; diagnostics go to `err`.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// parse + run with the exit-code mapping.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zdg::cli
