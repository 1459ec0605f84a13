#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zeroset/crofton.hpp"

namespace zeroset {

enum class Command { Bound, Crofton, Measure, Sharpness, Report };
enum class OutputFormat { Json, Csv };

/// Process exit codes of `run`.
enum ExitCode : int {
  kExitOk = 0,
  kExitParseError = 2,
  kExitTrivialPolynomial = 3,
  kExitIoError = 4,
};

inline constexpr std::uint64_t kDefaultSeed = 20240601;
inline constexpr double kDefaultConfidence = 0.95;

std::string_view to_string(Command c);
Command parse_command(std::string_view text);
OutputFormat parse_format(std::string_view text);

/// "grid:N" or "mc:SAMPLES". Throws ParseError.
IntegrationScheme parse_scheme(std::string_view text, std::uint64_t seed, double confidence);

/// Comma-separated positive integers.
std::vector<std::uint64_t> parse_n_list(std::string_view text);

/// Raw command-line request. Empty optionals take dimension-dependent defaults.
struct RunConfig {
  Command command = Command::Report;
  std::string polynomial;
  std::size_t dimension = 0;
  std::string box;  // empty: unit cube
  std::optional<std::string> scheme;
  std::optional<std::size_t> resolution;
  std::optional<std::uint64_t> seed;
  double confidence = kDefaultConfidence;
  std::vector<std::uint64_t> n_values;  // sharpness only; empty: defaults
  OutputFormat format = OutputFormat::Json;
  std::string out_path;   // empty: the `out` stream passed to run()
  std::string mesh_path;  // empty: no mesh dump
  int workers = 0;
};

/// Grid(256) for d <= 2, Grid(64) for d = 3, MonteCarlo(1e5) for d >= 4.
IntegrationScheme default_scheme(std::size_t dimension, std::uint64_t seed, double confidence);
/// 256 for d <= 2, 64 for d = 3; none for d >= 4.
std::optional<std::size_t> default_resolution(std::size_t dimension);

/// Executes the request, writes the report to `out` (or out_path) and returns
/// the exit code. Failures print one JSON error record to `err`:
///   {"error":{"code":C,"kind":"...","message":"...","position":P?}}
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Shortest decimal that round-trips to the same double.
std::string format_real(double v);

}  // namespace zeroset
