// zeroset: degree bound, Crofton line-count integral and direct level-set
// measure of polynomial zero sets in boxes.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "zeroset/report.hpp"

namespace {

struct Flags {
  std::string poly;
  std::size_t dim = 0;
  std::string box;
  std::string scheme;
  std::uint64_t seed = zeroset::kDefaultSeed;
  double confidence = zeroset::kDefaultConfidence;
  std::size_t resolution = 0;
  std::string out;
  std::string format = "json";
  int workers = 0;
  std::string dump_mesh;
  std::string n_list;
};

void add_common(CLI::App& sub, Flags& f, bool sharpness) {
  if (!sharpness) {
    sub.add_option("--poly", f.poly, "Polynomial, e.g. \"x1*x2 - 1/4\"")->required();
    sub.add_option("--box", f.box, "\"a,b\" (cube) or \"a1,b1;a2,b2;...\"; default [0,1]^d");
  } else {
    sub.add_option("--n", f.n_list, "Comma-separated increasing n values");
  }
  sub.add_option("--dim", f.dim, "Dimension d (inferred from the polynomial if omitted)");
  sub.add_option("--scheme", f.scheme, "grid:N or mc:SAMPLES");
  sub.add_option("--seed", f.seed, "Monte Carlo seed")->capture_default_str();
  sub.add_option("--confidence", f.confidence, "Monte Carlo confidence level")->capture_default_str();
  sub.add_option("--resolution", f.resolution, "Cells per axis for the direct measure");
  sub.add_option("--out", f.out, "Report path (default: stdout)");
  sub.add_option("--format", f.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sub.add_option("--workers", f.workers, "Worker cap (does not affect results)");
  if (!sharpness) sub.add_option("--dump-mesh", f.dump_mesh, "CSV of segments/triangles");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero-set measure bounds and estimates for multivariate polynomials"};
  app.require_subcommand(1);
  Flags flags;
  const std::pair<const char*, const char*> commands[] = {
      {"bound", "Degree bound (sum_k deg_xk p) (b-a)^(d-1) on a cube"},
      {"crofton", "Axis-line root-count integral"},
      {"measure", "Direct level-set measure (d <= 3)"},
      {"sharpness", "Run the x1*...*xd - 1/n family on the unit cube"},
      {"report", "Bound, Crofton and direct measure together"},
  };
  for (const auto& [name, help] : commands)
    add_common(*app.add_subcommand(name, help), flags, std::string(name) == "sharpness");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << R"({"error":{"code":2,"kind":"parse_error","message":)"
              << nlohmann::json(e.what()).dump() << "}}\n";
    return zeroset::kExitParseError;
  }

  zeroset::RunConfig config;
  try {
    config.command = zeroset::parse_command(app.get_subcommands().front()->get_name());
    config.polynomial = flags.poly;
    config.dimension = flags.dim;
    config.box = flags.box;
    if (!flags.scheme.empty()) config.scheme = flags.scheme;
    if (flags.resolution > 0) config.resolution = flags.resolution;
    config.seed = flags.seed;
    config.confidence = flags.confidence;
    if (!flags.n_list.empty()) config.n_values = zeroset::parse_n_list(flags.n_list);
    config.format = zeroset::parse_format(flags.format);
    config.out_path = flags.out;
    config.mesh_path = flags.dump_mesh;
    config.workers = flags.workers;
  } catch (const std::exception& e) {
    std::cerr << R"({"error":{"code":2,"kind":"parse_error","message":)"
              << nlohmann::json(e.what()).dump() << "}}\n";
    return zeroset::kExitParseError;
  }
  return zeroset::run(config, std::cout, std::cerr);
}
