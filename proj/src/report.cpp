#include "zeroset/report.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "zeroset/box.hpp"
#include "zeroset/errors.hpp"
#include "zeroset/experiments.hpp"
#include "zeroset/marching.hpp"

namespace zeroset {
namespace {

using Json = nlohmann::ordered_json;

std::uint64_t parse_u64(std::string_view text, std::size_t offset, const char* what) {
  std::uint64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty())
    throw ParseError(std::string("expected ") + what, offset + static_cast<std::size_t>(ptr - first));
  return value;
}

std::size_t infer_dimension(std::string_view text) {
  std::size_t best = 1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'x' && text[i] != 'X') continue;
    std::size_t j = i + 1, v = 0;
    while (j < text.size() && text[j] >= '0' && text[j] <= '9' && j - i < 10)
      v = v * 10 + static_cast<std::size_t>(text[j++] - '0');
    best = std::max(best, v);
  }
  return best;
}

Json scheme_json(const IntegrationScheme& scheme) {
  if (const auto* g = std::get_if<GridScheme>(&scheme))
    return Json{{"kind", "grid"}, {"points_per_axis", g->points_per_axis}};
  const auto& mc = std::get<MonteCarloScheme>(scheme);
  return Json{{"kind", "monte_carlo"},
              {"samples", mc.samples},
              {"seed", mc.seed},
              {"confidence", mc.confidence}};
}

std::string scheme_text(const IntegrationScheme& scheme) {
  if (const auto* g = std::get_if<GridScheme>(&scheme))
    return "grid:" + std::to_string(g->points_per_axis);
  return "mc:" + std::to_string(std::get<MonteCarloScheme>(scheme).samples);
}

Json axis_json(const AxisEstimate& a) {
  Json j{{"axis", a.axis},
         {"estimate", a.estimate},
         {"error_halfwidth", a.error_halfwidth},
         {"degenerate_lines_hit", a.degenerate_lines_hit},
         {"lines_sampled", a.lines_sampled},
         {"max_line_count", a.max_line_count},
         {"exact_estimate", a.exact_estimate.get_str()}};
  if (a.grid_spacing) j["grid_spacing"] = a.grid_spacing->get_str();
  return j;
}

Json crofton_json(const CroftonResult& r) {
  Json axes = Json::array();
  for (const auto& a : r.per_axis) axes.push_back(axis_json(a));
  return Json{{"per_axis", std::move(axes)},
              {"total", r.total},
              {"total_error_halfwidth", r.total_error_halfwidth},
              {"exact_total", r.exact_total.get_str()}};
}

Json measure_json(const MeasureEstimate& m) {
  return Json{{"value", m.value},
              {"method", std::string(to_string(m.method))},
              {"resolution", m.resolution},
              {"cells_with_sign_change", m.cells_with_sign_change}};
}

struct Resolved {
  Command command;
  std::size_t dimension = 0;
  std::optional<Polynomial> polynomial;
  std::optional<Box> box;
  IntegrationScheme scheme;
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::size_t> resolution;
  std::vector<std::uint64_t> n_values;
};

Resolved resolve(const RunConfig& c) {
  Resolved r;
  r.command = c.command;
  r.seed = c.seed.value_or(kDefaultSeed);
  if (c.command == Command::Sharpness) {
    r.dimension = c.dimension == 0 ? 2 : c.dimension;
    if (r.dimension < 2) throw DomainError("sharpness needs --dim >= 2");
    r.n_values = c.n_values.empty() ? default_sharpness_n(r.dimension) : c.n_values;
  } else {
    if (c.polynomial.empty()) throw ParseError("missing --poly", 0);
    r.dimension = c.dimension == 0 ? infer_dimension(c.polynomial) : c.dimension;
    r.polynomial = parse_polynomial(c.polynomial, r.dimension);
    r.box = c.box.empty() ? Box::cube(r.dimension, 0, 1) : parse_box(c.box, r.dimension);
  }
  r.scheme = c.scheme ? parse_scheme(*c.scheme, r.seed, c.confidence)
                      : default_scheme(r.dimension, r.seed, c.confidence);
  validate(r.scheme);
  r.resolution = c.resolution ? c.resolution : default_resolution(r.dimension);
  return r;
}

// Everything that determines the numbers in the report. Worker count and
// output paths are deliberately absent: they never change a result.
Json config_json(const RunConfig& c, const Resolved& r) {
  Json j;
  j["command"] = std::string(to_string(r.command));
  j["dimension"] = r.dimension;
  if (r.polynomial) {
    j["polynomial"] = c.polynomial;
    j["canonical_polynomial"] = r.polynomial->to_string();
    j["box"] = r.box->to_string();
  } else {
    j["polynomial_family"] = "x1*...*xd - 1/n";
    j["box"] = Box::cube(r.dimension, 0, 1).to_string();
    j["n_values"] = r.n_values;
  }
  j["scheme"] = scheme_json(r.scheme);
  j["scheme_text"] = scheme_text(r.scheme);
  j["seed"] = r.seed;
  j["confidence"] = c.confidence;
  if (r.resolution) j["resolution"] = *r.resolution;
  else j["resolution"] = nullptr;
  j["format"] = c.format == OutputFormat::Json ? "json" : "csv";
  return j;
}

struct Results {
  std::optional<Rational> bound;
  std::optional<CroftonResult> crofton;
  std::optional<MeasureEstimate> measure;
  std::vector<ExperimentRow> rows;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << content;
  f.close();
  if (!f) throw IoError("failed writing '" + path + "'");
}

std::string render_json(const Json& config, const Results& res) {
  Json results = Json::object();
  if (!res.rows.empty()) {
    Json rows = Json::array();
    for (const auto& row : res.rows) {
      Json j{{"n", row.n},
             {"dimension", row.dimension},
             {"crofton_total", row.crofton_total},
             {"crofton_error_halfwidth", row.crofton_error_halfwidth}};
      if (row.direct_measure) j["direct_measure"] = *row.direct_measure;
      else j["direct_measure"] = nullptr;
      j["theorem_bound"] = row.theorem_bound.get_str();
      j["gap"] = row.gap;
      rows.push_back(std::move(j));
    }
    results["rows"] = std::move(rows);
  }
  if (res.bound) results["theorem_bound"] = res.bound->get_str();
  if (res.crofton) results["crofton"] = crofton_json(*res.crofton);
  if (res.measure) results["measure"] = measure_json(*res.measure);
  Json doc{{"config", config}, {"results", std::move(results)}};
  return doc.dump(2) + "\n";
}

std::string render_csv(const Json& config, const Results& res) {
  std::ostringstream os;
  os << "# config: " << config.dump() << "\n";
  if (!res.rows.empty()) {
    os << "n,dimension,crofton_total,crofton_error_halfwidth,direct_measure,theorem_bound,gap\n";
    for (const auto& row : res.rows) {
      os << row.n << ',' << row.dimension << ',' << format_real(row.crofton_total) << ','
         << format_real(row.crofton_error_halfwidth) << ','
         << (row.direct_measure ? format_real(*row.direct_measure) : "") << ','
         << row.theorem_bound.get_str() << ',' << format_real(row.gap) << "\n";
    }
    return os.str();
  }
  os << "result,axis,value,error_halfwidth,degenerate_lines_hit,lines_sampled,method,resolution\n";
  if (res.bound) os << "theorem_bound,," << res.bound->get_str() << ",,,,,\n";
  if (res.crofton) {
    for (const auto& a : res.crofton->per_axis)
      os << "crofton_axis," << a.axis << ',' << format_real(a.estimate) << ','
         << format_real(a.error_halfwidth) << ',' << a.degenerate_lines_hit << ','
         << a.lines_sampled << ",,\n";
    os << "crofton_total,," << format_real(res.crofton->total) << ','
       << format_real(res.crofton->total_error_halfwidth) << ",,,,\n";
  }
  if (res.measure)
    os << "measure,," << format_real(res.measure->value) << ",,,," << to_string(res.measure->method)
       << ',' << res.measure->resolution << "\n";
  return os.str();
}

void emit_error(std::ostream& err, int code, const char* kind, const std::string& message,
                std::optional<std::size_t> position = std::nullopt) {
  Json e{{"code", code}, {"kind", kind}, {"message", message}};
  if (position) e["position"] = *position;
  err << Json{{"error", std::move(e)}}.dump() << "\n";
}

}  // namespace

std::string format_real(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string_view to_string(Command c) {
  switch (c) {
    case Command::Bound: return "bound";
    case Command::Crofton: return "crofton";
    case Command::Measure: return "measure";
    case Command::Sharpness: return "sharpness";
    case Command::Report: return "report";
  }
  return "unknown";
}

Command parse_command(std::string_view text) {
  for (Command c : {Command::Bound, Command::Crofton, Command::Measure, Command::Sharpness,
                    Command::Report})
    if (text == to_string(c)) return c;
  throw ParseError("unknown command '" + std::string(text) + "'", 0);
}

OutputFormat parse_format(std::string_view text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  throw ParseError("format must be json or csv", 0);
}

IntegrationScheme parse_scheme(std::string_view text, std::uint64_t seed, double confidence) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("scheme must be grid:N or mc:SAMPLES", 0);
  const std::string_view kind = text.substr(0, colon);
  const std::uint64_t count = parse_u64(text.substr(colon + 1), colon + 1, "a positive integer");
  if (count == 0) throw ParseError("scheme size must be positive", colon + 1);
  if (kind == "grid") return GridScheme{static_cast<std::size_t>(count)};
  if (kind == "mc") return MonteCarloScheme{count, seed, confidence};
  throw ParseError("unknown scheme kind '" + std::string(kind) + "'", 0);
}

std::vector<std::uint64_t> parse_n_list(std::string_view text) {
  std::vector<std::uint64_t> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = text.find(',', start);
    const std::string_view piece =
        text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    const std::uint64_t v = parse_u64(piece, start, "a positive integer");
    if (v == 0) throw ParseError("n must be positive", start);
    out.push_back(v);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

IntegrationScheme default_scheme(std::size_t dimension, std::uint64_t seed, double confidence) {
  if (dimension <= 2) return GridScheme{256};
  if (dimension == 3) return GridScheme{64};
  return MonteCarloScheme{100000, seed, confidence};
}

std::optional<std::size_t> default_resolution(std::size_t dimension) {
  if (dimension <= 2) return 256;
  if (dimension == 3) return 64;
  return std::nullopt;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const Resolved r = resolve(config);
    const ExecutionConfig exec{config.workers};
    Results res;
    Mesh mesh;
    const bool want_mesh = !config.mesh_path.empty();

    switch (r.command) {
      case Command::Bound:
        res.bound = theorem_bound(*r.polynomial, *r.box);
        break;
      case Command::Crofton:
        res.crofton = crofton_upper_estimate(*r.polynomial, *r.box, r.scheme, exec);
        res.bound = res.crofton->theorem_bound;
        break;
      case Command::Measure:
        if (!r.resolution) throw DomainError("direct measure is available for dimensions 1 to 3 only");
        res.measure = direct_measure(*r.polynomial, *r.box, *r.resolution, exec,
                                     want_mesh ? &mesh : nullptr);
        break;
      case Command::Report:
        res.crofton = crofton_upper_estimate(*r.polynomial, *r.box, r.scheme, exec);
        res.bound = res.crofton->theorem_bound;
        if (r.resolution)
          res.measure = direct_measure(*r.polynomial, *r.box, *r.resolution, exec,
                                       want_mesh ? &mesh : nullptr);
        break;
      case Command::Sharpness:
        res.rows = sharpness_experiment(r.dimension, r.n_values, r.resolution.value_or(0), r.scheme,
                                        exec);
        break;
    }

    const Json cfg = config_json(config, r);
    const std::string text =
        config.format == OutputFormat::Json ? render_json(cfg, res) : render_csv(cfg, res);
    if (config.out_path.empty()) out << text;
    else write_file(config.out_path, text);

    if (want_mesh && mesh.dimension != 0) {
      std::ostringstream os;
      write_mesh_csv(mesh, os);
      write_file(config.mesh_path, os.str());
    }
    return kExitOk;
  } catch (const ParseError& e) {
    emit_error(err, kExitParseError, "parse_error", e.what(), e.position());
    return kExitParseError;
  } catch (const TrivialPolynomialError& e) {
    emit_error(err, kExitTrivialPolynomial, "trivial_polynomial", e.what());
    return kExitTrivialPolynomial;
  } catch (const IoError& e) {
    emit_error(err, kExitIoError, "io_error", e.what());
    return kExitIoError;
  } catch (const DomainError& e) {
    emit_error(err, kExitParseError, "invalid_argument", e.what());
    return kExitParseError;
  }
}

}  // namespace zeroset
