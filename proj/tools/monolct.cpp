// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monolct Authors
//
// monolct: LCT / monogenic-signal command-line front end.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "monolct/analytic1d.hpp"
#include "monolct/edge.hpp"
#include "monolct/features.hpp"
#include "monolct/io.hpp"
#include "monolct/lct.hpp"
#include "monolct/monogenic.hpp"
#include "validate.hpp"

using json = nlohmann::json;
using namespace monolct;

namespace {

constexpr int kOk = 0;
constexpr int kValidationFailed = 2;
constexpr int kIoFailure = 3;
constexpr int kBadConfig = 4;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string params = "0,1,-1,0";
  double x0 = 1.0;
  std::string input;
  std::string output;
  std::string report;
  std::string method = "lca";
  double threshold = 0.3;
  double percentile = 99.0;
  double noise = 0.0;
  unsigned long long seed = 0;
  bool include_linear_term = false;
  double window = 0.0;
  std::string boundary;
  bool inverse = false;
  bool spectral = false;
  std::string truth;
  // compare / synth
  std::string synth;
  std::size_t size = 128;
  double low = 64.0;
  double high = 192.0;
  std::string a_grid;
  std::string b_grid;
  std::string noise_grid;
  std::string truth_out;
  std::string suite = "all";
  std::string points;
  std::string points_out;
};

double r12(double v) { return io::round12(v); }

json params_json(const LctParams& p) {
  return {{"a", r12(p.a())}, {"b", r12(p.b())}, {"c", r12(p.c())}, {"d", r12(p.d())}};
}

LctParams parse_params(const std::string& s) {
  try {
    return io::parse_params_list(s);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

std::vector<double> parse_list(const std::string& s, const char* what) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError(std::string("bad number in ") + what + ": " + item);
    }
  }
  if (out.empty()) throw ConfigError(std::string("empty list for ") + what);
  return out;
}

Boundary parse_boundary_opt(const std::string& s) {
  try {
    return parse_boundary(s);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

const char* boundary_name(Boundary b) { return to_string(b); }

std::string extension(const std::string& path) {
  auto ext = std::filesystem::path(path).extension().string();
  for (auto& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return ext;
}

Field2D load_field(const std::string& path) {
  if (path.empty()) throw ConfigError("an input image is required");
  const auto ext = extension(path);
  if (ext == ".pgm" || ext == ".pnm") return to_field(io::read_pgm(path));
  if (ext == ".bin") {
    auto payload = io::read_binary(path);
    if (auto* f = std::get_if<Field2D>(&payload)) return *f;
    throw io::IoError(path + " holds a 1D signal, expected a 2D field");
  }
  throw ConfigError("unsupported image format: " + path);
}

std::variant<SampledSignal1D, Field2D> load_any(const std::string& path) {
  if (path.empty()) throw ConfigError("an input file is required");
  const auto ext = extension(path);
  if (ext == ".csv") return io::read_signal_csv(path);
  if (ext == ".bin") {
    auto payload = io::read_binary(path);
    if (auto* s = std::get_if<SampledSignal1D>(&payload)) return *s;
    return std::get<Field2D>(payload);
  }
  return load_field(path);
}

void save_signal(const std::string& path, const SampledSignal1D& s) {
  if (extension(path) == ".csv") {
    io::write_signal_csv(path, s);
  } else {
    io::write_file(path, io::encode_binary(s));
  }
}

GroundTruth load_truth(const std::string& path) {
  const auto img = io::read_pgm(path);
  GroundTruth t{img.rows, img.cols, std::vector<std::uint8_t>(img.data.size(), 0), "file " + path};
  for (std::size_t k = 0; k < img.data.size(); ++k) t.edge[k] = img.data[k] > 0.5 ? 1 : 0;
  return t;
}

// Sampling check for the chirp e^{ia|x|^2/2b} across the larger image axis.
std::vector<std::string> chirp_warnings(const LctParams& p, std::size_t extent, double d) {
  std::vector<std::string> out;
  if (!(p.b() > 0.0) || p.a() == 0.0) return out;
  const double x_max = static_cast<double>(extent / 2) * d;
  const double step = chirp_phase_step(p, x_max, d);
  if (step > std::numbers::pi / 4.0) {
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "chirp undersampled: phase step %.4g rad per sample exceeds pi/4 (a=%g, b=%g, dx=%g)", step,
                  p.a(), p.b(), d);
    out.emplace_back(buf);
  }
  return out;
}

void emit(const json& report, const RunConfig& cfg) {
  for (const auto& w : report.value("warnings", json::array())) std::cerr << "warning: " << w.get<std::string>() << "\n";
  const std::string text = report.dump(2) + "\n";
  if (cfg.report.empty()) {
    std::cout << text;
  } else {
    io::write_file(cfg.report, text);
  }
}

json base_config(const std::string& command, const RunConfig& cfg, const LctParams* p) {
  json c;
  c["command"] = command;
  c["input"] = cfg.input;
  c["output"] = cfg.output;
  if (p) c["params"] = params_json(*p);
  return c;
}

EdgeOptions edge_options(const RunConfig& cfg) {
  if (!(cfg.threshold > 0.0 && cfg.threshold < 1.0)) throw ConfigError("threshold must be in (0, 1)");
  if (!(cfg.percentile > 0.0 && cfg.percentile <= 100.0)) throw ConfigError("percentile must be in (0, 100]");
  if (!(cfg.x0 > 0.0)) throw ConfigError("x0 must be > 0");
  EdgeOptions o;
  o.threshold = cfg.threshold;
  o.percentile = cfg.percentile;
  o.boundary = parse_boundary_opt(cfg.boundary.empty() ? "reflect" : cfg.boundary);
  return o;
}

EdgeMap run_method(const std::string& method, const Field2D& f, const LctParams& p, const RunConfig& cfg) {
  const auto o = edge_options(cfg);
  if (method == "lca") return lca_map(f, p, cfg.x0, o);
  if (method == "mdcpc") return mdcpc_map(f, p, cfg.x0, cfg.include_linear_term, o);
  throw ConfigError("method must be lca or mdcpc");
}

Field2D maybe_window(const Field2D& f, double fraction) {
  if (fraction < 0.0 || fraction >= 0.5) throw ConfigError("window fraction must be in [0, 0.5)");
  return fraction > 0.0 ? window_raised_cosine(f, fraction) : f;
}

int cmd_lct(const RunConfig& cfg) {
  const auto p = parse_params(cfg.params);
  json report;
  report["config"] = base_config("lct", cfg, &p);
  report["config"]["inverse"] = cfg.inverse;
  const auto input = load_any(cfg.input);
  json warnings = json::array();
  if (const auto* s = std::get_if<SampledSignal1D>(&input)) {
    const Lct1d plan(p, s->size(), s->dx, s->x_min);
    if (plan.sampling_warning()) warnings.push_back(*plan.sampling_warning());
    const auto out = cfg.inverse ? lct_inverse_1d(*s, p) : lct_forward_1d(*s, p);
    if (!cfg.output.empty()) save_signal(cfg.output, out);
    report["result"] = {{"kind", "signal1d"},     {"samples", out.size()},
                        {"x_min", r12(out.x_min)}, {"dx", r12(out.dx)},
                        {"energy_in", r12(s->energy())}, {"energy_out", r12(out.energy())}};
  } else {
    const auto& f = std::get<Field2D>(input);
    if (!(p.b() > 0.0)) throw ConfigError("2D transforms need b > 0");
    for (auto& w : chirp_warnings(p, std::max(f.rows, f.cols), std::max(f.dx, f.dy))) warnings.push_back(w);
    const auto out = lct_2d(f, p, cfg.inverse ? Direction::Inverse : Direction::Forward);
    if (!cfg.output.empty()) io::write_file(cfg.output, io::encode_binary(out));
    report["result"] = {{"kind", "field2d"},  {"rows", out.rows},   {"cols", out.cols},
                        {"dx", r12(out.dx)},  {"dy", r12(out.dy)},  {"energy_in", r12(f.energy())},
                        {"energy_out", r12(out.energy())}};
  }
  report["warnings"] = warnings;
  emit(report, cfg);
  return kOk;
}

int cmd_gas(const RunConfig& cfg) {
  const auto p = parse_params(cfg.params);
  p.require_positive_b();
  json report;
  report["config"] = base_config("gas", cfg, &p);
  report["config"]["spectral"] = cfg.spectral;
  report["config"]["window"] = r12(cfg.window);
  report["config"]["points"] = cfg.points;
  report["config"]["points_out"] = cfg.points_out;
  const auto input = load_any(cfg.input);
  const auto* s = std::get_if<SampledSignal1D>(&input);
  if (!s) throw ConfigError("gas takes a 1D signal (.csv or 1D .bin)");
  if (cfg.window < 0.0 || cfg.window >= 0.5) throw ConfigError("window fraction must be in [0, 0.5)");
  const auto f = cfg.window > 0.0 ? window_raised_cosine(*s, cfg.window) : *s;
  const auto z = cfg.spectral ? gas_spectral(f, p) : gas(f, p.a(), p.b());
  if (!cfg.output.empty()) save_signal(cfg.output, z.base);
  const auto Z = lct_forward_1d(z.base, p);
  double neg = 0.0, total = 0.0;
  for (std::size_t k = 0; k < Z.size(); ++k) {
    total += std::norm(Z.samples[k]);
    if (Z.coord(k) < 0.0) neg += std::norm(Z.samples[k]);
  }
  const Lct1d plan(p, f.size(), f.dx, f.x_min);
  json warnings = json::array();
  if (plan.sampling_warning()) warnings.push_back(*plan.sampling_warning());
  report["result"] = {{"samples", f.size()}, {"negative_frequency_fraction", r12(total > 0.0 ? neg / total : 0.0)}};
  if (!cfg.points.empty()) {
    const auto xy = io::parse_points_csv(io::read_file(cfg.points));
    std::vector<HalfPlanePoint> pts;
    for (const auto& [x, y] : xy) {
      if (!(y > 0.0)) throw ConfigError("extension points need y > 0");
      pts.emplace_back(x, y);
    }
    const auto values = gas_extend(f, p, pts);
    if (!cfg.points_out.empty()) {
      io::write_file(cfg.points_out, io::encode_extension_csv(xy, values));
    } else {
      json ext = json::array();
      for (std::size_t k = 0; k < xy.size(); ++k) {
        ext.push_back({r12(xy[k].first), r12(xy[k].second), r12(values[k].real()), r12(values[k].imag())});
      }
      report["result"]["extension"] = ext;
    }
  }
  report["warnings"] = warnings;
  emit(report, cfg);
  return kOk;
}

int cmd_monogenic(const RunConfig& cfg) {
  const auto p = parse_params(cfg.params);
  p.require_positive_b();
  const Boundary bd = parse_boundary_opt(cfg.boundary.empty() ? "periodic" : cfg.boundary);
  if (cfg.x0 < 0.0) throw ConfigError("x0 must be >= 0");
  if (cfg.output.empty()) throw ConfigError("monogenic needs --output PREFIX");
  const auto f = maybe_window(load_field(cfg.input), cfg.window);
  const auto m = cfg.x0 > 0.0 ? monogenic_extend(f, p, cfg.x0, bd) : monogenic_signal(f, p.a(), p.b(), bd);
  io::write_monogenic(cfg.output, m);
  io::write_pgm(cfg.output + "_modulus.pgm", io::modulus_image(m.f0, cfg.percentile));
  json report;
  report["config"] = base_config("monogenic", cfg, &p);
  report["config"]["x0"] = r12(cfg.x0);
  report["config"]["boundary"] = boundary_name(bd);
  report["config"]["window"] = r12(cfg.window);
  report["config"]["percentile"] = r12(cfg.percentile);
  report["result"] = {{"rows", m.rows()}, {"cols", m.cols()}};
  if (cfg.x0 > 0.0) report["result"]["dirac_residual"] = r12(monogenicity_residual(m, true));
  report["warnings"] = chirp_warnings(p, std::max(f.rows, f.cols), std::max(f.dx, f.dy));
  emit(report, cfg);
  return kOk;
}

int cmd_features(const RunConfig& cfg) {
  const auto p = parse_params(cfg.params);
  p.require_positive_b();
  const Boundary bd = parse_boundary_opt(cfg.boundary.empty() ? "periodic" : cfg.boundary);
  if (!(cfg.x0 > 0.0)) throw ConfigError("x0 must be > 0");
  if (cfg.output.empty()) throw ConfigError("features needs --output PREFIX");
  const auto f = maybe_window(load_field(cfg.input), cfg.window);
  const auto maps = compute_features(monogenic_extend(f, p, cfg.x0, bd));
  io::write_file(cfg.output + "_amplitude.bin", io::encode_binary(maps.amplitude));
  io::write_file(cfg.output + "_phase.bin", io::encode_binary(maps.phase));
  io::write_file(cfg.output + "_attenuation.bin", io::encode_binary(maps.attenuation));
  io::write_file(cfg.output + "_unit1.bin", io::encode_binary(maps.unit[0]));
  io::write_file(cfg.output + "_unit2.bin", io::encode_binary(maps.unit[1]));
  io::write_pgm(cfg.output + "_amplitude.pgm", io::modulus_image(maps.amplitude, cfg.percentile));
  json report;
  report["config"] = base_config("features", cfg, &p);
  report["config"]["x0"] = r12(cfg.x0);
  report["config"]["boundary"] = boundary_name(bd);
  report["config"]["window"] = r12(cfg.window);
  report["config"]["percentile"] = r12(cfg.percentile);
  report["result"] = {{"rows", f.rows}, {"cols", f.cols}, {"defined_pixels", maps.defined_count()}};
  report["warnings"] = chirp_warnings(p, std::max(f.rows, f.cols), std::max(f.dx, f.dy));
  emit(report, cfg);
  return kOk;
}

json edge_config(const RunConfig& cfg, const EdgeOptions& o) {
  return {{"x0", r12(cfg.x0)},
          {"threshold", r12(o.threshold)},
          {"percentile", r12(o.percentile)},
          {"boundary", boundary_name(o.boundary)},
          {"include_linear_term", cfg.include_linear_term},
          {"delta_ratio", r12(o.delta_ratio)},
          {"window", r12(cfg.window)}};
}

json edge_row(const EdgeMap& m, const LctParams& p, const std::optional<GroundTruth>& truth, double threshold) {
  json row = {{"method", to_string(m.method)}, {"params", params_json(p)}, {"a", r12(m.a)},
              {"b", r12(m.b)},                 {"x0", r12(m.x0)},         {"threshold", r12(threshold)},
              {"percentile", r12(m.percentile)}, {"scale", r12(m.scale)},
              {"argmax_column", argmax_column(m)}};
  const auto det = detect(m.strength, threshold);
  row["detected_pixels"] = static_cast<std::size_t>(std::count(det.begin(), det.end(), std::uint8_t{1}));
  if (truth) {
    row["fom"] = r12(pratt_fom(det, *truth));
    const double md = mean_boundary_distance(m, *truth, threshold);
    row["mean_distance"] = std::isfinite(md) ? json(r12(md)) : json(nullptr);
  }
  return row;
}

int cmd_edges(const RunConfig& cfg) {
  const auto p = parse_params(cfg.params);
  p.require_positive_b();
  const auto o = edge_options(cfg);
  const auto f = maybe_window(load_field(cfg.input), cfg.window);
  std::optional<GroundTruth> truth;
  if (!cfg.truth.empty()) truth = load_truth(cfg.truth);
  if (truth && (truth->rows != f.rows || truth->cols != f.cols)) throw ConfigError("truth image size differs from input");
  const auto m = run_method(cfg.method, f, p, cfg);
  if (!cfg.output.empty()) io::write_pgm(cfg.output, m.strength);
  json report;
  report["config"] = base_config("edges", cfg, &p);
  report["config"]["method"] = cfg.method;
  report["config"]["truth"] = cfg.truth;
  report["config"].update(edge_config(cfg, o));
  report["result"] = edge_row(m, p, truth, o.threshold);
  report["warnings"] = chirp_warnings(p, std::max(f.rows, f.cols), std::max(f.dx, f.dy));
  emit(report, cfg);
  return kOk;
}

SynthSpec synth_spec(const RunConfig& cfg, double noise) {
  SynthSpec s;
  try {
    s.kind = parse_synth_kind(cfg.synth);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (cfg.size < 32) throw ConfigError("synthetic images need size >= 32");
  if (noise < 0.0) throw ConfigError("noise sigma must be >= 0");
  s.size = cfg.size;
  s.low = cfg.low;
  s.high = cfg.high;
  s.noise_sigma = noise;
  s.seed = cfg.seed;
  return s;
}

json synth_config(const SynthSpec& s) {
  return {{"kind", to_string(s.kind)}, {"size", s.size}, {"low", r12(s.low)}, {"high", r12(s.high)},
          {"seed", s.seed}};
}

int cmd_synth(const RunConfig& cfg) {
  if (cfg.output.empty()) throw ConfigError("synth needs --output FILE.pgm");
  const auto s = synth_spec(cfg, cfg.noise);
  const auto img = synth_image(s);
  io::write_pgm(cfg.output, real_part(img.image));
  if (!cfg.truth_out.empty()) {
    RealImage t(img.truth.rows, img.truth.cols);
    for (std::size_t k = 0; k < t.data.size(); ++k) t.data[k] = img.truth.edge[k] ? 1.0 : 0.0;
    io::write_pgm(cfg.truth_out, t);
  }
  json report;
  report["config"] = base_config("synth", cfg, nullptr);
  report["config"]["synth"] = synth_config(s);
  report["config"]["noise"] = r12(cfg.noise);
  report["config"]["truth_out"] = cfg.truth_out;
  report["result"] = {{"edge_pixels", img.truth.count()}, {"description", img.truth.description}};
  emit(report, cfg);
  return kOk;
}

int cmd_compare(const RunConfig& cfg) {
  const auto user = parse_params(cfg.params);
  user.require_positive_b();
  const auto o = edge_options(cfg);
  std::vector<std::string> methods;
  if (cfg.method == "both") {
    methods = {"lca", "mdcpc"};
  } else if (cfg.method == "lca" || cfg.method == "mdcpc") {
    methods = {cfg.method};
  } else {
    throw ConfigError("method must be lca, mdcpc or both");
  }

  // rows: FT, user params, then the optional (a, b) grid with default completion
  std::vector<std::pair<std::string, LctParams>> sets = {{"ft", LctParams::fourier()}, {"lct", user}};
  if (!cfg.a_grid.empty() || !cfg.b_grid.empty()) {
    const auto as = parse_list(cfg.a_grid.empty() ? "0" : cfg.a_grid, "a-grid");
    const auto bs = parse_list(cfg.b_grid.empty() ? "1" : cfg.b_grid, "b-grid");
    for (double a : as) {
      for (double b : bs) {
        if (!(b > 0.0)) throw ConfigError("b-grid values must be > 0");
        sets.emplace_back("grid", LctParams::complete(a, b));
      }
    }
  }
  const std::vector<double> noises =
      cfg.noise_grid.empty() ? std::vector<double>{cfg.noise} : parse_list(cfg.noise_grid, "noise-grid");

  json report;
  report["config"] = base_config("compare", cfg, &user);
  report["config"]["method"] = cfg.method;
  report["config"]["a_grid"] = cfg.a_grid;
  report["config"]["b_grid"] = cfg.b_grid;
  report["config"]["noise_grid"] = cfg.noise_grid;
  report["config"]["noise"] = r12(cfg.noise);
  report["config"]["truth"] = cfg.truth;
  report["config"].update(edge_config(cfg, o));

  json rows = json::array();
  json warnings = json::array();
  for (double noise : noises) {
    Field2D f;
    std::optional<GroundTruth> truth;
    if (!cfg.synth.empty()) {
      const auto s = synth_spec(cfg, noise);
      auto img = synth_image(s);
      f = std::move(img.image);
      truth = std::move(img.truth);
      report["config"]["synth"] = synth_config(s);
    } else {
      if (noises.size() > 1) throw ConfigError("noise-grid needs --synth");
      f = load_field(cfg.input);
      if (!cfg.truth.empty()) truth = load_truth(cfg.truth);
    }
    f = maybe_window(f, cfg.window);
    if (truth && (truth->rows != f.rows || truth->cols != f.cols)) throw ConfigError("truth image size differs from input");
    for (const auto& [label, p] : sets) {
      for (auto& w : chirp_warnings(p, std::max(f.rows, f.cols), std::max(f.dx, f.dy))) {
        if (std::find(warnings.begin(), warnings.end(), w) == warnings.end()) warnings.push_back(w);
      }
      for (const auto& method : methods) {
        const auto m = run_method(method, f, p, cfg);
        json row = edge_row(m, p, truth, o.threshold);
        row["label"] = label;
        row["noise"] = r12(noise);
        rows.push_back(row);
        if (!cfg.output.empty()) {
          // ft_lca.pgm, lct_mdcpc.pgm, ...; grid rows and noise levels get suffixes
          std::string name = label + "_" + method;
          char buf[96];
          if (label == "grid") {
            std::snprintf(buf, sizeof buf, "_a%g_b%g", p.a(), p.b());
            name += buf;
          }
          if (noises.size() > 1) {
            std::snprintf(buf, sizeof buf, "_noise%g", noise);
            name += buf;
          }
          std::filesystem::create_directories(cfg.output);
          io::write_pgm((std::filesystem::path(cfg.output) / (name + ".pgm")).string(), m.strength);
        }
      }
    }
  }
  report["rows"] = rows;
  report["warnings"] = warnings;
  emit(report, cfg);
  return kOk;
}

int cmd_validate(const RunConfig& cfg) {
  const auto checks = [&] {
    try {
      return cli::run_suite(cfg.suite, static_cast<unsigned>(cfg.seed));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }();
  bool ok = true;
  json rows = json::array();
  for (const auto& c : checks) {
    ok = ok && c.pass;
    std::printf("%s %s.%s value=%.6g %s %.3g\n", c.pass ? "PASS" : "FAIL", c.suite.c_str(), c.name.c_str(), c.value,
                c.relation.c_str(), c.tolerance);
    rows.push_back({{"suite", c.suite}, {"name", c.name}, {"value", r12(c.value)}, {"tolerance", r12(c.tolerance)},
                    {"relation", c.relation}, {"pass", c.pass}});
  }
  std::fflush(stdout);
  if (!cfg.report.empty()) {
    json report;
    report["config"] = {{"command", "validate"}, {"suite", cfg.suite}, {"seed", cfg.seed}};
    report["checks"] = rows;
    report["pass"] = ok;
    io::write_file(cfg.report, report.dump(2) + "\n");
  }
  return ok ? kOk : kValidationFailed;
}

int fail(int code, const char* kind, const std::string& message) {
  json err = {{"error", kind}, {"message", message}, {"exit_code", code}};
  std::cerr << err.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monolct: linear canonical transforms, LCT monogenic signals and edge maps"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_params = [&](CLI::App* sc) {
    sc->add_option("--params,-p", cfg.params, "a,b[,c,d]; c,d default to (a-1)/b, 1")->capture_default_str();
  };
  auto add_io = [&](CLI::App* sc, const char* out_help) {
    sc->add_option("file", cfg.input, "input file (.pgm, .bin, .csv)");
    sc->add_option("--input,-i,--in", cfg.input, "input file (alternative to the positional)")->excludes(sc->get_option("file"));
    sc->add_option("--output,-o,--out", cfg.output, out_help);
    sc->add_option("--report", cfg.report, "write the JSON report here instead of stdout");
  };
  auto add_edge = [&](CLI::App* sc) {
    sc->add_option("--x0", cfg.x0, "scale x0 > 0")->capture_default_str();
    sc->add_option("--threshold", cfg.threshold, "detection threshold after normalization")->capture_default_str();
    sc->add_option("--percentile", cfg.percentile, "normalization percentile")->capture_default_str();
    sc->add_flag("--linear-term", cfg.include_linear_term, "keep the i(a/b)x term in MDCPC");
    sc->add_option("--boundary", cfg.boundary, "periodic|reflect|zero (default reflect)");
    sc->add_option("--window", cfg.window, "raised-cosine taper fraction, 0 = off")->capture_default_str();
    sc->add_option("--truth", cfg.truth, "ground-truth edge PGM (nonzero = edge)");
  };

  auto* lct = app.add_subcommand("lct", "1D or 2D linear canonical transform");
  add_params(lct);
  add_io(lct, "output (.bin, or .csv for 1D)");
  lct->add_flag("--inverse", cfg.inverse, "apply the inverse transform");

  auto* gas = app.add_subcommand("gas", "generalized analytic signal of a 1D signal");
  add_params(gas);
  add_io(gas, "output (.csv or .bin)");
  gas->add_flag("--spectral", cfg.spectral, "one-sided LCT spectrum route instead of the chirped Hilbert route");
  gas->add_option("--window", cfg.window, "raised-cosine taper fraction, 0 = off")->capture_default_str();
  gas->add_option("--points", cfg.points, "CSV of x,y points (y > 0) for the upper-half-plane extension");
  gas->add_option("--points-out", cfg.points_out, "CSV for the extension values (default: into the report)");

  auto* mono = app.add_subcommand("monogenic", "LCT monogenic signal (x0 = 0) or its extension (x0 > 0)");
  add_params(mono);
  add_io(mono, "output prefix");
  mono->add_option("--x0", cfg.x0, "scale x0 >= 0")->capture_default_str();
  mono->add_option("--boundary", cfg.boundary, "periodic|reflect|zero (default periodic)");
  mono->add_option("--window", cfg.window, "raised-cosine taper fraction, 0 = off")->capture_default_str();
  mono->add_option("--percentile", cfg.percentile, "visualization percentile")->capture_default_str();

  auto* feat = app.add_subcommand("features", "local amplitude, phase, attenuation and orientation");
  add_params(feat);
  add_io(feat, "output prefix");
  feat->add_option("--x0", cfg.x0, "scale x0 > 0")->capture_default_str();
  feat->add_option("--boundary", cfg.boundary, "periodic|reflect|zero (default periodic)");
  feat->add_option("--window", cfg.window, "raised-cosine taper fraction, 0 = off")->capture_default_str();
  feat->add_option("--percentile", cfg.percentile, "visualization percentile")->capture_default_str();

  auto* edges = app.add_subcommand("edges", "LCA or MDCPC edge map");
  add_params(edges);
  add_io(edges, "edge map PGM");
  add_edge(edges);
  edges->add_option("--method,-m", cfg.method, "lca|mdcpc")->capture_default_str();

  auto* cmp = app.add_subcommand("compare", "FT vs LCT edge maps with a FOM table");
  add_params(cmp);
  add_io(cmp, "directory for the paired maps");
  add_edge(cmp);
  cmp->add_option("--method,-m", cfg.method, "lca|mdcpc|both (default both)");
  cmp->add_option("--synth", cfg.synth, "step|disk|bars|ramp instead of an input image");
  cmp->add_option("--size", cfg.size, "synthetic image size")->capture_default_str();
  cmp->add_option("--noise", cfg.noise, "Gaussian noise sigma in gray levels")->capture_default_str();
  cmp->add_option("--noise-grid", cfg.noise_grid, "comma list of noise sigmas (synthetic only)");
  cmp->add_option("--seed", cfg.seed, "noise seed")->capture_default_str();
  cmp->add_option("--a-grid", cfg.a_grid, "comma list of a values");
  cmp->add_option("--b-grid", cfg.b_grid, "comma list of b values");

  auto* synth = app.add_subcommand("synth", "write a synthetic test image");
  synth->add_option("--kind,-k", cfg.synth, "step|disk|bars|ramp")->required();
  synth->add_option("--size", cfg.size, "image size")->capture_default_str();
  synth->add_option("--low", cfg.low, "background gray level")->capture_default_str();
  synth->add_option("--high", cfg.high, "foreground gray level")->capture_default_str();
  synth->add_option("--noise", cfg.noise, "Gaussian noise sigma in gray levels")->capture_default_str();
  synth->add_option("--seed", cfg.seed, "noise seed")->capture_default_str();
  synth->add_option("--output,-o", cfg.output, "image PGM");
  synth->add_option("--truth-out", cfg.truth_out, "ground-truth PGM");
  synth->add_option("--report", cfg.report, "write the JSON report here instead of stdout");

  auto* val = app.add_subcommand("validate", "run oracle suites");
  val->add_option("--suite,-s", cfg.suite, "all or one of the suite names")->capture_default_str();
  val->add_option("--seed", cfg.seed, "generator seed")->capture_default_str();
  val->add_option("--report", cfg.report, "write a JSON summary here");

  cmp->preparse_callback([&](std::size_t) { cfg.method = "both"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(kBadConfig, "config", e.what());
  }

  try {
    if (lct->parsed()) return cmd_lct(cfg);
    if (gas->parsed()) return cmd_gas(cfg);
    if (mono->parsed()) return cmd_monogenic(cfg);
    if (feat->parsed()) return cmd_features(cfg);
    if (edges->parsed()) return cmd_edges(cfg);
    if (cmp->parsed()) return cmd_compare(cfg);
    if (synth->parsed()) return cmd_synth(cfg);
    if (val->parsed()) return cmd_validate(cfg);
  } catch (const io::IoError& e) {
    return fail(kIoFailure, "io", e.what());
  } catch (const ConfigError& e) {
    return fail(kBadConfig, "config", e.what());
  } catch (const InvalidParams& e) {
    return fail(kBadConfig, "config", e.what());
  } catch (const std::invalid_argument& e) {
    return fail(kBadConfig, "config", e.what());
  } catch (const std::domain_error& e) {
    return fail(kBadConfig, "config", e.what());
  } catch (const std::exception& e) {
    return fail(1, "internal", e.what());
  }
  return kBadConfig;
}
