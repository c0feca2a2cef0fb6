#include "cli_app.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <Eigen/Geometry>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <ostream>
#include <set>
#include <stdexcept>

#include "tga/conformal.hpp"
#include "tga/congruence.hpp"
#include "tga/multivector.hpp"
#include "tga/sta.hpp"
#include "tga/twistor.hpp"
#include "tga/verify/suites.hpp"

namespace tga::cli {

namespace {

namespace cg = tga::congruence;
namespace cga = tga::conformal;
using ordered_json = nlohmann::ordered_json;

// Raised for failed numerical checks that abort a command (exit code 1).
struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::set<std::string>& known_kinds() {
  static const std::set<std::string> kinds = {"tangent", "circle", "dline", "ray"};
  return kinds;
}

std::array<double, 3> to_array(const cg::Vec3& v) { return {v[0], v[1], v[2]}; }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file " + path);
  f << text;
  if (!f) throw std::runtime_error("failed writing " + path);
}

std::string join_command(int argc, const char* const* argv) {
  std::string out = "twistor-ga";
  for (int i = 1; i < argc; ++i) {
    out += ' ';
    out += argv[i];
  }
  return out;
}

std::string join_numbers(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += format_double(values[i]);
  }
  return out;
}

// Options shared by the data-producing subcommands.
struct OutputOptions {
  std::string format = "csv";
  std::string out;
  std::uint64_t seed = 42;
  bool timing = false;
};

void add_output_options(CLI::App* app, OutputOptions& o) {
  app->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app->add_option("--out", o.out, "Output path (default: standard output)");
  app->add_option("--seed", o.seed, "Seed recorded in the manifest")->capture_default_str();
  app->add_flag("--timing", o.timing, "Include wall time in the manifest");
}

// Writes the records; CSV files get a sibling manifest, JSON embeds it.
void emit(const std::vector<GeometryRecord>& records, RunManifest& manifest,
          const OutputOptions& o, std::ostream& out) {
  if (o.format == "json") {
    const std::string text = records_to_json(records, manifest, o.timing);
    if (o.out.empty()) {
      out << text;
    } else {
      write_text(o.out, text);
    }
    return;
  }
  const std::string csv = records_to_csv(records);
  if (o.out.empty()) {
    out << csv;
  } else {
    write_text(o.out, csv);
    write_text(o.out + ".manifest.json", manifest_to_json(manifest, o.timing) + "\n");
  }
}

void summarize(const RunManifest& m, std::ostream& log, bool timing) {
  int failed = 0;
  for (const CheckOutcome& c : m.checks) {
    if (!c.passed) {
      ++failed;
      log << "FAIL " << c.name << ": " << format_double(c.measured) << " (bound "
          << format_double(c.tolerance) << ")\n";
    }
  }
  log << m.checks.size() - failed << "/" << m.checks.size() << " checks passed";
  if (timing) log << " in " << format_double(std::round(m.wall_time_s * 1000.0) / 1000.0) << " s";
  log << "\n";
}

// -- verify ------------------------------------------------------------------

struct VerifyOptions {
  std::string suite = "all";
  std::uint64_t seed = 42;
  std::string format = "text";
  std::string out;
  bool timing = false;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const auto suite = verify::parse_suite(o.suite);
  if (!suite) throw std::invalid_argument("unknown suite: " + o.suite);
  const verify::Report report = verify::run(*suite, o.seed);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const std::string json = verify::to_json(report);

  if (!o.out.empty()) write_text(o.out, json);
  if (o.format == "json" && o.out.empty()) {
    out << json;
  } else {
    for (const verify::Check& c : report.checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.suite << "." << c.name << "  "
          << format_double(c.measured) << (c.lower_bound ? " > " : " <= ")
          << format_double(c.tolerance) << "\n";
    }
    out << report.checks.size() - report.failures() << "/" << report.checks.size()
        << " checks passed (suite " << report.suite << ", seed " << report.seed << ")";
    if (o.timing) out << " in " << format_double(std::round(elapsed * 1000.0) / 1000.0) << " s";
    out << "\n";
  }
  return report.passed() ? kExitPass : kExitCheckFailure;
}

// -- congruence ----------------------------------------------------------------

struct CongruenceOptions {
  double s = 0.5;
  double tau = 0.0;
  std::vector<int> grid = {5, 5, 5};
  double extent = 1.0;
  std::vector<double> torus = {1.0, 1.0, 0.0};
  double phi = 0.0;
  int family = 8;
  int samples = 64;
  bool dlines = false;
  OutputOptions output;
};

int cmd_congruence(const CongruenceOptions& o, const std::string& command, std::ostream& out,
                   std::ostream& log) {
  const auto start = std::chrono::steady_clock::now();
  if (o.s == 0.0) {
    throw std::invalid_argument(
        "s = 0 describes a null twistor, which has no congruence; use `twistor-ga ray`");
  }
  cg::SceneConfig cfg;
  cfg.helicity = o.s;
  cfg.tau = o.tau;
  cfg.torus_x = o.torus[0];
  cfg.torus_y = o.torus[1];
  cfg.torus_z = o.torus[2];
  cfg.phi_initial = o.phi;
  cfg.family_count = o.family;
  cfg.samples_per_circle = o.samples;
  cfg.grid_x = o.grid[0];
  cfg.grid_y = o.grid[1];
  cfg.grid_z = o.grid[2];
  cfg.grid_extent = o.extent;
  cfg.validate();
  const cg::CircleOptions circle_options;

  RunManifest manifest;
  manifest.command = command;
  manifest.seed = o.output.seed;
  manifest.config = {{"s", format_double(o.s)},
                     {"tau", format_double(o.tau)},
                     {"grid", std::to_string(o.grid[0]) + "," + std::to_string(o.grid[1]) + "," +
                                  std::to_string(o.grid[2])},
                     {"extent", format_double(o.extent)},
                     {"torus", join_numbers(o.torus)},
                     {"phi", format_double(o.phi)},
                     {"family", std::to_string(o.family)},
                     {"samples", std::to_string(o.samples)},
                     {"dlines", o.dlines ? "true" : "false"},
                     {"format", o.output.format}};
  manifest.tolerances = {{"default", default_tolerance()},
                         {"circle_relative", circle_options.relative_tolerance},
                         {"integration_step", circle_options.step_tolerance},
                         {"dline_collinearity", 1e-6}};

  std::vector<GeometryRecord> records;

  // Tangent field on the grid.
  const std::vector<cg::Vec3> grid = cg::grid_points(cfg);
  const int largest = std::max({o.grid[0], o.grid[1], o.grid[2]});
  const double arrow = largest > 1 ? o.extent / (largest - 1) : 0.5 * o.extent;
  int skipped = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    cg::Vec3 v;
    try {
      v = cg::tangent_field(o.s, o.tau, grid[i]);
    } catch (const std::domain_error&) {
      ++skipped;
      continue;
    }
    GeometryRecord r;
    r.kind = "tangent";
    r.id = static_cast<int>(i);
    r.points = {to_array(grid[i]), to_array(grid[i] + arrow * v)};
    r.params = {0.0, 1.0};
    r.meta = {{"s", o.s}, {"tau", o.tau}, {"vx", v[0]}, {"vy", v[1]}, {"vz", v[2]},
              {"arrow", arrow}};
    records.push_back(std::move(r));
  }
  if (!grid.empty()) {
    manifest.checks.push_back({"tangent_points_defined", skipped == 0, double(skipped), 0.0});
  }

  // Circle family and d-lines.
  std::vector<cg::CongruenceCircle> family;
  try {
    family = cg::torus_family(cfg, circle_options);
  } catch (const std::runtime_error& ex) {
    throw CheckFailure(ex.what());
  }
  const auto seeds = cg::torus_seeds(cfg);
  std::vector<GeometryRecord> dline_records;
  for (std::size_t j = 0; j < family.size(); ++j) {
    const cg::CongruenceCircle& c = family[j];
    const double phi = o.phi + 2.0 * std::numbers::pi * j / o.family;
    GeometryRecord r;
    r.kind = "circle";
    r.id = static_cast<int>(j);
    for (int k = 0; k < o.samples; ++k) {
      const double theta = 2.0 * std::numbers::pi * k / o.samples;
      r.params.push_back(theta);
      r.points.push_back(to_array(c.point(theta)));
    }
    const cg::Vec3 nrm = c.normal();
    r.meta = {{"s", o.s},
              {"tau", o.tau},
              {"phi", phi},
              {"radius", c.radius},
              {"center_x", c.center[0]},
              {"center_y", c.center[1]},
              {"center_z", c.center[2]},
              {"normal_x", nrm[0]},
              {"normal_y", nrm[1]},
              {"normal_z", nrm[2]},
              {"seed_x", seeds[j][0]},
              {"seed_y", seeds[j][1]},
              {"seed_z", seeds[j][2]}};
    records.push_back(std::move(r));
    const double circ = std::max(c.diagnostics.max_radial_error, c.diagnostics.max_plane_error);
    manifest.checks.push_back({"circle_" + std::to_string(j) + "_circular",
                               circ <= circle_options.relative_tolerance, circ,
                               circle_options.relative_tolerance});

    if (o.dlines) {
      const cg::DLine d = cg::to_dlines(c, o.s, o.samples);
      GeometryRecord dr;
      dr.kind = "dline";
      dr.id = static_cast<int>(j);
      for (std::size_t k = 0; k < d.points.size(); ++k) {
        dr.points.push_back(to_array(d.points[k]));
        dr.params.push_back(d.indices[k]);
      }
      const double ratio = d.extent > 0.0 ? d.max_deviation / d.extent : 0.0;
      dr.meta = {{"s", o.s},
                 {"deviation_ratio", ratio},
                 {"max_angle", d.max_angle},
                 {"at_infinity", d.at_infinity},
                 {"direction_x", d.direction[0]},
                 {"direction_y", d.direction[1]},
                 {"direction_z", d.direction[2]}};
      manifest.checks.push_back(
          {"dline_" + std::to_string(j) + "_collinear", ratio <= 1e-6, ratio, 1e-6});
      if (!dr.points.empty()) dline_records.push_back(std::move(dr));
    }
  }
  if (family.size() > 1) {
    double separation = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (std::size_t j = i + 1; j < family.size(); ++j) {
        separation = std::min(separation, cg::min_sampled_distance(family[i], family[j], o.samples));
      }
    }
    manifest.checks.push_back({"family_separation", separation > 0.0, separation, 0.0});
  }
  if (!family.empty()) {
    const double twist = cg::field_twist(o.s, o.tau, family.front().seed);
    const double handed = o.s > 0 ? -twist : twist;
    manifest.checks.push_back({"handedness_matches_helicity", handed > 0.0, handed, 0.0});
  }
  records.insert(records.end(), dline_records.begin(), dline_records.end());

  manifest.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  emit(records, manifest, o.output, out);
  summarize(manifest, log, o.output.timing);
  return manifest.passed() ? kExitPass : kExitCheckFailure;
}

// -- ray ---------------------------------------------------------------------

struct RayOptions {
  std::string preset = "default";
  std::vector<double> omega;
  std::vector<double> pi;
  bool null_phase = false;
  std::vector<double> translate;
  bool invert = false;
  int samples = 9;
  double range = 2.0;
  OutputOptions output;
};

GeometryRecord ray_record(int id, const Multivector& point, const Multivector& direction,
                          const RayOptions& o) {
  GeometryRecord r;
  r.kind = "ray";
  r.id = id;
  const auto q = sta::vector_components(point);
  const auto p = sta::vector_components(direction);
  for (int k = 0; k < o.samples; ++k) {
    const double h = o.samples == 1 ? 0.0 : -o.range + 2.0 * o.range * k / (o.samples - 1);
    r.params.push_back(h);
    r.points.push_back({q[1] + h * p[1], q[2] + h * p[2], q[3] + h * p[3]});
  }
  r.meta = {{"point_t", q[0]}, {"point_x", q[1]}, {"point_y", q[2]}, {"point_z", q[3]},
            {"direction_t", p[0]}, {"direction_x", p[1]}, {"direction_y", p[2]},
            {"direction_z", p[3]}};
  return r;
}

int cmd_ray(const RayOptions& o, const std::string& command, std::ostream& out,
            std::ostream& log) {
  const auto start = std::chrono::steady_clock::now();
  if (o.samples < 1) throw std::invalid_argument("--samples must be positive");
  if (o.omega.empty() != o.pi.empty()) {
    throw std::invalid_argument("--omega and --pi must be given together");
  }

  twistor::Twistor t = [&] {
    if (!o.omega.empty()) {
      const auto omega = sta::PauliSpinor::from_coefficients(o.omega[0], o.omega[1], o.omega[2], o.omega[3]);
      const auto pi = sta::PauliSpinor::from_coefficients(o.pi[0], o.pi[1], o.pi[2], o.pi[3]);
      if (o.null_phase) return cg::null_twistor(omega, pi);
      return twistor::Twistor(sta::four_spinor(omega, pi), sta::vector(0, 0, 0, 0));
    }
    if (o.preset == "unit") {
      return cg::null_twistor(sta::PauliSpinor::from_coefficients(1, 0, 0, 0),
                              sta::PauliSpinor::from_coefficients(0, 0, -1, 0));
    }
    return cg::null_twistor(sta::PauliSpinor::from_coefficients(1.0, 0.3, -0.2, 0.5),
                            sta::PauliSpinor::from_coefficients(0.8, -0.1, 0.4, 0.2));
  }();

  const double s = twistor::helicity(t);
  if (std::abs(s) > 1e-8) {
    throw std::invalid_argument("spinor is not null: measured helicity " + format_double(s) +
                                " exceeds 1e-8 (try --null-phase)");
  }
  const cg::NullRay ray = cg::null_ray(t);

  RunManifest manifest;
  manifest.command = command;
  manifest.seed = o.output.seed;
  manifest.config = {{"preset", o.omega.empty() ? o.preset : "custom"},
                     {"omega", join_numbers(o.omega)},
                     {"pi", join_numbers(o.pi)},
                     {"null_phase", o.null_phase ? "true" : "false"},
                     {"translate", join_numbers(o.translate)},
                     {"invert", o.invert ? "true" : "false"},
                     {"samples", std::to_string(o.samples)},
                     {"range", format_double(o.range)},
                     {"format", o.output.format}};
  const double tol = default_tolerance();
  manifest.tolerances = {{"default", tol}, {"ray", 1e-9}, {"transform", 1e-9}};

  std::vector<GeometryRecord> records;
  GeometryRecord base = ray_record(0, ray.q, ray.p, o);
  double vanish = 0.0;
  for (double h : base.params) {
    vanish = std::max(vanish, twistor::primary_part(twistor::Twistor(t.psi(), ray.point(h)))
                                  .value()
                                  .max_abs());
  }
  const Multivector l_psi = cg::ray_observable(t.psi());
  const double doubled = max_abs_diff(cg::ray_line(ray).L, 2.0 * l_psi);
  base.meta["beta"] = ray.beta;
  base.meta["helicity"] = s;
  base.meta["primary_residual"] = vanish;
  base.meta["observable_residual"] = doubled;
  records.push_back(std::move(base));
  manifest.checks.push_back({"primary_part_vanishes", vanish <= 1e-9, vanish, 1e-9});
  manifest.checks.push_back({"line_is_twice_observable", doubled <= tol, doubled, tol});

  if (!o.translate.empty()) {
    const Multivector a = sta::vector(o.translate[0], o.translate[1], o.translate[2], o.translate[3]);
    const Multivector moved = 2.0 * cg::transform_observable(t.psi(), cg::Translate{a});
    const Multivector direction = cga::line_direction({moved});
    const double residual = max_abs_diff(moved, cga::line_through(ray.q + a, ray.p).L);
    GeometryRecord r = ray_record(1, ray.q + a, direction, o);
    r.meta["translate_residual"] = residual;
    records.push_back(std::move(r));
    manifest.checks.push_back({"translation_moves_point", residual <= 1e-9, residual, 1e-9});
  }
  if (o.invert) {
    const Multivector inv = 2.0 * cg::transform_observable(t.psi(), cg::Invert{});
    const Multivector P = cg::inverted_ray_point(ray);
    const Multivector direction = cga::line_direction({inv});
    const double residual = max_abs_diff(inv, cga::line_through(P, ray.flagpole).L);
    GeometryRecord r = ray_record(2, P, direction, o);
    r.meta["invert_residual"] = residual;
    records.push_back(std::move(r));
    manifest.checks.push_back({"inversion_swaps_roles", residual <= 1e-9, residual, 1e-9});
  }

  manifest.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  emit(records, manifest, o.output, out);
  log << "beta " << format_double(ray.beta) << ", observable residual "
      << format_double(doubled) << "\n";
  summarize(manifest, log, o.output.timing);
  return manifest.passed() ? kExitPass : kExitCheckFailure;
}

std::string trim(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = text.find_last_not_of(" \t\r");
  return text.substr(first, last - first + 1);
}

// Turns the key=value lines of a --config file into `--key=value` arguments
// placed right after the subcommand, so that flags given later win.
std::vector<std::string> expand_config(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty() || args.empty()) return args;

  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot read config file " + path);
  std::vector<std::string> extra;
  std::string line;
  while (std::getline(f, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("config: expected key=value: " + line);
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    const std::string key = trim(line.substr(0, eq));
    // A positional suite name on the command line beats the config entry.
    if (key == "suite" &&
        std::any_of(args.begin() + 1, args.end(), [](const std::string& a) {
          return verify::parse_suite(a).has_value();
        })) {
      continue;
    }
    extra.push_back("--" + key + "=" + value);
  }
  args.insert(args.begin() + 1, extra.begin(), extra.end());
  return args;
}

}  // namespace

// -- records -----------------------------------------------------------------

void GeometryRecord::validate() const {
  if (!known_kinds().count(kind)) throw std::invalid_argument("record: unknown kind " + kind);
  if (points.empty()) throw std::invalid_argument("record: no points");
  if (params.size() != points.size()) throw std::invalid_argument("record: params size mismatch");
  for (const auto& p : points) {
    for (double v : p) {
      if (!std::isfinite(v)) throw std::invalid_argument("record: non-finite coordinate");
    }
  }
  for (double v : params) {
    if (!std::isfinite(v)) throw std::invalid_argument("record: non-finite parameter");
  }
  for (const auto& [key, v] : meta) {
    if (!std::isfinite(v)) throw std::invalid_argument("record: non-finite meta " + key);
  }
}

bool RunManifest::passed() const {
  for (const CheckOutcome& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

std::string format_double(double value) {
  if (value == 0.0) return "0";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::string records_to_csv(const std::vector<GeometryRecord>& records) {
  std::string out = "kind,id,theta_or_index,x,y,z\n";
  for (const GeometryRecord& r : records) {
    r.validate();
    for (std::size_t i = 0; i < r.points.size(); ++i) {
      out += r.kind + ',' + std::to_string(r.id) + ',' + format_double(r.params[i]);
      for (double v : r.points[i]) out += ',' + format_double(v);
      out += '\n';
    }
  }
  return out;
}

namespace {

ordered_json manifest_json(const RunManifest& m, bool include_timing) {
  ordered_json checks = ordered_json::array();
  for (const CheckOutcome& c : m.checks) {
    checks.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"measured", c.measured},
                      {"bound", c.tolerance}});
  }
  ordered_json config = ordered_json::object();
  for (const auto& [k, v] : m.config) config[k] = v;
  ordered_json tolerances = ordered_json::object();
  for (const auto& [k, v] : m.tolerances) tolerances[k] = v;
  ordered_json j = {{"command", m.command}, {"config", config},     {"seed", m.seed},
                    {"tolerances", tolerances}, {"checks", checks}, {"passed", m.passed()}};
  if (include_timing) j["wall_time_s"] = m.wall_time_s;
  return j;
}

}  // namespace

std::string manifest_to_json(const RunManifest& manifest, bool include_timing) {
  return manifest_json(manifest, include_timing).dump(2);
}

std::string records_to_json(const std::vector<GeometryRecord>& records,
                            const RunManifest& manifest, bool include_timing) {
  ordered_json arr = ordered_json::array();
  for (const GeometryRecord& r : records) {
    r.validate();
    ordered_json meta = ordered_json::object();
    for (const auto& [k, v] : r.meta) meta[k] = v;
    arr.push_back({{"kind", r.kind},
                   {"id", r.id},
                   {"params", r.params},
                   {"points", r.points},
                   {"meta", meta}});
  }
  const ordered_json j = {{"manifest", manifest_json(manifest, include_timing)},
                          {"records", arr}};
  return j.dump(2) + "\n";
}

std::vector<GeometryRecord> records_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  std::vector<GeometryRecord> out;
  for (const auto& item : j.at("records")) {
    GeometryRecord r;
    r.kind = item.at("kind").get<std::string>();
    r.id = item.at("id").get<int>();
    r.params = item.at("params").get<std::vector<double>>();
    r.points = item.at("points").get<std::vector<std::array<double, 3>>>();
    r.meta = item.at("meta").get<std::map<std::string, double>>();
    r.validate();
    out.push_back(std::move(r));
  }
  return out;
}

// -- entry point -------------------------------------------------------------

// Fixed-length comma list; the last occurrence wins like every other option.
template <typename T>
void add_list_option(CLI::App* app, const std::string& name, std::vector<T>& target,
                     std::size_t n, const std::string& description) {
  app->add_option_function<std::string>(
         name,
         [&target, name, n](const std::string& text) {
           std::vector<T> values;
           std::size_t start = 0;
           while (start <= text.size()) {
             const std::size_t comma = std::min(text.find(',', start), text.size());
             T value{};
             const char* first = text.data() + start;
             const char* last = text.data() + comma;
             const auto [ptr, ec] = std::from_chars(first, last, value);
             if (ec != std::errc() || ptr != last) {
               throw CLI::ValidationError(name, "'" + text + "' is not a comma-separated number list");
             }
             values.push_back(value);
             start = comma + 1;
           }
           if (values.size() != n) {
             throw CLI::ValidationError(name, "expects " + std::to_string(n) + " values, got " +
                                                  std::to_string(values.size()));
           }
           target = std::move(values);
         },
         description)
      ->type_name("LIST");
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geometric algebra of twistors: verification suites and geometry output",
               "twistor-ga"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  std::string config_path;

  VerifyOptions vo;
  CLI::App* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("suite,--suite", vo.suite, "algebra | conformal | spinor-rep | twistor | geometry | all")
      ->check(CLI::IsMember({"algebra", "conformal", "spinor-rep", "twistor", "geometry", "all"}))
      ->capture_default_str();
  verify->add_option("--seed", vo.seed, "Seed for the random draws")->capture_default_str();
  verify->add_option("--format", vo.format, "Summary format on standard output")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  verify->add_option("--out", vo.out, "Write the JSON report to this path");
  verify->add_flag("--timing", vo.timing, "Print wall time in the summary");
  verify->add_option("--config", config_path, "key=value file mirroring the flags");

  CongruenceOptions co;
  CLI::App* congruence = app.add_subcommand("congruence", "Robinson congruence scene");
  congruence->add_option("--s", co.s, "Helicity (nonzero)")->capture_default_str();
  congruence->add_option("--tau", co.tau, "Hyperplane time")->capture_default_str();
  add_list_option(congruence, "--grid", co.grid, 3, "Tangent grid counts NX,NY,NZ [5,5,5] (0 disables)");
  congruence->add_option("--extent", co.extent, "Grid half-width")->capture_default_str();
  add_list_option(congruence, "--torus", co.torus, 3, "Family seed ellipse NX,NY,NZ [1,1,0]");
  congruence->add_option("--phi", co.phi, "Initial family angle")->capture_default_str();
  congruence->add_option("--family", co.family, "Circles in the torus family (0 disables)")
      ->capture_default_str();
  congruence->add_option("--samples", co.samples, "Samples per circle")->capture_default_str();
  congruence->add_flag("--dlines", co.dlines, "Add circles translated to the origin");
  add_output_options(congruence, co.output);
  congruence->add_option("--config", config_path, "key=value file mirroring the flags");

  RayOptions ro;
  CLI::App* ray = app.add_subcommand("ray", "Null ray of a null twistor");
  ray->add_option("--preset", ro.preset, "Built-in null twistor")
      ->check(CLI::IsMember({"default", "unit"}))
      ->capture_default_str();
  add_list_option(ray, "--omega", ro.omega, 4, "omega as a0,a1,a2,a3 (a0 + a_k I sigma_k)");
  add_list_option(ray, "--pi", ro.pi, 4, "pi as b0,b1,b2,b3");
  ray->add_flag("--null-phase", ro.null_phase, "Rotate the phase of omega to make the twistor null");
  add_list_option(ray, "--translate", ro.translate, 4, "Translate by a = t,x,y,z");
  ray->add_flag("--invert", ro.invert, "Add the inverted ray");
  ray->add_option("--samples", ro.samples, "Points per ray")->capture_default_str();
  ray->add_option("--range", ro.range, "Ray parameter range [-range, range]")
      ->capture_default_str();
  add_output_options(ray, ro.output);
  ray->add_option("--config", config_path, "key=value file mirroring the flags");

  try {
    std::vector<std::string> args = expand_config(argc, argv);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const std::string command = join_command(argc, argv);
  try {
    if (verify->parsed()) return cmd_verify(vo, out);
    std::ostream& log = (congruence->parsed() ? co.output.out : ro.output.out).empty() ? err : out;
    if (congruence->parsed()) return cmd_congruence(co, command, out, log);
    return cmd_ray(ro, command, out, log);
  } catch (const CheckFailure& e) {
    err << "check failure: " << e.what() << "\n";
    return kExitCheckFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "check failure: " << e.what() << "\n";
    return kExitCheckFailure;
  }
}

}  // namespace tga::cli
