#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <fmt/format.h>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

#include "scatlen/scatlen.hpp"

#ifndef SCATLEN_DEFAULT_FIXTURE_DIR
#define SCATLEN_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace scatlen::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Output {
  std::string format = "";  // empty: command default
  std::string path;
  std::string manifest;
};

struct Solver {
  int p = 11;
  double r_max = 10.0;
  double epsilon = 1e-6;
  long max_steps = 2'000'000;

  SolverConfig config() const {
    SolverConfig c;
    c.p = p;
    c.r_max = r_max;
    c.epsilon = epsilon;
    c.max_steps = max_steps;
    return c;
  }
  json to_json() const {
    return {{"p", p}, {"r_max", r_max}, {"epsilon", epsilon}, {"max_steps", max_steps}};
  }
};

struct Result {
  std::string text;
  int code = kOk;
  json params = json::object();
};

void add_solver_flags(CLI::App* cmd, Solver& s) {
  cmd->add_option("--p", s.p, "accuracy exponent (tolerance 10^-p, capped at 13)")
      ->capture_default_str()
      ->check(CLI::Range(3, 30));
  cmd->add_option("--rmax", s.r_max, "integration cutoff")->capture_default_str();
  cmd->add_option("--eps", s.epsilon, "2D start offset")->capture_default_str();
  cmd->add_option("--max-steps", s.max_steps, "step budget per solve")->capture_default_str();
}

void add_output_flags(CLI::App* cmd, Output& o, const std::string& default_format) {
  cmd->add_option("--format", o.format, "csv or json (default " + default_format + ")")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("-o,--output", o.path, "write to file (a manifest is written next to it)");
  cmd->add_option("--manifest", o.manifest, "manifest path (default <output>.manifest.json)");
}

std::string resolved_format(const Output& o, const std::string& def) {
  return o.format.empty() ? def : o.format;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::vector<double> etas_from(const std::vector<double>& list, const std::string& range) {
  if (!list.empty() && !range.empty()) throw UsageError("give either --eta or --eta-range, not both");
  if (!range.empty()) return parse_eta_range(range);
  if (list.empty()) throw UsageError("one of --eta or --eta-range is required");
  return list;
}

// ---------------------------------------------------------------- compute

struct ComputeArgs {
  int dim = 3;
  std::vector<double> eta;
  std::string range;
  Solver solver;
  Output out;
};

Result cmd_compute(const ComputeArgs& a) {
  const auto etas = etas_from(a.eta, a.range);
  const Dimension dim = dimension_from_int(a.dim);
  const auto results = scattering_lengths(dim, etas, a.solver.config());
  std::vector<io::ResultRow> rows;
  Result r;
  for (std::size_t i = 0; i < etas.size(); ++i) {
    rows.push_back({etas[i], results[i]});
    if (!results[i].converged) r.code = kPartial;
  }
  if (resolved_format(a.out, "csv") == "csv") {
    std::ostringstream os;
    io::write_rows_csv(os, rows);
    r.text = os.str();
  } else {
    json j = {{"schema", "scatlen.compute"}, {"version", io::kSchemaVersion}, {"rows", json::array()}};
    for (const auto& row : rows) j["rows"].push_back(io::to_json(row));
    r.text = dump(j);
  }
  r.params = {{"dim", a.dim}, {"eta", etas}, {"solver", a.solver.to_json()}};
  return r;
}

// ---------------------------------------------------------------- poles

struct PolesArgs {
  int dim = 3;
  double max = 0.0;
  double tol = 1e-12;
  double step = 0.5;
  Solver solver{13, 12.0};
  Output out;
};

Result cmd_poles(const PolesArgs& a) {
  PoleScan scan;
  scan.step = a.step;
  scan.tol = a.tol;
  scan.solver = a.solver.config();
  const auto set = enumerate_poles(dimension_from_int(a.dim), a.max, scan);
  Result r;
  if (resolved_format(a.out, "json") == "json") {
    r.text = dump(io::to_json(set));
  } else {
    std::ostringstream os;
    os << "# scatlen poles v" << io::kSchemaVersion << "\ndim,W,lo,hi,residual\n";
    for (const auto& p : set.poles) {
      os << a.dim << ',' << io::format_double(p.W) << ',' << io::format_double(p.lo) << ','
         << io::format_double(p.hi) << ',' << io::format_double(p.residual) << '\n';
    }
    r.text = os.str();
  }
  r.params = {{"dim", a.dim}, {"max", a.max}, {"tol", a.tol}, {"step", a.step},
              {"solver", a.solver.to_json()}};
  return r;
}

// ---------------------------------------------------------------- fit

struct FitArgs {
  int dim = 3;
  int n = 1;
  int grid = 400;
  double exclusion = 0.05;
  std::string poles = "table";
  Solver solver;
  Output out;
};

std::vector<double> pole_positions(Dimension dim, const std::string& source) {
  if (source == "table") return builtin_model(dim, 4).W;
  const auto set = enumerate_poles(dim, 130.0);
  std::vector<double> W;
  for (const auto& p : set.poles) W.push_back(p.W);
  return W;
}

Result cmd_fit(const FitArgs& a) {
  const Dimension dim = dimension_from_int(a.dim);
  FitSpec spec = paper_fit_spec(dim);
  spec.grid = a.grid;
  spec.pole_exclusion = a.exclusion;
  const auto W = pole_positions(dim, a.poles);
  const auto etas = fit_grid(spec, W);
  const auto data = sample_numeric(dim, etas, a.solver.config());
  const auto fit = fit_model(dim, a.n, W, data);

  json j = io::to_json(fit);
  j["schema"] = "scatlen.fit";
  j["version"] = io::kSchemaVersion;
  j["max_rel_residual"] = io::json_number(max_rel_error(fit.model, data));
  j["samples"] = data.size();
  json intervals = json::array();
  for (const auto& [lo, hi] : spec.intervals) intervals.push_back({lo, hi});
  j["spec"] = {{"intervals", intervals}, {"grid", spec.grid}, {"pole_exclusion", spec.pole_exclusion}};
  if (a.n >= 1) {
    const auto published = builtin_model(dim, a.n);
    j["published_alpha"] = published.alpha;
    j["alpha1_rel_deviation"] = fit.model.alpha[0] / published.alpha[0] - 1.0;
  }
  Result r;
  r.text = dump(j);
  r.params = {{"dim", a.dim}, {"n", a.n}, {"grid", a.grid}, {"exclusion", a.exclusion},
              {"poles", a.poles}, {"solver", a.solver.to_json()}};
  return r;
}

// ---------------------------------------------------------------- tables

struct TablesArgs {
  std::string fixture;
  Output out;
};

Result cmd_tables(const TablesArgs& a) {
  const fs::path file = a.fixture.empty() ? fixture_dir() / "tables_v1.json" : fs::path(a.fixture);
  if (!fs::is_regular_file(file)) throw UsageError("fixture not found: " + file.string());
  const auto tables = io::load_tables(file);
  Result r;
  json report = {{"schema", "scatlen.tables_report"}, {"version", io::kSchemaVersion},
                 {"fixture", file.filename().string()}, {"dimensions", json::array()}};
  for (const auto& t : tables) {
    const double eta_max = t.W.back() * 1.02;
    const auto set = enumerate_poles(t.dim, eta_max);
    json poles = json::array();
    for (std::size_t i = 0; i < t.W.size(); ++i) {
      const double W = i < set.poles.size() ? set.poles[i].W : std::nan("");
      const double rel = std::abs(W / t.W[i] - 1.0);
      const bool ok = rel <= t.W_rel_tol;
      if (!ok) r.code = kPartial;
      poles.push_back({{"published", t.W[i]}, {"computed", io::json_number(W)},
                       {"rel_deviation", io::json_number(rel)}, {"ok", ok}});
    }
    FitSpec spec = paper_fit_spec(t.dim);
    const auto data = sample_numeric(t.dim, fit_grid(spec, t.W));
    json fits = json::array();
    for (std::size_t n = 1; n <= t.alpha.size(); ++n) {
      const auto fit = fit_model(t.dim, static_cast<int>(n), t.W, data);
      const double rel = std::abs(fit.model.alpha[0] / t.alpha[n - 1][0] - 1.0);
      const bool ok = rel <= t.alpha1_rel_tol;
      if (!ok) r.code = kPartial;
      fits.push_back({{"n", n}, {"alpha", fit.model.alpha}, {"published_alpha", t.alpha[n - 1]},
                      {"alpha1_rel_deviation", rel}, {"ok", ok}});
    }
    report["dimensions"].push_back({{"dim", to_int(t.dim)}, {"poles", poles}, {"fits", fits}});
  }
  report["all_ok"] = r.code == kOk;
  r.text = dump(report);
  r.params = {{"fixture", file.string()}};
  return r;
}

// ---------------------------------------------------------------- converge

struct ConvergeArgs {
  int dim = 2;
  std::string axis = "p";
  std::vector<double> eta;
  std::vector<double> grid;
  Solver reference;
  Output out;
};

std::vector<double> default_scan_etas(Dimension dim) {
  switch (dim) {
    case Dimension::two: return {0.002, 1.0, 5.0, 11.0};
    case Dimension::three: return {1.0, 5.0, 10.0, 14.0};
    case Dimension::one: return {1.0, 4.0, 7.0};
  }
  return {};
}

Result cmd_converge(const ConvergeArgs& a) {
  const Dimension dim = dimension_from_int(a.dim);
  const ScanAxis axis = scan_axis_from_string(a.axis);
  const auto etas = a.eta.empty() ? default_scan_etas(dim) : a.eta;
  const auto grid = a.grid.empty() ? default_scan_grid(axis) : a.grid;
  const auto t = convergence_scan(dim, etas, axis, grid, a.reference.config());
  Result r;
  for (const auto& c : t.cells) {
    if (c.failed) r.code = kPartial;
  }
  if (resolved_format(a.out, "csv") == "csv") {
    std::ostringstream os;
    io::write_scan_csv(os, t);
    r.text = os.str();
  } else {
    r.text = dump(io::to_json(t));
  }
  r.params = {{"dim", a.dim}, {"axis", to_string(axis)}, {"eta", etas}, {"grid", grid},
              {"reference", a.reference.to_json()}};
  return r;
}

// ---------------------------------------------------------------- sensitivity

struct SensitivityArgs {
  std::vector<int> ndigit = {3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13};
  std::vector<double> eta;
  int n = 4;
  double W1 = kReferenceW1;
  Output out;
};

Result cmd_sensitivity(const SensitivityArgs& a) {
  const auto etas = a.eta.empty() ? default_sensitivity_grid(a.W1) : a.eta;
  const auto ref = sensitivity_reference(etas);
  const auto rep = pole_sensitivity(builtin_model(Dimension::three, a.n), a.ndigit, etas, ref, a.W1);
  Result r;
  if (resolved_format(a.out, "csv") == "csv") {
    std::ostringstream os;
    io::write_sensitivity_csv(os, rep);
    r.text = os.str();
  } else {
    r.text = dump(io::to_json(rep));
  }
  r.params = {{"ndigit", a.ndigit}, {"eta", etas}, {"n", a.n}, {"W1", a.W1}};
  return r;
}

// ---------------------------------------------------------------- oracle

struct OracleArgs {
  int dim = 1;
  std::vector<double> eta;
  int nodes = 2000;
  int levels = 3;
  int K = 60;
  double tol = 1e-8;
  Solver solver;
  Output out;
};

json compare(Dimension dim, double eta, const OracleArgs& a, bool& flagged) {
  std::vector<std::pair<std::string, ScatteringLength>> m;
  m.emplace_back("ode", scattering_length(dim, eta, a.solver.config()));
  LSGrid grid;
  grid.nodes = a.nodes;
  grid.levels = a.levels;
  m.emplace_back("volterra", ls_solve(dim, eta, grid).a);
  if (dim == Dimension::one && eta != 0.0) m.emplace_back("series", series_a1d(eta, a.K));

  double spread = 0.0;
  json methods = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t k = i + 1; k < m.size(); ++k)
      spread = std::max(spread, relative_error(m[k].second, m[i].second));
    json mj = io::to_json(m[i].second);
    mj["method"] = m[i].first;
    methods.push_back(mj);
    flagged = flagged || !m[i].second.converged || m[i].second.near_pole;
  }
  if (!(spread <= a.tol)) flagged = true;
  return {{"dim", to_int(dim)}, {"eta", eta}, {"rel_spread", io::json_number(spread)},
          {"tolerance", a.tol}, {"methods", methods}};
}

Result cmd_oracle(const OracleArgs& a) {
  const Dimension dim = dimension_from_int(a.dim);
  const auto etas = a.eta.empty() ? std::vector<double>{-5, -2, -0.5, 0.5, 1, 3, 5, 7} : a.eta;
  bool flagged = false;
  json rows = json::array();
  for (double eta : etas) rows.push_back(compare(dim, eta, a, flagged));
  Result r;
  r.code = flagged ? kPartial : kOk;
  if (resolved_format(a.out, "csv") == "csv") {
    std::ostringstream os;
    bool first = true;
    for (const auto& row : rows) {
      std::ostringstream one;
      io::write_oracle_csv(one, row);
      std::string s = one.str();
      if (!first) s = s.substr(s.find('\n', s.find('\n') + 1) + 1);  // drop repeated preamble
      os << s;
      first = false;
    }
    r.text = os.str();
  } else {
    r.text = dump({{"schema", "scatlen.oracle"}, {"version", io::kSchemaVersion}, {"rows", rows}});
  }
  r.params = {{"dim", a.dim}, {"eta", etas}, {"nodes", a.nodes}, {"levels", a.levels},
              {"K", a.K}, {"tol", a.tol}, {"solver", a.solver.to_json()}};
  return r;
}

// ---------------------------------------------------------------- manifest

json fixture_hashes() {
  json h = json::object();
  const fs::path dir = fixture_dir();
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) return h;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) h[f.filename().string()] = io::fnv1a_file(f);
  return h;
}

json make_manifest(const std::string& command, const std::vector<std::string>& args,
                   const Result& r, const Output& o, double seconds) {
  return {{"schema", "scatlen.manifest"},
          {"version", io::kSchemaVersion},
          {"command", command},
          {"argv", args},
          {"params", r.params},
          {"library_version", kVersion},
          {"fixtures", fixture_hashes()},
          {"output", {{"path", o.path}, {"fnv1a", io::fnv1a(r.text)}, {"bytes", r.text.size()}}},
          {"exit_code", r.code},
          {"duration_s", seconds}};
}

int emit(const std::string& command, const std::vector<std::string>& args, const Result& r,
         const Output& o, double seconds, std::ostream& out) {
  if (o.path.empty()) {
    out << r.text;
  } else {
    io::write_text(o.path, r.text);
  }
  std::string manifest_path = o.manifest;
  if (manifest_path.empty() && !o.path.empty()) manifest_path = o.path + ".manifest.json";
  if (!manifest_path.empty())
    io::write_text(manifest_path, dump(make_manifest(command, args, r, o, seconds)));
  return r.code;
}

// ---------------------------------------------------------------- replay

struct ReplayArgs {
  std::string manifest;
  std::string output;
};

}  // namespace

fs::path fixture_dir() {
  if (const char* env = std::getenv(kFixtureEnv); env != nullptr && *env != '\0') return env;
  return SCATLEN_DEFAULT_FIXTURE_DIR;
}

std::vector<double> parse_eta_range(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() != 3) throw UsageError("eta range must be start:stop:step, got '" + spec + "'");
  double v[3];
  for (int i = 0; i < 3; ++i) {
    try {
      v[i] = io::parse_double(parts[i]);
    } catch (const std::exception&) {
      throw UsageError("eta range: '" + parts[i] + "' is not a number");
    }
    if (!std::isfinite(v[i])) throw UsageError("eta range values must be finite");
  }
  const auto [start, stop, step] = v;
  if (step == 0.0 || (stop - start) * step < 0.0)
    throw UsageError("eta range step must be nonzero and point from start to stop");
  const long n = std::lround(std::floor((stop - start) / step + 0.5));
  if (n > 10'000'000) throw UsageError("eta range has too many points");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) out.push_back(start + static_cast<double>(k) * step);
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero-energy s-wave scattering lengths of the Gaussian well in 1, 2 and 3 dimensions",
               "scatlen"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* c_compute = app.add_subcommand("compute", "scattering length for one or more couplings");
  c_compute->add_option("--dim", compute.dim, "dimension")->required()->check(CLI::Range(1, 3));
  c_compute->add_option("--eta", compute.eta, "coupling(s)");
  c_compute->add_option("--eta-range", compute.range, "start:stop:step");
  add_solver_flags(c_compute, compute.solver);
  add_output_flags(c_compute, compute.out, "csv");

  PolesArgs poles;
  auto* c_poles = app.add_subcommand("poles", "bound-state thresholds below --max");
  c_poles->add_option("--dim", poles.dim, "dimension")->required()->check(CLI::Range(1, 3));
  c_poles->add_option("--max", poles.max, "largest coupling scanned")->required();
  c_poles->add_option("--tol", poles.tol, "bracket width")->capture_default_str();
  c_poles->add_option("--step", poles.step, "coarse scan step")->capture_default_str();
  add_solver_flags(c_poles, poles.solver);
  add_output_flags(c_poles, poles.out, "json");

  FitArgs fit;
  auto* c_fit = app.add_subcommand("fit", "fit pole weights to numeric scattering lengths");
  c_fit->add_option("--dim", fit.dim, "dimension")->required()->check(CLI::Range(1, 3));
  c_fit->add_option("--n", fit.n, "number of poles")->required()->check(CLI::Range(0, 4));
  c_fit->add_option("--grid", fit.grid, "points per interval")->capture_default_str();
  c_fit->add_option("--exclusion", fit.exclusion, "half-width removed around each pole")
      ->capture_default_str();
  c_fit->add_option("--poles", fit.poles, "pole positions: table or computed")
      ->capture_default_str()
      ->check(CLI::IsMember({"table", "computed"}));
  add_solver_flags(c_fit, fit.solver);
  add_output_flags(c_fit, fit.out, "json");

  TablesArgs tables;
  auto* c_tables = app.add_subcommand("tables", "regenerate the published tables and diff them");
  c_tables->add_option("--fixture", tables.fixture, "tables fixture (default <fixtures>/tables_v1.json)");
  add_output_flags(c_tables, tables.out, "json");

  ConvergeArgs conv;
  auto* c_conv = app.add_subcommand("converge", "relative error against a reference run");
  c_conv->add_option("--dim", conv.dim, "dimension")->required()->check(CLI::Range(1, 3));
  c_conv->add_option("--axis", conv.axis, "p, r_max or epsilon")->capture_default_str();
  c_conv->add_option("--eta", conv.eta, "couplings (default per dimension)");
  c_conv->add_option("--grid", conv.grid, "axis values (default per axis)");
  add_solver_flags(c_conv, conv.reference);
  add_output_flags(c_conv, conv.out, "csv");

  SensitivityArgs sens;
  auto* c_sens = app.add_subcommand("sensitivity", "3D model error with W_1 truncated to ndigit digits");
  c_sens->add_option("--ndigit", sens.ndigit, "significant digits kept")->capture_default_str();
  c_sens->add_option("--eta", sens.eta, "couplings (default: log-spaced around W_1)");
  c_sens->add_option("--n", sens.n, "model order")->capture_default_str()->check(CLI::Range(1, 4));
  c_sens->add_option("--w1", sens.W1, "reference W_1")->capture_default_str();
  add_output_flags(c_sens, sens.out, "csv");

  OracleArgs orc;
  auto* c_orc = app.add_subcommand("oracle", "ODE vs integral equation (vs series in 1D)");
  c_orc->add_option("--dim", orc.dim, "dimension")->required()->check(CLI::Range(1, 3));
  c_orc->add_option("--eta", orc.eta, "couplings (default: the cross-check set)");
  c_orc->add_option("--nodes", orc.nodes, "integral-equation nodes")->capture_default_str();
  c_orc->add_option("--levels", orc.levels, "grid doublings")->capture_default_str();
  c_orc->add_option("--K", orc.K, "series order")->capture_default_str();
  c_orc->add_option("--tol", orc.tol, "allowed relative spread")->capture_default_str();
  add_solver_flags(c_orc, orc.solver);
  add_output_flags(c_orc, orc.out, "csv");

  ReplayArgs replay;
  auto* c_replay = app.add_subcommand("replay", "re-run a manifest and check the output hash");
  c_replay->add_option("--manifest", replay.manifest, "manifest file")->required();
  c_replay->add_option("-o,--output", replay.output, "write the output here instead");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.back()->help());
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "scatlen: " << e.what() << '\n';
    if (e.get_exit_code() != 0) err << "Run with --help for usage.\n";
    return kUsage;
  }

  auto* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  try {
    if (name == "replay") {
      const json m = io::read_json(replay.manifest);
      if (m.value("schema", "") != "scatlen.manifest") throw UsageError("not a scatlen manifest");
      auto argv = m.at("argv").get<std::vector<std::string>>();
      if (!replay.output.empty()) {
        for (std::size_t i = 0; i + 1 < argv.size(); ++i) {
          if (argv[i] == "-o" || argv[i] == "--output" || argv[i] == "--manifest") argv[i + 1].clear();
        }
        argv.erase(std::remove_if(argv.begin(), argv.end(), [](const std::string& s) { return s.empty(); }),
                   argv.end());
        argv.erase(std::remove_if(argv.begin(), argv.end(),
                                  [](const std::string& s) {
                                    return s == "-o" || s == "--output" || s == "--manifest";
                                  }),
                   argv.end());
        argv.push_back("--output");
        argv.push_back(replay.output);
      }
      std::ostringstream captured;
      const int code = run(argv, captured, err);
      std::string out_path = replay.output;
      if (out_path.empty()) out_path = m.at("output").value("path", "");
      std::string produced = captured.str();
      if (!out_path.empty()) {
        std::ifstream in(out_path, std::ios::binary);
        produced.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
      }
      const std::string want = m.at("output").at("fnv1a").get<std::string>();
      const std::string got = io::fnv1a(produced);
      const bool same = want == got;
      json report = {{"manifest", replay.manifest}, {"exit_code", code},
                     {"expected_fnv1a", want}, {"fnv1a", got}, {"reproduced", same}};
      if (m.contains("fixtures") && m["fixtures"] != fixture_hashes()) {
        report["warning"] = "fixture hashes differ from the manifest";
      }
      err << report.dump() << '\n';
      if (out_path.empty()) out << produced;
      return same ? code : kPartial;
    }

    Result r;
    Output o;
    if (name == "compute") {
      r = cmd_compute(compute);
      o = compute.out;
    } else if (name == "poles") {
      r = cmd_poles(poles);
      o = poles.out;
    } else if (name == "fit") {
      r = cmd_fit(fit);
      o = fit.out;
    } else if (name == "tables") {
      r = cmd_tables(tables);
      o = tables.out;
    } else if (name == "converge") {
      r = cmd_converge(conv);
      o = conv.out;
    } else if (name == "sensitivity") {
      r = cmd_sensitivity(sens);
      o = sens.out;
    } else if (name == "oracle") {
      r = cmd_oracle(orc);
      o = orc.out;
    }
    return emit(name, args, r, o, elapsed(), out);
  } catch (const UsageError& e) {
    err << "scatlen " << name << ": " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "scatlen " << name << ": " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "scatlen " << name << ": internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace scatlen::cli
