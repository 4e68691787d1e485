#include "scatlen/io.hpp"

#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <iterator>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace scatlen::io {

using nlohmann::json;

namespace {

void csv_preamble(std::ostream& os, const char* kind, const char* header) {
  os << "# scatlen " << kind << " v" << kSchemaVersion << '\n' << header << '\n';
}

json number_array(std::span<const double> xs) {
  json a = json::array();
  for (double x : xs) a.push_back(json_number(x));
  return a;
}

std::vector<double> numbers(const json& j) {
  std::vector<double> out;
  for (const auto& x : j) out.push_back(number_from_json(x));
  return out;
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", x);
}

double parse_double(const std::string& s) {
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  std::size_t pos = 0;
  const double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("not a number: '" + s + "'");
  return v;
}

json json_number(double x) {
  if (std::isfinite(x)) return x;
  return format_double(x);
}

double number_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return parse_double(j.get<std::string>());
  throw std::invalid_argument("expected a number, got " + j.dump());
}

json to_json(const ScatteringLength& a) {
  json j = {{"dim", to_int(a.dim)},
            {"a_s", json_number(a.value)},
            {"log_a_s", json_number(a.log_value)},
            {"err_estimate", json_number(a.err_estimate)},
            {"near_pole", a.near_pole},
            {"converged", a.converged}};
  if (!a.diagnostic.empty()) j["diagnostic"] = a.diagnostic;
  return j;
}

json to_json(const ResultRow& r) {
  json j = to_json(r.a);
  j["eta"] = json_number(r.eta);
  return j;
}

json to_json(const PoleSet& s) {
  json poles = json::array();
  for (const auto& p : s.poles) {
    poles.push_back({{"W", p.W},
                     {"bracket", {p.lo, p.hi}},
                     {"residual", json_number(p.residual)}});
  }
  return {{"schema", "scatlen.poles"},
          {"version", kSchemaVersion},
          {"dim", to_int(s.dim)},
          {"poles", poles},
          {"warnings", s.warnings}};
}

PoleSet pole_set_from_json(const json& j) {
  PoleSet s;
  s.dim = dimension_from_int(j.at("dim").get<int>());
  for (const auto& p : j.at("poles")) {
    PoleEntry e;
    e.W = p.at("W").get<double>();
    e.lo = p.at("bracket").at(0).get<double>();
    e.hi = p.at("bracket").at(1).get<double>();
    e.residual = number_from_json(p.at("residual"));
    s.poles.push_back(e);
  }
  if (j.contains("warnings")) s.warnings = j["warnings"].get<std::vector<std::string>>();
  return s;
}

json to_json(const ApproximantModel& m) {
  return {{"schema", "scatlen.model"},
          {"version", kSchemaVersion},
          {"dim", to_int(m.dim)},
          {"n", m.order},
          {"form", m.form() == ModelForm::rational_sum ? "rational_sum" : "exponential_sum"},
          {"W", number_array(m.W)},
          {"alpha", number_array(m.alpha)}};
}

ApproximantModel model_from_json(const json& j) {
  ApproximantModel m;
  m.dim = dimension_from_int(j.at("dim").get<int>());
  m.W = numbers(j.at("W"));
  m.alpha = numbers(j.at("alpha"));
  m.order = j.contains("n") ? j["n"].get<int>() : static_cast<int>(m.W.size());
  if (j.contains("form")) {
    const auto form = j["form"].get<std::string>();
    const bool expected_exp = m.dim == Dimension::two;
    if ((form == "exponential_sum") != expected_exp)
      throw std::invalid_argument("model form '" + form + "' does not match dim");
  }
  m.check();
  return m;
}

json to_json(const FitResult& f) {
  return {{"model", to_json(f.model)},
          {"rms_residual", json_number(f.rms_residual)},
          {"max_abs_residual", json_number(f.max_abs_residual)},
          {"rank", f.rank},
          {"iterations", f.iterations}};
}

json to_json(const ScanTable& t) {
  json cells = json::array();
  for (const auto& c : t.cells) {
    json cj = {{"axis_value", c.axis_value}, {"eta", c.eta}, {"rel_error", json_number(c.rel_error)}};
    if (c.failed) cj["error"] = c.error;
    cells.push_back(cj);
  }
  return {{"schema", "scatlen.scan"},
          {"version", kSchemaVersion},
          {"dim", to_int(t.dim)},
          {"axis", to_string(t.axis)},
          {"reference", {{"p", t.reference.p}, {"r_max", t.reference.r_max},
                         {"epsilon", t.reference.epsilon}}},
          {"cells", cells}};
}

json to_json(const SensitivityReport& r) {
  json rows = json::array();
  for (std::size_t i = 0; i < r.ndigit.size(); ++i) {
    rows.push_back({{"ndigit", r.ndigit[i]},
                    {"W1", r.truncated_W1[i]},
                    {"abs_error", number_array(r.errors[i])},
                    {"rel_error", number_array(r.rel_errors[i])}});
  }
  return {{"schema", "scatlen.sensitivity"},
          {"version", kSchemaVersion},
          {"reference_W1", r.reference_W1},
          {"noise_floor", r.noise_floor},
          {"eta", number_array(r.eta_grid)},
          {"reference_a_s", number_array(r.reference)},
          {"rows", rows}};
}

void write_rows_csv(std::ostream& os, std::span<const ResultRow> rows) {
  csv_preamble(os, "compute", "dim,eta,a_s,log_a_s,err_estimate,near_pole,converged");
  for (const auto& r : rows) {
    os << to_int(r.a.dim) << ',' << format_double(r.eta) << ',' << format_double(r.a.value) << ','
       << format_double(r.a.log_value) << ',' << format_double(r.a.err_estimate) << ','
       << (r.a.near_pole ? "true" : "false") << ',' << (r.a.converged ? "true" : "false") << '\n';
  }
}

void write_scan_csv(std::ostream& os, const ScanTable& t) {
  csv_preamble(os, "scan", "axis_value,eta,rel_error");
  for (const auto& c : t.cells) {
    os << format_double(c.axis_value) << ',' << format_double(c.eta) << ','
       << format_double(c.rel_error) << '\n';
  }
}

void write_sensitivity_csv(std::ostream& os, const SensitivityReport& r) {
  csv_preamble(os, "sensitivity", "ndigit,eta,abs_error");
  for (std::size_t i = 0; i < r.ndigit.size(); ++i) {
    for (std::size_t j = 0; j < r.eta_grid.size(); ++j) {
      os << r.ndigit[i] << ',' << format_double(r.eta_grid[j]) << ','
         << format_double(r.errors[i][j]) << '\n';
    }
  }
}

void write_oracle_csv(std::ostream& os, const json& comparison) {
  csv_preamble(os, "oracle", "dim,eta,method,a_s,rel_spread");
  for (const auto& m : comparison.at("methods")) {
    os << comparison.at("dim").get<int>() << ',' << format_double(number_from_json(comparison.at("eta")))
       << ',' << m.at("method").get<std::string>() << ','
       << format_double(number_from_json(m.at("a_s"))) << ','
       << format_double(number_from_json(comparison.at("rel_spread"))) << '\n';
  }
}

json read_json(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(file.string() + ": " + e.what());
  }
}

void write_text(const std::filesystem::path& file, const std::string& text) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  out << text;
  if (!out) throw std::runtime_error("write failed: " + file.string());
}

std::vector<TableFixture> load_tables(const std::filesystem::path& file) {
  const json j = read_json(file);
  std::vector<TableFixture> out;
  for (const auto& t : j.at("tables")) {
    TableFixture f;
    f.dim = dimension_from_int(t.at("dim").get<int>());
    f.W = numbers(t.at("W"));
    for (const auto& row : t.at("alpha")) f.alpha.push_back(numbers(row));
    if (j.contains("tolerances")) {
      f.W_rel_tol = j["tolerances"].value("W_rel", f.W_rel_tol);
      f.alpha1_rel_tol = j["tolerances"].value("alpha1_rel", f.alpha1_rel_tol);
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<GoldenValue> load_golden(const std::filesystem::path& file) {
  const json j = read_json(file);
  std::vector<GoldenValue> out;
  for (const auto& g : j.at("values")) {
    GoldenValue v;
    v.id = g.at("id").get<std::string>();
    v.dim = dimension_from_int(g.at("dim").get<int>());
    v.eta = number_from_json(g.at("eta"));
    v.quantity = g.at("quantity").get<std::string>();
    v.value = parse_double(g.at("value").get<std::string>());
    v.rel_tol = g.at("rel_tol").get<double>();
    v.method = g.at("method").get<std::string>();
    v.params = g.value("params", json::object());
    out.push_back(std::move(v));
  }
  return out;
}

const GoldenValue& find_golden(const std::vector<GoldenValue>& all, const std::string& id) {
  for (const auto& g : all) {
    if (g.id == id) return g;
  }
  throw std::out_of_range("no golden value with id '" + id + "'");
}

std::string fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return fmt::format("{:016x}", h);
}

std::string fnv1a_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  const std::string bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return fnv1a(bytes);
}

}  // namespace scatlen::io
