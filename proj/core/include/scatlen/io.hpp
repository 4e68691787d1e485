#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <nlohmann/json.hpp>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scatlen/approximants.hpp"
#include "scatlen/extraction.hpp"
#include "scatlen/poles.hpp"
#include "scatlen/scan.hpp"
#include "scatlen/sensitivity.hpp"

namespace scatlen::io {

/// Version of every CSV schema and JSON document written here.
inline constexpr int kSchemaVersion = 1;

/// 17 significant digits; non-finite values as nan, inf, -inf.
std::string format_double(double x);
double parse_double(const std::string& s);

/// Finite doubles as numbers, non-finite ones as the strings "nan", "inf", "-inf".
nlohmann::json json_number(double x);
double number_from_json(const nlohmann::json& j);

struct ResultRow {
  double eta = 0.0;
  ScatteringLength a;
};

nlohmann::json to_json(const ScatteringLength& a);
nlohmann::json to_json(const ResultRow& r);
nlohmann::json to_json(const PoleSet& s);
nlohmann::json to_json(const ApproximantModel& m);
nlohmann::json to_json(const FitResult& f);
nlohmann::json to_json(const ScanTable& t);
nlohmann::json to_json(const SensitivityReport& r);

PoleSet pole_set_from_json(const nlohmann::json& j);
ApproximantModel model_from_json(const nlohmann::json& j);

/// CSV writers. The first line is "# scatlen <kind> v<version>", the second the header.
void write_rows_csv(std::ostream& os, std::span<const ResultRow> rows);
void write_scan_csv(std::ostream& os, const ScanTable& t);
void write_sensitivity_csv(std::ostream& os, const SensitivityReport& r);
void write_oracle_csv(std::ostream& os, const nlohmann::json& comparison);

/// Published parameters for one dimension.
struct TableFixture {
  Dimension dim = Dimension::three;
  std::vector<double> W;
  std::vector<std::vector<double>> alpha;  ///< alpha[n-1] for order n
  double W_rel_tol = 1e-6;
  double alpha1_rel_tol = 1e-2;
};

std::vector<TableFixture> load_tables(const std::filesystem::path& file);

/// A frozen reference value from an independent high-precision computation.
struct GoldenValue {
  std::string id;
  Dimension dim = Dimension::three;
  double eta = 0.0;
  std::string quantity;  ///< "a_s", "u", "du", "phi", "dphi", "W"
  double value = 0.0;
  double rel_tol = 0.0;
  std::string method;
  nlohmann::json params;
};

std::vector<GoldenValue> load_golden(const std::filesystem::path& file);
const GoldenValue& find_golden(const std::vector<GoldenValue>& all, const std::string& id);

nlohmann::json read_json(const std::filesystem::path& file);
void write_text(const std::filesystem::path& file, const std::string& text);

/// 64-bit FNV-1a as 16 hex digits.
std::string fnv1a(std::string_view bytes);
std::string fnv1a_file(const std::filesystem::path& file);

}  // namespace scatlen::io
