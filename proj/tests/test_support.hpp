#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "scatlen/io.hpp"

namespace scatlen::testing {

inline std::filesystem::path fixture_dir() { return SCATLEN_TEST_FIXTURE_DIR; }

inline const std::vector<io::GoldenValue>& golden() {
  static const auto values = io::load_golden(fixture_dir() / "golden_v1.json");
  return values;
}

inline const io::GoldenValue& golden(const std::string& id) { return io::find_golden(golden(), id); }

inline const std::vector<io::TableFixture>& tables() {
  static const auto t = io::load_tables(fixture_dir() / "tables_v1.json");
  return t;
}

inline const io::TableFixture& table(Dimension dim) {
  for (const auto& t : tables()) {
    if (t.dim == dim) return t;
  }
  throw std::out_of_range("no table for dimension");
}

inline double rel_diff(double a, double b) { return std::abs(a / b - 1.0); }

}  // namespace scatlen::testing
