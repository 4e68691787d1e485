#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <limits>
#include <sstream>

#include "scatlen/io.hpp"
#include "test_support.hpp"

using namespace scatlen;
namespace fs = std::filesystem;

namespace {

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(FormatDouble, SeventeenDigitsRoundTrip) {
  for (double x : {0.1, 1.0 / 3.0, -2.684004650924, 1e-300, 6.02214076e23}) {
    const auto s = io::format_double(x);
    EXPECT_EQ(io::parse_double(s), x) << s;
  }
  EXPECT_EQ(io::format_double(0.1), "0.10000000000000001");
}

TEST(FormatDouble, NonFiniteSpellings) {
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_EQ(io::format_double(inf), "inf");
  EXPECT_EQ(io::format_double(-inf), "-inf");
  EXPECT_EQ(io::format_double(std::nan("")), "nan");
  EXPECT_EQ(io::parse_double("-inf"), -inf);
  EXPECT_TRUE(std::isnan(io::parse_double("nan")));
  EXPECT_THROW(io::parse_double("1.5x"), std::invalid_argument);
}

TEST(JsonNumber, NonFiniteAsStrings) {
  EXPECT_EQ(io::json_number(2.5), nlohmann::json(2.5));
  EXPECT_EQ(io::json_number(-std::numeric_limits<double>::infinity()), nlohmann::json("-inf"));
  EXPECT_EQ(io::number_from_json(nlohmann::json("inf")), std::numeric_limits<double>::infinity());
  EXPECT_THROW(io::number_from_json(nlohmann::json::array()), std::invalid_argument);
}

TEST(ModelJson, RoundTrip) {
  for (Dimension dim : {Dimension::one, Dimension::two, Dimension::three}) {
    const auto m = builtin_model(dim, 3);
    const auto back = io::model_from_json(nlohmann::json::parse(io::to_json(m).dump()));
    EXPECT_EQ(back.dim, m.dim);
    EXPECT_EQ(back.order, m.order);
    EXPECT_EQ(back.W, m.W);
    EXPECT_EQ(back.alpha, m.alpha);
  }
}

TEST(ModelJson, FormMustMatchDimension) {
  auto j = io::to_json(builtin_model(Dimension::three, 1));
  j["form"] = "exponential_sum";
  EXPECT_THROW(io::model_from_json(j), std::invalid_argument);
}

TEST(PoleSetJson, RoundTrip) {
  PoleSet s;
  s.dim = Dimension::two;
  s.poles.push_back({11.07690364288, 11.07690364287, 11.07690364289, 3e-15});
  s.warnings.push_back("note");
  const auto j = io::to_json(s);
  EXPECT_EQ(j["schema"], "scatlen.poles");
  const auto back = io::pole_set_from_json(nlohmann::json::parse(j.dump()));
  ASSERT_EQ(back.poles.size(), 1u);
  EXPECT_EQ(back.poles[0].W, s.poles[0].W);
  EXPECT_EQ(back.poles[0].lo, s.poles[0].lo);
  EXPECT_EQ(back.warnings, s.warnings);
}

TEST(ComputeCsv, VersionedHeaderAndRows) {
  ScatteringLength a;
  a.dim = Dimension::three;
  a.value = -0.5;
  a.log_value = std::log(0.5);
  a.near_pole = true;
  std::vector<io::ResultRow> rows{{1.25, a}};
  std::ostringstream os;
  io::write_rows_csv(os, rows);
  const auto l = lines(os.str());
  ASSERT_EQ(l.size(), 3u);
  EXPECT_EQ(l[0], "# scatlen compute v1");
  EXPECT_EQ(l[1], "dim,eta,a_s,log_a_s,err_estimate,near_pole,converged");
  EXPECT_EQ(l[2].substr(0, 12), "3,1.25,-0.5,");
  EXPECT_NE(l[2].find(",true,true"), std::string::npos);
}

TEST(ScanCsv, OneLinePerCell) {
  ScanTable t;
  t.grid = {3.0, 4.0};
  t.etas = {1.0};
  t.cells = {{3.0, 1.0, 1e-3, false, ""}, {4.0, 1.0, std::nan(""), true, "boom"}};
  std::ostringstream os;
  io::write_scan_csv(os, t);
  const auto l = lines(os.str());
  ASSERT_EQ(l.size(), 4u);
  EXPECT_EQ(l[1], "axis_value,eta,rel_error");
  EXPECT_EQ(l[3], "4,1,nan");
  const auto j = io::to_json(t);
  EXPECT_EQ(j["cells"][1]["error"], "boom");
}

TEST(OracleCsv, RowPerMethod) {
  nlohmann::json c = {{"dim", 1},
                      {"eta", 4.0},
                      {"rel_spread", 1e-11},
                      {"methods", {{{"method", "ode"}, {"a_s", 0.5}}, {{"method", "series"}, {"a_s", 0.5}}}}};
  std::ostringstream os;
  io::write_oracle_csv(os, c);
  const auto l = lines(os.str());
  ASSERT_EQ(l.size(), 4u);
  EXPECT_EQ(l[2], "1,4,ode,0.5,9.9999999999999994e-12");
}

TEST(Fixtures, TablesLoad) {
  const auto& t = scatlen::testing::tables();
  ASSERT_EQ(t.size(), 3u);
  for (const auto& f : t) {
    EXPECT_EQ(f.W.size(), 4u);
    EXPECT_EQ(f.alpha.size(), 4u);
    EXPECT_DOUBLE_EQ(f.W_rel_tol, 1e-6);
    EXPECT_DOUBLE_EQ(f.alpha1_rel_tol, 1e-2);
  }
}

TEST(Fixtures, GoldenLookup) {
  const auto& g = scatlen::testing::golden("a3d_eta14");
  EXPECT_EQ(g.dim, Dimension::three);
  EXPECT_DOUBLE_EQ(g.eta, 14.0);
  EXPECT_THROW(scatlen::testing::golden("nope"), std::out_of_range);
}

TEST(Fnv1a, KnownVectors) {
  EXPECT_EQ(io::fnv1a(""), "cbf29ce484222325");
  EXPECT_EQ(io::fnv1a("a"), "af63dc4c8601ec8c");
  EXPECT_EQ(io::fnv1a("foobar"), "85944171f73967e8");
}

TEST(TextFiles, WriteReadAndHash) {
  const auto p = fs::temp_directory_path() / "scatlen_io_test.json";
  io::write_text(p, "{\"x\": 1}\n");
  EXPECT_EQ(io::read_json(p)["x"], 1);
  EXPECT_EQ(io::fnv1a_file(p), io::fnv1a("{\"x\": 1}\n"));
  fs::remove(p);
  EXPECT_THROW(io::read_json(p), std::runtime_error);
}
