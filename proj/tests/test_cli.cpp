#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli_run.hpp"
#include "coulomb/radii.hpp"
#include "coulomb/specfun.hpp"
#include "coulomb/verify.hpp"

using cli_run::run;
using Json = nlohmann::json;

namespace {

Json run_json(const std::vector<std::string>& args) {
  const auto r = run(args);
  EXPECT_EQ(r.status, 0) << r.out;
  return Json::parse(r.out);
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("coulomb_cli_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST(Cli, RadiusFigureOne) {
  const auto j = run_json({"radius", "--family", "f", "--L", "-0.5", "--eta", "0", "--beta", "0"});
  EXPECT_EQ(j["command"], "radius");
  EXPECT_NEAR(j["outputs"]["value"].get<double>(), 0.9407705639497375, 1e-10);
  EXPECT_TRUE(j["outputs"].contains("bracket_lo"));
  EXPECT_TRUE(j["outputs"].contains("residual"));
}

TEST(Cli, RadiusFigureTwo) {
  const auto j = run_json({"radius", "--family", "g", "--L", "0", "--eta", "0", "--beta", "0"});
  EXPECT_NEAR(j["outputs"]["value"].get<double>(), 1.5707963267948968, 1e-12);
}

TEST(Cli, RadiusPhi) {
  const auto j = run_json({"radius", "--family", "phi", "--nu", "1", "--alpha", "0", "--beta", "0"});
  EXPECT_NEAR(j["outputs"]["value"].get<double>(), 1.8411837813, 1e-10);
}

TEST(Cli, OutputsAreBitIdenticalToLibrary) {
  const auto j = run_json({"radius", "--family", "f", "--L", "2.5", "--eta", "-1.5", "--beta", "0.25"});
  EXPECT_EQ(j["outputs"]["value"].get<double>(), coulomb::radii::radius_f(2.5, -1.5, 0.25).value);

  const auto e = run_json({"eval", "--family", "g", "--L", "1", "--eta", "-1", "--z-re", "1"});
  const auto lib = coulomb::specfun::eval_g({coulomb::cplx(1, 0), -1.0}, 1.0);
  EXPECT_EQ(e["outputs"]["value_re"].get<double>(), lib.value.real());
  EXPECT_EQ(e["outputs"]["derivative_re"].get<double>(), lib.derivative.real());
  EXPECT_EQ(e["outputs"]["terms_used"].get<int>(), lib.terms_used);
}

TEST(Cli, EvalExamples) {
  auto j = run_json({"eval", "--family", "F", "--L", "0", "--eta", "0", "--z-re", "1.5707963267948966"});
  EXPECT_NEAR(j["outputs"]["value_re"].get<double>(), 1.0, 1e-13);
  j = run_json({"eval", "--family", "besselJ", "--L", "0.5", "--z-re", "3.1415926535"});
  EXPECT_NEAR(j["outputs"]["value_re"].get<double>(), 0.0, 1e-9);
  j = run_json({"eval", "--family", "dini", "--L", "0", "--H", "0.5", "--z-re", "0.9407705639497375"});
  EXPECT_NEAR(j["outputs"]["value_re"].get<double>(), 0.0, 1e-10);
  j = run_json({"eval", "--family", "F", "--L", "0.2", "--L-im", "0.1", "--eta", "-0.5", "--z-re", "0.5", "--z-im", "0.25"});
  EXPECT_NE(j["outputs"]["value_im"].get<double>(), 0.0);
}

TEST(Cli, RayleighExact) {
  auto j = run_json({"rayleigh", "--L", "1", "--eta", "0", "--kmax", "2", "--which", "Z", "--exact"});
  EXPECT_EQ(j["outputs"]["Z[2]"], "1/5");
  j = run_json({"rayleigh", "--L", "0.5", "--eta", "0", "--kmax", "2", "--which", "Ztilde", "--exact"});
  EXPECT_EQ(j["outputs"]["Ztilde[2]"], "7/12");
  j = run_json({"rayleigh", "--which", "zeta", "--kmax", "4", "--nmax", "2"});
  EXPECT_EQ(j["outputs"]["zeta[2][2]"], "9/8 + 1/2*eta^2");
  EXPECT_EQ(j["outputs"]["zeta[3][0]"].get<std::string>().find("eta") != std::string::npos, true);
}

TEST(Cli, RayleighFloat) {
  const auto j = run_json({"rayleigh", "--L", "2", "--eta", "-1", "--kmax", "3"});
  EXPECT_NEAR(j["outputs"]["Z[2]"].get<double>(), 10.0 / 63.0, 1e-16);
}

TEST(Cli, Asympt) {
  auto j = run_json({"asympt", "--N", "1"});
  EXPECT_EQ(j["outputs"]["c"], "sqrt2");
  EXPECT_EQ(j["outputs"]["eps[1]"], "eta + 5*sqrt2/4 - 1/4");
  EXPECT_EQ(j["outputs"]["annihilated_through"], 1);
  j = run_json({"asympt", "--eta", "-1", "--N", "4", "--L", "100"});
  EXPECT_TRUE(j["outputs"].contains("r_asym@100.0"));
  j = run_json({"asympt", "--N", "2", "--form", "printed"});
  EXPECT_EQ(j["outputs"]["annihilated_through"], 0);
  EXPECT_FALSE(j["diagnostics"].empty());
}

TEST(Cli, AsymptValidateReportsSlope) {
  const auto j = run_json({"asympt", "--eta", "-1", "--N", "2", "--validate"});
  EXPECT_EQ(j["outputs"]["slope_target"].get<double>(), -3.0);
  EXPECT_TRUE(std::isfinite(j["outputs"]["slope"].get<double>()));
  EXPECT_TRUE(j["outputs"].contains("r_direct@200.0"));
}

TEST(Cli, GateViolationExitsTwo) {
  const auto r = run({"radius", "--family", "f", "--L", "1", "--eta", "1"}, true);
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("requires eta <= 0"), std::string::npos);
  EXPECT_EQ(run({"radius", "--family", "f", "--L", "1", "--eta", "0", "--beta", "1"}).status, 2);
  EXPECT_EQ(run({"radius", "--family", "q"}).status, 2);
  EXPECT_EQ(run({"eval", "--tol", "abc"}).status, 2);
}

TEST(Cli, NumericFailureExitsFour) {
  EXPECT_EQ(run({"eval", "--family", "g", "--z-re", "30"}, false, "COULOMB_MAX_TERMS=5").status, 4);
}

TEST(Cli, UnwritableFigureExitsThree) {
  EXPECT_EQ(run({"figure", "--figure", "2", "--points", "4", "--out", "/nonexistent/dir/curve.csv"}).status, 3);
}

TEST(Cli, CsvMode) {
  const auto r = run({"--csv", "radius", "--family", "g", "--L", "0", "--eta", "0"});
  ASSERT_EQ(r.status, 0);
  std::istringstream in(r.out);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  EXPECT_EQ(header.rfind("value,bracket_lo,bracket_hi", 0), 0u);
  EXPECT_NEAR(std::stod(row), std::numbers::pi / 2, 1e-15);
}

TEST(Cli, FigureTwoSmall) {
  const auto r = run({"figure", "--figure", "2", "--points", "4"});
  ASSERT_EQ(r.status, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "t,re,im");
  std::getline(in, line);
  double t, re, im;
  char c1, c2;
  std::istringstream(line) >> t >> c1 >> re >> c2 >> im;
  EXPECT_EQ(t, 0.0);
  EXPECT_NEAR(re, 1.0, 1e-14);
  EXPECT_NEAR(im, 0.0, 1e-15);
}

TEST(Cli, FigureFileRoundTrip) {
  const auto path = temp_path("fig1.csv");
  const auto r = run({"figure", "--figure", "1", "--points", "512", "--out", path.string()});
  ASSERT_EQ(r.status, 0);
  const double radius = coulomb::radii::radius_f(-0.5, 0.0, 0.0).value;
  const auto mem = coulomb::verify::boundary_image(coulomb::radii::Family::F_POWER,
                                                   coulomb::verify::FamilyParams::coulomb(-0.5, 0.0), radius, 512);
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  ASSERT_EQ(line, "t,re,im");
  std::vector<std::pair<double, double>> pts;
  while (std::getline(in, line)) {
    double t, re, im;
    char c1, c2;
    std::istringstream(line) >> t >> c1 >> re >> c2 >> im;
    pts.emplace_back(re, im);
  }
  ASSERT_EQ(pts.size(), 512u);
  for (std::size_t j = 0; j < pts.size(); ++j) {
    EXPECT_LE(std::abs(pts[j].first - mem[j].real()), 1e-15);
    EXPECT_LE(std::abs(pts[j].second - mem[j].imag()), 1e-15);
    // conjugate symmetry of the closed curve
    EXPECT_NEAR(pts[j].first, pts[511 - j].first, 1e-13);
    EXPECT_NEAR(pts[j].second, -pts[511 - j].second, 1e-13);
  }
  std::filesystem::remove(path);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).status, 0); }
