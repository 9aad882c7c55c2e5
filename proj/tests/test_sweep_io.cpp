#include <doctest.h>

#include <cmath>
#include <cstring>
#include <sstream>
#include <stdexcept>
#include <string>

#include <hybridcool/constants.hpp>
#include <hybridcool/heatmap.hpp>
#include <hybridcool/io.hpp>
#include <hybridcool/sweep.hpp>

using namespace hybridcool;

namespace {

sweep::SweepGrid small_grid() {
  sweep::SweepGrid g;
  g.nx = 3;
  g.ny = 3;
  g.x_min = -1.0;
  g.x_max = 1.0;
  g.y_min = 0.0;
  g.y_max = 2.0;
  g.Omega = kTwoPi * 220e3;
  g.gamma_m = kTwoPi * 31e-3;
  g.gamma_a = kTwoPi * 220e3;
  g.n_bath = 2.8e4;
  g.optimize = false;  // keep unit tests fast; the optimizer has its own suite
  g.rel_tol = 1e-6;
  return g;
}

}  // namespace

TEST_SUITE("sweep_io") {
  TEST_CASE("grid axes and cell parameters follow the map definition") {
    const sweep::SweepGrid g = small_grid();
    CHECK(g.x_at(0) == -1.0);
    CHECK(g.x_at(2) == 1.0);
    CHECK(g.x_at(1) == doctest::Approx(0.0));
    CHECK(g.y_at(0) == 0.0);
    CHECK(g.y_at(2) == 2.0);
    const auto r = g.cell_params(2, 1);
    // x = log10(8 c_m / n_bath), y = log10(c_a)
    CHECK(r.c_m == doctest::Approx(g.n_bath * std::pow(10.0, 1.0) / 8.0).epsilon(1e-14));
    CHECK(r.c_a == doctest::Approx(std::pow(10.0, 1.0)).epsilon(1e-14));
    CHECK(r.G == 0.0);
    CHECK(r.Omega == g.Omega);
    CHECK(r.n_bath == g.n_bath);
  }

  TEST_CASE("grid validation rejects degenerate inputs") {
    sweep::SweepGrid g = small_grid();
    CHECK_NOTHROW(g.validate());
    g.nx = 1;
    CHECK_THROWS_AS(g.validate(), std::invalid_argument);
    g = small_grid();
    g.x_min = 2.0;
    g.x_max = -2.0;
    CHECK_THROWS_AS(g.validate(), std::invalid_argument);
    g = small_grid();
    g.rel_tol = 0.0;
    CHECK_THROWS_AS(g.validate(), std::invalid_argument);
    g = small_grid();
    g.Omega = 0.0;
    CHECK_THROWS_AS(g.validate(), std::invalid_argument);
  }

  TEST_CASE("unstable cells carry NaN numerics and the unstable status") {
    sweep::SweepGrid g = small_grid();
    g.y_min = 5.0;
    g.y_max = 6.0;  // enormous atomic cooperativity: g far beyond Omega/2
    const auto cell = sweep::evaluate_cell(g, 2, 2);
    CHECK_FALSE(cell.stable);
    CHECK(cell.status == "unstable");
    CHECK(sweep::regime_name(cell.regime) == std::string("unstable"));
    CHECK(std::isnan(cell.var_num_g0));
    CHECK(std::isnan(cell.var_weak));
    CHECK(std::isfinite(cell.c));
    CHECK(std::isfinite(cell.g_over_omega));
  }

  TEST_CASE("sweep output is identical for any thread count") {
    const sweep::SweepGrid g = small_grid();
    const auto serial = sweep::run_sweep(g, 1);
    const auto parallel = sweep::run_sweep(g, 3);
    REQUIRE(serial.cells.size() == 9);
    REQUIRE(parallel.cells.size() == 9);
    CHECK(io::sweep_csv(serial) == io::sweep_csv(parallel));
  }

  TEST_CASE("csv round-trips every numeric column bit for bit") {
    const auto result = sweep::run_sweep(small_grid(), 2);
    const std::string csv = io::sweep_csv(result, /*seed=*/7);
    std::istringstream is(csv);
    const auto cells = io::read_sweep_csv(is);
    REQUIRE(cells.size() == result.cells.size());
    for (size_t i = 0; i < cells.size(); ++i) {
      const auto& a = result.cells[i];
      const auto& b = cells[i];
      CHECK(std::memcmp(&a.cm, &b.cm, sizeof(double)) == 0);
      CHECK(std::memcmp(&a.c, &b.c, sizeof(double)) == 0);
      CHECK(std::memcmp(&a.g_over_omega, &b.g_over_omega, sizeof(double)) == 0);
      // NaN columns survive as NaN; finite columns survive exactly.
      if (std::isnan(a.var_num_g0)) {
        CHECK(std::isnan(b.var_num_g0));
      } else {
        CHECK(std::memcmp(&a.var_num_g0, &b.var_num_g0, sizeof(double)) == 0);
      }
      CHECK(a.stable == b.stable);
      CHECK(a.regime == b.regime);
      CHECK(a.status == b.status);
    }
  }

  TEST_CASE("csv carries the fixed header and metadata lines") {
    const auto result = sweep::run_sweep(small_grid(), 1);
    const std::string csv = io::sweep_csv(result, 42);
    std::istringstream is(csv);
    std::string line;
    REQUIRE(std::getline(is, line));
    CHECK(line.rfind("# ", 0) == 0);
    REQUIRE(std::getline(is, line));
    CHECK(line.rfind("# ", 0) == 0);
    CHECK(line.find("\"seed\":42") != std::string::npos);
    REQUIRE(std::getline(is, line));
    CHECK(line ==
          "cm,ca,c,g_over_omega,stable,var_num_g0,var_num_gopt,var_weak,"
          "var_strong,g_opt,g_opt0,gain_ratio,regime,status,err_est");
    int rows = 0;
    while (std::getline(is, line)) {
      if (!line.empty()) ++rows;
    }
    CHECK(rows == 9);
  }

  TEST_CASE("json mirror encodes non-finite values as null") {
    sweep::SweepGrid g = small_grid();
    g.y_min = 5.0;
    g.y_max = 6.0;  // all cells unstable: every variance column is NaN
    const auto result = sweep::run_sweep(g, 1);
    const std::string text = io::sweep_json(result, 3);
    CHECK(text.find("\"var_num_g0\": null") != std::string::npos);
    CHECK(text.find("nan") == std::string::npos);
    CHECK(text.find("\"metadata\"") != std::string::npos);
    CHECK(text.find("\"cells\"") != std::string::npos);
    CHECK(text.find("\"seed\": 3") != std::string::npos);
  }

  TEST_CASE("format_double round-trips and names non-finite values") {
    for (double v : {0.1, 1.0 / 3.0, 2.8e4, 1e-300, -7.25}) {
      const std::string s = io::format_double(v);
      CHECK(std::stod(s) == v);
    }
    CHECK(io::format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
    CHECK(io::format_double(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(io::format_double(-std::numeric_limits<double>::infinity()) == "-inf");
  }

  TEST_CASE("reduced-parameter loader handles Hz alternatives and bad keys") {
    const std::string base = R"({
      "Omega_Hz": 220e3, "gamma_m_Hz": 31e-3, "gamma_a_Hz": 1.0,
      "n_bath": 2.8e4, "c_m": 2.8e4, "c_a": 0.0
    })";
    const auto r = io::reduced_params_from_json(base);
    CHECK(r.Omega == doctest::Approx(kTwoPi * 220e3).epsilon(1e-15));
    CHECK(r.gamma_a == doctest::Approx(kTwoPi).epsilon(1e-15));
    CHECK(r.eta == 1.0);
    CHECK(std::isinf(r.fb_bandwidth));

    // Radian form sidesteps the conversion.
    const auto r2 = io::reduced_params_from_json(R"({
      "Omega": 1.3823e6, "gamma_m": 0.19478, "gamma_a": 6.2832,
      "n_bath": 2.8e4, "c_m": 2.8e4, "c_a": 0.0
    })");
    CHECK(r2.Omega == 1.3823e6);

    CHECK_THROWS_AS(io::reduced_params_from_json(R"({
      "Omega": 1.0, "Omega_Hz": 1.0, "gamma_m": 0.1, "gamma_a": 0.1,
      "n_bath": 1.0, "c_m": 1.0, "c_a": 0.0
    })"), std::runtime_error);
    CHECK_THROWS_AS(io::reduced_params_from_json(R"({
      "Omega": 1.0, "gamma_m": 0.1, "gamma_a": 0.1,
      "n_bath": 1.0, "c_m": 1.0, "c_a": 0.0, "bogus": 1
    })"), std::runtime_error);
    CHECK_THROWS_AS(io::reduced_params_from_json(R"({
      "Omega": 1.0, "gamma_m": 0.1, "gamma_a": 0.1
    })"), std::runtime_error);
  }

  TEST_CASE("grid loader accepts an explicit infinite bandwidth") {
    const auto g = io::sweep_grid_from_json(R"({
      "nx": 4, "ny": 4, "Omega_Hz": 220e3, "gamma_m_Hz": 31e-3,
      "gamma_a_Hz": 220e3, "n_bath": 2.8e4, "fb_bandwidth": "inf",
      "optimize": false
    })");
    CHECK(g.nx == 4);
    CHECK(std::isinf(g.fb_bandwidth));
    CHECK_FALSE(g.optimize);
    // Defaults for the axes.
    CHECK(g.x_min == -2.0);
    CHECK(g.y_max == 6.0);
  }

  TEST_CASE("svg rendering covers its supported columns and rejects others") {
    const auto cols = heatmap::supported_columns();
    CHECK(!cols.empty());
    bool has_var = false;
    for (const auto& c : cols) {
      if (c == "var_num_g0") has_var = true;
    }
    CHECK(has_var);

    const auto result = sweep::run_sweep(small_grid(), 2);
    const std::string svg = heatmap::render_svg(result, "var_num_g0");
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK_THROWS_AS(heatmap::render_svg(result, "no_such_column"),
                    std::invalid_argument);

    sweep::SweepGrid dead = small_grid();
    dead.y_min = 5.0;
    dead.y_max = 6.0;
    const auto unstable = sweep::run_sweep(dead, 1);
    CHECK_THROWS_AS(heatmap::render_svg(unstable, "var_num_g0"),
                    std::runtime_error);
  }

  TEST_CASE("regime names are stable strings") {
    CHECK(sweep::regime_name(params::Regime::kSympatheticGround) ==
          std::string("sympathetic"));
    CHECK(sweep::regime_name(params::Regime::kFeedbackGround) ==
          std::string("feedback"));
    CHECK(sweep::regime_name(params::Regime::kBothGround) == std::string("both"));
    CHECK(sweep::regime_name(params::Regime::kNeither) == std::string("neither"));
    CHECK(sweep::regime_name(params::Regime::kUnstable) ==
          std::string("unstable"));
  }
}
