// Command-line front end: single-point variance reports, gain optimization,
// cooperativity-space sweeps with CSV/JSON/SVG output, regime classification,
// apparatus diagnostics, and a self-contained validation suite.

#include <cmath>
#include <complex>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hybridcool/analytic.hpp"
#include "hybridcool/constants.hpp"
#include "hybridcool/covariance.hpp"
#include "hybridcool/heatmap.hpp"
#include "hybridcool/io.hpp"
#include "hybridcool/optimizer.hpp"
#include "hybridcool/params.hpp"
#include "hybridcool/quadrature.hpp"
#include "hybridcool/spectrum.hpp"
#include "hybridcool/sweep.hpp"

namespace {

using nlohmann::json;
using namespace hybridcool;

constexpr const char* kSourceNames[5] = {"thermal", "mech_back_action", "feedback_shot",
                                         "feedback_cross", "atom_cold_bath"};

struct LoadedParams {
  params::ReducedParams r;
  std::optional<params::PhysicalParams> phys;
  double mass_m = 1.0;
  double mass_a = 1.0;
};

LoadedParams load_input(const std::string& params_path, const std::string& reduced_path) {
  if (params_path.empty() == reduced_path.empty()) {
    throw std::runtime_error("exactly one of --params or --reduced is required");
  }
  LoadedParams in;
  if (!params_path.empty()) {
    in.phys = io::load_physical_params(params_path);
    in.r = params::reduce(*in.phys);
    in.mass_m = in.phys->M;
    in.mass_a = in.phys->N > 0 ? in.phys->N * in.phys->m_atom : 1.0;
  } else {
    in.r = io::load_reduced_params(reduced_path);
  }
  return in;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    io::save_text(out_path, text);
  }
}

spectrum::EvalMode mode_for(const params::ReducedParams& r) {
  return r.fb_infinite() ? spectrum::EvalMode::kClosedForm : spectrum::EvalMode::kCorrelatorSum;
}

json report_json(const quadrature::VarianceReport& rep, const params::ReducedParams& r,
                 bool with_si) {
  json j;
  j["variance_zp"] = rep.variance_zp;
  if (with_si) j["variance_m2"] = rep.variance_m2;
  json by;
  for (int s = 0; s < 5; ++s) by[kSourceNames[s]] = rep.by_source_zp[static_cast<std::size_t>(s)];
  j["by_source_zp"] = by;
  j["error_zp"] = rep.error_zp;
  j["panel_count"] = rep.panel_count;
  j["regime"] = sweep::regime_name(rep.regime.primary);
  json pj;
  pj["Omega"] = r.Omega;
  pj["gamma_m"] = r.gamma_m;
  pj["gamma_a"] = r.gamma_a;
  pj["n_bath"] = r.n_bath;
  pj["c_m"] = r.c_m;
  pj["c_a"] = r.c_a;
  pj["eta"] = r.eta;
  pj["G"] = r.G;
  pj["fb_bandwidth"] = r.fb_infinite() ? json("inf") : json(r.fb_bandwidth);
  j["params"] = pj;
  return j;
}

std::string report_text(const quadrature::VarianceReport& rep, const params::ReducedParams& r,
                        bool with_si) {
  std::string out;
  out += "variance_zp = " + io::format_double(rep.variance_zp) + "  (units of x_zp^2)\n";
  if (with_si) out += "variance_m2 = " + io::format_double(rep.variance_m2) + "\n";
  out += "by source (x_zp^2):\n";
  for (int s = 0; s < 5; ++s) {
    out += "  " + std::string(kSourceNames[s]) + " = " +
           io::format_double(rep.by_source_zp[static_cast<std::size_t>(s)]) + "\n";
  }
  out += "error_zp = " + io::format_double(rep.error_zp) + "\n";
  out += "panels = " + std::to_string(rep.panel_count) + "\n";
  out += "regime = " + std::string(sweep::regime_name(rep.regime.primary)) + "\n";
  out += "gain G = " + io::format_double(r.G) + "\n";
  return out;
}

int run_variance(const std::string& params_path, const std::string& reduced_path, double tol,
                 bool optimize, bool gain_given, double gain, const std::string& format,
                 const std::string& out_path) {
  LoadedParams in = load_input(params_path, reduced_path);
  if (gain_given) in.r.G = gain;
  quadrature::QuadratureConfig quad;
  quad.rel_tol = tol;
  std::optional<optimizer::GainOptimum> opt;
  if (optimize) {
    optimizer::OptimizerConfig config;
    config.quad = quad;
    opt = optimizer::optimize_gain(in.r, config);
    in.r.G = opt->g_opt;
  }
  const auto model = spectrum::make_model(in.r, mode_for(in.r), in.mass_m, in.mass_a);
  const auto rep = quadrature::integrate_spectrum(model, quad);
  const bool with_si = in.phys.has_value();
  if (format == "json") {
    json j = report_json(rep, in.r, with_si);
    if (opt) {
      j["g_opt"] = opt->g_opt;
      j["g_opt0"] = opt->g_opt0;
      j["gain_ratio"] = opt->gain_ratio;
    }
    emit(out_path, j.dump(2) + "\n");
  } else {
    std::string text = report_text(rep, in.r, with_si);
    if (opt) {
      text += "g_opt = " + io::format_double(opt->g_opt) + "\n";
      text += "g_opt0 = " + io::format_double(opt->g_opt0) + "\n";
      text += "gain_ratio = " + io::format_double(opt->gain_ratio) + "\n";
    }
    emit(out_path, text);
  }
  return 0;
}

int run_optimize_gain(const std::string& params_path, const std::string& reduced_path, double tol,
                      const std::string& format, const std::string& out_path) {
  LoadedParams in = load_input(params_path, reduced_path);
  optimizer::OptimizerConfig config;
  config.quad.rel_tol = tol;
  const optimizer::GainOptimum opt = optimizer::optimize_gain(in.r, config);
  const char* status =
      opt.status == optimizer::OptStatus::kConverged ? "converged" : "boundary-minimum";
  if (format == "json") {
    json j;
    j["g_opt"] = opt.g_opt;
    j["variance_zp"] = opt.variance_zp;
    j["g_opt0"] = opt.g_opt0;
    j["gain_ratio"] = opt.gain_ratio;
    j["iterations"] = opt.iterations;
    j["bracket"] = {opt.bracket_lo, opt.bracket_hi};
    j["status"] = status;
    emit(out_path, j.dump(2) + "\n");
  } else {
    std::string text;
    text += "g_opt = " + io::format_double(opt.g_opt) + "\n";
    text += "variance_zp = " + io::format_double(opt.variance_zp) + "\n";
    text += "g_opt0 = " + io::format_double(opt.g_opt0) + "\n";
    text += "gain_ratio = " + io::format_double(opt.gain_ratio) + "\n";
    text += "iterations = " + std::to_string(opt.iterations) + "\n";
    text += "bracket = [" + io::format_double(opt.bracket_lo) + ", " +
            io::format_double(opt.bracket_hi) + "]\n";
    text += "status = " + std::string(status) + "\n";
    emit(out_path, text);
  }
  return 0;
}

int run_sweep_cmd(const std::string& grid_path, int threads, std::uint64_t seed,
                  const std::string& format, const std::string& out_path,
                  const std::string& heatmap_path, const std::string& heatmap_column,
                  int optimize_override) {
  sweep::SweepGrid grid = io::load_sweep_grid(grid_path);
  if (optimize_override >= 0) grid.optimize = optimize_override != 0;
  const sweep::SweepResult result = sweep::run_sweep(grid, threads);
  const std::string text =
      format == "json" ? io::sweep_json(result, seed) : io::sweep_csv(result, seed);
  emit(out_path, text);
  if (!heatmap_path.empty()) {
    std::string column = heatmap_column;
    if (column.empty()) column = grid.optimize ? "var_num_gopt" : "var_num_g0";
    io::save_text(heatmap_path, heatmap::render_svg(result, column));
  }
  return 0;
}

int run_classify(const std::string& params_path, const std::string& reduced_path,
                 const std::string& format, const std::string& out_path) {
  LoadedParams in = load_input(params_path, reduced_path);
  if (!params::stability(in.r)) {
    emit(out_path, format == "json" ? std::string("{\"regime\": \"unstable\"}\n")
                                    : std::string("regime = unstable\n"));
    return 0;
  }
  const params::RegimeLabel label = params::classify(in.r);
  const analytic::GroundStateCriteria crit = analytic::ground_state_criteria(in.r);
  if (format == "json") {
    json j;
    j["regime"] = sweep::regime_name(label.primary);
    j["cond_nbath_lt_c"] = label.cond_nbath_lt_c;
    j["cond_ca_gt_1_24"] = label.cond_ca_gt_1_24;
    j["cond_rate_hierarchy"] = label.cond_rate_hierarchy;
    j["cond_feedback"] = label.cond_feedback;
    j["cond_overlap_eta"] = label.cond_overlap_eta;
    j["feedback_margin"] = crit.feedback_margin;
    j["symp_occupancy_margin"] = crit.symp_occupancy_margin;
    j["symp_cooperativity_margin"] = crit.symp_cooperativity_margin;
    j["symp_rate_margin"] = crit.symp_rate_margin;
    j["sufficient_sympathetic"] = crit.sufficient_sympathetic;
    j["sufficient_margin"] = crit.sufficient_margin;
    emit(out_path, j.dump(2) + "\n");
  } else {
    std::string text;
    text += "regime = " + std::string(sweep::regime_name(label.primary)) + "\n";
    auto line = [&](const char* name, bool flag, double margin) {
      text += "  " + std::string(name) + " = " + (flag ? "yes" : "no") +
              "  (margin " + io::format_double(margin) + ")\n";
    };
    line("occupancy n_bath < c", label.cond_nbath_lt_c, crit.symp_occupancy_margin);
    line("cooperativity c_a > 1/24", label.cond_ca_gt_1_24, crit.symp_cooperativity_margin);
    line("rate hierarchy", label.cond_rate_hierarchy, crit.symp_rate_margin);
    line("feedback n_bath < (9 eta - 1) c_m", label.cond_feedback, crit.feedback_margin);
    line("sufficient (adiabatic)", crit.sufficient_sympathetic, crit.sufficient_margin);
    line("overlap eta", label.cond_overlap_eta, crit.overlap_eta_margin);
    emit(out_path, text);
  }
  return 0;
}

int run_diagnose(const std::string& params_path, const std::string& format,
                 const std::string& out_path) {
  if (params_path.empty()) throw std::runtime_error("diagnose requires --params");
  const params::PhysicalParams p = io::load_physical_params(params_path);
  const params::DiagnosticsReport d = params::diagnostics(p);
  const params::ReducedParams r = params::reduce(p);
  if (format == "json") {
    json j;
    j["gordon_ashkin_rate"] = d.gordon_ashkin_rate;
    j["gordon_ashkin_negligible"] = d.gordon_ashkin_negligible;
    j["atomic_backaction_rate"] = d.atomic_backaction_rate;
    j["adiabatic_MC"] = d.adiabatic_MC;
    j["adiabatic_AC"] = d.adiabatic_AC;
    j["trap_consistency"] = d.trap_consistency;
    json rj;
    rj["Omega"] = r.Omega;
    rj["gamma_m"] = r.gamma_m;
    rj["gamma_a"] = r.gamma_a;
    rj["n_bath"] = r.n_bath;
    rj["c_m"] = r.c_m;
    rj["c_a"] = r.c_a;
    rj["g"] = r.g();
    rj["g_over_omega"] = r.g() / r.Omega;
    rj["stable"] = params::stability(r);
    j["reduced"] = rj;
    emit(out_path, j.dump(2) + "\n");
  } else {
    std::string text;
    text += "gordon_ashkin_rate = " + io::format_double(d.gordon_ashkin_rate) + " rad/s" +
            (d.gordon_ashkin_negligible ? "  (negligible)\n" : "  (NOT negligible)\n");
    text += "atomic_backaction_rate = " + io::format_double(d.atomic_backaction_rate) + " rad/s\n";
    text += "adiabatic_MC = " + std::string(d.adiabatic_MC ? "yes" : "no") + "\n";
    text += "adiabatic_AC = " + std::string(d.adiabatic_AC ? "yes" : "no") + "\n";
    text += "trap_consistency = " + io::format_double(d.trap_consistency) + "  (1 = exact)\n";
    text += "reduced: n_bath = " + io::format_double(r.n_bath) +
            ", c_m = " + io::format_double(r.c_m) + ", c_a = " + io::format_double(r.c_a) +
            ", g/Omega = " + io::format_double(r.g() / r.Omega) +
            ", stable = " + (params::stability(r) ? "yes" : "no") + "\n";
    emit(out_path, text);
  }
  return 0;
}

// --- validate: built-in correctness suites ---------------------------------

struct Suite {
  std::string name;
  std::function<bool(std::string&)> run;
};

bool lorentzian_suite(std::uint64_t seed, std::string& detail) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> log_omega(3.0, 7.0), log_ratio(-9.0, 0.0);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double Om = std::pow(10.0, log_omega(rng));
    const double ratio = i == 0 ? 1e-9 : std::pow(10.0, log_ratio(rng));
    const double Gam = ratio * Om;
    const auto exact = quadrature::lorentzian_integrals(Gam, Om);
    const quadrature::ResonanceHint hint{Om, 0.5 * Gam};
    const auto plan = quadrature::plan_panels(std::span(&hint, 1), 50.0);
    quadrature::QuadratureConfig config;
    // Factored resonance denominator (w - Om is exact near the peak) plus
    // extended-precision abscissae: both are needed at width ratios of 1e-9,
    // where the peak profile changes across a single double-precision step.
    const std::function<long double(long double)> f0 = [=](long double w) {
      const long double d = (w - Om) * (w + Om);
      return 1.0L / (d * d + static_cast<long double>(Gam) * Gam * w * w);
    };
    const std::function<long double(long double)> f2 = [=](long double w) {
      return w * w * f0(w);
    };
    const double i0 =
        static_cast<double>(2.0L * quadrature::integrate_half_line_ld(f0, plan, config));
    const double i2 =
        static_cast<double>(2.0L * quadrature::integrate_half_line_ld(f2, plan, config));
    worst = std::max(worst, std::abs(i0 / exact.first - 1.0));
    worst = std::max(worst, std::abs(i2 / exact.second - 1.0));
  }
  detail = "worst relative error " + io::format_double(worst) + " over 20 pairs";
  return worst < 1e-8;
}

bool equipartition_suite(std::uint64_t seed, std::string& detail) {
  std::mt19937_64 rng(seed + 1);
  std::uniform_real_distribution<double> log_n(0.0, 6.0), log_cm(-2.0, 4.0);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    params::ReducedParams r;
    r.Omega = kTwoPi * 220e3;
    r.gamma_m = 1e-6 * r.Omega;
    r.gamma_a = 0.1 * r.Omega;
    r.n_bath = std::pow(10.0, log_n(rng));
    r.c_m = std::pow(10.0, log_cm(rng));
    r.c_a = 0.0;
    const double expected = 1.0 + 2.0 * r.n_bath + 2.0 * r.c_m;
    const double got = quadrature::variance_zp_total(spectrum::make_model(r));
    worst = std::max(worst, std::abs(got / expected - 1.0));
  }
  detail = "worst relative error " + io::format_double(worst) + " vs 1 + 2 n + 2 c_m";
  return worst < 1e-6;
}

params::ReducedParams random_stable_draw(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (;;) {
    params::ReducedParams r;
    r.Omega = kTwoPi * 220e3;
    r.n_bath = std::pow(10.0, 1.0 + 5.0 * u(rng));
    r.c_m = std::pow(10.0, -1.0 + 6.0 * u(rng));
    r.c_a = std::pow(10.0, -3.0 + 8.0 * u(rng));
    r.gamma_a = std::pow(10.0, -6.0 + (std::log10(0.4) + 6.0) * u(rng)) * r.Omega;
    r.gamma_m = std::pow(10.0, -9.0 + 5.0 * u(rng)) * r.Omega;
    r.eta = 0.2 + 0.8 * u(rng);
    r.fb_bandwidth = 1e3 * r.Omega;
    if (u(rng) < 0.5) {
      r.G = 0.0;
    } else {
      r.G = 2.0 * u(rng) * analytic::optimal_gain_zero_order(r);
    }
    if (!params::stability(r) || r.g() > 0.45 * r.Omega) continue;
    return r;
  }
}

bool oracle_suite(std::uint64_t seed, std::string& detail) {
  std::mt19937_64 rng(seed + 2);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const params::ReducedParams r = random_stable_draw(rng);
    const double oracle = covariance::oracle_variance_zp(r);
    const double quad =
        quadrature::variance_zp_total(spectrum::make_model(r, spectrum::EvalMode::kCorrelatorSum));
    worst = std::max(worst, std::abs(quad / oracle - 1.0));
  }
  detail = "worst relative deviation " + io::format_double(worst) + " over 100 draws";
  return worst < 1e-3;
}

bool gain_suite(std::uint64_t seed, std::string& detail) {
  std::mt19937_64 rng(seed + 3);
  std::uniform_real_distribution<double> log_n(2.0, 5.0), log_cm(1.0, 4.0);
  double worst_gain = 0.0, worst_var = 0.0;
  for (int i = 0; i < 5; ++i) {
    params::ReducedParams r;
    r.Omega = kTwoPi * 220e3;
    r.gamma_m = 1e-7 * r.Omega;
    r.gamma_a = 0.1 * r.Omega;
    r.n_bath = std::pow(10.0, log_n(rng));
    r.c_m = std::pow(10.0, log_cm(rng));
    r.c_a = 0.0;
    const optimizer::GainOptimum opt = optimizer::optimize_gain(r);
    const analytic::AnalyticPrediction pred = analytic::feedback_only_optimum(r);
    worst_gain = std::max(worst_gain, std::abs(opt.gain_ratio - 1.0));
    worst_var = std::max(worst_var, std::abs(opt.variance_zp / pred.variance_zp - 1.0));
  }
  detail = "gain off closed form by " + io::format_double(worst_gain) + ", variance by " +
           io::format_double(worst_var);
  return worst_gain < 1e-3 && worst_var < 1e-3;
}

bool evenness_suite(std::uint64_t seed, std::string& detail) {
  std::mt19937_64 rng(seed + 4);
  double worst = 0.0;
  for (int i = 0; i < 5; ++i) {
    const params::ReducedParams r = random_stable_draw(rng);
    const auto model = spectrum::make_model(r, spectrum::EvalMode::kCorrelatorSum);
    const auto hints = quadrature::spectral_hints(model);
    quadrature::QuadratureConfig config;
    auto f = [&](double z) { return model.rho(z); };
    const double full = quadrature::integrate_full_line(f, hints, config);
    const auto plan = quadrature::plan_panels(hints, config.pole_padding);
    // The density's feedback cross term is odd in z, so the half-line side
    // must fold both signs; the full-line integral cancels it internally.
    auto folded = [&](double z) { return model.rho(z) + model.rho(-z); };
    const double half = quadrature::integrate_half_line(folded, plan, config);
    worst = std::max(worst, std::abs(full / half - 1.0));
  }
  detail = "full-line vs folded half-line worst deviation " + io::format_double(worst);
  return worst < 1e-6;
}

int run_validate(std::uint64_t seed) {
  const std::vector<Suite> suites = {
      {"lorentzian-exactness", [&](std::string& d) { return lorentzian_suite(seed, d); }},
      {"equipartition", [&](std::string& d) { return equipartition_suite(seed, d); }},
      {"oracle-equivalence", [&](std::string& d) { return oracle_suite(seed, d); }},
      {"feedback-gain-closed-form", [&](std::string& d) { return gain_suite(seed, d); }},
      {"spectrum-evenness", [&](std::string& d) { return evenness_suite(seed, d); }},
  };
  bool all_pass = true;
  for (const Suite& s : suites) {
    std::string detail;
    bool ok = false;
    try {
      ok = s.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    all_pass = all_pass && ok;
    std::printf("%-28s %s  (%s)\n", s.name.c_str(), ok ? "PASS" : "FAIL", detail.c_str());
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hybridcool: steady-state variance of a feedback-cooled, "
               "atom-coupled mechanical oscillator"};
  app.require_subcommand(1);

  std::string params_path, reduced_path, grid_path, out_path, heatmap_path, heatmap_column;
  std::string format = "text";        // single-point commands
  std::string sweep_format = "csv";   // sweep output
  double tol = 1e-8, gain = 0.0;
  bool optimize = false;
  int threads = 0;
  std::uint64_t seed = 0;
  int optimize_override = -1;

  auto add_input = [&](CLI::App* cmd, bool physical_only = false) {
    cmd->add_option("--params", params_path, "physical parameter JSON file");
    if (!physical_only) cmd->add_option("--reduced", reduced_path, "reduced parameter JSON file");
  };
  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "output path (default: stdout)");
    cmd->add_option("--format", format, "output format: text|json")
        ->check(CLI::IsMember(std::vector<std::string>{"text", "json"}));
  };

  CLI::App* variance = app.add_subcommand("variance", "steady-state variance at fixed gain");
  add_input(variance);
  add_output(variance);
  variance->add_option("--tol", tol, "quadrature relative tolerance");
  variance->add_flag("--optimize", optimize, "optimize the feedback gain first");
  CLI::Option* gain_opt = variance->add_option("--gain", gain, "override the feedback gain G");

  CLI::App* optg = app.add_subcommand("optimize-gain", "minimize variance over feedback gain");
  add_input(optg);
  add_output(optg);
  optg->add_option("--tol", tol, "quadrature relative tolerance");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "evaluate a cooperativity-space grid");
  sweep_cmd->add_option("--grid", grid_path, "sweep grid JSON file")->required();
  sweep_cmd->add_option("--out", out_path, "output path (default: stdout)");
  sweep_cmd->add_option("--format", sweep_format, "output format: csv|json")
      ->check(CLI::IsMember(std::vector<std::string>{"csv", "json"}));
  sweep_cmd->add_option("--heatmap", heatmap_path, "also render an SVG heatmap to this path");
  sweep_cmd->add_option("--heatmap-column", heatmap_column,
                        "column to render (default: optimized or G=0 variance)");
  sweep_cmd->add_option("--threads", threads, "worker threads (0 = hardware)");
  sweep_cmd->add_option("--seed", seed, "seed recorded in output metadata");
  sweep_cmd->add_flag("--optimize,!--no-optimize",
                      [&](std::int64_t count) { optimize_override = count > 0 ? 1 : 0; },
                      "override the grid file's optimize flag");

  CLI::App* classify = app.add_subcommand("classify", "regime label and criteria margins");
  add_input(classify);
  add_output(classify);

  CLI::App* diagnose = app.add_subcommand("diagnose", "apparatus consistency diagnostics");
  add_input(diagnose, /*physical_only=*/true);
  add_output(diagnose);

  CLI::App* validate = app.add_subcommand("validate", "run the built-in correctness suites");
  validate->add_option("--seed", seed, "random seed for the suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit cleanly; bad usage is an input error
  }

  try {
    if (*variance) {
      return run_variance(params_path, reduced_path, tol, optimize, gain_opt->count() > 0, gain,
                          format, out_path);
    }
    if (*optg) return run_optimize_gain(params_path, reduced_path, tol, format, out_path);
    if (*sweep_cmd) {
      return run_sweep_cmd(grid_path, threads, seed, sweep_format, out_path, heatmap_path,
                           heatmap_column, optimize_override);
    }
    if (*classify) return run_classify(params_path, reduced_path, format, out_path);
    if (*diagnose) return run_diagnose(params_path, format, out_path);
    if (*validate) return run_validate(seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
