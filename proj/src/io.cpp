#include "hybridcool/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "hybridcool/constants.hpp"

namespace hybridcool {
namespace io {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_object(const std::string& text, const std::string& what) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(what + ": JSON parse error: " + e.what());
  }
  if (!j.is_object()) throw std::runtime_error(what + ": top-level JSON object expected");
  return j;
}

// Tracks which keys were consumed so leftovers can be rejected by name.
class FieldReader {
 public:
  FieldReader(const json& j, std::string what) : j_(j), what_(std::move(what)) {}

  bool has(const std::string& name) const { return j_.contains(name); }

  double number(const std::string& name) {
    const json& v = j_.at(name);
    if (!v.is_number()) throw std::runtime_error(what_ + ": field '" + name + "' must be a number");
    used_.insert(name);
    return v.get<double>();
  }

  double number_or(const std::string& name, double fallback) {
    return has(name) ? number(name) : fallback;
  }

  int integer(const std::string& name, int fallback) {
    if (!has(name)) return fallback;
    const json& v = j_.at(name);
    if (!v.is_number_integer()) {
      throw std::runtime_error(what_ + ": field '" + name + "' must be an integer");
    }
    used_.insert(name);
    return v.get<int>();
  }

  bool boolean(const std::string& name, bool fallback) {
    if (!has(name)) return fallback;
    const json& v = j_.at(name);
    if (!v.is_boolean()) throw std::runtime_error(what_ + ": field '" + name + "' must be a boolean");
    used_.insert(name);
    return v.get<bool>();
  }

  // Angular rate: either <name> in rad/s or <name>_Hz (multiplied by 2*pi).
  bool rate(const std::string& name, double* out) {
    const std::string hz = name + "_Hz";
    const bool has_rad = has(name), has_hz = has(hz);
    if (has_rad && has_hz) {
      throw std::runtime_error(what_ + ": field '" + name + "' given in both rad/s and Hz forms");
    }
    if (has_rad) {
      *out = number(name);
      return true;
    }
    if (has_hz) {
      *out = kTwoPi * number(hz);
      return true;
    }
    return false;
  }

  double rate_required(const std::string& name) {
    double v = 0.0;
    if (!rate(name, &v)) throw std::runtime_error(what_ + ": missing field '" + name + "'");
    return v;
  }

  double number_required(const std::string& name) {
    if (!has(name)) throw std::runtime_error(what_ + ": missing field '" + name + "'");
    return number(name);
  }

  // Bandwidth: rad/s number, Hz variant, or the string "inf"; missing means
  // infinite (unfiltered feedback).
  double bandwidth(const std::string& name) {
    if (has(name) && j_.at(name).is_string()) {
      const std::string s = j_.at(name).get<std::string>();
      if (s == "inf" || s == "infinity") {
        used_.insert(name);
        return std::numeric_limits<double>::infinity();
      }
      throw std::runtime_error(what_ + ": field '" + name + "' must be a rate or \"inf\"");
    }
    double v = std::numeric_limits<double>::infinity();
    rate(name, &v);
    return v;
  }

  void finish() const {
    for (const auto& item : j_.items()) {
      if (!used_.count(item.key())) {
        throw std::runtime_error(what_ + ": unknown field '" + item.key() + "'");
      }
    }
  }

 private:
  const json& j_;
  std::string what_;
  std::set<std::string> used_;
};

json meta_json(const sweep::SweepResult& result, std::uint64_t seed) {
  const sweep::SweepGrid& g = result.grid;
  json grid;
  grid["nx"] = g.nx;
  grid["ny"] = g.ny;
  grid["x_min"] = g.x_min;
  grid["x_max"] = g.x_max;
  grid["y_min"] = g.y_min;
  grid["y_max"] = g.y_max;
  grid["optimize"] = g.optimize;
  grid["rel_tol"] = g.rel_tol;
  json fixed;
  fixed["Omega"] = g.Omega;
  fixed["gamma_m"] = g.gamma_m;
  fixed["gamma_a"] = g.gamma_a;
  fixed["n_bath"] = g.n_bath;
  fixed["eta"] = g.eta;
  if (std::isinf(g.fb_bandwidth)) {
    fixed["fb_bandwidth"] = "inf";
  } else {
    fixed["fb_bandwidth"] = g.fb_bandwidth;
  }
  json meta;
  meta["grid"] = grid;
  meta["params"] = fixed;
  meta["tool_version"] = kToolVersion;
  meta["seed"] = seed;
  return meta;
}

json cell_json(const sweep::SweepCell& c) {
  auto num = [](double v) -> json {
    if (std::isfinite(v)) return v;
    return nullptr;
  };
  json j;
  j["cm"] = num(c.cm);
  j["ca"] = num(c.ca);
  j["c"] = num(c.c);
  j["g_over_omega"] = num(c.g_over_omega);
  j["stable"] = c.stable;
  j["var_num_g0"] = num(c.var_num_g0);
  j["var_num_gopt"] = num(c.var_num_gopt);
  j["var_weak"] = num(c.var_weak);
  j["var_strong"] = num(c.var_strong);
  j["g_opt"] = num(c.g_opt);
  j["g_opt0"] = num(c.g_opt0);
  j["gain_ratio"] = num(c.gain_ratio);
  j["regime"] = sweep::regime_name(c.regime);
  j["status"] = c.status;
  j["err_est"] = num(c.err_est);
  return j;
}

params::Regime regime_from_name(const std::string& name) {
  if (name == "sympathetic") return params::Regime::kSympatheticGround;
  if (name == "feedback") return params::Regime::kFeedbackGround;
  if (name == "both") return params::Regime::kBothGround;
  if (name == "neither") return params::Regime::kNeither;
  if (name == "unstable") return params::Regime::kUnstable;
  throw std::runtime_error("unknown regime label '" + name + "'");
}

double parse_double(const std::string& field) {
  if (field == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (field == "inf") return std::numeric_limits<double>::infinity();
  if (field == "-inf") return -std::numeric_limits<double>::infinity();
  std::size_t pos = 0;
  const double v = std::stod(field, &pos);
  if (pos != field.size()) throw std::runtime_error("bad numeric CSV field '" + field + "'");
  return v;
}

constexpr const char* kCsvHeader =
    "cm,ca,c,g_over_omega,stable,var_num_g0,var_num_gopt,var_weak,var_strong,"
    "g_opt,g_opt0,gain_ratio,regime,status,err_est";

}  // namespace

params::PhysicalParams physical_params_from_json(const std::string& text) {
  const json j = parse_object(text, "physical params");
  FieldReader f(j, "physical params");
  params::PhysicalParams p;
  p.M = f.number_required("M");
  p.omega_m = f.rate_required("omega_m");
  p.gamma_m = f.rate_required("gamma_m");
  p.T_bath = f.number_required("T_bath");
  p.m_atom = f.number_required("m_atom");
  p.N = f.number_required("N");
  p.omega_a = f.rate_required("omega_a");
  p.gamma_a = f.rate_required("gamma_a");
  p.kappa_MC = f.rate_required("kappa_MC");
  p.kappa_AC = f.rate_required("kappa_AC");
  p.alpha_d = f.number_required("alpha_d");
  p.g_m = f.rate_required("g_m");  // rad/(s m); the Hz form is cycles/(s m)
  p.k_wave = f.number_required("k_wave");
  p.delta_t = f.rate_required("delta_t");
  p.mu = f.number_required("mu");
  p.mode_volume = f.number_required("mode_volume");
  p.gamma_e = f.rate_required("gamma_e");
  p.eta = f.number_or("eta", 1.0);
  f.finish();
  p.validate();
  return p;
}

params::ReducedParams reduced_params_from_json(const std::string& text) {
  const json j = parse_object(text, "reduced params");
  FieldReader f(j, "reduced params");
  params::ReducedParams r;
  r.Omega = f.rate_required("Omega");
  r.gamma_m = f.rate_required("gamma_m");
  r.gamma_a = f.rate_required("gamma_a");
  r.n_bath = f.number_required("n_bath");
  r.c_m = f.number_required("c_m");
  r.c_a = f.number_required("c_a");
  r.eta = f.number_or("eta", 1.0);
  r.G = f.number_or("G", 0.0);
  r.fb_bandwidth = f.bandwidth("fb_bandwidth");
  f.finish();
  r.validate();
  return r;
}

sweep::SweepGrid sweep_grid_from_json(const std::string& text) {
  const json j = parse_object(text, "sweep grid");
  FieldReader f(j, "sweep grid");
  sweep::SweepGrid g;
  g.nx = f.integer("nx", g.nx);
  g.ny = f.integer("ny", g.ny);
  g.x_min = f.number_or("x_min", g.x_min);
  g.x_max = f.number_or("x_max", g.x_max);
  g.y_min = f.number_or("y_min", g.y_min);
  g.y_max = f.number_or("y_max", g.y_max);
  g.Omega = f.rate_required("Omega");
  g.gamma_m = f.rate_required("gamma_m");
  g.gamma_a = f.rate_required("gamma_a");
  g.n_bath = f.number_required("n_bath");
  g.eta = f.number_or("eta", g.eta);
  g.fb_bandwidth = f.bandwidth("fb_bandwidth");
  g.optimize = f.boolean("optimize", g.optimize);
  g.rel_tol = f.number_or("rel_tol", g.rel_tol);
  f.finish();
  g.validate();
  return g;
}

params::PhysicalParams load_physical_params(const std::string& path) {
  return physical_params_from_json(read_file(path));
}

params::ReducedParams load_reduced_params(const std::string& path) {
  return reduced_params_from_json(read_file(path));
}

sweep::SweepGrid load_sweep_grid(const std::string& path) {
  return sweep_grid_from_json(read_file(path));
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string sweep_csv(const sweep::SweepResult& result, std::uint64_t seed) {
  std::string out;
  out.reserve(result.cells.size() * 220 + 512);
  out += "# hybridcool sweep ";
  out += kToolVersion;
  out += "\n# meta: ";
  out += meta_json(result, seed).dump();
  out += "\n";
  out += kCsvHeader;
  out += "\n";
  for (const sweep::SweepCell& c : result.cells) {
    out += format_double(c.cm);
    out += ',';
    out += format_double(c.ca);
    out += ',';
    out += format_double(c.c);
    out += ',';
    out += format_double(c.g_over_omega);
    out += ',';
    out += c.stable ? '1' : '0';
    out += ',';
    out += format_double(c.var_num_g0);
    out += ',';
    out += format_double(c.var_num_gopt);
    out += ',';
    out += format_double(c.var_weak);
    out += ',';
    out += format_double(c.var_strong);
    out += ',';
    out += format_double(c.g_opt);
    out += ',';
    out += format_double(c.g_opt0);
    out += ',';
    out += format_double(c.gain_ratio);
    out += ',';
    out += sweep::regime_name(c.regime);
    out += ',';
    out += c.status;
    out += ',';
    out += format_double(c.err_est);
    out += '\n';
  }
  return out;
}

std::string sweep_json(const sweep::SweepResult& result, std::uint64_t seed) {
  json doc;
  doc["metadata"] = meta_json(result, seed);
  json cells = json::array();
  for (const sweep::SweepCell& c : result.cells) cells.push_back(cell_json(c));
  doc["cells"] = std::move(cells);
  return doc.dump(2) + "\n";
}

std::vector<sweep::SweepCell> read_sweep_csv(std::istream& is) {
  std::vector<sweep::SweepCell> cells;
  std::string line;
  bool header_seen = false;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != kCsvHeader) throw std::runtime_error("unexpected CSV header: " + line);
      header_seen = true;
      continue;
    }
    std::vector<std::string> fields;
    std::string field;
    std::istringstream row(line);
    while (std::getline(row, field, ',')) fields.push_back(field);
    if (fields.size() != 15) {
      throw std::runtime_error("CSV row with " + std::to_string(fields.size()) + " fields");
    }
    sweep::SweepCell c;
    c.cm = parse_double(fields[0]);
    c.ca = parse_double(fields[1]);
    c.c = parse_double(fields[2]);
    c.g_over_omega = parse_double(fields[3]);
    c.stable = fields[4] == "1";
    c.var_num_g0 = parse_double(fields[5]);
    c.var_num_gopt = parse_double(fields[6]);
    c.var_weak = parse_double(fields[7]);
    c.var_strong = parse_double(fields[8]);
    c.g_opt = parse_double(fields[9]);
    c.g_opt0 = parse_double(fields[10]);
    c.gain_ratio = parse_double(fields[11]);
    c.regime = regime_from_name(fields[12]);
    c.status = fields[13];
    c.err_est = parse_double(fields[14]);
    cells.push_back(std::move(c));
  }
  if (!header_seen) throw std::runtime_error("CSV header row not found");
  return cells;
}

void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace io
}  // namespace hybridcool
