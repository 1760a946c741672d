#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "form4/wilson.hpp"

// Run-configuration files and the machine-readable result records emitted
// by the command-line tool.  Output is byte-deterministic: fixed key order,
// floats printed with 17 significant digits (lossless round trip).

namespace form4::records {

struct RunConfig {
  wwe::Config config;
  int samples = 64;
  double fd_step = 1e-4;
};

inline double require_number(const nlohmann::json& j, const std::string& key) {
  if (!j.contains(key)) throw std::runtime_error("config field '" + key + "' is missing");
  if (!j.at(key).is_number())
    throw std::runtime_error("config field '" + key + "' must be a number");
  return j.at(key).get<double>();
}

inline RunConfig parse_run_config(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::runtime_error("config must be a JSON object");
  static const char* known[] = {"r1", "r2", "omega", "epsilon", "mu", "B0",
                                "height", "moment_of_inertia", "samples", "fd_step"};
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw std::runtime_error("unknown config field '" + key + "'");
  }
  RunConfig rc;
  rc.config.r1 = require_number(j, "r1");
  rc.config.r2 = require_number(j, "r2");
  rc.config.omega = require_number(j, "omega");
  rc.config.med.epsilon = require_number(j, "epsilon");
  rc.config.med.mu = require_number(j, "mu");
  rc.config.B0 = require_number(j, "B0");
  rc.config.height = require_number(j, "height");
  rc.config.moment_of_inertia = require_number(j, "moment_of_inertia");
  if (j.contains("samples")) {
    if (!j.at("samples").is_number_integer() || j.at("samples").get<long long>() < 1)
      throw std::runtime_error("config field 'samples' must be a positive integer");
    rc.samples = j.at("samples").get<int>();
  }
  if (j.contains("fd_step")) {
    rc.fd_step = require_number(j, "fd_step");
    if (!(rc.fd_step > 0.0)) throw std::runtime_error("config field 'fd_step' must be positive");
  }
  try {
    rc.config.validate();
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("config invalid: ") + e.what());
  }
  return rc;
}

inline RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config not found: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_run_config(ss.str());
}

inline std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

namespace detail {

// Minimal ordered JSON writer; every number goes through format_double.
class JsonWriter {
 public:
  JsonWriter& begin_object() { return token("{"); }
  JsonWriter& end_object() {
    trim_comma();
    out_ += "},";
    return *this;
  }
  JsonWriter& begin_array(const std::string& key) {
    key_token(key);
    out_ += "[";
    return *this;
  }
  JsonWriter& begin_array() { return token("["); }
  JsonWriter& end_array() {
    trim_comma();
    out_ += "],";
    return *this;
  }
  JsonWriter& begin_object(const std::string& key) {
    key_token(key);
    out_ += "{";
    return *this;
  }
  JsonWriter& field(const std::string& key, double v) {
    key_token(key);
    out_ += format_double(v);
    out_ += ",";
    return *this;
  }
  JsonWriter& field(const std::string& key, int v) {
    key_token(key);
    out_ += std::to_string(v);
    out_ += ",";
    return *this;
  }
  JsonWriter& field(const std::string& key, bool v) {
    key_token(key);
    out_ += v ? "true" : "false";
    out_ += ",";
    return *this;
  }
  JsonWriter& field(const std::string& key, const std::string& v) {
    key_token(key);
    out_ += quote(v);
    out_ += ",";
    return *this;
  }
  JsonWriter& value(double v) {
    out_ += format_double(v);
    out_ += ",";
    return *this;
  }

  std::string str() {
    trim_comma();
    return out_;
  }

 private:
  JsonWriter& token(const char* t) {
    out_ += t;
    return *this;
  }
  void key_token(const std::string& key) {
    out_ += quote(key);
    out_ += ":";
  }
  void trim_comma() {
    if (!out_.empty() && out_.back() == ',') out_.pop_back();
  }
  static std::string quote(const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      switch (c) {
        case '"': q += "\\\""; break;
        case '\\': q += "\\\\"; break;
        case '\n': q += "\\n"; break;
        case '\t': q += "\\t"; break;
        default: q += c;
      }
    }
    q += "\"";
    return q;
  }
  std::string out_;
};

}  // namespace detail

struct SolveRecord {
  RunConfig run;
  double K = 0.0;
  double L = 0.0;
  struct Sample {
    double r, E_r, B, H;
  };
  std::vector<Sample> samples;
  double V_exact = 0.0;
  double V_small_omega = 0.0;
  double L_mech_z = 0.0;
  double L_em_numeric_z = 0.0;
  double L_em_closed_magnitude = 0.0;
  wwe::ResidualReport residuals;
};

inline SolveRecord build_solve_record(const RunConfig& rc) {
  const wwe::InteriorSolution sol = wwe::solve(rc.config);
  const MetricAtPoint eta = MetricAtPoint::minkowski();
  const KVector theta0 = KVector::basis(1, 0);

  SolveRecord rec;
  rec.run = rc;
  rec.K = sol.K(rc.config.r2);  // c1 / r2; zero after a successful solve
  rec.L = sol.L();

  rec.samples.reserve(static_cast<std::size_t>(rc.samples));
  for (int i = 0; i < rc.samples; ++i) {
    const double r = (rc.samples == 1)
                         ? 0.5 * (rc.config.r1 + rc.config.r2)
                         : rc.config.r1 + (rc.config.r2 - rc.config.r1) * i / (rc.samples - 1);
    const auto f = wwe::fields_at(sol, r);
    // Lab split of field and excitation: E_r from theta0 _| F, B from
    // theta0 _| *F, H from theta0 _| *G.
    const KVector B_form = contract_left(theta0, hodge(f.F, eta), eta);
    const KVector H_form = contract_left(theta0, hodge(sol.excitation_tetrad(r), eta), eta);
    rec.samples.push_back({r, f.E_lab[1], B_form[3], H_form[3]});
  }

  const wwe::Potential pot = wwe::potential(sol);
  rec.V_exact = pot.V_exact;
  rec.V_small_omega = pot.V_small_omega;
  const wwe::AngularMomentum ang = wwe::angular_momentum(sol, 0);
  rec.L_mech_z = ang.L_mech_z;
  rec.L_em_numeric_z = ang.L_em_numeric_z;
  rec.L_em_closed_magnitude = ang.L_em_closed_magnitude;
  rec.residuals = wwe::residual_report(sol, rc.fd_step);
  return rec;
}

inline void write_config_fields(detail::JsonWriter& w, const RunConfig& rc) {
  w.field("r1", rc.config.r1)
      .field("r2", rc.config.r2)
      .field("omega", rc.config.omega)
      .field("epsilon", rc.config.med.epsilon)
      .field("mu", rc.config.med.mu)
      .field("B0", rc.config.B0)
      .field("height", rc.config.height)
      .field("moment_of_inertia", rc.config.moment_of_inertia)
      .field("samples", rc.samples)
      .field("fd_step", rc.fd_step);
}

inline std::string solve_record_json(const SolveRecord& rec) {
  detail::JsonWriter w;
  w.begin_object();
  w.begin_object("config");
  write_config_fields(w, rec.run);
  w.end_object();
  w.field("K", rec.K).field("L", rec.L);
  w.begin_array("samples");
  for (const auto& s : rec.samples) {
    w.begin_object();
    w.field("r", s.r).field("E_r", s.E_r).field("B", s.B).field("H", s.H);
    w.end_object();
  }
  w.end_array();
  w.field("V_exact", rec.V_exact)
      .field("V_small_omega", rec.V_small_omega)
      .field("L_mech_z", rec.L_mech_z)
      .field("L_em_numeric_z", rec.L_em_numeric_z)
      .field("L_em_closed_magnitude", rec.L_em_closed_magnitude);
  w.begin_object("residuals");
  w.field("dF_max", rec.residuals.dF_max)
      .field("dstarG_max", rec.residuals.dstarG_max)
      .field("jump_r1", rec.residuals.jump_r1)
      .field("jump_r2", rec.residuals.jump_r2);
  w.end_object();
  w.end_object();
  return w.str() + "\n";
}

inline std::string solve_record_csv(const SolveRecord& rec) {
  std::string out = "r,E_r,B_z_interior,H_z_interior\n";
  for (const auto& s : rec.samples) {
    out += format_double(s.r) + "," + format_double(s.E_r) + "," + format_double(s.B) + "," +
           format_double(s.H) + "\n";
  }
  return out;
}

inline std::string sweep_json(const std::vector<wwe::SweepRow>& rows, wwe::SweepParam param) {
  detail::JsonWriter w;
  w.begin_array();
  for (const auto& row : rows) {
    w.begin_object();
    w.field(wwe::sweep_param_name(param), row.value);
    if (row.ok) {
      w.field("V_exact", row.V_exact)
          .field("V_small_omega", row.V_small_omega)
          .field("L_em_numeric_z", row.L_em_numeric_z)
          .field("L_em_closed_magnitude", row.L_em_closed_magnitude);
    } else {
      w.field("error", row.error);
    }
    w.end_object();
  }
  w.end_array();
  return w.str() + "\n";
}

inline std::string sweep_csv(const std::vector<wwe::SweepRow>& rows, wwe::SweepParam param) {
  std::string out = std::string(wwe::sweep_param_name(param)) +
                    ",V_exact,V_small_omega,L_em_numeric_z,L_em_closed_magnitude,error\n";
  for (const auto& row : rows) {
    out += format_double(row.value) + ",";
    if (row.ok) {
      out += format_double(row.V_exact) + "," + format_double(row.V_small_omega) + "," +
             format_double(row.L_em_numeric_z) + "," + format_double(row.L_em_closed_magnitude) +
             ",";
    } else {
      out += ",,,,\"" + row.error + "\"";
    }
    out += "\n";
  }
  return out;
}

inline std::string residual_report_json(const RunConfig& rc, const wwe::ResidualReport& rep) {
  detail::JsonWriter w;
  w.begin_object();
  w.begin_object("config");
  write_config_fields(w, rc);
  w.end_object();
  w.field("h", rep.h).field("tolerance", rep.tolerance);
  w.begin_array("checks");
  const std::pair<const char*, double> checks[] = {
      {"dF_interior", rep.dF_max},
      {"dstarG_interior", rep.dstarG_max},
      {"jump_r1", rep.jump_r1},
      {"jump_r2", rep.jump_r2},
  };
  for (const auto& [name, value] : checks) {
    w.begin_object();
    w.field("name", std::string(name))
        .field("max_residual", value)
        .field("pass", value <= rep.tolerance);
    w.end_object();
  }
  w.end_array();
  w.field("pass", rep.pass());
  w.end_object();
  return w.str() + "\n";
}

}  // namespace form4::records
