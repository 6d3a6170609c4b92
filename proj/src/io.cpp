#include "tclq/io.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <set>

#include <nlohmann/json.hpp>

namespace tclq {

using nlohmann::json;

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ConfigError(path + ": " + msg);
}

double get_number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

void check_keys(const json& obj, const std::string& path,
                const std::set<std::string>& allowed) {
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.count(key)) fail(path.empty() ? key : path + "." + key,
                                  "unknown key");
  }
}

BlochVector get_bloch(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 3) fail(path, "expected [x, y, z]");
  BlochVector v{get_number(j[0], path + "[0]"), get_number(j[1], path + "[1]"),
                get_number(j[2], path + "[2]")};
  if (v.norm() > 1.0 + kBlochNormTol) {
    fail(path, "Bloch vector norm " + format_double(v.norm()) +
                   " leaves the unit ball");
  }
  return v;
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
  json root = json::parse(json_text, nullptr, /*allow_exceptions=*/false);
  if (root.is_discarded()) throw ConfigError("config: malformed JSON");
  if (!root.is_object()) throw ConfigError("config: expected a JSON object");

  check_keys(root, "",
             {"scenario", "env", "control", "initial_bloch", "target_bloch",
              "t_f", "dt", "output_dir", "formats", "random_states",
              "verbosity"});

  RunConfig cfg;
  if (root.contains("scenario")) {
    if (!root["scenario"].is_string()) fail("scenario", "expected a string");
    cfg.scenario = root["scenario"].get<std::string>();
  }

  if (root.contains("env")) {
    const json& e = root["env"];
    if (!e.is_object()) fail("env", "expected an object");
    check_keys(e, "env", {"alpha", "omega0", "kT", "r"});
    if (e.contains("alpha")) cfg.env.alpha = get_number(e["alpha"], "env.alpha");
    if (e.contains("omega0"))
      cfg.env.omega0 = get_number(e["omega0"], "env.omega0");
    if (e.contains("kT")) cfg.env.kT = get_number(e["kT"], "env.kT");
    if (e.contains("r")) cfg.env.r = get_number(e["r"], "env.r");
  }

  if (root.contains("control")) {
    const json& c = root["control"];
    if (!c.is_object()) fail("control", "expected an object");
    check_keys(c, "control",
               {"g1", "g2", "theta", "epsilon", "dt", "t_f", "f_max"});
    auto opt = [&c](const char* key) -> std::optional<double> {
      if (!c.contains(key)) return std::nullopt;
      return get_number(c[key], std::string("control.") + key);
    };
    cfg.control.g1 = opt("g1");
    cfg.control.g2 = opt("g2");
    cfg.control.theta = opt("theta");
    cfg.control.epsilon = opt("epsilon");
    cfg.control.dt = opt("dt");
    cfg.control.t_f = opt("t_f");
    cfg.control.f_max = opt("f_max");
  }

  if (root.contains("initial_bloch")) {
    cfg.initial_bloch = get_bloch(root["initial_bloch"], "initial_bloch");
  }
  if (root.contains("target_bloch")) {
    cfg.target_bloch = get_bloch(root["target_bloch"], "target_bloch");
  }
  if (root.contains("t_f")) cfg.t_f = get_number(root["t_f"], "t_f");
  if (root.contains("dt")) cfg.dt = get_number(root["dt"], "dt");

  if (root.contains("output_dir")) {
    if (!root["output_dir"].is_string()) fail("output_dir", "expected a string");
    cfg.output_dir = root["output_dir"].get<std::string>();
  }
  if (root.contains("formats")) {
    if (!root["formats"].is_array()) fail("formats", "expected an array");
    cfg.formats.clear();
    for (const auto& f : root["formats"]) {
      if (!f.is_string()) fail("formats", "expected strings");
      const std::string fmt = f.get<std::string>();
      if (fmt != "csv" && fmt != "json") fail("formats", "unknown format " + fmt);
      cfg.formats.push_back(fmt);
    }
  }
  if (root.contains("random_states")) {
    const double n = get_number(root["random_states"], "random_states");
    if (n < 1 || n != std::floor(n)) fail("random_states", "expected a positive integer");
    cfg.random_states = static_cast<int>(n);
  }
  if (root.contains("verbosity")) {
    const double n = get_number(root["verbosity"], "verbosity");
    if (n != std::floor(n)) fail("verbosity", "expected an integer");
    cfg.verbosity = static_cast<int>(n);
  }

  // Validate overrides eagerly so a bad config never starts a run.
  materialize(cfg);
  return cfg;
}

Scenario materialize(const RunConfig& cfg) {
  Scenario s;
  if (!cfg.scenario.empty()) {
    const auto matches = find_scenarios(cfg.scenario);
    if (matches.empty()) {
      throw ConfigError("scenario: unknown name '" + cfg.scenario + "'");
    }
    if (matches.size() > 1) {
      throw ConfigError("scenario: '" + cfg.scenario +
                        "' is a family; pick a member or use sweep");
    }
    s = matches.front();
  } else {
    s.name = "custom";
    s.family = "custom";
    s.kind = ScenarioKind::Free;
    s.env = EnvironmentParams{};
    s.t_f = 50.0;
    s.dt = 0.01;
    s.outputs = {"trajectory"};
  }

  if (cfg.env.alpha) s.env.alpha = *cfg.env.alpha;
  if (cfg.env.omega0) s.env.omega0 = *cfg.env.omega0;
  if (cfg.env.kT) s.env.kT = *cfg.env.kT;
  if (cfg.env.r) s.env.r = *cfg.env.r;
  try {
    s.env.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }

  if (cfg.initial_bloch) s.initial = from_bloch(*cfg.initial_bloch);
  if (cfg.target_bloch) {
    s.target = from_bloch(*cfg.target_bloch);
    if (!s.control) s.control = ControlParams{};
    s.kind = ScenarioKind::Controlled;
  }

  const auto& c = cfg.control;
  const bool has_control_override = c.g1 || c.g2 || c.theta || c.epsilon ||
                                    c.dt || c.t_f || c.f_max;
  if (has_control_override) {
    if (!s.control) {
      throw ConfigError(
          "control: overrides given but the scenario has no target state");
    }
    if (c.g1) s.control->g1 = *c.g1;
    if (c.g2) s.control->g2 = *c.g2;
    if (c.theta) s.control->theta = *c.theta;
    if (c.epsilon) s.control->epsilon = *c.epsilon;
    if (c.dt) s.control->dt = *c.dt;
    if (c.t_f) s.control->t_f = *c.t_f;
    if (c.f_max) s.control->f_max = *c.f_max;
  }
  if (s.control) {
    try {
      s.control->validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    s.t_f = s.control->t_f;
    s.dt = s.control->dt;
  }

  if (cfg.t_f) s.t_f = *cfg.t_f;
  if (cfg.dt) s.dt = *cfg.dt;

  try {
    s.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return s;
}

void emit_trajectory_csv(const Trajectory& traj, std::ostream& out) {
  out << "t,x,y,z,purity,coherence,beta,V,f1,f2,branch\n";
  for (const auto& p : traj.points) {
    out << format_double(p.t) << ',' << format_double(p.bloch.x) << ','
        << format_double(p.bloch.y) << ',' << format_double(p.bloch.z) << ','
        << format_double(p.purity) << ',' << format_double(p.coherence) << ','
        << format_double(p.beta) << ',' << format_double(p.V) << ','
        << format_double(p.f1) << ',' << format_double(p.f2) << ','
        << branch_name(p.branch) << '\n';
  }
}

namespace {

json env_to_json(const EnvironmentParams& env) {
  return json{{"alpha", env.alpha},
              {"omega0", env.omega0},
              {"kT", env.kT},
              {"r", env.r}};
}

}  // namespace

void emit_trajectory_json(const Trajectory& traj, const Scenario& s,
                          std::ostream& out) {
  json params{{"scenario", s.name},
              {"env", env_to_json(s.env)},
              {"t_f", s.t_f},
              {"dt", s.dt}};
  if (s.control) {
    json c{{"g1", s.control->g1},   {"g2", s.control->g2},
           {"theta", s.control->theta}, {"epsilon", s.control->epsilon},
           {"dt", s.control->dt},   {"t_f", s.control->t_f}};
    if (s.control->f_max) c["f_max"] = *s.control->f_max;
    params["control"] = c;
  }
  if (s.target) {
    const BlochVector tb = to_bloch(*s.target);
    params["target_bloch"] = json::array({tb.x, tb.y, tb.z});
  }

  json samples = json::array();
  for (const auto& p : traj.points) {
    samples.push_back(json{{"t", p.t},
                           {"x", p.bloch.x},
                           {"y", p.bloch.y},
                           {"z", p.bloch.z},
                           {"purity", p.purity},
                           {"coherence", p.coherence},
                           {"beta", p.beta},
                           {"V", p.V},
                           {"f1", p.f1},
                           {"f2", p.f2},
                           {"branch", branch_name(p.branch)}});
  }
  out << json{{"params", params}, {"samples", samples}}.dump(2) << '\n';
}

void emit_coefficients_csv(const EnvironmentParams& env, double t_max,
                           double dt, bool full, std::ostream& out) {
  out << (full ? "t,beta,envelope,gamma,delta" : "t,beta,envelope") << '\n';
  const long n = std::lround(t_max / dt);
  for (long k = 0; k <= n; ++k) {
    const double t = k * dt;
    out << format_double(t) << ',' << format_double(beta_t(env, t)) << ','
        << format_double(envelope(env, t));
    if (full) {
      out << ',' << format_double(gamma_t(env, t)) << ','
          << format_double(delta_ht(env, t));
    }
    out << '\n';
  }
}

void emit_report_json(const Report& report, std::ostream& out) {
  json j{{"scenario", report.scenario},
         {"converged", report.converged},
         {"stalled", report.stalled},
         {"terminal_bloch", json::array({report.terminal_bloch.x,
                                         report.terminal_bloch.y,
                                         report.terminal_bloch.z})},
         {"min_eigenvalue", report.min_eigenvalue},
         {"max_trace_defect", report.max_trace_defect},
         {"non_physical", report.non_physical},
         {"path_length", report.path_length},
         {"files", report.files},
         {"notes", report.notes}};
  if (report.v_min != kNoTargetV) {
    j["v_min"] = report.v_min;
    j["t_at_v_min"] = report.t_at_v_min;
  }
  out << j.dump(2) << '\n';
}

}  // namespace tclq
