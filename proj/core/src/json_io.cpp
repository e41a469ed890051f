#include "halfspin/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace halfspin {

namespace {

using nlohmann::json;

Rational rational_from_json(const json& v, const std::string& field) {
  try {
    if (v.is_string()) return rational_from_string(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(field, e.what());
  }
  throw ConfigError(field, "expected a rational as \"p/q\" string or integer");
}

// Field-element coordinates: a scalar, or an array of length 1, 2 or 4 on the
// basis {1, sqrt(m1), sqrt(m2), sqrt(m1)sqrt(m2)}. `max_coords` restricts
// base-field entries (m2, delta) to their E0 coordinates.
std::array<Rational, 4> coords_from_json(const json& v, const std::string& field,
                                         size_t max_coords) {
  std::array<Rational, 4> out{Rational(0), Rational(0), Rational(0), Rational(0)};
  if (!v.is_array()) {
    out[0] = rational_from_json(v, field);
    return out;
  }
  if (v.size() != 1 && v.size() != 2 && v.size() != 4)
    throw ConfigError(field, "coordinate arrays must have length 1, 2 or 4");
  for (size_t i = 0; i < v.size(); ++i) {
    Rational c = rational_from_json(v[i], field);
    if (i >= max_coords && sgn(c) != 0)
      throw ConfigError(field, "coordinate " + std::to_string(i) + " must be zero here");
    if (i < 4) out[i] = std::move(c);
  }
  return out;
}

json coords_to_json(const std::array<Rational, 2>& c) {
  return json::array({rational_to_string(c[0]), rational_to_string(c[1])});
}

std::string status_to_string(SuiteStatus s) {
  switch (s) {
    case SuiteStatus::Pass: return "pass";
    case SuiteStatus::Fail: return "fail";
    case SuiteStatus::Unknown: return "unknown";
  }
  return "unknown";
}

SuiteStatus status_from_string(const std::string& s) {
  if (s == "pass") return SuiteStatus::Pass;
  if (s == "fail") return SuiteStatus::Fail;
  if (s == "unknown") return SuiteStatus::Unknown;
  throw std::invalid_argument("unknown report status: " + s);
}

}  // namespace

ScenarioConfig config_from_json(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("config", std::string("JSON parse error: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config", "top-level value must be an object");

  ScenarioConfig cfg;
  if (!root.contains("tower") || !root["tower"].is_object())
    throw ConfigError("tower", "missing tower object");
  const json& tower = root["tower"];
  if (tower.contains("m1") && !tower["m1"].is_null())
    cfg.m1 = rational_from_json(tower["m1"], "tower.m1");
  if (!tower.contains("m2")) throw ConfigError("tower.m2", "missing m2");
  const auto m2 = coords_from_json(tower["m2"], "tower.m2", 2);
  cfg.m2 = {m2[0], m2[1]};

  auto get_int = [&root](const char* name) {
    if (!root.contains(name) || !root[name].is_number_integer())
      throw ConfigError(name, std::string("missing or non-integer ") + name);
    return root[name].get<int>();
  };
  cfg.n = get_int("n");
  cfg.k = get_int("k");

  if (!root.contains("delta")) throw ConfigError("delta", "missing delta");
  const auto delta = coords_from_json(root["delta"], "delta", 2);
  cfg.delta = {delta[0], delta[1]};

  if (root.contains("permutation") && !root["permutation"].is_null()) {
    const json& p = root["permutation"];
    if (!p.is_object() || !p.contains("a") || !p.contains("r") ||
        !p["a"].is_number_integer() || !p["r"].is_number_integer())
      throw ConfigError("permutation", "permutation must be an object with integers a and r");
    cfg.permutation = {p["a"].get<int>(), p["r"].get<int>()};
  }

  if (!root.contains("suites") || !root["suites"].is_array() || root["suites"].empty())
    throw ConfigError("suites", "suites must be a non-empty array");
  for (const auto& s : root["suites"]) {
    if (!s.is_string()) throw ConfigError("suites", "suite names must be strings");
    cfg.suites.push_back(s.get<std::string>());
  }

  if (root.contains("seed")) {
    if (!root["seed"].is_number_integer()) throw ConfigError("seed", "seed must be an integer");
    cfg.seed = root["seed"].get<std::uint64_t>();
  }
  if (root.contains("trials")) {
    if (!root["trials"].is_number_integer())
      throw ConfigError("trials", "trials must be an integer");
    cfg.trials = root["trials"].get<int>();
  }
  return cfg;
}

ScenarioConfig config_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot read config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return config_from_json(buf.str());
}

std::string config_to_json(const ScenarioConfig& cfg) {
  json root;
  json tower;
  if (cfg.m1) tower["m1"] = rational_to_string(*cfg.m1);
  tower["m2"] = coords_to_json(cfg.m2);
  root["tower"] = tower;
  root["n"] = cfg.n;
  root["k"] = cfg.k;
  root["delta"] = coords_to_json(cfg.delta);
  if (cfg.permutation)
    root["permutation"] = json{{"a", cfg.permutation->first}, {"r", cfg.permutation->second}};
  root["suites"] = cfg.suites;
  root["seed"] = cfg.seed;
  root["trials"] = cfg.trials;
  return root.dump();
}

std::string report_to_json(const SuiteReport& rep) {
  json j;
  j["suite"] = rep.suite;
  j["status"] = status_to_string(rep.status);
  j["checks_run"] = rep.checks_run;
  if (rep.counterexample) j["counterexample"] = *rep.counterexample;
  j["elapsed"] = 0;
  return j.dump();
}

SuiteReport report_from_json(const std::string& text) {
  const json j = json::parse(text);
  SuiteReport rep;
  rep.suite = j.at("suite").get<std::string>();
  rep.status = status_from_string(j.at("status").get<std::string>());
  rep.checks_run = j.at("checks_run").get<long>();
  if (j.contains("counterexample"))
    rep.counterexample = j["counterexample"].get<std::map<std::string, std::string>>();
  rep.elapsed_ms = j.at("elapsed").get<long>();
  return rep;
}

std::string report_to_text(const SuiteReport& rep) {
  std::ostringstream os;
  os << rep.suite << ": " << status_to_string(rep.status) << " (" << rep.checks_run
     << " checks, " << rep.elapsed_ms << " ms)";
  if (rep.counterexample) {
    for (const auto& [key, value] : *rep.counterexample) os << "\n  " << key << ": " << value;
  }
  return os.str();
}

}  // namespace halfspin
