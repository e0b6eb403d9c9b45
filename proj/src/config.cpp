#include "nbx/config.hpp"

#include "json.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace nbx {
namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::string& where, std::set<std::string> allowed) {
  if (!obj.is_object()) throw ConfigError("'" + where + "' must be an object");
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!allowed.count(key))
      throw ConfigError("unknown key '" + (where.empty() ? key : where + "." + key) + "'");
  }
}

template <typename T>
T get(const json& obj, const std::string& key, const std::string& where) {
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError("invalid value for '" + where + key + "'");
  }
}

double get_number(const json& obj, const std::string& key, const std::string& where) {
  const json& v = obj.at(key);
  if (!v.is_number()) throw ConfigError("'" + where + key + "' must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ConfigError("'" + where + key + "' must be finite");
  return d;
}

int get_int(const json& obj, const std::string& key, const std::string& where) {
  const json& v = obj.at(key);
  if (!v.is_number_integer()) throw ConfigError("'" + where + key + "' must be an integer");
  return v.get<int>();
}

std::vector<double> get_numbers(const json& obj, const std::string& key, const std::string& where) {
  const json& v = obj.at(key);
  if (!v.is_array()) throw ConfigError("'" + where + key + "' must be an array of numbers");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) throw ConfigError("'" + where + key + "' must be an array of numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

void parse_initial(const json& obj, InitialStateSpec& spec) {
  const std::string w = "evolve.initial.";
  reject_unknown(obj, "evolve.initial", {"kind", "twice_m", "re", "im"});
  if (obj.contains("kind")) {
    const auto k = get<std::string>(obj, "kind", w);
    if (k == "dicke") spec.kind = InitialStateSpec::Kind::dicke;
    else if (k == "rotated") spec.kind = InitialStateSpec::Kind::rotated;
    else if (k == "amplitudes") spec.kind = InitialStateSpec::Kind::amplitudes;
    else throw ConfigError("evolve.initial.kind must be dicke, rotated or amplitudes");
  }
  if (obj.contains("twice_m")) spec.twice_m = get_int(obj, "twice_m", w);
  if (obj.contains("re")) spec.re = get_numbers(obj, "re", w);
  if (obj.contains("im")) spec.im = get_numbers(obj, "im", w);
  const bool amps = spec.kind == InitialStateSpec::Kind::amplitudes;
  if (amps && spec.re.empty()) throw ConfigError("amplitude initial state needs 're'");
  if (amps && !spec.im.empty() && spec.im.size() != spec.re.size())
    throw ConfigError("evolve.initial 're' and 'im' differ in length");
  if (!amps && (!spec.re.empty() || !spec.im.empty()))
    throw ConfigError("'re'/'im' are only valid for amplitude initial states");
  if (amps && spec.twice_m) throw ConfigError("'twice_m' is not valid for amplitude initial states");
}

}  // namespace

ModelParams RunConfig::model() const {
  if (A.empty()) throw ConfigError("model coefficients A are required");
  if (A.size() < 2) throw ConfigError("model needs at least A_0 and A_1");
  try {
    return ModelParams::make(A, theta, phi);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

HalfInt RunConfig::spin() const {
  if (!twice_j) throw ConfigError("spin is required (twice_j in config or --j)");
  if (*twice_j < 0) throw ConfigError("twice_j must be non-negative");
  return HalfInt::from_twice(*twice_j);
}

OutputFormat parse_format(const std::string& text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  throw ConfigError("output format must be csv or json, got '" + text + "'");
}

std::vector<double> parse_coefficients(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ConfigError("empty coefficient in '" + text + "'");
    const std::string s = item.substr(b, e - b + 1);
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(v))
      throw ConfigError("malformed coefficient '" + s + "'");
    out.push_back(v);
  }
  if (out.empty()) throw ConfigError("no coefficients in '" + text + "'");
  return out;
}

RunConfig parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  reject_unknown(root, "",
                 {"model", "twice_j", "evolve", "ground", "verify", "output", "convention",
                  "threads"});
  RunConfig c;

  if (root.contains("model")) {
    const json& m = root["model"];
    reject_unknown(m, "model", {"n", "A", "theta", "phi"});
    if (m.contains("A")) c.A = get_numbers(m, "A", "model.");
    if (m.contains("theta")) c.theta = get_number(m, "theta", "model.");
    if (m.contains("phi")) c.phi = get_number(m, "phi", "model.");
    if (m.contains("n")) {
      const int n = get_int(m, "n", "model.");
      if (n < 1 || c.A.size() != static_cast<std::size_t>(n) + 1)
        throw ConfigError("model.n = " + std::to_string(n) + " needs " + std::to_string(n + 1) +
                          " coefficients, got " + std::to_string(c.A.size()));
    }
  }
  if (root.contains("twice_j")) c.twice_j = get_int(root, "twice_j", "");

  if (root.contains("evolve")) {
    const json& e = root["evolve"];
    reject_unknown(e, "evolve", {"t_start", "t_stop", "samples", "paper_formula", "initial"});
    if (e.contains("t_start")) c.evolve.t_start = get_number(e, "t_start", "evolve.");
    if (e.contains("t_stop")) c.evolve.t_stop = get_number(e, "t_stop", "evolve.");
    if (e.contains("samples")) {
      const int s = get_int(e, "samples", "evolve.");
      if (s < 2) throw ConfigError("evolve.samples must be at least 2");
      c.evolve.samples = static_cast<std::size_t>(s);
    }
    if (e.contains("paper_formula")) c.evolve.paper_formula = get<bool>(e, "paper_formula", "evolve.");
    if (e.contains("initial")) parse_initial(e["initial"], c.evolve.initial);
    if (!(c.evolve.t_stop > c.evolve.t_start)) throw ConfigError("evolve.t_stop must exceed t_start");
  }

  if (root.contains("ground")) {
    const json& g = root["ground"];
    reject_unknown(g, "ground", {"peak_floor"});
    if (g.contains("peak_floor")) c.peak_floor = get_number(g, "peak_floor", "ground.");
    if (!(c.peak_floor >= 0.0 && c.peak_floor < 1.0))
      throw ConfigError("ground.peak_floor must lie in [0, 1)");
  }

  if (root.contains("verify")) {
    const json& v = root["verify"];
    reject_unknown(v, "verify", {"seed", "max_twice_j", "draws"});
    if (v.contains("seed")) {
      if (!v["seed"].is_number_unsigned()) throw ConfigError("verify.seed must be a non-negative integer");
      c.verify.seed = v["seed"].get<std::uint64_t>();
    }
    if (v.contains("max_twice_j")) c.verify.max_twice_j = get_int(v, "max_twice_j", "verify.");
    if (v.contains("draws")) c.verify.draws = get_int(v, "draws", "verify.");
  }

  if (root.contains("output")) {
    const json& o = root["output"];
    reject_unknown(o, "output", {"path", "format"});
    if (o.contains("path")) c.out_path = get<std::string>(o, "path", "output.");
    if (o.contains("format")) c.format = parse_format(get<std::string>(o, "format", "output."));
  }

  if (root.contains("convention")) {
    try {
      c.verify.convention = parse_convention(get<std::string>(root, "convention", ""));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  if (root.contains("threads")) {
    const int t = get_int(root, "threads", "");
    if (t < 1) throw ConfigError("threads must be at least 1");
    c.threads = static_cast<unsigned>(t);
  }
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

void apply_overrides(RunConfig& c, const Overrides& flags) {
  if (flags.out_path) c.out_path = *flags.out_path;
  if (flags.format) c.format = parse_format(*flags.format);
  if (flags.twice_j) {
    if (*flags.twice_j < 0) throw ConfigError("--j must be non-negative");
    c.twice_j = *flags.twice_j;
  }
  if (flags.theta) c.theta = *flags.theta;
  if (flags.phi) c.phi = *flags.phi;
  if (flags.A) c.A = parse_coefficients(*flags.A);
  if (flags.convention) {
    try {
      c.verify.convention = parse_convention(*flags.convention);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  if (flags.threads) {
    if (*flags.threads < 1) throw ConfigError("--threads must be at least 1");
    c.threads = *flags.threads;
  }
  if (flags.max_j) {
    const double twice = 2.0 * *flags.max_j;
    if (!(twice >= 1.0) || twice != std::floor(twice))
      throw ConfigError("--max-j must be a positive multiple of 1/2");
    c.verify.max_twice_j = static_cast<int>(twice);
  }
  if (flags.seed) c.verify.seed = *flags.seed;
  if (flags.inject_fault) c.verify.inject_fault = true;
}

}  // namespace nbx
