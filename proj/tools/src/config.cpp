#include "config.hpp"

#include <cmath>
#include <sstream>

#include "bettimap/error.hpp"
#include "bettimap/exact/rational.hpp"
#include "bettimap/mp/real.hpp"

namespace bettimap::cli {

namespace {

const std::vector<std::string> kKnownKeys = {
    "sections", "target", "disc",    "prec",   "tmax",   "nmax",       "threads", "out",    "grid",
    "samples",  "lambda", "height_iterations", "delta1", "delta2", "q", "max_degree", "oracle"};

long get_int(const json& j, const std::string& path, long lo, long hi) {
  if (!j.is_number_integer()) throw ConfigError(path, "expected an integer");
  long v = j.get<long>();
  if (v < lo || v > hi)
    throw ConfigError(path, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], got " +
                                std::to_string(v));
  return v;
}

double get_double(const json& j, const std::string& path) {
  if (!j.is_number()) throw ConfigError(path, "expected a number");
  double v = j.get<double>();
  if (!std::isfinite(v)) throw ConfigError(path, "must be finite");
  return v;
}

std::string get_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw ConfigError(path, "expected a string");
  return j.get<std::string>();
}

SectionSpec section_from_json(const json& j, const std::string& path) {
  SectionSpec s;
  if (j.is_string()) {
    s = parse_section_arg(j.get<std::string>(), path);
  } else if (j.is_object()) {
    if (!j.contains("x")) throw ConfigError(path + ".x", "missing");
    s.x = get_string(j["x"], path + ".x");
    if (j.contains("sign")) s.sign = int(get_int(j["sign"], path + ".sign", -1, 1));
  } else {
    throw ConfigError(path, "expected a string or an object with x and sign");
  }
  if (s.sign == 0) throw ConfigError(path + ".sign", "must be 1 or -1");
  try {
    (void)s.build();
  } catch (const Error& e) {
    throw ConfigError(path + ".x", std::string("cannot parse section: ") + e.what());
  }
  return s;
}

Disc disc_from_json(const json& j, const std::string& path) {
  Disc d;
  if (j.is_string()) {
    d = parse_disc(j.get<std::string>(), path);
  } else if (j.is_object()) {
    for (const char* k : {"re", "im", "radius"})
      if (!j.contains(k)) throw ConfigError(path + "." + k, "missing");
    d.re = get_double(j["re"], path + ".re");
    d.im = get_double(j["im"], path + ".im");
    d.radius = get_double(j["radius"], path + ".radius");
  } else {
    throw ConfigError(path, "expected \"RE,IM,RADIUS\" or an object with re, im, radius");
  }
  std::string why = d.validate();
  if (!why.empty()) throw ConfigError(path, why);
  return d;
}

}  // namespace

legendre::Section SectionSpec::build() const {
  if (x == "O" || x == "o") return legendre::Section::identity();
  return legendre::Section::parse(x, sign);
}

json SectionSpec::to_json() const { return json{{"x", x}, {"sign", sign}}; }

long RunConfig::working_bits() const { return prec + mp::kGuardBits; }

json RunConfig::to_json() const {
  json j;
  j["command"] = command;
  j["sections"] = json::array();
  for (const auto& s : sections) j["sections"].push_back(s.to_json());
  if (target) j["target"] = target->to_json();
  j["disc"] = json{{"re", disc.re}, {"im", disc.im}, {"radius", disc.radius}};
  j["prec"] = prec;
  j["tmax"] = tmax;
  j["nmax"] = nmax;
  j["threads"] = threads;
  j["out"] = out;
  j["grid"] = grid;
  j["samples"] = samples;
  if (!lambda.empty()) j["lambda"] = lambda;
  j["height_iterations"] = height_iterations;
  j["delta1"] = delta1;
  j["delta2"] = delta2;
  j["q"] = q;
  j["max_degree"] = max_degree;
  j["oracle"] = oracle;
  return j;
}

const std::vector<std::string>& commands() {
  static const std::vector<std::string> c = {"periods", "ellog", "betti", "scan", "divseq", "heights", "audit"};
  return c;
}

Disc parse_disc(const std::string& s, const std::string& path) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError(path, "cannot read number '" + item + "'");
    }
  }
  if (v.size() != 3) throw ConfigError(path, "expected RE,IM,RADIUS");
  Disc d;
  d.re = v[0];
  d.im = v[1];
  d.radius = v[2];
  return d;
}

SectionSpec parse_section_arg(const std::string& s, const std::string& path) {
  SectionSpec spec;
  auto colon = s.rfind(':');
  spec.x = s;
  if (colon != std::string::npos) {
    spec.x = s.substr(0, colon);
    std::string sg = s.substr(colon + 1);
    if (sg == "1" || sg == "+1" || sg == "+") spec.sign = 1;
    else if (sg == "-1" || sg == "-") spec.sign = -1;
    else throw ConfigError(path, "sign must be 1 or -1, got '" + sg + "'");
  }
  if (spec.x.empty()) throw ConfigError(path, "empty section");
  return spec;
}

RunConfig make_config(const std::string& command, const json& file, const json& overrides) {
  RunConfig c;
  c.command = command;
  if (std::find(commands().begin(), commands().end(), command) == commands().end())
    throw ConfigError("command", "unknown subcommand '" + command + "'");
  if (!file.is_object()) throw ConfigError("config", "expected a JSON object");
  json j = file;
  for (auto it = overrides.begin(); it != overrides.end(); ++it) j[it.key()] = it.value();
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::find(kKnownKeys.begin(), kKnownKeys.end(), it.key()) == kKnownKeys.end())
      throw ConfigError(it.key(), "unknown key");

  if (j.contains("sections")) {
    const json& s = j["sections"];
    if (!s.is_array()) throw ConfigError("sections", "expected an array");
    for (std::size_t i = 0; i < s.size(); ++i)
      c.sections.push_back(section_from_json(s[i], "sections[" + std::to_string(i) + "]"));
  }
  if (j.contains("target")) c.target = section_from_json(j["target"], "target");
  if (j.contains("disc")) c.disc = disc_from_json(j["disc"], "disc");
  if (j.contains("prec")) c.prec = get_int(j["prec"], "prec", 64, 1L << 16);
  if (j.contains("tmax")) c.tmax = get_int(j["tmax"], "tmax", 1, 1000);
  if (j.contains("nmax")) c.nmax = get_int(j["nmax"], "nmax", 1, 200);
  if (j.contains("threads")) c.threads = int(get_int(j["threads"], "threads", 1, 256));
  if (j.contains("out")) c.out = get_string(j["out"], "out");
  if (j.contains("grid")) c.grid = int(get_int(j["grid"], "grid", 2, 1024));
  if (j.contains("samples")) c.samples = int(get_int(j["samples"], "samples", 1, 1024));
  if (j.contains("lambda")) c.lambda = get_string(j["lambda"], "lambda");
  if (j.contains("height_iterations"))
    c.height_iterations = int(get_int(j["height_iterations"], "height_iterations", 1, 20));
  if (j.contains("delta1")) c.delta1 = get_double(j["delta1"], "delta1");
  if (j.contains("delta2")) c.delta2 = get_double(j["delta2"], "delta2");
  if (j.contains("q")) c.q = get_double(j["q"], "q");
  if (j.contains("max_degree")) c.max_degree = int(get_int(j["max_degree"], "max_degree", 1, 24));
  if (j.contains("oracle")) {
    if (!j["oracle"].is_boolean()) throw ConfigError("oracle", "expected true or false");
    c.oracle = j["oracle"].get<bool>();
  }

  if (c.sections.empty() && command != "periods")
    throw ConfigError("sections", "at least one section is required");
  if (c.q < 1) throw ConfigError("q", "must be at least 1");
  if (c.delta1 <= 0) throw ConfigError("delta1", "must be positive");
  if (command == "heights") {
    if (c.lambda.empty()) throw ConfigError("lambda", "required by heights");
    exact::Rational l;
    try {
      l = exact::parse_rational(c.lambda);
    } catch (const std::exception& e) {
      throw ConfigError("lambda", std::string("expected a rational number: ") + e.what());
    }
    if (l == 0 || l == 1) throw ConfigError("lambda", "must avoid 0 and 1");
  }
  if (command != "divseq" && command != "heights") {
    for (std::size_t i = 0; i < c.sections.size(); ++i)
      if (c.sections[i].build().is_identity())
        throw ConfigError("sections[" + std::to_string(i) + "].x", "the zero section has no logarithm");
  }
  if (command == "divseq" && c.sections.size() != 1)
    throw ConfigError("sections", "divseq takes exactly one section P (and target Q)");
  return c;
}

}  // namespace bettimap::cli
