#include <yaml-cpp/yaml.h>

#include <fstream>
#include <set>
#include <sstream>

#include "sf/cli.hpp"

namespace sf {

Character parse_character(const RootDatum& d, const std::string& spec) {
  if (spec == "trivial" || spec == "1") return Character::trivial(d.n);
  if (spec == "-1") {
    if (d.n != 1 || d.positive.empty()) throw MathError("character '-1' needs a rank-one lattice with a root");
    long c = std::abs(d.coroots[d.positive[0]][0]);
    return Character{static_cast<int>(2 * c), {1}};
  }
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw MathError("bad character spec '" + spec + "'");
  Character ch;
  try {
    ch.order = std::stoi(spec.substr(0, colon));
    std::stringstream ss(spec.substr(colon + 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) ch.exps.push_back(std::stol(tok));
  } catch (const std::logic_error&) {
    throw MathError("bad character spec '" + spec + "'");
  }
  if (ch.order < 1) throw MathError("character order must be positive");
  if (static_cast<int>(ch.exps.size()) != d.n)
    throw MathError("character '" + spec + "' has " + std::to_string(ch.exps.size()) + " exponents, lattice rank is " +
                    std::to_string(d.n));
  return ch;
}

AffineWeylElement parse_tau(const RootDatum& d, const std::string& spec) {
  AffineWeylElement t = AffineWeylElement::identity(d);
  if (spec == "id") return t;
  if (spec == "w") {
    if (d.positive.empty()) throw MathError("tau 'w' needs a root");
    t.w = d.reflection_index(d.positive[0]);
    return t;
  }
  try {
    t.w = std::stoi(spec);
  } catch (const std::logic_error&) {
    throw MathError("bad tau spec '" + spec + "'");
  }
  if (t.w < 0 || t.w >= static_cast<int>(d.weyl.size())) throw MathError("Weyl index out of range");
  return t;
}

RootDatum RunConfig::datum() const { return build_root_datum(cartan); }

ValuationProfile RunConfig::profile(const RootDatum& d) const {
  if (valuations.size() == 1) return ValuationProfile::constant(d, valuations[0]);
  if (valuations.size() != d.positive.size())
    throw MathError("valuations: expected 1 or " + std::to_string(d.positive.size()) + " entries");
  for (int v : valuations)
    if (v < 0) throw MathError("valuations must be nonnegative");
  return ValuationProfile{valuations};
}

void RunConfig::validate() const {
  RootDatum d = datum();
  for (int v : valuations)
    if (v < 0) throw MathError("valuations must be nonnegative");
  profile(d);
  parse_character(d, kappa);
  parse_tau(d, tau);
  if (!d.positive.empty() || s != "-1") parse_character(d, s);
  for (long x : q)
    if (!prime_power(x).first) throw MathError("q = " + std::to_string(x) + " is not a prime power");
  if (kmax < 0 || window < 0 || vmax < 0 || hmax < 0 || mrange < 0 || dmax < 1 || random_instances < 0)
    throw MathError("bounds must be nonnegative");
}

namespace {

std::string scalar_or_character(const YAML::Node& n) {
  if (n.IsScalar()) return n.as<std::string>();
  if (!n.IsMap() || !n["order"] || !n["values"]) throw MathError("character must be a string or {order, values}");
  std::string s = n["order"].as<std::string>() + ":";
  bool first = true;
  for (auto e : n["values"]) {
    if (!first) s += ",";
    s += e.as<std::string>();
    first = false;
  }
  return s;
}

template <class T>
std::vector<T> scalar_or_list(const YAML::Node& n) {
  std::vector<T> out;
  if (n.IsSequence())
    for (auto e : n) out.push_back(e.as<T>());
  else
    out.push_back(n.as<T>());
  return out;
}

}  // namespace

RunConfig parse_config_text(const std::string& yaml) {
  RunConfig c;
  YAML::Node root;
  try {
    root = YAML::Load(yaml);
  } catch (const YAML::Exception& e) {
    throw MathError(std::string("config parse error: ") + e.what());
  }
  if (root.IsNull()) return c;
  if (!root.IsMap()) throw MathError("config must be a mapping");
  static const std::set<std::string> known{"type", "form", "torus_rank", "valuations", "s", "kappa", "tau",
                                           "q", "space", "kmax", "window", "lemmas"};
  try {
    for (auto kv : root) {
      auto key = kv.first.as<std::string>();
      if (!known.count(key)) throw MathError("unknown config key '" + key + "'");
    }
    if (root["type"]) c.cartan.type = root["type"].as<std::string>();
    if (root["form"]) c.cartan.form = root["form"].as<std::string>();
    if (root["torus_rank"]) c.cartan.torus_rank = root["torus_rank"].as<int>();
    if (root["valuations"]) c.valuations = scalar_or_list<int>(root["valuations"]);
    if (root["s"]) c.s = scalar_or_character(root["s"]);
    if (root["kappa"]) c.kappa = scalar_or_character(root["kappa"]);
    if (root["tau"]) c.tau = root["tau"].as<std::string>();
    if (root["q"]) c.q = scalar_or_list<long>(root["q"]);
    if (root["space"]) c.space = parse_space(root["space"].as<std::string>());
    if (root["kmax"]) c.kmax = root["kmax"].as<int>();
    if (root["window"]) c.window = root["window"].as<int>();
    if (auto l = root["lemmas"]) {
      if (l["vmax"]) c.vmax = l["vmax"].as<int>();
      if (l["hmax"]) c.hmax = l["hmax"].as<int>();
      if (l["mrange"]) c.mrange = l["mrange"].as<int>();
      if (l["dmax"]) c.dmax = l["dmax"].as<int>();
      if (l["instances"]) c.random_instances = l["instances"].as<int>();
      if (l["seed"]) c.seed = l["seed"].as<unsigned>();
    }
  } catch (const YAML::Exception& e) {
    throw MathError(std::string("config value error: ") + e.what());
  }
  c.validate();
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MathError("cannot read config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

}  // namespace sf
