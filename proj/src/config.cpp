#include "cw/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "cw/arc_curve.hpp"
#include "cw/errors.hpp"

namespace cw {

namespace {

using nlohmann::json;

[[noreturn]] void schema_fail(const std::string& path, const std::string& why) {
  throw SchemaError("config: " + path + ": " + why);
}

void require_keys(const json& obj, const std::string& path,
                  const std::set<std::string>& allowed) {
  for (const auto& item : obj.items()) {
    if (!allowed.count(item.key())) {
      schema_fail(path + "." + item.key(), "unknown key");
    }
  }
}

double get_number(const json& obj, const std::string& path, const char* key,
                  bool required, double fallback = 0.0) {
  if (!obj.contains(key)) {
    if (required) schema_fail(path + "." + key, "missing");
    return fallback;
  }
  const json& v = obj.at(key);
  if (!v.is_number()) schema_fail(path + "." + key, "expected a number");
  return v.get<double>();
}

int get_integer(const json& obj, const std::string& path, const char* key) {
  if (!obj.contains(key)) schema_fail(path + "." + key, "missing");
  const json& v = obj.at(key);
  if (!v.is_number_integer()) schema_fail(path + "." + key, "expected an integer");
  return v.get<int>();
}

double get_positive(const json& obj, const std::string& path, const char* key) {
  const double x = get_number(obj, path, key, true);
  if (!(x > 0.0)) schema_fail(path + "." + key, "must be > 0");
  return x;
}

std::vector<TrigTerm> parse_terms(const json& root, const std::string& path) {
  std::vector<TrigTerm> terms;
  if (!root.contains("terms")) schema_fail(path + ".terms", "missing");
  const json& arr = root.at("terms");
  if (!arr.is_array()) schema_fail(path + ".terms", "expected an array");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = path + ".terms[" + std::to_string(i) + "]";
    const json& t = arr.at(i);
    if (!t.is_object()) schema_fail(p, "expected an object");
    require_keys(t, p, {"m", "a", "b"});
    TrigTerm term;
    term.m = get_integer(t, p, "m");
    term.a = get_number(t, p, "a", false);
    term.b = get_number(t, p, "b", false);
    terms.push_back(term);
  }
  return terms;
}

std::vector<SeriesTerm> parse_series(const json& root, const std::string& path,
                                     const char* key) {
  std::vector<SeriesTerm> terms;
  if (!root.contains(key)) return terms;
  const json& arr = root.at(key);
  const std::string base = path + "." + key;
  if (!arr.is_array()) schema_fail(base, "expected an array");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = base + "[" + std::to_string(i) + "]";
    const json& t = arr.at(i);
    if (!t.is_object()) schema_fail(p, "expected an object");
    require_keys(t, p, {"freq", "a", "b"});
    SeriesTerm term;
    term.freq = get_integer(t, p, "freq");
    term.sinCoef = get_number(t, p, "a", false);
    term.cosCoef = get_number(t, p, "b", false);
    terms.push_back(term);
  }
  return terms;
}

CurveConfig parse_config(const json& root) {
  const std::string path = "$";
  if (!root.is_object()) schema_fail(path, "expected an object");
  if (!root.contains("kind")) schema_fail(path + ".kind", "missing");
  if (!root.at("kind").is_string()) schema_fail(path + ".kind", "expected a string");

  CurveConfig cfg;
  cfg.kind = root.at("kind").get<std::string>();

  if (cfg.kind == "trig") {
    require_keys(root, path, {"kind", "D", "terms"});
    cfg.D = get_positive(root, path, "D");
    cfg.terms = parse_terms(root, path);
  } else if (cfg.kind == "rotor") {
    require_keys(root, path, {"kind", "D", "n", "gx", "gy"});
    cfg.D = get_positive(root, path, "D");
    cfg.n = get_integer(root, path, "n");
    cfg.gx = parse_series(root, path, "gx");
    cfg.gy = parse_series(root, path, "gy");
  } else if (cfg.kind == "reuleaux") {
    require_keys(root, path, {"kind", "D", "n"});
    cfg.D = get_positive(root, path, "D");
    cfg.n = get_integer(root, path, "n");
  } else if (cfg.kind == "rounded_reuleaux") {
    require_keys(root, path, {"kind", "D", "n", "b"});
    cfg.D = get_positive(root, path, "D");
    cfg.n = get_integer(root, path, "n");
    cfg.cornerRadius = get_number(root, path, "b", true);
    if (cfg.cornerRadius < 0.0) schema_fail(path + ".b", "must be >= 0");
  } else if (cfg.kind == "circle") {
    require_keys(root, path, {"kind", "D"});
    cfg.D = get_positive(root, path, "D");
  } else if (cfg.kind == "ellipse") {
    require_keys(root, path, {"kind", "semiAxes"});
    if (!root.contains("semiAxes")) schema_fail(path + ".semiAxes", "missing");
    const json& axes = root.at("semiAxes");
    if (!axes.is_array() || axes.size() != 2) {
      schema_fail(path + ".semiAxes", "expected an array of two numbers");
    }
    for (int i = 0; i < 2; ++i) {
      if (!axes.at(i).is_number()) {
        schema_fail(path + ".semiAxes[" + std::to_string(i) + "]",
                    "expected a number");
      }
    }
    cfg.semiA = axes.at(0).get<double>();
    cfg.semiB = axes.at(1).get<double>();
    if (!(cfg.semiA > 0.0) || !(cfg.semiB > 0.0)) {
      schema_fail(path + ".semiAxes", "axes must be > 0");
    }
  } else {
    schema_fail(path + ".kind", "unknown kind '" + cfg.kind + "'");
  }
  return cfg;
}

}  // namespace

CurveConfig config_from_json_text(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  return parse_config(root);
}

CurveConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("config: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return config_from_json_text(buf.str());
}

std::unique_ptr<Curve> build_curve(const CurveConfig& config) {
  try {
    if (config.kind == "trig") {
      return make_constant_diameter(config.D, config.terms);
    }
    if (config.kind == "rotor") {
      return make_rotor(config.n, config.D, config.gx, config.gy);
    }
    if (config.kind == "reuleaux") {
      return make_reuleaux(config.n, config.D);
    }
    if (config.kind == "rounded_reuleaux") {
      return make_rounded_reuleaux(config.n, config.D, config.cornerRadius);
    }
    if (config.kind == "circle") {
      return make_circle(config.D);
    }
    if (config.kind == "ellipse") {
      return make_ellipse(config.semiA, config.semiB);
    }
  } catch (const Error& e) {
    throw ConstructionError("building '" + config.kind + "': " + e.what());
  }
  throw ConstructionError("unknown kind '" + config.kind + "'");
}

}  // namespace cw
