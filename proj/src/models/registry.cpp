#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "common.hpp"

namespace satalg {

namespace {

struct FieldSpec {
  const char* name;
  bool required;
  double fallback;
};

const std::map<std::string, std::vector<FieldSpec>>& schemas() {
  static const std::map<std::string, std::vector<FieldSpec>> s = {
      {"gmp", {{"D", true, 0}, {"b", true, 0}, {"a", false, 1}, {"mu", false, 1}, {"hbar", false, 1}}},
      {"rosen_morse",
       {{"B", true, 0}, {"C", true, 0}, {"alpha", false, 1}, {"mu", false, 1}, {"hbar", false, 1}}},
      {"kepler", {{"nu", true, 0}, {"R", false, 1}}},
  };
  return s;
}

}  // namespace

int largest_integer_below(double x) {
  if (!std::isfinite(x)) throw Error(ErrorCode::invalid_parameter, "non-finite bound");
  if (x > 1e9) throw Error(ErrorCode::out_of_range, "spectrum too large to enumerate");
  return static_cast<int>(std::ceil(x)) - 1;
}

ModelPtr build_model(const std::string& family, const ParamList& params) {
  const auto it = schemas().find(family);
  if (it == schemas().end()) {
    throw Error(ErrorCode::invalid_parameter,
                "unknown model '" + family + "' (expected gmp, rosen_morse or kepler)");
  }
  std::map<std::string, double> given;
  for (const auto& [k, v] : params) {
    if (!given.emplace(k, v).second) {
      throw Error(ErrorCode::invalid_parameter, "duplicate field '" + k + "'");
    }
  }
  std::map<std::string, double> values;
  for (const FieldSpec& f : it->second) {
    const auto g = given.find(f.name);
    if (g == given.end()) {
      if (f.required) {
        throw Error(ErrorCode::invalid_parameter,
                    "missing field '" + std::string(f.name) + "' for " + family);
      }
      values[f.name] = f.fallback;
    } else {
      values[f.name] = g->second;
      given.erase(g);
    }
  }
  if (!given.empty()) {
    throw Error(ErrorCode::invalid_parameter,
                "unknown field '" + given.begin()->first + "' for " + family);
  }
  if (family == "gmp") {
    return make_gmp({values["D"], values["b"], values["a"], values["mu"], values["hbar"]});
  }
  if (family == "rosen_morse") {
    return make_rosen_morse(
        {values["B"], values["C"], values["alpha"], values["mu"], values["hbar"]});
  }
  return make_kepler({values["nu"], values["R"]});
}

ModelPtr load_model_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::parse, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::parse, "model file must hold a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "model" && key != "params" && key != "epsilon") {
      throw Error(ErrorCode::parse, "unknown top-level field '" + key + "'");
    }
  }
  if (!doc.contains("model") || !doc["model"].is_string()) {
    throw Error(ErrorCode::parse, "field 'model' (string) is required");
  }
  if (!doc.contains("params") || !doc["params"].is_object()) {
    throw Error(ErrorCode::parse, "field 'params' (object) is required");
  }
  ParamList params;
  for (const auto& [key, value] : doc["params"].items()) {
    if (!value.is_number()) {
      throw Error(ErrorCode::parse, "parameter '" + key + "' must be a number");
    }
    params.emplace_back(key, value.get<double>());
  }
  ModelPtr model = build_model(doc["model"].get<std::string>(), params);
  if (doc.contains("epsilon")) {
    const auto& e = doc["epsilon"];
    if (!e.is_number_integer() || (e.get<int>() != 1 && e.get<int>() != -1)) {
      throw Error(ErrorCode::parse, "'epsilon' must be 1 or -1");
    }
    model = model->with_epsilon(e.get<int>());
  }
  return model;
}

ModelPtr load_model_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::parse, "cannot open model file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_model_json(buf.str());
}

const char* to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::gmp: return "gmp";
    case ModelKind::rosen_morse: return "rosen_morse";
    case ModelKind::kepler: return "kepler";
  }
  return "?";
}

const char* to_string(Generator g) { return g == Generator::S ? "S" : "T"; }
const char* to_string(Direction d) { return d == Direction::plus ? "+" : "-"; }

}  // namespace satalg
