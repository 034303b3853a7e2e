#include "naklab/model_io.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace naklab {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

int resolve_index(const AlgebraSpec& spec, const json& ref, const char* what) {
  auto by_name = [&](const std::string& name) -> int {
    for (std::size_t i = 0; i < spec.basis.size(); ++i)
      if (spec.basis[i].name == name) return static_cast<int>(i);
    return -1;
  };
  int idx = -1;
  if (ref.is_number_integer()) {
    idx = ref.get<int>();
  } else if (ref.is_string()) {
    const auto s = ref.get<std::string>();
    idx = by_name(s);
    if (idx < 0 && !s.empty() && s.find_first_not_of("0123456789") == std::string::npos) idx = std::stoi(s);
  }
  if (idx < 0 || idx >= static_cast<int>(spec.basis.size()))
    throw InputError(std::string("unknown basis reference in ") + what + ": " + ref.dump());
  return idx;
}

std::vector<Scalar> parse_element(const AlgebraSpec& spec, const json& obj, const char* what) {
  std::vector<Scalar> v(spec.basis.size());
  if (obj.is_null()) return v;
  if (!obj.is_object()) throw InputError(std::string(what) + " must be an object {basis: \"p/q\"}");
  for (const auto& [key, value] : obj.items()) {
    int idx = resolve_index(spec, json(key), what);
    if (!value.is_string() && !value.is_number_integer())
      throw InputError(std::string(what) + ": coefficient must be a \"p/q\" string");
    Rational q = value.is_string() ? parse_rational(value.get<std::string>()) : Rational(value.get<long>());
    v[idx] += Scalar(q);
  }
  return v;
}

// Keys are basis names: a numeric key could collide with a basis named "1".
ordered_json element_json(const AlgebraSpec& spec, const std::vector<Scalar>& v) {
  ordered_json out = ordered_json::object();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out[spec.basis[i].name] = rational_fraction_string(v[i].re());
  return out;
}

}  // namespace

AlgebraSpec parse_model(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("model file must be a JSON object");
  AlgebraSpec spec;
  try {
    spec.name = doc.value("name", std::string("unnamed"));
    spec.top_degree = doc.value("top_degree", 4);
    if (!doc.contains("basis") || !doc["basis"].is_array()) throw InputError("missing \"basis\" array");
    for (const auto& b : doc["basis"]) {
      if (!b.is_object() || !b.contains("name") || !b.contains("degree"))
        throw InputError("basis entries need \"name\" and \"degree\"");
      spec.basis.push_back({b["name"].get<std::string>(), b["degree"].get<int>()});
    }
    const std::size_t n = spec.basis.size();
    if (n == 0) throw InputError("empty basis");
    if (!doc.contains("unit") || !doc.contains("point")) throw InputError("missing \"unit\" or \"point\"");
    spec.unit = resolve_index(spec, doc["unit"], "unit");
    spec.point = resolve_index(spec, doc["point"], "point");

    spec.mult.assign(n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n)));
    std::vector<std::vector<bool>> given(n, std::vector<bool>(n, false));
    if (doc.contains("mult")) {
      if (!doc["mult"].is_array()) throw InputError("\"mult\" must be an array");
      for (const auto& entry : doc["mult"]) {
        if (!entry.is_object() || !entry.contains("i") || !entry.contains("j"))
          throw InputError("mult entries need \"i\", \"j\", \"coeffs\"");
        int i = resolve_index(spec, entry["i"], "mult.i");
        int j = resolve_index(spec, entry["j"], "mult.j");
        auto coeffs = parse_element(spec, entry.value("coeffs", json::object()), "mult.coeffs");
        spec.mult[i][j] = coeffs;
        given[i][j] = true;
      }
    }
    // Entries given for (i, j) only are mirrored; commutativity is checked later.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (given[i][j] && !given[j][i]) spec.mult[j][i] = spec.mult[i][j];
    // Products with the unit default to the identity when omitted.
    for (std::size_t i = 0; i < n; ++i) {
      const auto u = static_cast<std::size_t>(spec.unit);
      if (!given[u][i] && !given[i][u]) {
        spec.mult[u][i].assign(n, Scalar());
        spec.mult[u][i][i] = Scalar(1);
        spec.mult[i][u] = spec.mult[u][i];
      }
    }
    spec.counit = parse_element(spec, doc.value("counit", json::object()), "counit");
    spec.canonical = parse_element(spec, doc.value("K", json::object()), "K");
    spec.euler = parse_element(spec, doc.value("e", json::object()), "e");
  } catch (const json::exception& e) {
    throw InputError(std::string("model schema error: ") + e.what());
  }
  return spec;
}

AlgebraSpec load_model_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open model file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

std::string model_to_json(const AlgebraSpec& spec) {
  ordered_json doc;
  doc["name"] = spec.name;
  doc["top_degree"] = spec.top_degree;
  ordered_json basis = ordered_json::array();
  for (const auto& b : spec.basis) basis.push_back(ordered_json{{"name", b.name}, {"degree", b.degree}});
  doc["basis"] = basis;
  doc["unit"] = spec.unit;
  doc["point"] = spec.point;
  ordered_json mult = ordered_json::array();
  const std::size_t n = spec.basis.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const auto& c = spec.mult[i][j];
      bool nonzero = false;
      for (const auto& v : c) nonzero = nonzero || !v.is_zero();
      if (!nonzero) continue;
      ordered_json e;
      e["i"] = i;
      e["j"] = j;
      e["coeffs"] = element_json(spec, c);
      mult.push_back(e);
    }
  doc["mult"] = mult;
  doc["counit"] = element_json(spec, spec.counit);
  doc["K"] = element_json(spec, spec.canonical);
  doc["e"] = element_json(spec, spec.euler);
  return doc.dump(2) + "\n";
}

std::shared_ptr<const GradedFrobeniusAlgebra> make_algebra(AlgebraSpec spec) {
  return std::make_shared<const GradedFrobeniusAlgebra>(std::move(spec));
}

}  // namespace naklab
