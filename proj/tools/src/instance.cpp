#include "minlin/cli/instance.hpp"

#include "minlin/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace minlin::cli {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void field_error(const std::string& path, const std::string& message) {
  throw ParseError("field " + path + ": " + message);
}

template <typename Fn>
auto at_field(const std::string& path, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ParseError& e) {
    field_error(path, e.what());
  }
}

Extended read_value(const Json& j, const std::string& path, bool allow_infinity) {
  if (!j.is_string()) field_error(path, "expected a rational string such as \"1/2\"");
  const auto& text = j.get_ref<const std::string&>();
  if (text == "+inf" && !allow_infinity) field_error(path, "+inf is only allowed in functions");
  return at_field(path, [&] { return parse_extended(text); });
}

std::vector<Extended> read_vector(const Json& j, const std::string& path, std::size_t n,
                                  bool allow_infinity) {
  if (!j.is_array()) field_error(path, "expected a list");
  if (j.size() != n) {
    field_error(path, "expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
  }
  std::vector<Extended> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(read_value(j[i], path + "[" + std::to_string(i) + "]", allow_infinity));
  }
  return out;
}

std::vector<Rational> read_rationals(const Json& j, const std::string& path, std::size_t n) {
  std::vector<Rational> out;
  for (auto& v : read_vector(j, path, n, false)) out.push_back(v.value());
  return out;
}

const Json& require(const Json& root, const char* key) {
  if (!root.contains(key)) field_error(key, "missing");
  return root.at(key);
}

template <typename T, typename Make>
std::vector<Named<T>> read_named(const Json& root, const char* key, Make&& make) {
  std::vector<Named<T>> out;
  if (!root.contains(key)) return out;
  const Json& obj = root.at(key);
  if (!obj.is_object()) field_error(key, "expected an object mapping names to lists");
  for (const auto& [name, value] : obj.items()) {
    const std::string path = std::string(key) + "." + name;
    out.push_back({name, make(value, path)});
  }
  return out;
}

FunctionClass read_class(const Json& root, std::size_t n, bool has_metric) {
  if (!root.contains("class")) return FunctionClass::full();
  const Json& cls = root.at("class");
  if (!cls.is_object()) field_error("class", "expected an object");
  const Json& kind_json = require(cls, "kind");
  if (!kind_json.is_string()) field_error("class.kind", "expected a string");
  const auto kind = kind_json.get<std::string>();
  if (kind == "full") return FunctionClass::full();
  if (kind == "lipschitz") {
    if (!has_metric) throw InvalidInput("class.kind: lipschitz class requires a metric");
    return FunctionClass::lipschitz();
  }
  if (kind == "finite_cone") {
    std::vector<ExtFun> generators;
    if (cls.contains("generators")) {
      const Json& gens = cls.at("generators");
      if (!gens.is_array()) field_error("class.generators", "expected a list");
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const std::string path = "class.generators[" + std::to_string(i) + "]";
        generators.push_back(ExtFun::real(read_rationals(gens[i], path, n)));
      }
    }
    bool affine_closed = true;
    if (cls.contains("affine_closed")) {
      if (!cls.at("affine_closed").is_boolean()) {
        field_error("class.affine_closed", "expected a boolean");
      }
      affine_closed = cls.at("affine_closed").get<bool>();
    }
    return FunctionClass::finite_cone(n, std::move(generators), affine_closed);
  }
  field_error("class.kind", "unknown kind \"" + kind + "\" (expected full, lipschitz or finite_cone)");
}

}  // namespace

const ExtFun* Instance::find_function(std::string_view name) const {
  for (const auto& f : functions) {
    if (f.name == name) return &f.value;
  }
  return nullptr;
}

const Measure* Instance::find_measure(std::string_view name) const {
  for (const auto& m : measures) {
    if (m.name == name) return &m.value;
  }
  return nullptr;
}

const DeltaSet* Instance::find_delta_set(std::string_view name) const {
  for (const auto& d : delta_sets) {
    if (d.name == name) return &d.value;
  }
  return nullptr;
}

bool Instance::expects_failure(std::string_view suite) const {
  return std::find(expect_fail.begin(), expect_fail.end(), suite) != expect_fail.end();
}

Instance parse_instance(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!root.is_object()) throw ParseError("instance must be a JSON object");

  const Json& points = require(root, "points");
  if (!points.is_array()) field_error("points", "expected a list of strings");
  std::vector<PointId> ids;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!points[i].is_string()) field_error("points[" + std::to_string(i) + "]", "expected a string");
    ids.push_back(points[i].get<std::string>());
  }
  const std::size_t n = ids.size();

  std::optional<Matrix> metric;
  if (root.contains("metric") && !root.at("metric").is_null()) {
    const Json& rows = root.at("metric");
    if (!rows.is_array()) field_error("metric", "expected a list of rows");
    if (rows.size() != n) {
      field_error("metric", "expected " + std::to_string(n) + " rows, got " + std::to_string(rows.size()));
    }
    Matrix m;
    for (std::size_t i = 0; i < n; ++i) {
      m.push_back(read_rationals(rows[i], "metric[" + std::to_string(i) + "]", n));
    }
    metric = std::move(m);
  }

  Space space(std::move(ids), std::move(metric));
  FunctionClass cls = read_class(root, n, space.has_metric());

  auto functions = read_named<ExtFun>(root, "functions", [&](const Json& j, const std::string& path) {
    try {
      return ExtFun(read_vector(j, path, n, true));
    } catch (const EmptyDomain&) {
      throw InvalidInput(path + ": function has empty domain (every value is +inf)");
    }
  });
  auto measures = read_named<Measure>(root, "measures", [&](const Json& j, const std::string& path) {
    return Measure(read_rationals(j, path, n));
  });
  auto delta_sets = read_named<DeltaSet>(root, "delta_sets", [&](const Json& j, const std::string& path) {
    return DeltaSet(read_rationals(j, path, n));
  });

  static const std::set<std::string> kSuites = {"biconjugation", "infconv", "minimax", "transform",
                                                "isotone",       "minimize", "delta"};
  std::vector<std::string> expect_fail;
  if (root.contains("expect_fail")) {
    const Json& list = root.at("expect_fail");
    if (!list.is_array()) field_error("expect_fail", "expected a list of suite names");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string path = "expect_fail[" + std::to_string(i) + "]";
      if (!list[i].is_string()) field_error(path, "expected a string");
      auto suite = list[i].get<std::string>();
      if (!kSuites.count(suite)) field_error(path, "unknown suite \"" + suite + "\"");
      expect_fail.push_back(std::move(suite));
    }
  }

  return Instance{std::move(space),      std::move(cls),       std::move(functions),
                  std::move(measures),   std::move(delta_sets), std::move(expect_fail)};
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

}  // namespace minlin::cli
