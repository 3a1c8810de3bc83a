#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "setopt/cone.hpp"
#include "setopt/error.hpp"
#include "setopt/instance.hpp"

namespace setopt {

using Json = nlohmann::ordered_json;

inline constexpr const char* kInstanceVersion = "setopt-instance/1";

// ---- writing ----------------------------------------------------------------

inline Json to_json(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

inline Json to_json(const FiniteSet& s) {
  Json out = Json::array();
  for (const auto& p : s) out.push_back(to_json(p));
  return out;
}

// Integral parameters print without a fractional part.
inline Json number_json(double x) {
  if (std::abs(x) < 9.0e15 && x == std::floor(x)) return static_cast<long long>(x);
  return x;
}

inline Json to_json(const Provenance& p) {
  Json params = Json::object();
  for (const auto& [k, v] : p.params) params[k] = number_json(v);
  return Json{{"generator", p.generator}, {"seed", p.seed}, {"cone_kind", p.cone_kind}, {"params", params}};
}

inline Json to_json(const Cone& cone) {
  Json gens = Json::array();
  for (const auto& f : cone.dual_generators()) gens.push_back(to_json(f.coeffs));
  Json out{{"dim", cone.dim()}, {"dual_generators", gens}, {"e", to_json(cone.e())}, {"w", to_json(cone.w())}};
  if (cone.epsilon() != kDefaultEpsilon) out["epsilon"] = cone.epsilon();
  return out;
}

inline Json to_json(const Instance& inst) {
  Json points = Json::array();
  Json values = Json::object();
  for (std::size_t i = 0; i < inst.size(); ++i) {
    points.push_back(Json{{"id", inst.id(i)}, {"coords", to_json(inst.coords(i))}});
    values[inst.id(i)] = to_json(inst.value(i));
  }
  Json out{{"version", kInstanceVersion}, {"cone", to_json(inst.cone())}, {"points", points}, {"values", values}};
  if (inst.star_center()) out["star_center"] = *inst.star_center();
  if (inst.lambda_steps()) out["lambda_steps"] = *inst.lambda_steps();
  if (inst.spacing()) out["spacing"] = *inst.spacing();
  if (inst.provenance()) out["provenance"] = to_json(*inst.provenance());
  return out;
}

namespace detail {

inline void pretty(const Json& j, std::string& out, int depth) {
  const auto pad = [&](int d) { out.append(static_cast<std::size_t>(2 * d), ' '); };
  const bool flat_array =
      j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
  if (j.empty() || j.is_primitive() || flat_array) {
    out += j.dump();
    return;
  }
  out += j.is_object() ? "{\n" : "[\n";
  std::size_t k = 0;
  for (auto it = j.begin(); it != j.end(); ++it) {
    pad(depth + 1);
    if (j.is_object()) out += Json(it.key()).dump() + ": ";
    pretty(it.value(), out, depth + 1);
    out += ++k < j.size() ? ",\n" : "\n";
  }
  pad(depth);
  out += j.is_object() ? "}" : "]";
}

}  // namespace detail

/// Indented JSON with numeric vectors kept on one line.
inline std::string pretty_json(const Json& j) {
  std::string out;
  detail::pretty(j, out, 0);
  return out + "\n";
}

inline std::string dump_instance(const Instance& inst) { return pretty_json(to_json(inst)); }

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
  out << text;
  if (!out) raise(ErrorCode::InvalidArgument, "write to '" + path + "' failed");
}

inline void save_instance(const Instance& inst, const std::string& path) { write_text(path, dump_instance(inst)); }

// ---- reading ----------------------------------------------------------------

namespace detail {

inline const Json& field(const Json& obj, const char* name, const std::string& where) {
  if (!obj.is_object()) raise(ErrorCode::ParseError, where + " must be an object");
  const auto it = obj.find(name);
  if (it == obj.end()) raise(ErrorCode::ParseError, where + " is missing '" + name + "'");
  return *it;
}

inline double number(const Json& j, const std::string& where) {
  if (!j.is_number()) raise(ErrorCode::ParseError, where + " must be a number");
  return j.get<double>();
}

inline Vector vector_from(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) raise(ErrorCode::ParseError, where + " must be a nonempty array of numbers");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    v[static_cast<Eigen::Index>(i)] = number(j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

inline std::string string_from(const Json& j, const std::string& where) {
  if (!j.is_string()) raise(ErrorCode::ParseError, where + " must be a string");
  return j.get<std::string>();
}

// Library errors raised while building objects from a well-formed file are
// invariant failures; they are reported as ValidationError with the field.
template <typename Fn>
auto validated(const std::string& where, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError || e.code() == ErrorCode::ValidationError) throw;
    raise(ErrorCode::ValidationError, where + ": " + e.what());
  }
}

inline Cone cone_from(const Json& j) {
  const auto& gens_json = field(j, "dual_generators", "cone");
  if (!gens_json.is_array()) raise(ErrorCode::ParseError, "cone.dual_generators must be an array");
  std::vector<DualFunctional> gens;
  for (std::size_t i = 0; i < gens_json.size(); ++i)
    gens.push_back({vector_from(gens_json[i], "cone.dual_generators[" + std::to_string(i) + "]")});
  const Vector e = vector_from(field(j, "e", "cone"), "cone.e");
  const Vector w = vector_from(field(j, "w", "cone"), "cone.w");
  const auto& dim_json = field(j, "dim", "cone");
  if (!dim_json.is_number_integer() || dim_json.get<long long>() <= 0)
    raise(ErrorCode::ParseError, "cone.dim must be a positive integer");
  const auto dim = static_cast<Eigen::Index>(dim_json.get<long long>());
  if (e.size() != dim) raise(ErrorCode::ValidationError, "cone.e: DimensionMismatch with cone.dim");
  double eps = kDefaultEpsilon;
  if (j.contains("epsilon")) eps = number(j["epsilon"], "cone.epsilon");
  return validated("cone", [&] { return build_cone(gens, e, w, eps); });
}

inline Provenance provenance_from(const Json& j) {
  Provenance p;
  p.generator = string_from(field(j, "generator", "provenance"), "provenance.generator");
  const auto& seed = field(j, "seed", "provenance");
  if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<long long>() >= 0))
    raise(ErrorCode::ParseError, "provenance.seed must be a nonnegative integer");
  p.seed = seed.get<std::uint64_t>();
  if (j.contains("cone_kind")) p.cone_kind = string_from(j["cone_kind"], "provenance.cone_kind");
  if (j.contains("params")) {
    if (!j["params"].is_object()) raise(ErrorCode::ParseError, "provenance.params must be an object");
    for (const auto& [k, v] : j["params"].items()) p.params.emplace_back(k, number(v, "provenance.params." + k));
  }
  return p;
}

}  // namespace detail

inline Instance instance_from_json(const Json& j) {
  using namespace detail;
  if (!j.is_object()) raise(ErrorCode::ParseError, "instance must be a JSON object");
  const std::string version = string_from(field(j, "version", "instance"), "version");
  if (version != kInstanceVersion) raise(ErrorCode::ParseError, "unsupported version tag '" + version + "'");
  Cone cone = cone_from(field(j, "cone", "instance"));

  const auto& points_json = field(j, "points", "instance");
  if (!points_json.is_array()) raise(ErrorCode::ParseError, "points must be an array");
  std::vector<DecisionPoint> points;
  for (std::size_t i = 0; i < points_json.size(); ++i) {
    const std::string where = "points[" + std::to_string(i) + "]";
    points.push_back({string_from(field(points_json[i], "id", where), where + ".id"),
                      vector_from(field(points_json[i], "coords", where), where + ".coords")});
  }

  const auto& values_json = field(j, "values", "instance");
  if (!values_json.is_object()) raise(ErrorCode::ParseError, "values must be an object keyed by id");
  std::vector<FiniteSet> values;
  for (const auto& p : points) {
    const auto it = values_json.find(p.id);
    if (it == values_json.end()) raise(ErrorCode::ValidationError, "values: missing value for id '" + p.id + "'");
    const std::string where = "values." + p.id;
    if (!it->is_array()) raise(ErrorCode::ParseError, where + " must be an array of vectors");
    std::vector<Vector> members;
    for (std::size_t k = 0; k < it->size(); ++k)
      members.push_back(vector_from((*it)[k], where + "[" + std::to_string(k) + "]"));
    values.push_back(validated(where, [&] { return FiniteSet(std::move(members), cone.epsilon()); }));
  }
  for (const auto& [id, unused] : values_json.items()) {
    const bool known = std::any_of(points.begin(), points.end(), [&](const DecisionPoint& p) { return p.id == id; });
    if (!known) raise(ErrorCode::ValidationError, "values: id '" + id + "' is not a decision point");
  }

  std::optional<std::string> center;
  if (j.contains("star_center")) center = string_from(j["star_center"], "star_center");
  Instance inst = validated("instance", [&] { return Instance(cone, points, values, center); });
  if (j.contains("lambda_steps")) {
    if (!j["lambda_steps"].is_number_integer()) raise(ErrorCode::ParseError, "lambda_steps must be an integer");
    inst.set_lambda_steps(j["lambda_steps"].get<int>());
  }
  if (j.contains("spacing")) inst.set_spacing(number(j["spacing"], "spacing"));
  if (j.contains("provenance")) inst.set_provenance(provenance_from(j["provenance"]));
  return inst;
}

inline Instance parse_instance(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorCode::ParseError, e.what());
  }
  try {
    return instance_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorCode::ParseError, e.what());
  }
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Instance load_instance(const std::string& path) { return parse_instance(read_text(path)); }

}  // namespace setopt
