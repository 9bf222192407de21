/**
 * @file presets.hpp
 * @brief Built-in modulated graphs.
 *
 *  - c2          F_1 = Q, F_2 = Q(i); type C_2
 *  - c2-sqrt2    the same Cartan type with F_2 = Q(sqrt 2)
 *  - sl2hat-z    affine sl_2 with the deformed form z t1 s1 - t2 s2 (z rational,
 *                or Gaussian "a+bi", in which case both fields are Q(i))
 *  - a2-lusztig, a3, a1xa1  all fields Q, one-dimensional bimodules
 */
#pragma once

#include "species/io.hpp"

#include <filesystem>
#include <regex>

namespace species {

inline std::vector<std::string> preset_names() {
  return {"c2", "c2-sqrt2", "sl2hat-z", "a2-lusztig", "a3", "a1xa1"};
}

namespace detail {

inline json c2_json() {
  return json::parse(R"({
    "name": "c2",
    "base_field": {"type": "rationals"},
    "vertex_fields": {"1": "base", "2": {"minpoly": [1, 0, 1]}},
    "edges": [{
      "u": "1", "v": "2",
      "bimodule_uv": {"base_dim": 2, "left_gen_action": [[0, -1], [1, 0]], "right_gen_action": [[0, 0], [0, 0]]},
      "bimodule_vu": {"base_dim": 2, "left_gen_action": [[0, 0], [0, 0]], "right_gen_action": [[0, -1], [1, 0]]},
      "form_into_u": [[1, 0], [0, -1]],
      "form_into_v": [[[1, 0], [0, 1]], [[0, 1], [-1, 0]]]
    }]
  })");
}

inline json c2_sqrt2_json() {
  return json::parse(R"({
    "name": "c2-sqrt2",
    "base_field": {"type": "rationals"},
    "vertex_fields": {"1": "base", "2": {"minpoly": [-2, 0, 1]}},
    "edges": [{
      "u": "1", "v": "2",
      "bimodule_uv": {"base_dim": 2, "left_gen_action": [[0, 2], [1, 0]], "right_gen_action": [[0, 0], [0, 0]]},
      "bimodule_vu": {"base_dim": 2, "left_gen_action": [[0, 0], [0, 0]], "right_gen_action": [[0, 2], [1, 0]]},
      "form_into_u": [[1, 0], [0, 2]],
      "form_into_v": [[[1, 0], [0, 1]], [[0, 1], [2, 0]]]
    }]
  })");
}

inline json simply_laced_json(const std::string& name, std::size_t n, bool with_edges) {
  json j;
  j["name"] = name;
  j["base_field"] = {{"type", "rationals"}};
  json fields = json::object();
  for (std::size_t i = 1; i <= n; ++i) fields[std::to_string(i)] = "base";
  j["vertex_fields"] = fields;
  json edges = json::array();
  if (with_edges)
    for (std::size_t i = 1; i < n; ++i)
      edges.push_back({{"u", std::to_string(i)},
                       {"v", std::to_string(i + 1)},
                       {"bimodule_uv", {{"base_dim", 1}}},
                       {"bimodule_vu", {{"base_dim", 1}}},
                       {"form_into_u", json::array({json::array({1})})},
                       {"form_into_v", json::array({json::array({-1})})}});
  j["edges"] = edges;
  return j;
}

inline json sl2hat_json(const std::string& z) {
  json j = json::parse(R"({
    "name": "sl2hat-z",
    "base_field": {"type": "rationals"},
    "vertex_fields": {"1": "base", "2": "base"},
    "edges": [{
      "u": "1", "v": "2",
      "bimodule_uv": {"base_dim": 2},
      "bimodule_vu": {"base_dim": 2},
      "form_into_u": [[1, 0], [0, 1]],
      "form_into_v": [["z", 0], [0, -1]]
    }]
  })");
  j["params"] = {{"z", z}};
  return j;
}

/// Both fields Q(i); M = Q(i)^2 with base basis (m1, i m1, m2, i m2) and
/// scalar actions; the forms are Q(i)-bilinear extensions of the 2x2 forms.
inline json sl2hat_gaussian_json(const mpq_class& re, const mpq_class& im) {
  const json mult = json::parse("[[0,-1,0,0],[1,0,0,0],[0,0,0,-1],[0,0,1,0]]");
  auto extend = [](const std::vector<std::vector<std::pair<mpq_class, mpq_class>>>& a) {
    json rows = json::array();
    for (std::size_t p = 0; p < 2; ++p)
      for (std::size_t s = 0; s < 2; ++s) {
        json row = json::array();
        for (std::size_t q = 0; q < 2; ++q)
          for (std::size_t t = 0; t < 2; ++t) {
            // i^{s+t} a[p][q]
            auto [x, y] = a[p][q];
            for (std::size_t k = 0; k < s + t; ++k) std::tie(x, y) = std::pair<mpq_class, mpq_class>(-y, x);
            row.push_back(json::array({x.get_str(), y.get_str()}));
          }
        rows.push_back(row);
      }
    return rows;
  };
  const mpq_class zero(0), one(1);
  json j;
  j["name"] = "sl2hat-z";
  j["base_field"] = {{"type", "rationals"}};
  j["vertex_fields"] = {{"1", {{"minpoly", {1, 0, 1}}}}, {"2", {{"minpoly", {1, 0, 1}}}}};
  json bim = {{"base_dim", 4}, {"left_gen_action", mult}, {"right_gen_action", mult}};
  j["edges"] = json::array({{{"u", "1"},
                             {"v", "2"},
                             {"bimodule_uv", bim},
                             {"bimodule_vu", bim},
                             {"form_into_u", extend({{{one, zero}, {zero, zero}}, {{zero, zero}, {one, zero}}})},
                             {"form_into_v", extend({{{re, im}, {zero, zero}}, {{zero, zero}, {-one, zero}}})}}});
  return j;
}

}  // namespace detail

/// Splits "a+bi" / "a-bi" / "bi" / "a" into rational parts.
inline std::pair<mpq_class, mpq_class> parse_gaussian(const std::string& s) {
  static const std::regex re(R"(^\s*([+-]?[0-9/]+)?\s*(?:([+-])\s*([0-9/]*)\s*i)?\s*$)");
  static const std::regex pure(R"(^\s*([+-]?[0-9/]*)\s*i\s*$)");
  std::smatch m;
  auto rat = [](std::string t) {
    if (t.empty() || t == "+") t = "1";
    if (t == "-") t = "-1";
    if (t[0] == '+') t = t.substr(1);
    return parse_rational(json(t));
  };
  if (std::regex_match(s, m, pure)) return {mpq_class(0), rat(m[1].str())};
  if (std::regex_match(s, m, re) && (m[1].matched || m[2].matched)) {
    mpq_class a = m[1].matched ? rat(m[1].str()) : mpq_class(0);
    mpq_class b = 0;
    if (m[2].matched) b = rat(m[2].str() + (m[3].str().empty() ? "1" : m[3].str()));
    return {a, b};
  }
  throw Error("malformed parameter z: " + s);
}

/// The JSON of a built-in preset; `z` only affects sl2hat-z.
inline json preset_json(const std::string& name, const std::string& z = "1") {
  if (name == "c2") return detail::c2_json();
  if (name == "c2-sqrt2") return detail::c2_sqrt2_json();
  if (name == "a2-lusztig") return detail::simply_laced_json("a2-lusztig", 2, true);
  if (name == "a3") return detail::simply_laced_json("a3", 3, true);
  if (name == "a1xa1") return detail::simply_laced_json("a1xa1", 2, false);
  if (name == "sl2hat-z") {
    const auto [re, im] = parse_gaussian(z);
    if (re == 0 && im == 0) throw Error("parameter z must be nonzero");
    if (im == 0) return detail::sl2hat_json(re.get_str());
    return detail::sl2hat_gaussian_json(re, im);
  }
  throw Error("unknown preset " + name);
}

/// A built-in preset name or a path to a preset JSON file.
inline AnyGraph load_preset(const std::string& name_or_path, const std::string& z = "1") {
  for (auto& n : preset_names())
    if (n == name_or_path) return graph_from_json(preset_json(n, z));
  if (std::filesystem::exists(name_or_path)) return graph_from_json(read_json_file(name_or_path));
  throw Error("unknown preset " + name_or_path);
}

/// Rational-base preset, for callers that need the concrete type.
inline GraphPtr<RationalField> rational_preset(const std::string& name, const std::string& z = "1") {
  auto g = load_preset(name, z);
  if (auto* p = std::get_if<GraphPtr<RationalField>>(&g)) return *p;
  throw Error("preset " + name + " is not over the rationals");
}

}  // namespace species
