/**
 * @file io.hpp
 * @brief JSON preset schema and representation files.
 *
 * Scalars are JSON integers or strings "p/q"; a string naming a key of the
 * preset's "params" object is replaced by that parameter. Values of a vertex
 * field F_i (form entries) are a scalar (embedded from the base) or an array
 * of deg F_i power-basis coordinates.
 */
#pragma once

#include "species/field.hpp"
#include "species/matrix.hpp"
#include "species/modulated_graph.hpp"
#include "species/representation.hpp"

#include <fstream>
#include <map>
#include <memory>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <variant>

namespace species {

using json = nlohmann::ordered_json;

template <Field K>
using GraphPtr = std::shared_ptr<const ModulatedGraph<K>>;

using AnyGraph = std::variant<GraphPtr<RationalField>, GraphPtr<PrimeField>>;

inline mpq_class parse_rational(const json& j) {
  if (j.is_number_integer()) return mpq_class(mpz_class(std::to_string(j.get<long long>())));
  if (j.is_string()) {
    mpq_class q;
    if (q.set_str(j.get<std::string>(), 10) != 0) throw Error("malformed rational: " + j.get<std::string>());
    q.canonicalize();
    return q;
  }
  throw Error("expected an integer or a \"p/q\" string, got " + j.dump());
}

namespace detail {

template <Field K>
struct Parser {
  const K& k;
  std::map<std::string, mpq_class> params;

  typename K::value_type scalar(const json& j) const {
    if (j.is_string()) {
      auto it = params.find(j.get<std::string>());
      if (it != params.end()) return k.from_rational(it->second);
    }
    return k.from_rational(parse_rational(j));
  }

  MatrixOf<K> matrix(const json& j, std::size_t rows, std::size_t cols, const std::string& what) const {
    if (!j.is_array() || j.size() != rows) throw Error(what + ": expected " + std::to_string(rows) + " rows");
    auto m = zeros(k, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      if (!j[r].is_array() || j[r].size() != cols) throw Error(what + ": expected " + std::to_string(cols) + " columns");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar(j[r][c]);
    }
    return m;
  }

  FieldValue<K> field_value(const VertexField<K>& f, const json& j) const {
    if (!j.is_array()) return f.embed(scalar(j));
    if (j.size() != f.degree()) throw Error("field value " + j.dump() + " has the wrong number of coordinates");
    FieldValue<K> v;
    for (auto& c : j) v.push_back(scalar(c));
    return v;
  }
};

template <Field K>
VertexField<K> parse_vertex_field(const Parser<K>& p, const json& j) {
  if (j.is_string() && j.get<std::string>() == "base") return trivial_extension(p.k);
  if (!j.is_object() || !j.contains("minpoly")) throw Error("vertex field must be \"base\" or {\"minpoly\": [...]}");
  std::vector<typename K::value_type> coeffs;
  for (auto& c : j["minpoly"]) coeffs.push_back(p.scalar(c));
  return make_extension(p.k, coeffs);
}

/// A degree-1 field acts by the scalar root of its minimal polynomial.
template <Field K>
MatrixOf<K> default_action(const K& k, const VertexField<K>& f, std::size_t n, const std::string& what) {
  if (f.degree() != 1) throw Error(what + " is required for a field of degree " + std::to_string(f.degree()));
  return scale(k, k.neg(f.minpoly()[0]), identity(k, n));
}

template <Field K>
Bimodule<K> parse_bimodule(const Parser<K>& p, const json& j, std::size_t from, std::size_t to,
                           const std::vector<VertexField<K>>& fields) {
  Bimodule<K> b;
  b.from = from;
  b.to = to;
  b.base_dim = j.at("base_dim").get<std::size_t>();
  b.left_gen_action = j.contains("left_gen_action")
                          ? p.matrix(j["left_gen_action"], b.base_dim, b.base_dim, "left_gen_action")
                          : default_action(p.k, fields[to], b.base_dim, "left_gen_action");
  b.right_gen_action = j.contains("right_gen_action")
                           ? p.matrix(j["right_gen_action"], b.base_dim, b.base_dim, "right_gen_action")
                           : default_action(p.k, fields[from], b.base_dim, "right_gen_action");
  return b;
}

template <Field K>
BilinearForm<K> parse_form(const Parser<K>& p, const json& j, std::size_t rows, std::size_t cols,
                           const VertexField<K>& f, const std::string& what) {
  if (!j.is_array() || j.size() != rows) throw Error(what + ": expected " + std::to_string(rows) + " rows");
  BilinearForm<K> form;
  for (auto& row : j) {
    if (!row.is_array() || row.size() != cols) throw Error(what + ": expected " + std::to_string(cols) + " columns");
    std::vector<FieldValue<K>> vals;
    for (auto& e : row) vals.push_back(p.field_value(f, e));
    form.values.push_back(std::move(vals));
  }
  return form;
}

template <Field K>
std::shared_ptr<ModulatedGraph<K>> build_graph(const K& k, const json& spec) {
  Parser<K> p{k, {}};
  if (spec.contains("params"))
    for (auto& el : spec["params"].items()) {
      const json& val = el.value();
      if (!val.is_string() || val.get<std::string>().find('i') == std::string::npos) p.params[el.key()] = parse_rational(val);
    }
  std::vector<std::string> names;
  std::vector<VertexField<K>> fields;
  for (auto& el : spec.at("vertex_fields").items()) {
    names.push_back(el.key());
    fields.push_back(parse_vertex_field(p, el.value()));
  }
  auto index = [&](const json& v) {
    const auto s = v.is_string() ? v.get<std::string>() : v.dump();
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == s) return i;
    throw Error("unknown vertex " + s);
  };
  auto g = std::make_shared<ModulatedGraph<K>>(spec.value("name", std::string("unnamed")), k, names, fields);
  for (auto& e : spec.value("edges", json::array())) {
    const std::size_t u = index(e.at("u")), v = index(e.at("v"));
    auto uv = parse_bimodule(p, e.at("bimodule_uv"), u, v, fields);
    auto vu = parse_bimodule(p, e.at("bimodule_vu"), v, u, fields);
    auto fu = parse_form(p, e.at("form_into_u"), vu.base_dim, uv.base_dim, fields[u], "form_into_u");
    auto fv = parse_form(p, e.at("form_into_v"), uv.base_dim, vu.base_dim, fields[v], "form_into_v");
    g->add_edge(std::move(uv), std::move(vu), std::move(fu), std::move(fv));
  }
  g->validate();
  return g;
}

}  // namespace detail

/// Parses and validates a modulated graph.
inline AnyGraph graph_from_json(const json& spec) {
  const auto& bf = spec.contains("base_field") ? spec["base_field"] : json{{"type", "rationals"}};
  const auto& type = bf.is_object() && bf.contains("type") ? bf["type"] : bf;
  if (type.is_string() && type.get<std::string>() == "rationals")
    return GraphPtr<RationalField>(detail::build_graph(RationalField{}, spec));
  if (type.is_object() && type.contains("prime"))
    return GraphPtr<PrimeField>(detail::build_graph(PrimeField(type["prime"].get<std::uint64_t>()), spec));
  throw Error("base_field must be \"rationals\" or {\"prime\": p}");
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error("malformed JSON in " + path + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Representation files

/// {"graph": name, "dims": {vertex: v_i} or [v_i...], "maps": [{"from", "to", "matrix"}]}.
/// Arrows without an entry carry the zero map. Invalid modules are refused.
template <Field K>
Representation<K> representation_from_json(const ModulatedGraph<K>& g, const json& j) {
  if (j.contains("graph") && j["graph"].get<std::string>() != g.name())
    throw Error("representation belongs to graph " + j["graph"].get<std::string>() + ", not " + g.name());
  std::vector<std::size_t> dims(g.size(), 0);
  const auto& dj = j.at("dims");
  auto index = [&](const std::string& s) {
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g.vertex_name(i) == s) return i;
    throw Error("unknown vertex " + s);
  };
  if (dj.is_array()) {
    if (dj.size() != g.size()) throw Error("dimension vector length mismatch");
    for (std::size_t i = 0; i < g.size(); ++i) dims[i] = dj[i].get<std::size_t>();
  } else {
    for (auto& el : dj.items()) dims[index(el.key())] = el.value().get<std::size_t>();
  }
  auto rep = zero_representation(g, dims);
  detail::Parser<K> p{g.base(), {}};
  for (auto& m : j.value("maps", json::array())) {
    const std::size_t u = index(m.at("from").get<std::string>()), v = index(m.at("to").get<std::string>());
    std::size_t a = g.arrows().size();
    for (std::size_t t = 0; t < g.arrows().size(); ++t)
      if (g.arrow(t).from == u && g.arrow(t).to == v) a = t;
    if (a == g.arrows().size()) throw Error("no arrow from " + g.vertex_name(u) + " to " + g.vertex_name(v));
    rep.maps[a] = p.matrix(m.at("matrix"), rep.maps[a].rows(), rep.maps[a].cols(),
                           "map " + g.vertex_name(u) + "->" + g.vertex_name(v));
  }
  require_valid(rep);
  return rep;
}

template <Field K>
json representation_to_json(const Representation<K>& rep) {
  const auto& g = *rep.graph;
  json j;
  j["graph"] = g.name();
  json dims = json::object();
  for (std::size_t i = 0; i < g.size(); ++i) dims[g.vertex_name(i)] = rep.dims[i];
  j["dims"] = dims;
  json maps = json::array();
  for (std::size_t a = 0; a < g.arrows().size(); ++a) {
    const auto& m = rep.maps[a];
    if (m.rows() == 0 || m.cols() == 0) continue;
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(g.base().to_string(m(r, c)));
      rows.push_back(row);
    }
    maps.push_back({{"from", g.vertex_name(g.arrow(a).from)}, {"to", g.vertex_name(g.arrow(a).to)}, {"matrix", rows}});
  }
  j["maps"] = maps;
  return j;
}

}  // namespace species
