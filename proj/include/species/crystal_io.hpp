/**
 * @file crystal_io.hpp
 * @brief JSON and DOT output for enumerated crystals and axiom reports.
 */
#pragma once

#include "species/crystal.hpp"
#include "species/io.hpp"

#include <sstream>
#include <string>

namespace species {

namespace detail {

inline std::string weight_label(const Weight& w) {
  std::string s = "(";
  for (std::size_t t = 0; t < w.size(); ++t) s += (t ? "," : "") + std::to_string(w[t]);
  return s + ")";
}

}  // namespace detail

template <Field K>
json crystal_to_json(const CrystalGraph<K>& cg) {
  const auto& g = *cg.graph;
  json j;
  j["graph"] = cg.preset;
  j["depth"] = cg.depth;
  j["seed"] = cg.seed;
  json verts = json::array();
  for (std::size_t i = 0; i < g.size(); ++i) verts.push_back(g.vertex_name(i));
  j["vertices"] = verts;
  json nodes = json::array();
  for (auto& nd : cg.nodes) {
    json x;
    x["id"] = nd.id;
    x["weight"] = nd.weight;
    x["phi"] = nd.phi;
    x["phi_star"] = nd.phi_star;
    x["eps"] = nd.eps;
    x["eps_star"] = nd.eps_star;
    nodes.push_back(x);
  }
  j["nodes"] = nodes;
  json edges = json::array();
  const std::pair<const char*, const std::vector<std::vector<std::size_t>>*> ops[] = {
      {"e", &cg.e}, {"e_star", &cg.e_star}, {"f", &cg.f}, {"f_star", &cg.f_star}};
  for (auto& [op, table] : ops)
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t id = 0; id < cg.nodes.size(); ++id) {
        const std::size_t t = (*table)[i][id];
        if (t == kNoNode) continue;
        json ed;
        ed["op"] = op;
        ed["i"] = g.vertex_name(i);
        ed["from"] = id;
        if (t == kUnmatched) ed["to"] = nullptr;
        else ed["to"] = t;
        edges.push_back(ed);
      }
  j["edges"] = edges;
  return j;
}

/// e_i edges solid, e_i* edges dashed, both labeled by i.
template <Field K>
std::string crystal_to_dot(const CrystalGraph<K>& cg) {
  const auto& g = *cg.graph;
  std::ostringstream os;
  os << "digraph crystal {\n  rankdir=BT;\n  node [shape=box];\n";
  for (auto& nd : cg.nodes) os << "  n" << nd.id << " [label=\"" << detail::weight_label(nd.weight) << "\"];\n";
  for (int star = 0; star < 2; ++star) {
    const auto& table = star ? cg.e_star : cg.e;
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t id = 0; id < cg.nodes.size(); ++id) {
        const std::size_t t = table[i][id];
        if (t >= cg.nodes.size()) continue;
        os << "  n" << id << " -> n" << t << " [label=\"" << g.vertex_name(i) << "\"";
        if (star) os << ", style=dashed";
        os << "];\n";
      }
  }
  os << "}\n";
  return os.str();
}

inline json axiom_report_to_json(const AxiomReport& r) {
  json j;
  j["checked_depth"] = r.checked_depth;
  j["nodes_checked"] = r.nodes_checked;
  j["violations"] = r.violations;
  return j;
}

}  // namespace species
