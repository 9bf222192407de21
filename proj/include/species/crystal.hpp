/**
 * @file crystal.hpp
 * @brief The crystal B(-infinity) in finite type. Nodes are isomorphism classes
 *        of rigid representatives; e_i / e_i* add S_i under the socle / over the
 *        head by generic extension, f_i / f_i* remove it again.
 */
#pragma once

#include "species/representation.hpp"
#include "species/root_system.hpp"

#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace species {

constexpr std::size_t kNoNode = std::numeric_limits<std::size_t>::max();
/// An f-target that exists but is not among the enumerated nodes.
constexpr std::size_t kUnmatched = kNoNode - 1;

enum class CrystalOp : std::uint64_t { e = 0, e_star = 1, f = 2, f_star = 3 };

template <Field K>
struct CrystalNode {
  std::size_t id = 0;
  Weight weight;
  Representation<K> rep;
  std::vector<long long> phi, phi_star, eps, eps_star;
};

template <Field K>
struct CrystalGraph {
  const ModulatedGraph<K>* graph = nullptr;
  std::string preset;
  std::size_t depth = 0;
  std::uint64_t seed = 0;
  std::vector<CrystalNode<K>> nodes;
  /// op[i][node]: target node, kNoNode when undefined (or beyond the depth for e).
  std::vector<std::vector<std::size_t>> e, e_star, f, f_star;

  std::size_t rank() const { return graph->size(); }
  std::vector<std::size_t> nodes_of_weight(const Weight& w) const {
    std::vector<std::size_t> out;
    for (auto& n : nodes)
      if (n.weight == w) out.push_back(n.id);
    return out;
  }
};

inline long long total_weight(const Weight& w) {
  long long s = 0;
  for (long long x : w) s += x;
  return s;
}

template <Field K>
void require_crystal_scope(const ModulatedGraph<K>& g) {
  const auto verdict = is_finite_type(cartan_matrix(g));
  if (!verdict.finite)
    throw Error("crystal scope error: " + g.name() + " is not of finite type; representatives do not identify components");
}

template <Field K>
CrystalNode<K> make_node(const Representation<K>& rep) {
  const auto& cd = cartan_matrix(*rep.graph);
  CrystalNode<K> n;
  n.rep = rep;
  n.weight = rep.dimension_vector();
  const auto hs = head_socle_dims(rep);
  for (std::size_t i = 0; i < rep.graph->size(); ++i) {
    const long long p = cd.pairing(n.weight, i);
    n.phi.push_back(static_cast<long long>(hs.socle[i]));
    n.phi_star.push_back(static_cast<long long>(hs.head[i]));
    n.eps.push_back(n.phi.back() - p);
    n.eps_star.push_back(n.phi_star.back() - p);
  }
  return n;
}

/// The lowest weight element: the zero module.
template <Field K>
CrystalNode<K> lowest_node(const ModulatedGraph<K>& g) {
  return make_node(zero_representation(g, std::vector<std::size_t>(g.size(), 0)));
}

/// e_i: 0 -> S_i -> T' -> T -> 0.
template <Field K>
Representation<K> crystal_e(const Representation<K>& t, std::size_t i, std::uint64_t seed, const GenericityConfig& cfg = {}) {
  require_crystal_scope(*t.graph);
  return generic_extension(t, simple_module(*t.graph, i), seed, cfg);
}

/// e_i*: 0 -> T -> T' -> S_i -> 0.
template <Field K>
Representation<K> crystal_e_star(const Representation<K>& t, std::size_t i, std::uint64_t seed,
                                 const GenericityConfig& cfg = {}) {
  require_crystal_scope(*t.graph);
  return generic_extension(simple_module(*t.graph, i), t, seed, cfg);
}

/// f_i: quotient by a generic line of the socle at i; none when phi_i = 0.
template <Field K>
std::optional<Representation<K>> crystal_f(const Representation<K>& t, std::size_t i, std::uint64_t seed,
                                           const GenericityConfig& cfg = {}) {
  if (phi(t, i) == 0) return std::nullopt;
  return generic_socle_quotient(t, i, seed, cfg);
}

/// f_i*: generic submodule of codimension alpha_i; none when phi*_i = 0.
template <Field K>
std::optional<Representation<K>> crystal_f_star(const Representation<K>& t, std::size_t i, std::uint64_t seed,
                                                const GenericityConfig& cfg = {}) {
  if (phi_star(t, i) == 0) return std::nullopt;
  return generic_head_submodule(t, i, seed, cfg);
}

namespace detail {

template <Field K>
bool same_profile(const CrystalNode<K>& a, const CrystalNode<K>& b) {
  return a.weight == b.weight && a.phi == b.phi && a.phi_star == b.phi_star;
}

/// Position in pool of a node isomorphic to cand, or kNoNode.
template <Field K>
std::size_t find_isomorphic(const std::vector<const CrystalNode<K>*>& pool, const CrystalNode<K>& cand, std::uint64_t seed,
                            const GenericityConfig& cfg) {
  for (std::size_t t = 0; t < pool.size(); ++t)
    if (same_profile(*pool[t], cand) && is_isomorphic(pool[t]->rep, cand.rep, derive_seed(seed, t), cfg)) return t;
  return kNoNode;
}

inline std::uint64_t op_seed(std::uint64_t seed, std::size_t node, CrystalOp op, std::size_t i) {
  return derive_seed(seed, node, static_cast<std::uint64_t>(op), i);
}

}  // namespace detail

/// Closure of the lowest weight element under e_i and e_i* up to total weight
/// depth, then f_i and f_i* on every node. Nodes are ordered by total weight,
/// then lexicographically by weight, then by discovery (e_1 < ... < e_n < e_1* < ...).
template <Field K>
CrystalGraph<K> enumerate_crystal(const ModulatedGraph<K>& g, std::size_t depth, std::uint64_t seed,
                                  const GenericityConfig& cfg = {}, const std::string& preset = "") {
  require_crystal_scope(g);
  const std::size_t n = g.size();
  CrystalGraph<K> cg;
  cg.graph = &g;
  cg.preset = preset.empty() ? g.name() : preset;
  cg.depth = depth;
  cg.seed = seed;
  cg.nodes.push_back(lowest_node(g));
  struct Edge {
    std::size_t src;
    CrystalOp op;
    std::size_t i, dst;
  };
  std::vector<Edge> edges;
  std::vector<std::size_t> level{0};
  for (std::size_t total = 0; total < depth; ++total) {
    std::vector<CrystalNode<K>> next;
    std::vector<Edge> pending;  // dst indexes next
    for (std::size_t src : level) {
      for (CrystalOp op : {CrystalOp::e, CrystalOp::e_star})
        for (std::size_t i = 0; i < n; ++i) {
          const auto s = detail::op_seed(seed, src, op, i);
          const auto& t = cg.nodes[src].rep;
          auto cand = make_node(op == CrystalOp::e ? crystal_e(t, i, s, cfg) : crystal_e_star(t, i, s, cfg));
          std::vector<const CrystalNode<K>*> pool;
          for (auto& x : next) pool.push_back(&x);
          std::size_t hit = detail::find_isomorphic(pool, cand, derive_seed(s, 0x150), cfg);
          if (hit == kNoNode) {
            hit = next.size();
            next.push_back(std::move(cand));
          }
          pending.push_back({src, op, i, hit});
        }
    }
    std::vector<std::size_t> order(next.size());
    for (std::size_t t = 0; t < order.size(); ++t) order[t] = t;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return next[x].weight < next[y].weight; });
    std::vector<std::size_t> new_id(next.size());
    level.clear();
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      new_id[order[pos]] = cg.nodes.size();
      level.push_back(cg.nodes.size());
      next[order[pos]].id = cg.nodes.size();
      cg.nodes.push_back(std::move(next[order[pos]]));
    }
    for (auto& ed : pending) edges.push_back({ed.src, ed.op, ed.i, new_id[ed.dst]});
  }
  const std::size_t count = cg.nodes.size();
  for (auto* table : {&cg.e, &cg.e_star, &cg.f, &cg.f_star}) table->assign(n, std::vector<std::size_t>(count, kNoNode));
  for (auto& ed : edges) (ed.op == CrystalOp::e ? cg.e : cg.e_star)[ed.i][ed.src] = ed.dst;

  // f and f* are computed independently and matched against the enumerated nodes.
  for (std::size_t id = 1; id < count; ++id)
    for (CrystalOp op : {CrystalOp::f, CrystalOp::f_star})
      for (std::size_t i = 0; i < n; ++i) {
        const auto s = detail::op_seed(seed, id, op, i);
        const auto& t = cg.nodes[id].rep;
        const auto res = op == CrystalOp::f ? crystal_f(t, i, s, cfg) : crystal_f_star(t, i, s, cfg);
        if (!res) continue;
        const auto cand = make_node(*res);
        std::vector<const CrystalNode<K>*> pool;
        for (auto& x : cg.nodes)
          if (x.weight == cand.weight) pool.push_back(&x);
        const std::size_t hit = detail::find_isomorphic(pool, cand, derive_seed(s, 0x150), cfg);
        (op == CrystalOp::f ? cg.f : cg.f_star)[i][id] = hit == kNoNode ? kUnmatched : pool[hit]->id;
      }
  return cg;
}

// ---------------------------------------------------------------------------
// Axioms

struct AxiomReport {
  std::size_t checked_depth = 0;  ///< nodes of total weight <= checked_depth were checked
  std::size_t nodes_checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Crystal and lowest-weight axioms for (e, f) and (e*, f*), and the six
/// bicrystal conditions relating them, on every node of total weight <= depth - 2.
template <Field K>
AxiomReport check_axioms(const CrystalGraph<K>& cg) {
  const auto& cd = cartan_matrix(*cg.graph);
  const std::size_t n = cg.rank();
  AxiomReport rpt;
  rpt.checked_depth = cg.depth >= 2 ? cg.depth - 2 : 0;
  auto name = [&](std::size_t id) {
    if (id == kNoNode) return std::string("none");
    if (id == kUnmatched) return std::string("unmatched");
    std::ostringstream os;
    os << "#" << id << " (";
    for (std::size_t t = 0; t < n; ++t) os << (t ? "," : "") << cg.nodes[id].weight[t];
    os << ")";
    return os.str();
  };
  auto fail = [&](const std::string& what, std::size_t id, std::size_t i) {
    rpt.violations.push_back(what + " at node " + name(id) + ", i = " + cg.graph->vertex_name(i));
  };
  auto in_range = [&](std::size_t id) { return id < cg.nodes.size(); };

  std::size_t lowest = 0, zero_weight = 0;
  for (auto& nd : cg.nodes)
    if (total_weight(nd.weight) == 0) {
      ++zero_weight;
      lowest = nd.id;
    }
  if (zero_weight != 1) rpt.violations.push_back("expected exactly one node of weight 0, found " + std::to_string(zero_weight));

  // reachability of the lowest element, by f's and by f*'s
  std::vector<char> reach(cg.nodes.size(), 0), reach_star(cg.nodes.size(), 0);
  if (zero_weight == 1) reach[lowest] = reach_star[lowest] = 1;
  for (std::size_t id = 0; id < cg.nodes.size(); ++id)  // nodes are sorted by total weight
    for (std::size_t i = 0; i < n; ++i) {
      if (in_range(cg.f[i][id]) && total_weight(cg.nodes[cg.f[i][id]].weight) < total_weight(cg.nodes[id].weight))
        reach[id] |= reach[cg.f[i][id]];
      if (in_range(cg.f_star[i][id]) &&
          total_weight(cg.nodes[cg.f_star[i][id]].weight) < total_weight(cg.nodes[id].weight))
        reach_star[id] |= reach_star[cg.f_star[i][id]];
    }

  for (auto& b : cg.nodes) {
    if (total_weight(b.weight) > static_cast<long long>(rpt.checked_depth)) continue;
    ++rpt.nodes_checked;
    const std::size_t id = b.id;
    if (!reach[id]) fail("lowest weight: b- not reached by f", id, 0);
    if (!reach_star[id]) fail("lowest weight: b- not reached by f*", id, 0);
    for (std::size_t i = 0; i < n; ++i) {
      const long long p = cd.pairing(b.weight, i);
      const long long s = b.phi[i] + b.phi_star[i] - p;
      for (int star = 0; star < 2; ++star) {
        const auto& E = star ? cg.e_star : cg.e;
        const auto& F = star ? cg.f_star : cg.f;
        const auto& ph = star ? b.phi_star : b.phi;
        const auto& ep = star ? b.eps_star : b.eps;
        const std::string tag = star ? "*" : "";
        if (ph[i] != ep[i] + p) fail("crystal" + tag + ": phi != eps + <wt, alpha_i>", id, i);
        const std::size_t up = E[i][id];
        if (!in_range(up)) {
          fail("bicrystal (1): e_i" + tag + " undefined", id, i);
          continue;
        }
        const auto& c = cg.nodes[up];
        auto w = b.weight;
        w[i] += 1;
        if (c.weight != w) fail("crystal" + tag + ": e_i does not add alpha_i", id, i);
        const auto& cph = star ? c.phi_star : c.phi;
        const auto& cep = star ? c.eps_star : c.eps;
        if (cph[i] != ph[i] + 1) fail("crystal" + tag + ": e_i does not raise phi_i by 1", id, i);
        if (cep[i] != ep[i] - 1) fail("crystal" + tag + ": e_i does not lower eps_i by 1", id, i);
        if (F[i][up] != id) fail("crystal" + tag + ": f_i e_i b != b (got " + name(F[i][up]) + ")", id, i);
        if (F[i][id] == kUnmatched) fail("crystal" + tag + ": f_i b is not an enumerated node", id, i);
        if (in_range(F[i][id]) && E[i][F[i][id]] != id) fail("crystal" + tag + ": e_i f_i b != b", id, i);
        // phi_i = max{k : f_i^k b defined}
        long long steps = 0;
        for (std::size_t cur = id; in_range(F[i][cur]); cur = F[i][cur]) ++steps;
        if (steps != ph[i]) fail("lowest weight" + tag + ": phi_i is not the length of the f_i string", id, i);
      }
      const std::size_t ei = cg.e[i][id], esi = cg.e_star[i][id];
      if (!in_range(ei) || !in_range(esi)) continue;
      if (s < 0) fail("bicrystal (3): phi + phi* - <wt, alpha_i> < 0", id, i);
      if (s == 0 && ei != esi) fail("bicrystal (4): e_i b != e_i* b", id, i);
      if (s >= 1) {
        if (cg.nodes[ei].phi_star[i] != b.phi_star[i]) fail("bicrystal (5): phi*_i(e_i b) != phi*_i(b)", id, i);
        if (cg.nodes[esi].phi[i] != b.phi[i]) fail("bicrystal (5): phi_i(e*_i b) != phi_i(b)", id, i);
      }
      if (s >= 2 && cg.e[i][esi] != cg.e_star[i][ei]) fail("bicrystal (6): e_i e_i* b != e_i* e_i b", id, i);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const std::size_t ej = cg.e[j][id];
        if (!in_range(ej)) continue;
        if (cg.e_star[i][ej] != cg.e[j][esi]) fail("bicrystal (2): e_i* e_j b != e_j e_i* b (j = " + cg.graph->vertex_name(j) + ")", id, i);
      }
    }
  }
  return rpt;
}

/// Self-extension count at one node: phi_i + phi*_i - <wt, alpha_i> = dim Ext^1(T, S_i) = dim Ext^1(S_i, T).
template <Field K>
std::vector<std::string> self_ext_invariant(const CrystalNode<K>& b) {
  const auto& g = *b.rep.graph;
  const auto& cd = cartan_matrix(g);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const long long d = static_cast<long long>(g.degree(i));
    const long long lhs = b.phi[i] + b.phi_star[i] - cd.pairing(b.weight, i);
    const auto s = simple_module(g, i);
    const long long ts = static_cast<long long>(ext1_space(b.rep, s).dimension) / d;
    const long long st = static_cast<long long>(ext1_space(s, b.rep).dimension) / d;
    if (lhs != ts || lhs != st)
      out.push_back("self-extension count fails at node #" + std::to_string(b.id) + ", i = " + g.vertex_name(i) + ": " +
                    std::to_string(lhs) + " vs " + std::to_string(ts) + ", " + std::to_string(st));
  }
  return out;
}

template <Field K>
bool is_rigid(const Representation<K>& t) {
  return ext1_space(t, t).dimension == 0;
}

/// Node counts per weight for every weight of total <= depth.
template <Field K>
std::map<Weight, std::size_t> weight_counts(const CrystalGraph<K>& cg) {
  std::map<Weight, std::size_t> out;
  for (auto& w : weights_up_to(cg.rank(), static_cast<long long>(cg.depth))) out[w] = 0;
  for (auto& nd : cg.nodes) ++out[nd.weight];
  return out;
}

}  // namespace species
