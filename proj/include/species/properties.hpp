/**
 * @file properties.hpp
 * @brief Property checks shared by the unit tests and the acceptance runner.
 *        Each returns a list of failure descriptions; empty means the property holds.
 */
#pragma once

#include "species/named_modules.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace species {

using Failures = std::vector<std::string>;

/// FNV-1a, for deriving per-name seeds independently of the standard library.
inline std::uint64_t name_hash(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) h = (h ^ c) * 0x100000001b3ULL;
  return h;
}

namespace detail {

inline std::string dims_str(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t t = 0; t < v.size(); ++t) os << (t ? "," : "") << v[t];
  os << ")";
  return os.str();
}

}  // namespace detail

/// Hom and Ext with simples: the closed formulas against the cocycle machinery,
/// and Ext^1(S_i, V) = Hom(S_i, V) + Hom(V, S_i) - <dim V, alpha_i^vee>, at every vertex.
template <Field K>
Failures check_simple_ext_formulas(const Representation<K>& v) {
  const auto& g = *v.graph;
  const auto& k = g.base();
  const auto& cd = cartan_matrix(g);
  Failures out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const long long d = static_cast<long long>(g.degree(i));
    const auto s = simple_module(g, i);
    const auto td = tilde_maps(v, i);
    const long long hom_sv = static_cast<long long>(hom_space(s, v).size()) / d;
    const long long hom_vs = static_cast<long long>(hom_space(v, s).size()) / d;
    const long long ext_sv = static_cast<long long>(ext1_space(s, v).dimension) / d;
    const long long ext_vs = static_cast<long long>(ext1_space(v, s).dimension) / d;
    const long long closed = (static_cast<long long>(td.out_map.rows()) - static_cast<long long>(rank(k, td.out_map)) -
                              static_cast<long long>(rank(k, td.in_map))) /
                             d;
    const std::string where = " at vertex " + g.vertex_name(i) + " for dims " + detail::dims_str(v.dims);
    if (hom_sv != static_cast<long long>(phi(v, i))) out.push_back("dim Hom(S_i, V) != phi_i" + where);
    if (hom_vs != static_cast<long long>(phi_star(v, i))) out.push_back("dim Hom(V, S_i) != phi*_i" + where);
    if (ext_sv != closed || ext_vs != closed)
      out.push_back("Ext^1 with S_i disagrees with the closed formula (" + std::to_string(ext_sv) + ", " +
                    std::to_string(ext_vs) + " vs " + std::to_string(closed) + ")" + where);
    if (ext_sv != hom_sv + hom_vs - cd.pairing(v.dimension_vector(), i))
      out.push_back("Ext/Hom identity fails" + where);
  }
  return out;
}

/// x~_i and _i x~ commute with the F_i action, and the composite vanishes on valid modules.
template <Field K>
Failures check_tilde_linearity(const Representation<K>& v) {
  const auto& g = *v.graph;
  const auto& k = g.base();
  Failures out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto td = tilde_maps(v, i);
    const auto z = vertex_action(g, i, v.dims[i]);
    if (!equal(k, mul(k, td.out_map, z), mul(k, td.field_action, td.out_map)))
      out.push_back("x~ is not F-linear at vertex " + g.vertex_name(i));
    if (!equal(k, mul(k, td.in_map, td.field_action), mul(k, z, td.in_map)))
      out.push_back("_i x~ is not F-linear at vertex " + g.vertex_name(i));
  }
  return out;
}

/// "Every r_i acts as 0" (through canonical elements) iff every _i x~ x~_i = 0.
template <Field K>
bool relation_equivalence_holds(const Representation<K>& v) {
  const auto& g = *v.graph;
  const auto& k = g.base();
  bool direct = true, composite = true;
  for (std::size_t i = 0; i < g.size(); ++i) {
    direct = direct && is_zero(k, relation_action(v, i));
    const auto td = tilde_maps(v, i);
    composite = composite && is_zero(k, mul(k, td.in_map, td.out_map));
  }
  return direct == composite;
}

/// Random F-linear map assignment of the given dimension vector, relations not imposed.
template <Field K>
Representation<K> random_assignment(const ModulatedGraph<K>& g, const std::vector<std::size_t>& dims, Rng& rng,
                                    long long bound = 3) {
  const auto& k = g.base();
  auto rep = zero_representation(g, dims);
  for (std::size_t a = 0; a < g.arrows().size(); ++a) {
    const auto& arr = g.arrow(a);
    const std::size_t rows = rep.maps[a].rows(), cols = rep.maps[a].cols();
    if (rows == 0 || cols == 0) continue;
    const auto l = tensor_left_action(k, arr.right_frame, arr.bimodule.left_gen_action,
                                      vertex_action(g, arr.from, dims[arr.from]));
    const auto z = vertex_action(g, arr.to, dims[arr.to]);
    // X L - Z X = 0 as a linear system in the entries of X
    const auto system = detail::matrix_of(k, rows * cols, rows * cols, [&](std::size_t t) {
      auto x = zeros(k, rows, cols);
      x(t / cols, t % cols) = k.one();
      VectorOf<K> flat;
      detail::append_flat<K>(flat, sub(k, mul(k, x, l), mul(k, z, x)));
      return flat;
    });
    const auto basis = kernel(k, system);
    if (basis.empty()) continue;
    const auto flat = detail::random_vector_in(k, basis, rows * cols, rng, bound);
    rep.maps[a] = detail::unflatten(k, flat, 0, rows, cols);
  }
  return rep;
}

/// Socle quotient undoes a generic extension by S_i underneath.
template <Field K>
Failures check_extension_round_trip(const Representation<K>& v, std::size_t i, std::uint64_t seed,
                                    const GenericityConfig& cfg = {}) {
  const auto& g = *v.graph;
  Failures out;
  const auto e = generic_extension(v, simple_module(g, i), derive_seed(seed, 1), cfg);
  auto expect = v.dims;
  expect[i] += 1;
  if (e.dims != expect) out.push_back("generic extension has the wrong dimension vector");
  if (!check_representation(e).valid()) out.push_back("generic extension is invalid");
  const auto back = generic_socle_quotient(e, i, derive_seed(seed, 2), cfg);
  if (!is_isomorphic(back, v, derive_seed(seed, 3), cfg))
    out.push_back("socle quotient of a generic extension by S_" + g.vertex_name(i) + " is not the original module");
  return out;
}

/// Induction step of the dimension formula: D(v - k a_i) - (v - k a_i, v - k a_i)/2
/// + 2 k d_i v_i - k (v, a_i) = D(v) - (v, v)/2, doubled to stay integral.
inline bool dimension_identity_holds(const CartanData& cd, const std::vector<long long>& v, std::size_t i, long long k) {
  auto u = v;
  u[i] -= k;
  std::vector<long long> ai(v.size(), 0);
  ai[i] = 1;
  const long long lhs = 2 * quadratic_dimension(cd, u) - cd.symmetric_form(u, u) + 4 * k * cd.d[i] * v[i] -
                        2 * k * cd.symmetric_form(v, ai);
  return lhs == 2 * quadratic_dimension(cd, v) - cd.symmetric_form(v, v);
}

/// On the affine sl_2 module V the Ext/Hom identity with S_i replaced by V
/// fails: Ext^1(V,V) - 2 Hom(V,V) + (v, v) = 1 - 2 + 0.
template <Field K>
std::vector<long long> self_identity_terms(const Representation<K>& v) {
  const auto& cd = cartan_matrix(*v.graph);
  const auto dv = v.dimension_vector();
  return {static_cast<long long>(ext1_space(v, v).dimension), 2 * static_cast<long long>(hom_space(v, v).size()),
          cd.symmetric_form(dv, dv)};
}

}  // namespace species
