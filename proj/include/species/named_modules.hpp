/**
 * @file named_modules.hpp
 * @brief Explicit modules used as fixtures: the C2 indecomposables, the affine
 *        sl_2 module V, and a random generator of valid nilpotent modules.
 *
 * C2 layout (preset "c2", arrows 0: 1 -> 2 and 1: 2 -> 1). The map on 1 -> 2 is
 * [y | Z y] for an R-linear y : V_1 -> V_2, the map on 2 -> 1 is an R-linear
 * w : V_2 -> V_1, and the relations read w y = 0 and y w = Z y w Z.
 */
#pragma once

#include "species/representation.hpp"

#include <string>
#include <vector>

namespace species {

namespace detail {

inline MatrixOf<RationalField> qmat(std::size_t rows, std::size_t cols, std::initializer_list<long long> entries) {
  RationalField q;
  auto m = zeros(q, rows, cols);
  std::size_t p = 0;
  for (long long e : entries) {
    m(p / cols, p % cols) = q.from_int(e);
    ++p;
  }
  return m;
}

}  // namespace detail

/// Builds a C2 module from y : V_1 -> V_2 and w : V_2 -> V_1.
inline Representation<RationalField> c2_module(const ModulatedGraph<RationalField>& g, std::size_t v1, std::size_t v2,
                                               const MatrixOf<RationalField>& y, const MatrixOf<RationalField>& w) {
  RationalField q;
  auto rep = zero_representation(g, {v1, v2});
  if (v1 > 0 && v2 > 0) {
    rep.maps[0] = hstack(q, y, mul(q, vertex_action(g, 1, v2), y));
    rep.maps[1] = w;
  }
  return rep;
}

/// The C2 indecomposables, named by their Loewy series from head to socle:
/// R, C, RC, CR, CR2, R2C, RCR, CR2C.
inline Representation<RationalField> c2_indecomposable(const ModulatedGraph<RationalField>& g, const std::string& name) {
  using detail::qmat;
  if (name == "R") return simple_module(g, 0);
  if (name == "C") return simple_module(g, 1);
  if (name == "RC") return c2_module(g, 1, 1, qmat(2, 1, {1, 0}), qmat(1, 2, {0, 0}));
  if (name == "CR") return c2_module(g, 1, 1, qmat(2, 1, {0, 0}), qmat(1, 2, {1, 0}));
  if (name == "CR2") return c2_module(g, 2, 1, qmat(2, 2, {0, 0, 0, 0}), qmat(2, 2, {1, 0, 0, 1}));
  if (name == "R2C") return c2_module(g, 2, 1, qmat(2, 2, {1, 0, 0, 1}), qmat(2, 2, {0, 0, 0, 0}));
  if (name == "RCR") return c2_module(g, 2, 1, qmat(2, 2, {1, 0, 0, 0}), qmat(2, 2, {0, 0, 0, 1}));
  if (name == "CR2C")
    return c2_module(g, 2, 2, qmat(4, 2, {0, 0, 0, 0, 1, 0, 0, -1}), qmat(2, 4, {1, 0, 0, 0, 0, 1, 0, 0}));
  throw Error("unknown C2 module " + name);
}

/// The five rigid modules of dimension vector (3,2) as lists of summands.
inline std::vector<std::vector<std::string>> c2_rigid_32() {
  return {{"R", "CR2C"}, {"CR", "CR2"}, {"CR", "RCR"}, {"RC", "R2C"}, {"RC", "RCR"}};
}

template <Field K>
Representation<K> direct_sum_of(const std::vector<Representation<K>>& parts) {
  auto out = parts.front();
  for (std::size_t t = 1; t < parts.size(); ++t) out = direct_sum(out, parts[t]);
  return out;
}

/// The affine sl_2 module V: v = (1,1), m_1 = m_2 = 1, m-bar = 0.
template <Field K>
Representation<K> sl2hat_module_v(const ModulatedGraph<K>& g) {
  const auto& k = g.base();
  auto rep = zero_representation(g, {1, 1});
  // The right frame of M(1 -> 2) is (e_1, e_2) and x sends e_j (x) v to m_j v = v.
  const std::size_t d = g.degree(0);
  const auto& fr = g.arrow(0).right_frame;
  auto x = zeros(k, d, fr.rank * d);
  for (std::size_t blk = 0; blk < fr.rank; ++blk)
    for (std::size_t p = 0; p < d; ++p) x(p, blk * d + p) = k.one();
  rep.maps[0] = x;
  return rep;
}

/// Random valid nilpotent module with every v_i <= max_dim, built from simples by
/// random (not necessarily generic, possibly split) extensions.
template <Field K>
Representation<K> random_module(const ModulatedGraph<K>& g, Rng& rng, std::size_t max_dim = 3) {
  const auto& k = g.base();
  auto rep = simple_module(g, rng() % g.size());
  const std::size_t steps = rng() % (2 * g.size() * max_dim);
  for (std::size_t s = 0; s < steps; ++s) {
    const std::size_t i = rng() % g.size();
    if (rep.dims[i] + 1 > max_dim) continue;
    const auto si = simple_module(g, i);
    const bool on_top = rng() % 2 == 0;
    const auto ext = on_top ? ext1_space(si, rep) : ext1_space(rep, si);
    MapFamily<K> zeta;
    if (ext.classes.empty()) {
      rep = on_top ? direct_sum(rep, si) : direct_sum(si, rep);
      continue;
    }
    for (auto& m : ext.classes.front()) zeta.push_back(zeros(k, m.rows(), m.cols()));
    for (auto& cls : ext.classes) {
      const auto c = rng() % 3 == 0 ? k.zero() : k.random(rng, 3);
      for (std::size_t a = 0; a < zeta.size(); ++a) zeta[a] = add(k, zeta[a], scale(k, c, cls[a]));
    }
    rep = on_top ? assemble_extension(si, rep, zeta) : assemble_extension(rep, si, zeta);
  }
  return rep;
}

}  // namespace species
