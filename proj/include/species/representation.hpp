/**
 * @file representation.hpp
 * @brief Nilpotent representations of preprojective algebras of modulated
 *        graphs, computed exactly over the base field.
 *
 * Storage. V_i is an F_i-space of dimension v_i kept in standard form: base
 * coordinate a*d_i + p holds the x^p-coefficient of the a-th F_i-coordinate,
 * so F_i acts block-diagonally by the companion matrix. For the arrow a: i -> j
 * the structure map x_a : M(a) (x)_{F_i} V_i -> V_j is a base-field matrix in
 * the tensor layout of tensor_embed (r_a blocks of size d_i v_i). F_j-linearity
 * of x_a is a checked invariant rather than built into the storage.
 *
 * Extensions 0 -> B -> E -> A -> 0 are block upper triangular with E_i = B_i (+) A_i
 * (B first). Their off-diagonal blocks zeta_a : M(a) (x) A_i -> B_j are the cocycles.
 */
#pragma once

#include "species/field.hpp"
#include "species/matrix.hpp"
#include "species/modulated_graph.hpp"

#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace species {

/// Sample budgets for every randomized operation.
struct GenericityConfig {
  std::size_t samples = 3;      ///< independent draws that must agree
  std::size_t escalation = 7;   ///< fresh draws after a disagreement
  std::size_t iso_samples = 5;  ///< random intertwiners tried by is_isomorphic
  long long coefficient_bound = 1 << 20;
};

template <Field K>
struct Representation {
  const ModulatedGraph<K>* graph = nullptr;
  std::vector<std::size_t> dims;  ///< v_i over F_i
  std::vector<MatrixOf<K>> maps;  ///< one per arrow

  const K& base() const { return graph->base(); }
  std::size_t base_dim(std::size_t i) const { return graph->degree(i) * dims[i]; }
  std::size_t total_base_dim() const {
    std::size_t s = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) s += base_dim(i);
    return s;
  }
  std::vector<long long> dimension_vector() const { return {dims.begin(), dims.end()}; }
  bool is_zero_module() const { return total_base_dim() == 0; }
};

namespace detail {

template <Field K>
VectorOf<K> unit(const K& k, std::size_t n, std::size_t p) {
  VectorOf<K> v(n, k.zero());
  v[p] = k.one();
  return v;
}

template <Field K>
void append_flat(VectorOf<K>& out, const MatrixOf<K>& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m(r, c));
}

template <Field K>
MatrixOf<K> unflatten(const K& k, const VectorOf<K>& v, std::size_t offset, std::size_t rows, std::size_t cols) {
  auto m = zeros(k, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = v[offset + r * cols + c];
  return m;
}

/// Matrix whose t-th column is eval(t).
template <Field K, class Eval>
MatrixOf<K> matrix_of(const K& k, std::size_t nvars, std::size_t nout, Eval&& eval) {
  auto m = zeros(k, nout, nvars);
  for (std::size_t t = 0; t < nvars; ++t) m.set_column(t, eval(t));
  return m;
}

template <Field K>
VectorOf<K> combine(const K& k, const std::vector<VectorOf<K>>& basis, const VectorOf<K>& coeffs, std::size_t n) {
  VectorOf<K> out(n, k.zero());
  for (std::size_t t = 0; t < basis.size(); ++t) {
    if (k.is_zero(coeffs[t])) continue;
    for (std::size_t p = 0; p < n; ++p) out[p] = k.add(out[p], k.mul(coeffs[t], basis[t][p]));
  }
  return out;
}

}  // namespace detail

/// F_i acting on an F_i-space of dimension v in standard form.
template <Field K>
MatrixOf<K> vertex_action(const ModulatedGraph<K>& g, std::size_t i, std::size_t v) {
  return repeat_diagonal(g.base(), g.generator_matrix(i), v);
}

/// Base dimension of M(a) (x)_{F_from} V_from for an F_from-space of dimension v.
template <Field K>
std::size_t tensor_dim(const ModulatedGraph<K>& g, std::size_t a, std::size_t v_from) {
  return g.arrow(a).bimodule.base_dim * v_from;
}

/// Matrix of v -> m (x) v from an F-space with action z into M (x)_F V.
template <Field K>
MatrixOf<K> embed_matrix(const K& k, const Frame<K>& fr, const VectorOf<K>& m, const MatrixOf<K>& z) {
  const std::size_t dv = z.rows();
  auto out = zeros(k, fr.rank * dv, dv);
  const auto c = apply(k, fr.coords, m);
  auto power = identity(k, dv);
  for (std::size_t p = 0; p < fr.degree; ++p) {
    for (std::size_t a = 0; a < fr.rank; ++a) {
      const auto& coeff = c[a * fr.degree + p];
      if (k.is_zero(coeff)) continue;
      for (std::size_t r = 0; r < dv; ++r)
        for (std::size_t s = 0; s < dv; ++s)
          if (!k.is_zero(power(r, s))) out(a * dv + r, s) = k.add(out(a * dv + r, s), k.mul(coeff, power(r, s)));
    }
    if (p + 1 < fr.degree) power = mul(k, z, power);
  }
  return out;
}

template <Field K>
Representation<K> zero_representation(const ModulatedGraph<K>& g, std::vector<std::size_t> dims) {
  if (dims.size() != g.size()) throw Error("dimension vector length mismatch");
  Representation<K> r{&g, std::move(dims), {}};
  for (auto& arr : g.arrows())
    r.maps.push_back(zeros(g.base(), r.base_dim(arr.to), tensor_dim(g, &arr - g.arrows().data(), r.dims[arr.from])));
  return r;
}

/// S_i: one copy of F_i at vertex i, all maps zero.
template <Field K>
Representation<K> simple_module(const ModulatedGraph<K>& g, std::size_t i) {
  std::vector<std::size_t> dims(g.size(), 0);
  dims.at(i) = 1;
  return zero_representation(g, std::move(dims));
}

template <Field K>
void check_shapes(const Representation<K>& rep) {
  const auto& g = *rep.graph;
  if (rep.dims.size() != g.size() || rep.maps.size() != g.arrows().size())
    throw Error("representation shape mismatch: wrong number of vertices or arrows");
  for (std::size_t a = 0; a < g.arrows().size(); ++a) {
    const auto& arr = g.arrow(a);
    if (rep.maps[a].rows() != rep.base_dim(arr.to) || rep.maps[a].cols() != tensor_dim(g, a, rep.dims[arr.from]))
      throw Error("representation shape mismatch on arrow (" + g.vertex_name(arr.from) + "," + g.vertex_name(arr.to) + ")");
  }
}

// ---------------------------------------------------------------------------
// Relations and the maps x~_i, _i x~

/// Embedding matrices for the canonical element of arrow a: i -> j on a pair
/// of representations (source side at i, target side at j).
template <Field K>
struct CanonicalEmbeddings {
  std::vector<MatrixOf<K>> into_a;    ///< v -> v^k (x) v : V_i -> M(a) (x) V_i
  std::vector<MatrixOf<K>> into_rev;  ///< w -> v_k (x) w : W_j -> M(rev a) (x) W_j
};

template <Field K>
CanonicalEmbeddings<K> canonical_embeddings(const ModulatedGraph<K>& g, std::size_t a, std::size_t v_i, std::size_t w_j) {
  const auto& k = g.base();
  const auto& arr = g.arrow(a);
  const auto& rev = g.arrow(arr.reverse);
  const auto zi = vertex_action(g, arr.from, v_i);
  const auto zj = vertex_action(g, arr.to, w_j);
  CanonicalEmbeddings<K> out;
  for (auto& [vk, vk_dual] : g.canonical(a).terms) {
    out.into_a.push_back(embed_matrix(k, arr.right_frame, vk_dual, zi));
    out.into_rev.push_back(embed_matrix(k, rev.right_frame, vk, zj));
  }
  return out;
}

template <Field K>
struct TildeData {
  std::size_t vertex = 0;
  std::vector<std::size_t> components;  ///< arrows a: i -> j whose M(rev a) (x) V_j make up V^i
  MatrixOf<K> out_map;                  ///< x~_i : V_i -> V^i
  MatrixOf<K> in_map;                   ///< _i x~ : V^i -> V_i
  MatrixOf<K> field_action;             ///< F_i acting on V^i
};

template <Field K>
TildeData<K> tilde_maps(const Representation<K>& rep, std::size_t i) {
  const auto& g = *rep.graph;
  const auto& k = g.base();
  check_shapes(rep);
  TildeData<K> td;
  td.vertex = i;
  td.out_map = zeros(k, 0, rep.base_dim(i));
  td.in_map = zeros(k, rep.base_dim(i), 0);
  td.field_action = zeros(k, 0, 0);
  for (std::size_t a : g.arrows_out(i)) {
    const auto& arr = g.arrow(a);
    const std::size_t j = arr.to;
    const auto emb = canonical_embeddings(g, a, rep.dims[i], rep.dims[j]);
    auto block = zeros(k, tensor_dim(g, arr.reverse, rep.dims[j]), rep.base_dim(i));
    for (std::size_t t = 0; t < emb.into_a.size(); ++t)
      block = add(k, block, mul(k, emb.into_rev[t], mul(k, rep.maps[a], emb.into_a[t])));
    td.components.push_back(a);
    td.out_map = vstack(k, td.out_map, block);
    td.in_map = hstack(k, td.in_map, rep.maps[arr.reverse]);
    const auto& rev = g.arrow(arr.reverse);
    td.field_action = block_diagonal(
        k, td.field_action,
        tensor_left_action(k, rev.right_frame, rev.bimodule.left_gen_action, vertex_action(g, j, rep.dims[j])));
  }
  return td;
}

/// The action of the relation r_i on V_i, computed term by term through the
/// canonical elements (independently of tilde_maps).
template <Field K>
MatrixOf<K> relation_action(const Representation<K>& rep, std::size_t i) {
  const auto& g = *rep.graph;
  const auto& k = g.base();
  const std::size_t n = rep.base_dim(i);
  auto out = zeros(k, n, n);
  const auto zi = vertex_action(g, i, rep.dims[i]);
  for (std::size_t e = 0; e < n; ++e) {
    const auto v = detail::unit(k, n, e);
    VectorOf<K> acc(n, k.zero());
    for (std::size_t a : g.arrows_out(i)) {
      const auto& arr = g.arrow(a);
      const auto& rev = g.arrow(arr.reverse);
      const auto zj = vertex_action(g, arr.to, rep.dims[arr.to]);
      for (auto& [vk, vk_dual] : g.canonical(a).terms) {
        auto w = apply(k, rep.maps[a], tensor_embed(k, arr.right_frame, vk_dual, zi, v));
        auto u = apply(k, rep.maps[arr.reverse], tensor_embed(k, rev.right_frame, vk, zj, w));
        for (std::size_t p = 0; p < n; ++p) acc[p] = k.add(acc[p], u[p]);
      }
    }
    out.set_column(e, acc);
  }
  return out;
}

/// The descending image chain U_0 = V, U_{k+1} = sum of images of U_k reaches 0.
template <Field K>
bool is_nilpotent(const Representation<K>& rep) {
  const auto& g = *rep.graph;
  const auto& k = g.base();
  std::vector<MatrixOf<K>> chain(g.size());
  std::size_t total = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    chain[i] = identity(k, rep.base_dim(i));
    total += rep.base_dim(i);
  }
  while (total > 0) {
    std::vector<std::vector<VectorOf<K>>> next(g.size());
    for (std::size_t a = 0; a < g.arrows().size(); ++a) {
      const auto& arr = g.arrow(a);
      const std::size_t dv = rep.base_dim(arr.from);
      const std::size_t r = arr.right_frame.rank;
      for (std::size_t c = 0; c < chain[arr.from].cols(); ++c) {
        const auto u = chain[arr.from].column(c);
        for (std::size_t blk = 0; blk < r; ++blk) {
          VectorOf<K> t(r * dv, k.zero());
          for (std::size_t e = 0; e < dv; ++e) t[blk * dv + e] = u[e];
          next[arr.to].push_back(apply(k, rep.maps[a], t));
        }
      }
    }
    std::size_t new_total = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      chain[i] = next[i].empty() ? zeros(k, rep.base_dim(i), 0) : column_space(k, from_columns(k, rep.base_dim(i), next[i]));
      new_total += chain[i].cols();
    }
    if (new_total == total) return false;
    total = new_total;
  }
  return true;
}

struct ValidityReport {
  std::vector<std::string> linearity_failures;
  std::vector<bool> relation_holds;  ///< per vertex
  bool nilpotent = false;

  bool valid() const {
    if (!linearity_failures.empty() || !nilpotent) return false;
    for (bool b : relation_holds)
      if (!b) return false;
    return true;
  }
  std::string summary() const {
    std::string s;
    for (auto& f : linearity_failures) s += f + "; ";
    for (std::size_t i = 0; i < relation_holds.size(); ++i)
      if (!relation_holds[i]) s += "relation fails at vertex index " + std::to_string(i) + "; ";
    if (!nilpotent) s += "not nilpotent; ";
    return s.empty() ? "valid" : s;
  }
};

template <Field K>
ValidityReport check_representation(const Representation<K>& rep) {
  check_shapes(rep);
  const auto& g = *rep.graph;
  const auto& k = g.base();
  ValidityReport rpt;
  for (std::size_t a = 0; a < g.arrows().size(); ++a) {
    const auto& arr = g.arrow(a);
    const auto lhs = mul(k, rep.maps[a],
                         tensor_left_action(k, arr.right_frame, arr.bimodule.left_gen_action,
                                            vertex_action(g, arr.from, rep.dims[arr.from])));
    const auto rhs = mul(k, vertex_action(g, arr.to, rep.dims[arr.to]), rep.maps[a]);
    if (!equal(k, lhs, rhs))
      rpt.linearity_failures.push_back("map on arrow (" + g.vertex_name(arr.from) + "," + g.vertex_name(arr.to) +
                                       ") is not linear over the target field");
  }
  for (std::size_t i = 0; i < g.size(); ++i) rpt.relation_holds.push_back(is_zero(k, relation_action(rep, i)));
  rpt.nilpotent = is_nilpotent(rep);
  return rpt;
}

template <Field K>
void require_valid(const Representation<K>& rep) {
  const auto rpt = check_representation(rep);
  if (!rpt.valid()) throw Error("invalid representation: " + rpt.summary());
}

/// phi_i = dim_{F_i} ker x~_i (the socle at i).
template <Field K>
std::size_t phi(const Representation<K>& rep, std::size_t i) {
  const auto td = tilde_maps(rep, i);
  return (rep.base_dim(i) - rank(rep.base(), td.out_map)) / rep.graph->degree(i);
}

/// phi*_i = dim_{F_i} V_i / im _i x~ (the head at i).
template <Field K>
std::size_t phi_star(const Representation<K>& rep, std::size_t i) {
  const auto td = tilde_maps(rep, i);
  return (rep.base_dim(i) - rank(rep.base(), td.in_map)) / rep.graph->degree(i);
}

struct HeadSocle {
  std::vector<std::size_t> socle;
  std::vector<std::size_t> head;
  std::size_t total_head = 0;
  std::size_t total_socle = 0;
};

template <Field K>
HeadSocle head_socle_dims(const Representation<K>& rep) {
  HeadSocle hs;
  for (std::size_t i = 0; i < rep.graph->size(); ++i) {
    hs.socle.push_back(phi(rep, i));
    hs.head.push_back(phi_star(rep, i));
    hs.total_head += hs.head.back();
    hs.total_socle += hs.socle.back();
  }
  return hs;
}

// ---------------------------------------------------------------------------
// Hom

/// Base-field basis of the F_i-linear maps between standard F_i-spaces of
/// dimensions v_src -> v_tgt: blocks equal to powers of the companion matrix.
template <Field K>
std::vector<MatrixOf<K>> field_linear_basis(const ModulatedGraph<K>& g, std::size_t i, std::size_t v_src, std::size_t v_tgt) {
  const auto& k = g.base();
  const std::size_t d = g.degree(i);
  std::vector<MatrixOf<K>> powers{identity(k, d)};
  for (std::size_t c = 1; c < d; ++c) powers.push_back(mul(k, g.generator_matrix(i), powers.back()));
  std::vector<MatrixOf<K>> out;
  for (std::size_t p = 0; p < v_tgt; ++p)
    for (std::size_t q = 0; q < v_src; ++q)
      for (std::size_t c = 0; c < d; ++c) {
        auto m = zeros(k, d * v_tgt, d * v_src);
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t s = 0; s < d; ++s) m(p * d + r, q * d + s) = powers[c](r, s);
        out.push_back(std::move(m));
      }
  return out;
}

/// A family of per-vertex base-field maps.
template <Field K>
using MapFamily = std::vector<MatrixOf<K>>;

namespace detail {

/// Unknown layout shared by Hom and the coboundary map: per vertex, the
/// F_i-linear basis A_i -> B_i.
template <Field K>
struct VertexMapBasis {
  std::vector<std::size_t> vertex;  ///< vertex of unknown t
  std::vector<MatrixOf<K>> matrix;  ///< basis matrix of unknown t
};

template <Field K>
VertexMapBasis<K> vertex_map_basis(const Representation<K>& A, const Representation<K>& B) {
  const auto& g = *A.graph;
  VertexMapBasis<K> vb;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (auto& m : field_linear_basis(g, i, A.dims[i], B.dims[i])) {
      vb.vertex.push_back(i);
      vb.matrix.push_back(std::move(m));
    }
  return vb;
}

/// Offsets of the per-arrow blocks M(a) (x) A_from -> B_to in a flattened family.
template <Field K>
std::vector<std::size_t> arrow_offsets(const Representation<K>& A, const Representation<K>& B, std::size_t& total) {
  const auto& g = *A.graph;
  std::vector<std::size_t> off;
  total = 0;
  for (std::size_t a = 0; a < g.arrows().size(); ++a) {
    off.push_back(total);
    total += B.base_dim(g.arrow(a).to) * tensor_dim(g, a, A.dims[g.arrow(a).from]);
  }
  return off;
}

/// delta(h)_a = x^B_a (id (x) h_i) - h_j x^A_a for a single unknown h at vertex v.
template <Field K>
VectorOf<K> coboundary_of_unknown(const Representation<K>& A, const Representation<K>& B, std::size_t v,
                                  const MatrixOf<K>& h, const std::vector<std::size_t>& off, std::size_t total) {
  const auto& g = *A.graph;
  const auto& k = g.base();
  VectorOf<K> out(total, k.zero());
  auto put = [&](std::size_t a, const MatrixOf<K>& m, bool negate) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) {
        auto& slot = out[off[a] + r * m.cols() + c];
        slot = negate ? k.sub(slot, m(r, c)) : k.add(slot, m(r, c));
      }
  };
  for (std::size_t a : g.arrows_out(v)) put(a, mul(k, B.maps[a], repeat_diagonal(k, h, g.arrow(a).right_frame.rank)), false);
  for (std::size_t a : g.arrows_in(v)) put(a, mul(k, h, A.maps[a]), true);
  return out;
}

template <Field K>
MapFamily<K> family_from_coefficients(const Representation<K>& A, const Representation<K>& B,
                                      const VertexMapBasis<K>& vb, const VectorOf<K>& coeffs) {
  const auto& k = A.base();
  MapFamily<K> fam;
  for (std::size_t i = 0; i < A.graph->size(); ++i) fam.push_back(zeros(k, B.base_dim(i), A.base_dim(i)));
  for (std::size_t t = 0; t < coeffs.size(); ++t)
    if (!k.is_zero(coeffs[t])) fam[vb.vertex[t]] = add(k, fam[vb.vertex[t]], scale(k, coeffs[t], vb.matrix[t]));
  return fam;
}

}  // namespace detail

/// Base-field basis of Hom(A, B): families of F_i-linear maps intertwining all
/// structure maps.
template <Field K>
std::vector<MapFamily<K>> hom_space(const Representation<K>& A, const Representation<K>& B) {
  if (A.graph != B.graph) throw Error("graph mismatch");
  const auto& k = A.base();
  const auto vb = detail::vertex_map_basis(A, B);
  std::size_t total = 0;
  const auto off = detail::arrow_offsets(A, B, total);
  const auto m = detail::matrix_of(k, vb.matrix.size(), total, [&](std::size_t t) {
    return detail::coboundary_of_unknown(A, B, vb.vertex[t], vb.matrix[t], off, total);
  });
  std::vector<MapFamily<K>> out;
  for (auto& v : kernel(k, m)) out.push_back(detail::family_from_coefficients(A, B, vb, v));
  return out;
}

template <Field K>
bool is_intertwiner(const Representation<K>& A, const Representation<K>& B, const MapFamily<K>& h) {
  const auto& g = *A.graph;
  const auto& k = g.base();
  for (std::size_t a = 0; a < g.arrows().size(); ++a) {
    const auto& arr = g.arrow(a);
    if (!equal(k, mul(k, h[arr.to], A.maps[a]), mul(k, B.maps[a], repeat_diagonal(k, h[arr.from], arr.right_frame.rank))))
      return false;
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!equal(k, mul(k, h[i], vertex_action(g, i, A.dims[i])), mul(k, vertex_action(g, i, B.dims[i]), h[i])))
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Ext^1

template <Field K>
struct Ext1Space {
  std::size_t dimension = 0;         ///< base-field dimension of Ext^1(A, B)
  std::size_t cocycle_dim = 0;       ///< dim Z
  std::size_t coboundary_dim = 0;    ///< dim of the coboundary image
  std::size_t splitting_kernel = 0;  ///< kernel of the change-of-splitting map (= dim Hom(A, B))
  std::vector<MapFamily<K>> classes; ///< per-arrow off-diagonal blocks, one per class basis vector
};

namespace detail {

/// Off-diagonal part (A_i -> B_i) of the relation r_i acting on the extension
/// defined by zeta; zeta enters linearly.
template <Field K>
VectorOf<K> cocycle_residual(const Representation<K>& A, const Representation<K>& B, const MapFamily<K>& zeta,
                             const std::vector<std::vector<CanonicalEmbeddings<K>>>& embA,
                             const std::vector<std::vector<CanonicalEmbeddings<K>>>& embB) {
  const auto& g = *A.graph;
  const auto& k = g.base();
  VectorOf<K> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto res = zeros(k, B.base_dim(i), A.base_dim(i));
    const auto& outs = g.arrows_out(i);
    for (std::size_t s = 0; s < outs.size(); ++s) {
      const std::size_t a = outs[s];
      const std::size_t ra = g.arrow(a).reverse;
      const auto& ea = embA[i][s];
      const auto& eb = embB[i][s];
      for (std::size_t t = 0; t < ea.into_a.size(); ++t) {
        // x^B_{rev a} (v_k (x) zeta_a(v^k (x) e)) + zeta_{rev a}(v_k (x) x^A_a(v^k (x) e))
        res = add(k, res, mul(k, B.maps[ra], mul(k, eb.into_rev[t], mul(k, zeta[a], ea.into_a[t]))));
        res = add(k, res, mul(k, zeta[ra], mul(k, ea.into_rev[t], mul(k, A.maps[a], ea.into_a[t]))));
      }
    }
    append_flat<K>(out, res);
  }
  return out;
}

}  // namespace detail

/// Ext^1(A, B): classes of extensions 0 -> B -> E -> A -> 0, computed as
/// cocycles (F-linear off-diagonal blocks satisfying the linearized relations)
/// modulo coboundaries (changes of splitting).
template <Field K>
Ext1Space<K> ext1_space(const Representation<K>& A, const Representation<K>& B) {
  if (A.graph != B.graph) throw Error("graph mismatch");
  const auto& g = *A.graph;
  const auto& k = g.base();
  check_shapes(A);
  check_shapes(B);

  // F_j-linear blocks zeta_a : M(a) (x) A_i -> B_j.
  std::vector<std::size_t> owner;
  std::vector<MatrixOf<K>> zbasis;
  for (std::size_t a = 0; a < g.arrows().size(); ++a) {
    const auto& arr = g.arrow(a);
    const std::size_t rows = B.base_dim(arr.to), cols = tensor_dim(g, a, A.dims[arr.from]);
    if (rows == 0 || cols == 0) continue;
    const auto zb = vertex_action(g, arr.to, B.dims[arr.to]);
    const auto la = tensor_left_action(k, arr.right_frame, arr.bimodule.left_gen_action,
                                       vertex_action(g, arr.from, A.dims[arr.from]));
    const auto lin = detail::matrix_of(k, rows * cols, rows * cols, [&](std::size_t t) {
      auto e = zeros(k, rows, cols);
      e(t / cols, t % cols) = k.one();
      VectorOf<K> v;
      detail::append_flat<K>(v, sub(k, mul(k, zb, e), mul(k, e, la)));
      return v;
    });
    for (auto& v : kernel(k, lin)) {
      owner.push_back(a);
      zbasis.push_back(detail::unflatten(k, v, 0, rows, cols));
    }
  }
  auto empty_family = [&]() {
    MapFamily<K> f;
    for (std::size_t a = 0; a < g.arrows().size(); ++a)
      f.push_back(zeros(k, B.base_dim(g.arrow(a).to), tensor_dim(g, a, A.dims[g.arrow(a).from])));
    return f;
  };

  std::vector<std::vector<CanonicalEmbeddings<K>>> embA(g.size()), embB(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t a : g.arrows_out(i)) {
      embA[i].push_back(canonical_embeddings(g, a, A.dims[i], A.dims[g.arrow(a).to]));
      embB[i].push_back(canonical_embeddings(g, a, B.dims[i], B.dims[g.arrow(a).to]));
    }
  std::size_t res_len = 0;
  for (std::size_t i = 0; i < g.size(); ++i) res_len += B.base_dim(i) * A.base_dim(i);
  const auto cocycle_map = detail::matrix_of(k, zbasis.size(), res_len, [&](std::size_t t) {
    auto fam = empty_family();
    fam[owner[t]] = zbasis[t];
    return detail::cocycle_residual(A, B, fam, embA, embB);
  });
  const auto z_coeffs = kernel(k, cocycle_map);

  // Flattened coordinates of families, for comparing cocycles with coboundaries.
  std::size_t flat_len = 0;
  const auto off = detail::arrow_offsets(A, B, flat_len);
  auto flatten = [&](const MapFamily<K>& fam) {
    VectorOf<K> v;
    for (auto& m : fam) detail::append_flat<K>(v, m);
    return v;
  };
  std::vector<VectorOf<K>> cocycles;
  for (auto& c : z_coeffs) {
    auto fam = empty_family();
    for (std::size_t t = 0; t < c.size(); ++t)
      if (!k.is_zero(c[t])) fam[owner[t]] = add(k, fam[owner[t]], scale(k, c[t], zbasis[t]));
    cocycles.push_back(flatten(fam));
  }

  const auto vb = detail::vertex_map_basis(A, B);
  const auto delta = detail::matrix_of(k, vb.matrix.size(), flat_len, [&](std::size_t t) {
    return detail::coboundary_of_unknown(A, B, vb.vertex[t], vb.matrix[t], off, flat_len);
  });

  Ext1Space<K> out;
  out.cocycle_dim = cocycles.size();
  out.coboundary_dim = rank(k, delta);
  out.splitting_kernel = vb.matrix.size() - out.coboundary_dim;
  out.dimension = out.cocycle_dim - out.coboundary_dim;

  // Class basis: cocycles extending a basis of the coboundaries.
  auto span = column_space(k, delta);
  std::size_t current = span.cols();
  for (auto& c : cocycles) {
    if (out.classes.size() == out.dimension) break;
    auto trial = hstack(k, span, from_columns(k, flat_len, {c}));
    if (rank(k, trial) > current) {
      span = std::move(trial);
      ++current;
      MapFamily<K> fam;
      for (std::size_t a = 0; a < g.arrows().size(); ++a)
        fam.push_back(detail::unflatten(k, c, off[a], B.base_dim(g.arrow(a).to), tensor_dim(g, a, A.dims[g.arrow(a).from])));
      out.classes.push_back(std::move(fam));
    }
  }
  return out;
}

/// E = B (+) A with structure maps [[x^B, zeta], [0, x^A]].
template <Field K>
Representation<K> assemble_extension(const Representation<K>& A, const Representation<K>& B, const MapFamily<K>& zeta) {
  const auto& g = *A.graph;
  const auto& k = g.base();
  std::vector<std::size_t> dims(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) dims[i] = A.dims[i] + B.dims[i];
  auto E = zero_representation(g, dims);
  for (std::size_t a = 0; a < g.arrows().size(); ++a) {
    const auto& arr = g.arrow(a);
    const std::size_t r = arr.right_frame.rank;
    const std::size_t bi = B.base_dim(arr.from), ai = A.base_dim(arr.from), ei = bi + ai;
    const std::size_t bj = B.base_dim(arr.to);
    auto& x = E.maps[a];
    for (std::size_t blk = 0; blk < r; ++blk) {
      for (std::size_t e = 0; e < bi; ++e)
        for (std::size_t row = 0; row < bj; ++row) x(row, blk * ei + e) = B.maps[a](row, blk * bi + e);
      for (std::size_t e = 0; e < ai; ++e) {
        for (std::size_t row = 0; row < bj; ++row) x(row, blk * ei + bi + e) = zeta[a](row, blk * ai + e);
        for (std::size_t row = 0; row < A.base_dim(arr.to); ++row)
          x(bj + row, blk * ei + bi + e) = A.maps[a](row, blk * ai + e);
      }
    }
  }
  return E;
}

template <Field K>
Representation<K> direct_sum(const Representation<K>& A, const Representation<K>& B) {
  const auto& g = *A.graph;
  MapFamily<K> zero;
  for (std::size_t a = 0; a < g.arrows().size(); ++a)
    zero.push_back(zeros(g.base(), A.base_dim(g.arrow(a).to), tensor_dim(g, a, B.dims[g.arrow(a).from])));
  // E = A (+) B: A plays the role of the sub.
  return assemble_extension(B, A, zero);
}

/// Random class sum_t c_t class_t with coefficients in [-bound, bound].
template <Field K>
MapFamily<K> random_class(const K& k, const Ext1Space<K>& ext, Rng& rng, long long bound) {
  MapFamily<K> fam;
  for (auto& m : ext.classes.front()) fam.push_back(zeros(k, m.rows(), m.cols()));
  for (auto& cls : ext.classes) {
    const auto c = k.random(rng, bound);
    for (std::size_t a = 0; a < fam.size(); ++a) fam[a] = add(k, fam[a], scale(k, c, cls[a]));
  }
  return fam;
}

// ---------------------------------------------------------------------------
// Isomorphism

template <Field K>
bool is_invertible_family(const K& k, const MapFamily<K>& h) {
  for (auto& m : h)
    if (m.rows() != m.cols() || rank(k, m) != m.rows()) return false;
  return true;
}

/// Cheap isomorphism invariants: dimension vector and socle/head profiles.
template <Field K>
struct Signature {
  std::vector<std::size_t> dims, socle, head;
  bool operator==(const Signature&) const = default;
};

template <Field K>
Signature<K> signature(const Representation<K>& rep) {
  const auto hs = head_socle_dims(rep);
  return {rep.dims, hs.socle, hs.head};
}

/// True iff an invertible intertwiner is found. False answers come after
/// invariant screening and an exhausted random plus structured search over
/// Hom(A, B); a wrong "false" requires every sample to be singular.
template <Field K>
bool is_isomorphic(const Representation<K>& A, const Representation<K>& B, std::uint64_t seed,
                   const GenericityConfig& cfg = {}) {
  if (A.graph != B.graph) throw Error("graph mismatch");
  if (A.dims != B.dims) return false;
  if (A.is_zero_module()) return true;
  if (!(signature(A) == signature(B))) return false;
  const auto& k = A.base();
  const auto hom = hom_space(A, B);
  if (hom.empty()) return false;
  if (hom.size() != hom_space(B, A).size()) return false;
  if (hom_space(A, A).size() != hom_space(B, B).size()) return false;

  auto combine = [&](const VectorOf<K>& c) {
    MapFamily<K> h;
    for (auto& m : hom.front()) h.push_back(zeros(k, m.rows(), m.cols()));
    for (std::size_t t = 0; t < hom.size(); ++t)
      if (!k.is_zero(c[t]))
        for (std::size_t i = 0; i < h.size(); ++i) h[i] = add(k, h[i], scale(k, c[t], hom[t][i]));
    return h;
  };
  Rng rng(seed);
  for (std::size_t s = 0; s < cfg.iso_samples; ++s) {
    VectorOf<K> c(hom.size());
    for (auto& x : c) x = k.random(rng, cfg.coefficient_bound);
    if (is_invertible_family(k, combine(c))) return true;
  }
  for (std::size_t t = 0; t < hom.size(); ++t) {
    if (is_invertible_family(k, hom[t])) return true;
    for (std::size_t u = t + 1; u < hom.size(); ++u) {
      VectorOf<K> c(hom.size(), k.zero());
      c[t] = c[u] = k.one();
      if (is_invertible_family(k, combine(c))) return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Generic operations

namespace detail {

inline std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace detail

/// Deterministic child seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0) {
  return detail::mix(detail::mix(detail::mix(seed ^ detail::mix(a)) ^ b) ^ detail::mix(c + 0x51ed27));
}

/// Draws independent samples and returns the first when all are pairwise
/// isomorphic; after a disagreement a fresh, larger batch must agree.
template <Field K>
Representation<K> certify_generic(const std::function<Representation<K>(Rng&)>& sampler, std::uint64_t seed,
                                  const GenericityConfig& cfg) {
  Rng rng(seed);
  for (std::size_t batch : {cfg.samples, cfg.escalation}) {
    std::vector<Representation<K>> draws;
    for (std::size_t s = 0; s < batch; ++s) draws.push_back(sampler(rng));
    bool agree = true;
    for (std::size_t s = 1; s < draws.size() && agree; ++s)
      agree = is_isomorphic(draws.front(), draws[s], derive_seed(seed, 0x150, batch, s), cfg);
    if (agree) return draws.front();
  }
  throw Error("genericity undetermined: independent samples are not isomorphic");
}

/// Generic extension 0 -> sub -> E -> quotient -> 0.
template <Field K>
Representation<K> generic_extension(const Representation<K>& quotient, const Representation<K>& sub, std::uint64_t seed,
                                    const GenericityConfig& cfg = {}) {
  const auto ext = ext1_space(quotient, sub);
  if (ext.dimension == 0) return direct_sum(sub, quotient);
  const auto& k = quotient.base();
  return certify_generic<K>(
      [&](Rng& rng) { return assemble_extension(quotient, sub, random_class(k, ext, rng, cfg.coefficient_bound)); },
      seed, cfg);
}

namespace detail {

/// Change of basis into standard form: the columns of `basis` (an F_i-stable
/// subspace, listed orbit by orbit as w, zw, ..., z^{d-1}w) become the new basis.
template <Field K>
MatrixOf<K> standard_frame(const ModulatedGraph<K>& g, std::size_t i, const std::vector<VectorOf<K>>& spanning,
                           std::size_t n) {
  const auto& k = g.base();
  const std::size_t d = g.degree(i);
  const auto z = vertex_action(g, i, n / d);
  std::vector<VectorOf<K>> cols;
  for (auto& w : spanning) {
    if (!cols.empty() && in_span(k, from_columns(k, n, cols), w)) continue;
    if (is_zero(k, w)) continue;
    auto v = w;
    for (std::size_t p = 0; p < d; ++p) {
      cols.push_back(v);
      v = apply(k, z, v);
    }
  }
  return from_columns(k, n, cols);
}

/// Quotient of rep by an F_i-stable subspace L of V_i contained in the socle
/// (killed by every arrow leaving i).
template <Field K>
Representation<K> quotient_at(const Representation<K>& rep, std::size_t i, const MatrixOf<K>& L) {
  const auto& g = *rep.graph;
  const auto& k = g.base();
  const std::size_t n = rep.base_dim(i), d = g.degree(i);
  // Complement spanned by standard F_i-coordinate blocks.
  std::vector<std::size_t> blocks;
  auto span = L;
  for (std::size_t b = 0; b < rep.dims[i] && span.cols() < n; ++b) {
    auto trial = span;
    for (std::size_t p = 0; p < d; ++p) trial = hstack(k, trial, from_columns(k, n, {unit(k, n, b * d + p)}));
    if (rank(k, trial) == span.cols() + d) {
      span = trial;
      blocks.push_back(b);
    }
  }
  const std::size_t keep = blocks.size() * d;
  auto section = zeros(k, n, keep);
  for (std::size_t s = 0; s < blocks.size(); ++s)
    for (std::size_t p = 0; p < d; ++p) section(blocks[s] * d + p, s * d + p) = k.one();
  auto full = hstack(k, section, L);
  auto inv = inverse(k, full);
  if (!inv) throw Error("internal: quotient complement is not a complement");
  const auto projection = submatrix(k, *inv, 0, 0, keep, n);

  auto dims = rep.dims;
  dims[i] = blocks.size();
  auto out = zero_representation(g, dims);
  for (std::size_t a = 0; a < g.arrows().size(); ++a) {
    const auto& arr = g.arrow(a);
    auto x = rep.maps[a];
    if (arr.from == i) x = mul(k, x, repeat_diagonal(k, section, arr.right_frame.rank));
    if (arr.to == i) x = mul(k, projection, x);
    out.maps[a] = std::move(x);
  }
  return out;
}

/// Submodule replacing V_i by the F_i-stable subspace with basis `S` (columns
/// in standard orbit order); all images landing in V_i must lie in S.
template <Field K>
Representation<K> submodule_at(const Representation<K>& rep, std::size_t i, const MatrixOf<K>& S) {
  const auto& g = *rep.graph;
  const auto& k = g.base();
  auto dims = rep.dims;
  dims[i] = S.cols() / g.degree(i);
  auto out = zero_representation(g, dims);
  for (std::size_t a = 0; a < g.arrows().size(); ++a) {
    const auto& arr = g.arrow(a);
    auto x = rep.maps[a];
    if (arr.from == i) x = mul(k, x, repeat_diagonal(k, S, arr.right_frame.rank));
    if (arr.to == i) {
      auto y = zeros(k, S.cols(), x.cols());
      for (std::size_t c = 0; c < x.cols(); ++c) {
        const auto sol = solve_linear(k, S, x.column(c));
        if (!sol.consistent) throw Error("internal: subspace is not closed under the structure maps");
        y.set_column(c, sol.particular);
      }
      x = std::move(y);
    }
    out.maps[a] = std::move(x);
  }
  return out;
}

template <Field K>
VectorOf<K> random_vector_in(const K& k, const std::vector<VectorOf<K>>& basis, std::size_t n, Rng& rng, long long bound) {
  for (;;) {
    VectorOf<K> c(basis.size());
    for (auto& x : c) x = k.random(rng, bound);
    auto v = combine(k, basis, c, n);
    if (!is_zero(k, v)) return v;
  }
}

}  // namespace detail

/// Quotient by a generic F_i-line of the socle ker x~_i.
template <Field K>
Representation<K> generic_socle_quotient(const Representation<K>& rep, std::size_t i, std::uint64_t seed,
                                         const GenericityConfig& cfg = {}) {
  const auto& g = *rep.graph;
  const auto& k = g.base();
  const auto td = tilde_maps(rep, i);
  const auto ker = kernel(k, td.out_map);
  if (ker.empty()) throw Error("no socle at vertex " + g.vertex_name(i));
  const std::size_t n = rep.base_dim(i);
  return certify_generic<K>(
      [&](Rng& rng) {
        const auto w = detail::random_vector_in(k, ker, n, rng, cfg.coefficient_bound);
        return detail::quotient_at(rep, i, detail::standard_frame(g, i, {w}, n));
      },
      seed, cfg);
}

/// Submodule given by a generic F_i-hyperplane of V_i containing im _i x~,
/// together with all V_j for j != i.
template <Field K>
Representation<K> generic_head_submodule(const Representation<K>& rep, std::size_t i, std::uint64_t seed,
                                         const GenericityConfig& cfg = {}) {
  const auto& g = *rep.graph;
  const auto& k = g.base();
  const std::size_t n = rep.base_dim(i), d = g.degree(i);
  const auto td = tilde_maps(rep, i);
  const auto image = column_space(k, td.in_map);
  if (image.cols() == n) throw Error("no head at vertex " + g.vertex_name(i));
  // functionals vanishing on the image
  const auto annihilator = kernel(k, image.cols() == 0 ? zeros(k, 0, n) : transpose(image));
  const auto z = vertex_action(g, i, rep.dims[i]);
  return certify_generic<K>(
      [&](Rng& rng) {
        const auto gvec = detail::random_vector_in(k, annihilator, n, rng, cfg.coefficient_bound);
        // H = {v : g(z^p v) = 0 for all p}, an F_i-hyperplane containing the image.
        std::vector<VectorOf<K>> rows;
        auto row = gvec;
        for (std::size_t p = 0; p < d; ++p) {
          rows.push_back(row);
          row = apply(k, transpose(z), row);
        }
        const auto hyper = kernel(k, from_rows(k, n, rows));
        return detail::submodule_at(rep, i, detail::standard_frame(g, i, hyper, n));
      },
      seed, cfg);
}

}  // namespace species
