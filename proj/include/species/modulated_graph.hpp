/**
 * @file modulated_graph.hpp
 * @brief Modulated graphs (species): vertex fields, arrow bimodules, pairing
 *        forms, canonical elements and the derived Cartan data.
 *
 * Conventions. Vertices are indexed 0..n-1. The arrow a: i -> j carries the
 * (F_j, F_i)-bimodule M(a); its left action is by F_j = F_{to} and its right
 * action by F_i = F_{from}, both stored as base-field matrices of the field
 * generators. The form attached to a: i -> j takes values in F_i and pairs
 * M(rev a) (rows) with M(a) (columns):
 *
 *     eps_a : M(rev a) (x)_{F_j} M(a) -> F_i.
 *
 * The canonical element of a: i -> j lives in M(rev a) (x)_{F_j} M(a): it is
 * sum_k v_k (x) v^k where {v_k} is the stored right F_j-frame of M(rev a) and
 * {v^k} in M(a) is dual to it under eps_{rev a}. The relation at vertex i is
 * the sum of the canonical elements of all arrows leaving i.
 */
#pragma once

#include "species/field.hpp"
#include "species/matrix.hpp"

#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace species {

template <Field K>
using VertexField = ExtensionField<K>;
template <Field K>
using FieldValue = typename ExtensionField<K>::value_type;

/// A right F-basis of a base-field space M on which F acts by `action`.
/// Column a*d + k of `basis` is action^k u_a; `coords` is its inverse.
template <Field K>
struct Frame {
  std::size_t rank = 0;
  std::size_t degree = 1;
  MatrixOf<K> basis;
  MatrixOf<K> coords;

  std::vector<typename K::value_type> generator(std::size_t a) const { return basis.column(a * degree); }
};

/// Greedy frame: standard basis vectors are added with their F-orbit whenever
/// they are not already in the span. Cyclic F-submodules are 1-dimensional
/// over F, so each step adds exactly `degree` independent vectors or none.
template <Field K>
Frame<K> build_frame(const K& k, const MatrixOf<K>& action, std::size_t degree) {
  const std::size_t n = action.rows();
  if (n % degree != 0) throw Error("dimension is not divisible by the field degree");
  Frame<K> fr;
  fr.degree = degree;
  std::vector<VectorOf<K>> cols;
  for (std::size_t s = 0; s < n && cols.size() < n; ++s) {
    VectorOf<K> v(n, k.zero());
    v[s] = k.one();
    if (!cols.empty() && in_span(k, from_columns(k, n, cols), v)) continue;
    for (std::size_t p = 0; p < degree; ++p) {
      cols.push_back(v);
      v = apply(k, action, v);
    }
  }
  fr.rank = cols.size() / degree;
  fr.basis = from_columns(k, n, cols);
  auto inv = inverse(k, fr.basis);
  if (!inv) throw Error("field action does not make the space free (minimal polynomial not satisfied?)");
  fr.coords = std::move(*inv);
  return fr;
}

/// Coordinates of m (x)_F v in M (x)_F V, where M is described by its right
/// F-frame and F acts on V by `v_action`. The layout is r blocks of dim V,
/// block a holding the F-coefficient of u_a applied to v.
template <Field K>
VectorOf<K> tensor_embed(const K& k, const Frame<K>& fr, const VectorOf<K>& m, const MatrixOf<K>& v_action,
                         const VectorOf<K>& v) {
  const std::size_t dv = v.size();
  VectorOf<K> out(fr.rank * dv, k.zero());
  const auto c = apply(k, fr.coords, m);
  auto power = v;
  for (std::size_t p = 0; p < fr.degree; ++p) {
    for (std::size_t a = 0; a < fr.rank; ++a) {
      const auto& coeff = c[a * fr.degree + p];
      if (k.is_zero(coeff)) continue;
      for (std::size_t e = 0; e < dv; ++e)
        if (!k.is_zero(power[e])) out[a * dv + e] = k.add(out[a * dv + e], k.mul(coeff, power[e]));
    }
    if (p + 1 < fr.degree) power = apply(k, v_action, power);
  }
  return out;
}

/// Matrix of T (x) id on M (x)_F V for a right-F-linear endomorphism T of M.
template <Field K>
MatrixOf<K> tensor_left_action(const K& k, const Frame<K>& fr, const MatrixOf<K>& t, const MatrixOf<K>& v_action) {
  const std::size_t dv = v_action.rows();
  auto out = zeros(k, fr.rank * dv, fr.rank * dv);
  for (std::size_t b = 0; b < fr.rank; ++b) {
    const auto tu = apply(k, t, fr.generator(b));
    for (std::size_t e = 0; e < dv; ++e) {
      VectorOf<K> ve(dv, k.zero());
      ve[e] = k.one();
      out.set_column(b * dv + e, tensor_embed(k, fr, tu, v_action, ve));
    }
  }
  return out;
}

template <Field K>
struct Bimodule {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t base_dim = 0;
  MatrixOf<K> left_gen_action;   ///< generator of F_to
  MatrixOf<K> right_gen_action;  ///< generator of F_from
};

template <Field K>
struct BilinearForm {
  /// values[p][q] = eps(e_p, e_q) in F_from, e_p running over M(rev a), e_q over M(a).
  std::vector<std::vector<FieldValue<K>>> values;
};

template <Field K>
struct Arrow {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t reverse = 0;  ///< index of the opposite arrow
  Bimodule<K> bimodule;
  BilinearForm<K> form;
  Frame<K> right_frame;  ///< right F_from-frame of M(a)
};

template <Field K>
struct CanonicalElement {
  std::size_t arrow = 0;  ///< the arrow a: i -> j; terms live in M(rev a) (x)_{F_j} M(a)
  std::vector<std::pair<VectorOf<K>, VectorOf<K>>> terms;
};

struct CartanData {
  std::vector<std::vector<long long>> c;
  std::vector<long long> d;

  std::size_t rank() const { return d.size(); }
  /// <v, alpha_i^vee> = sum_j c_ij v_j.
  long long pairing(const std::vector<long long>& v, std::size_t i) const {
    long long s = 0;
    for (std::size_t j = 0; j < v.size(); ++j) s += c[i][j] * v[j];
    return s;
  }
  /// (v, w) with (alpha_i, alpha_j) = d_i c_ij.
  long long symmetric_form(const std::vector<long long>& v, const std::vector<long long>& w) const {
    if (v.size() != rank() || w.size() != rank()) throw Error("weight length mismatch");
    long long s = 0;
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j) s += v[i] * w[j] * d[i] * c[i][j];
    return s;
  }
};

/// D(v) = sum_i d_i v_i^2.
inline long long quadratic_dimension(const CartanData& cd, const std::vector<long long>& v) {
  long long s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += cd.d[i] * v[i] * v[i];
  return s;
}

template <Field K>
class ModulatedGraph {
 public:
  using scalar = typename K::value_type;

  ModulatedGraph(std::string name, K base, std::vector<std::string> vertex_names, std::vector<VertexField<K>> fields)
      : name_(std::move(name)), base_(std::move(base)), names_(std::move(vertex_names)), fields_(std::move(fields)) {
    if (names_.size() != fields_.size()) throw Error("vertex name/field count mismatch");
    out_.resize(names_.size());
    in_.resize(names_.size());
  }

  /// Adds the edge {u, v}: bimodules and forms for u -> v and v -> u.
  void add_edge(Bimodule<K> uv, Bimodule<K> vu, BilinearForm<K> form_into_u, BilinearForm<K> form_into_v) {
    const std::size_t u = uv.from, v = uv.to;
    if (u >= size() || v >= size() || vu.from != v || vu.to != u) throw Error("invalid graph: bad edge endpoints");
    if (u == v) throw Error("invalid graph: self-loop at vertex " + names_[u]);
    for (auto& a : arrows_)
      if (a.from == u && a.to == v) throw Error("invalid graph: multiple edges between " + names_[u] + " and " + names_[v]);
    const std::size_t ia = arrows_.size();
    arrows_.push_back(Arrow<K>{u, v, ia + 1, std::move(uv), std::move(form_into_u), {}});
    arrows_.push_back(Arrow<K>{v, u, ia, std::move(vu), std::move(form_into_v), {}});
    for (std::size_t a : {ia, ia + 1}) {
      out_[arrows_[a].from].push_back(a);
      in_[arrows_[a].to].push_back(a);
    }
  }

  const std::string& name() const { return name_; }
  const K& base() const { return base_; }
  std::size_t size() const { return names_.size(); }
  const std::string& vertex_name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const VertexField<K>& field(std::size_t i) const { return fields_[i]; }
  std::size_t degree(std::size_t i) const { return fields_[i].degree(); }
  MatrixOf<K> generator_matrix(std::size_t i) const { return companion(base_, fields_[i].minpoly()); }
  const std::vector<Arrow<K>>& arrows() const { return arrows_; }
  const Arrow<K>& arrow(std::size_t a) const { return arrows_[a]; }
  const std::vector<std::size_t>& arrows_out(std::size_t i) const { return out_[i]; }
  const std::vector<std::size_t>& arrows_in(std::size_t i) const { return in_[i]; }
  std::size_t edge_count() const { return arrows_.size() / 2; }

  const CanonicalElement<K>& canonical(std::size_t a) const { return canonical_.at(a); }
  const CartanData& cartan() const { return cartan_; }
  bool validated() const { return validated_; }

  /// Evaluates eps_a(m, n) for m in M(rev a), n in M(a); the value lies in F_{from a}.
  FieldValue<K> evaluate_form(std::size_t a, const VectorOf<K>& m, const VectorOf<K>& n) const {
    const auto& arr = arrows_[a];
    const auto& f = fields_[arr.from];
    auto acc = f.zero();
    for (std::size_t p = 0; p < m.size(); ++p) {
      if (base_.is_zero(m[p])) continue;
      for (std::size_t q = 0; q < n.size(); ++q) {
        if (base_.is_zero(n[q])) continue;
        acc = f.add(acc, f.scale(base_.mul(m[p], n[q]), arr.form.values[p][q]));
      }
    }
    return acc;
  }

  /// Checks every structural invariant and derives the canonical elements and
  /// Cartan data. Throws Error naming the first failure.
  void validate();

 private:
  void validate_bimodule(const Arrow<K>& arr) const;
  void validate_form(std::size_t a) const;
  CanonicalElement<K> compute_canonical(std::size_t a) const;

  std::string name_;
  K base_;
  std::vector<std::string> names_;
  std::vector<VertexField<K>> fields_;
  std::vector<Arrow<K>> arrows_;
  std::vector<std::vector<std::size_t>> out_, in_;
  std::map<std::size_t, CanonicalElement<K>> canonical_;
  CartanData cartan_;
  bool validated_ = false;
};

template <Field K>
void ModulatedGraph<K>::validate_bimodule(const Arrow<K>& arr) const {
  const auto& bm = arr.bimodule;
  const std::string where = "(" + names_[arr.from] + "," + names_[arr.to] + ")";
  const std::size_t n = bm.base_dim;
  if (bm.left_gen_action.rows() != n || bm.left_gen_action.cols() != n || bm.right_gen_action.rows() != n ||
      bm.right_gen_action.cols() != n)
    throw Error("not a bimodule on arrow " + where + ": action matrices must be " + std::to_string(n) + "x" +
                std::to_string(n));
  if (n % degree(arr.to) != 0 || n % degree(arr.from) != 0)
    throw Error("not a bimodule on arrow " + where + ": dimension not divisible by field degrees");
  if (n == 0) throw Error("not a bimodule on arrow " + where + ": zero-dimensional bimodule on an edge");
  if (!equal(base_, mul(base_, bm.left_gen_action, bm.right_gen_action),
             mul(base_, bm.right_gen_action, bm.left_gen_action)))
    throw Error("not a bimodule on arrow " + where + ": left and right actions do not commute");
  if (!is_zero(base_, evaluate_polynomial(base_, fields_[arr.to].minpoly(), bm.left_gen_action)))
    throw Error("not a bimodule on arrow " + where + ": left action violates the minimal polynomial");
  if (!is_zero(base_, evaluate_polynomial(base_, fields_[arr.from].minpoly(), bm.right_gen_action)))
    throw Error("not a bimodule on arrow " + where + ": right action violates the minimal polynomial");
}

template <Field K>
void ModulatedGraph<K>::validate_form(std::size_t a) const {
  const auto& arr = arrows_[a];
  const auto& rev = arrows_[arr.reverse];
  const std::string where = "(" + names_[arr.from] + "," + names_[arr.to] + ")";
  const auto& fi = fields_[arr.from];
  const std::size_t rows = rev.bimodule.base_dim, cols = arr.bimodule.base_dim;
  if (arr.form.values.size() != rows) throw Error("form on arrow " + where + " has wrong shape");
  for (auto& r : arr.form.values) {
    if (r.size() != cols) throw Error("form on arrow " + where + " has wrong shape");
    for (auto& v : r)
      if (v.size() != fi.degree()) throw Error("form on arrow " + where + " has entries outside F_i");
  }
  auto unit = [&](std::size_t n, std::size_t p) {
    VectorOf<K> v(n, base_.zero());
    v[p] = base_.one();
    return v;
  };
  const auto zi = fi.generator();
  // rows module is M(rev a) = iM_j: left F_i, right F_j. columns module M(a) = jM_i: left F_j, right F_i.
  for (std::size_t p = 0; p < rows; ++p) {
    const auto m = unit(rows, p);
    const auto m_zj = apply(base_, rev.bimodule.right_gen_action, m);
    const auto zi_m = apply(base_, rev.bimodule.left_gen_action, m);
    for (std::size_t q = 0; q < cols; ++q) {
      const auto n = unit(cols, q);
      const auto zj_n = apply(base_, arr.bimodule.left_gen_action, n);
      const auto n_zi = apply(base_, arr.bimodule.right_gen_action, n);
      const auto e = evaluate_form(a, m, n);
      if (!fi.equal(evaluate_form(a, m_zj, n), evaluate_form(a, m, zj_n)))
        throw Error("form on arrow " + where + " is not balanced over the middle field");
      if (!fi.equal(evaluate_form(a, zi_m, n), fi.mul(zi, e)) || !fi.equal(evaluate_form(a, m, n_zi), fi.mul(e, zi)))
        throw Error("form on arrow " + where + " is not bilinear over the target field");
    }
  }
  // F_i-valued Gram matrix between a left F_i-frame of M(rev a) and a right F_i-frame of M(a).
  const auto left = build_frame(base_, rev.bimodule.left_gen_action, fi.degree());
  const auto& right = arr.right_frame;
  if (left.rank != right.rank) throw Error("degenerate form on arrow " + where);
  MatrixOf<VertexField<K>> gram(left.rank, right.rank, fi.zero());
  for (std::size_t p = 0; p < left.rank; ++p)
    for (std::size_t q = 0; q < right.rank; ++q) gram(p, q) = evaluate_form(a, left.generator(p), right.generator(q));
  if (rank(fi, gram) != left.rank) throw Error("degenerate form on arrow " + where);
}

template <Field K>
CanonicalElement<K> ModulatedGraph<K>::compute_canonical(std::size_t a) const {
  const auto& arr = arrows_[a];
  const std::size_t ra = arr.reverse;
  const auto& rev = arrows_[ra];
  const std::size_t dj = degree(arr.to);
  // v_k: right F_j-frame of M(rev a); v^l in M(a) with eps_{rev a}(v^l, v_k) = delta_lk in F_j.
  const auto& fr = rev.right_frame;
  const std::size_t n = arr.bimodule.base_dim;
  auto system = zeros(base_, fr.rank * dj, n);
  for (std::size_t k = 0; k < fr.rank; ++k) {
    const auto vk = fr.generator(k);
    for (std::size_t b = 0; b < n; ++b) {
      VectorOf<K> eb(n, base_.zero());
      eb[b] = base_.one();
      const auto val = evaluate_form(ra, eb, vk);
      for (std::size_t c = 0; c < dj; ++c) system(k * dj + c, b) = val[c];
    }
  }
  CanonicalElement<K> out;
  out.arrow = a;
  for (std::size_t l = 0; l < fr.rank; ++l) {
    VectorOf<K> rhs(fr.rank * dj, base_.zero());
    rhs[l * dj] = base_.one();
    const auto sol = solve_linear(base_, system, rhs);
    if (!sol.consistent || !sol.kernel.empty())
      throw Error("degenerate form on arrow (" + names_[rev.from] + "," + names_[rev.to] + ")");
    out.terms.emplace_back(fr.generator(l), sol.particular);
  }
  return out;
}

template <Field K>
void ModulatedGraph<K>::validate() {
  for (auto& arr : arrows_) {
    validate_bimodule(arr);
    arr.right_frame = build_frame(base_, arr.bimodule.right_gen_action, degree(arr.from));
  }
  for (std::size_t a = 0; a < arrows_.size(); ++a) validate_form(a);
  canonical_.clear();
  for (std::size_t a = 0; a < arrows_.size(); ++a) canonical_[a] = compute_canonical(a);

  const std::size_t n = size();
  cartan_.c.assign(n, std::vector<long long>(n, 0));
  cartan_.d.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    cartan_.c[i][i] = 2;
    cartan_.d[i] = static_cast<long long>(degree(i));
  }
  for (auto& arr : arrows_) {
    // arrow j -> i carries iM_j, so c_ij = -dim_{F_i} iM_j with i = to.
    cartan_.c[arr.to][arr.from] = -static_cast<long long>(arr.bimodule.base_dim / degree(arr.to));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (cartan_.d[i] * cartan_.c[i][j] != cartan_.d[j] * cartan_.c[j][i])
        throw Error("Cartan data is not symmetrizable");
  validated_ = true;
}

/// Validated Cartan data of the graph.
template <Field K>
const CartanData& cartan_matrix(const ModulatedGraph<K>& g) {
  if (!g.validated()) throw Error("graph has not been validated");
  return g.cartan();
}

template <Field K>
long long symmetric_form(const ModulatedGraph<K>& g, const std::vector<long long>& v, const std::vector<long long>& w) {
  return cartan_matrix(g).symmetric_form(v, w);
}

/// Coordinates of a canonical element as a vector in M(rev a) (x)_{F_j} M(a).
template <Field K>
VectorOf<K> canonical_tensor(const ModulatedGraph<K>& g, const CanonicalElement<K>& ce) {
  const auto& k = g.base();
  const auto& arr = g.arrow(ce.arrow);
  const auto& rev = g.arrow(arr.reverse);
  VectorOf<K> acc(rev.right_frame.rank * arr.bimodule.base_dim, k.zero());
  for (auto& [vk, vk_dual] : ce.terms) {
    auto t = tensor_embed(k, rev.right_frame, vk, arr.bimodule.left_gen_action, vk_dual);
    for (std::size_t p = 0; p < acc.size(); ++p) acc[p] = k.add(acc[p], t[p]);
  }
  return acc;
}

/// Recomputes the canonical element of arrow a from a random change of the
/// right F_j-frame of M(rev a) and returns its tensor coordinates. Used to
/// confirm the element does not depend on the dual bases.
template <Field K>
VectorOf<K> canonical_tensor_with_random_basis(const ModulatedGraph<K>& g, std::size_t a, Rng& rng) {
  const auto& k = g.base();
  const auto& arr = g.arrow(a);
  const auto& rev = g.arrow(arr.reverse);
  const auto& fr = rev.right_frame;
  const std::size_t dj = g.degree(arr.to);
  const auto& fj = g.field(arr.to);
  // random invertible F_j-matrix acting on the frame
  MatrixOf<VertexField<K>> change(fr.rank, fr.rank, fj.zero());
  do {
    for (std::size_t p = 0; p < fr.rank; ++p)
      for (std::size_t q = 0; q < fr.rank; ++q) change(p, q) = fj.random(rng, 9);
  } while (rank(fj, change) != fr.rank);
  std::vector<VectorOf<K>> new_basis;
  for (std::size_t q = 0; q < fr.rank; ++q) {
    VectorOf<K> v(rev.bimodule.base_dim, k.zero());
    for (std::size_t p = 0; p < fr.rank; ++p) {
      // u_p * lambda with lambda = change(p, q) acting on the right
      const auto lam = change(p, q);
      auto power = fr.generator(p);
      for (std::size_t c = 0; c < dj; ++c) {
        for (std::size_t e = 0; e < v.size(); ++e) v[e] = k.add(v[e], k.mul(lam[c], power[e]));
        power = apply(k, rev.bimodule.right_gen_action, power);
      }
    }
    new_basis.push_back(std::move(v));
  }
  const std::size_t n = arr.bimodule.base_dim;
  auto system = zeros(k, fr.rank * dj, n);
  for (std::size_t kk = 0; kk < fr.rank; ++kk)
    for (std::size_t b = 0; b < n; ++b) {
      VectorOf<K> eb(n, k.zero());
      eb[b] = k.one();
      const auto val = g.evaluate_form(arr.reverse, eb, new_basis[kk]);
      for (std::size_t c = 0; c < dj; ++c) system(kk * dj + c, b) = val[c];
    }
  VectorOf<K> acc(fr.rank * n, k.zero());
  for (std::size_t l = 0; l < fr.rank; ++l) {
    VectorOf<K> rhs(fr.rank * dj, k.zero());
    rhs[l * dj] = k.one();
    const auto sol = solve_linear(k, system, rhs);
    auto t = tensor_embed(k, fr, new_basis[l], arr.bimodule.left_gen_action, sol.particular);
    for (std::size_t p = 0; p < acc.size(); ++p) acc[p] = k.add(acc[p], t[p]);
  }
  return acc;
}

/// Whether z r = r z for the generator z of F_i, where r is the canonical
/// element of a: i -> j (z acts on the left of M(rev a) and the right of M(a)).
template <Field K>
bool canonical_is_central(const ModulatedGraph<K>& g, std::size_t a) {
  const auto& k = g.base();
  const auto& arr = g.arrow(a);
  const auto& rev = g.arrow(arr.reverse);
  const auto& ce = g.canonical(a);
  VectorOf<K> left(rev.right_frame.rank * arr.bimodule.base_dim, k.zero());
  auto right = left;
  for (auto& [vk, vd] : ce.terms) {
    auto l = tensor_embed(k, rev.right_frame, apply(k, rev.bimodule.left_gen_action, vk), arr.bimodule.left_gen_action, vd);
    auto r = tensor_embed(k, rev.right_frame, vk, arr.bimodule.left_gen_action, apply(k, arr.bimodule.right_gen_action, vd));
    for (std::size_t p = 0; p < left.size(); ++p) {
      left[p] = k.add(left[p], l[p]);
      right[p] = k.add(right[p], r[p]);
    }
  }
  for (std::size_t p = 0; p < left.size(); ++p)
    if (!k.equal(left[p], right[p])) return false;
  return true;
}

}  // namespace species
