/**
 * @file preprojective_algebra.hpp
 * @brief Graded pieces of the tensor algebra T_M, the two-sided ideal
 *        generated by the relations r_i, and the quotient Lambda_M.
 *
 * The path space of a_n ... a_1 (a_1 first) is M(a_n) (x) ... (x) M(a_1) (x) F_start,
 * built as M(a_n) (x)_{F} space(a_{n-1} ... a_1) in the layout of tensor_embed.
 * Its standard basis vectors are therefore pure tensors u_n (x) ... (x) u_1 (x) z^k of
 * frame generators. Degree-n elements are vectors in the direct sum of the
 * degree-n path spaces, listed lexicographically by vertex sequence.
 */
#pragma once

#include "species/modulated_graph.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace species {

template <Field K>
struct PathSpace {
  std::vector<std::size_t> vertices;  ///< i_1 -> ... -> i_{n+1}
  std::vector<std::size_t> arrows;    ///< a_1, ..., a_n
  std::size_t base_dim = 0;
  std::size_t offset = 0;  ///< position inside the degree-n direct sum
  MatrixOf<K> left_action;  ///< F_end acting on the space
};

struct GradedDimensions {
  std::vector<std::size_t> dims;  ///< quotient dimension per degree, up to the first zero
  bool finite = false;
  std::size_t total = 0;
  std::size_t max_degree = 0;

  std::string verdict() const {
    return finite ? "finite-dimensional, total = " + std::to_string(total)
                  : "not finite by degree " + std::to_string(max_degree);
  }
};

template <Field K>
class GradedAlgebra {
 public:
  explicit GradedAlgebra(const ModulatedGraph<K>& g) : g_(g) {
    if (!g.validated()) throw Error("graph has not been validated");
  }

  const ModulatedGraph<K>& graph() const { return g_; }

  /// Path spaces of length n in lexicographic order of vertex sequences.
  const std::vector<PathSpace<K>>& tensor_degree(std::size_t n) {
    while (spaces_.size() <= n) extend_spaces();
    return spaces_[n];
  }

  std::size_t tensor_dim(std::size_t n) {
    std::size_t s = 0;
    for (auto& p : tensor_degree(n)) s += p.base_dim;
    return s;
  }

  /// Basis (columns, degree-n coordinates) of the degree-n part of the ideal.
  const MatrixOf<K>& ideal_component(std::size_t n) {
    while (ideals_.size() <= n) extend_ideal();
    return ideals_[n];
  }

  std::size_t quotient_dim(std::size_t n) { return tensor_dim(n) - ideal_component(n).cols(); }

  /// Standard basis vectors of T_n whose images form a basis of the quotient.
  std::vector<std::size_t> quotient_basis(std::size_t n) {
    const auto& I = ideal_component(n);
    const std::size_t dim = tensor_dim(n);
    std::vector<std::size_t> out;
    auto span = I;
    for (std::size_t e = 0; e < dim && span.cols() < dim; ++e) {
      VectorOf<K> v(dim, g_.base().zero());
      v[e] = g_.base().one();
      auto trial = hstack(g_.base(), span, from_columns(g_.base(), dim, {v}));
      if (rank(g_.base(), trial) > span.cols()) {
        span = column_space(g_.base(), trial);
        out.push_back(e);
      }
    }
    return out;
  }

  /// dim (I_n intersected with the space of one path).
  std::size_t ideal_dim_within(std::size_t n, std::size_t path_index) {
    const auto& I = ideal_component(n);
    const auto& ps = tensor_degree(n)[path_index];
    const auto& k = g_.base();
    auto w = zeros(k, tensor_dim(n), ps.base_dim);
    for (std::size_t e = 0; e < ps.base_dim; ++e) w(ps.offset + e, e) = k.one();
    return I.cols() + ps.base_dim - rank(k, hstack(k, I, w));
  }

  /// dim of I_n inside the paths from `start` to `end`.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> ideal_dims_by_endpoints(std::size_t n) {
    const auto& I = ideal_component(n);
    const auto& k = g_.base();
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> out;
    for (auto& ps : tensor_degree(n)) out[{ps.vertices.front(), ps.vertices.back()}] = 0;
    for (auto& [key, dim] : out) {
      auto proj = zeros(k, I.rows(), I.rows());
      for (auto& ps : tensor_degree(n))
        if (ps.vertices.front() == key.first && ps.vertices.back() == key.second)
          for (std::size_t e = 0; e < ps.base_dim; ++e) proj(ps.offset + e, ps.offset + e) = k.one();
      dim = rank(k, mul(k, proj, I));
    }
    return out;
  }

  /// Quotient dimensions by degree until the first zero or max_degree.
  GradedDimensions graded_dimensions(std::size_t max_degree) {
    GradedDimensions gd;
    gd.max_degree = max_degree;
    for (std::size_t n = 0; n <= max_degree; ++n) {
      const std::size_t q = quotient_dim(n);
      gd.dims.push_back(q);
      gd.total += q;
      if (q == 0) {
        gd.finite = true;
        break;
      }
    }
    return gd;
  }

  /// m (x) x for m in M(a) and x of degree n; only paths of x ending at from(a) contribute.
  VectorOf<K> left_multiply(std::size_t n, std::size_t a, const VectorOf<K>& m, const VectorOf<K>& x) {
    const auto& k = g_.base();
    const auto& arr = g_.arrow(a);
    VectorOf<K> out(tensor_dim(n + 1), k.zero());
    for (auto& ps : tensor_degree(n)) {
      if (ps.vertices.back() != arr.from) continue;
      VectorOf<K> block(x.begin() + ps.offset, x.begin() + ps.offset + ps.base_dim);
      if (is_zero(k, block)) continue;
      auto arrows = ps.arrows;
      arrows.push_back(a);
      const auto& target = space_of(n + 1, arrows);
      const auto t = tensor_embed(k, arr.right_frame, m, ps.left_action, block);
      for (std::size_t e = 0; e < t.size(); ++e) out[target.offset + e] = k.add(out[target.offset + e], t[e]);
    }
    return out;
  }

  /// x (x) m for m in M(a) and x of degree n, via the pure-tensor expansion of
  /// the standard basis.
  VectorOf<K> right_multiply(std::size_t n, std::size_t a, const VectorOf<K>& x, const VectorOf<K>& m) {
    const auto& k = g_.base();
    const auto& arr = g_.arrow(a);
    VectorOf<K> out(tensor_dim(n + 1), k.zero());
    for (auto& ps : tensor_degree(n)) {
      if (ps.vertices.front() != arr.to) continue;
      std::vector<std::size_t> arrows{a};
      arrows.insert(arrows.end(), ps.arrows.begin(), ps.arrows.end());
      const auto& target = space_of(n + 1, arrows);
      for (std::size_t e = 0; e < ps.base_dim; ++e) {
        const auto& c = x[ps.offset + e];
        if (k.is_zero(c)) continue;
        // e = (alpha_n, ..., alpha_1, k) in mixed radix
        std::vector<std::size_t> digits(ps.arrows.size());
        std::size_t rest = e;
        std::size_t inner = ps.base_dim;
        for (std::size_t t = ps.arrows.size(); t-- > 0;) {
          inner /= g_.arrow(ps.arrows[t]).right_frame.rank;
          digits[t] = rest / inner;
          rest %= inner;
        }
        auto zm = m;
        for (std::size_t p = 0; p < rest; ++p) zm = apply(k, arr.bimodule.left_gen_action, zm);
        VectorOf<K> w(g_.degree(arr.from), k.zero());
        w[0] = k.one();
        w = tensor_embed(k, arr.right_frame, zm, g_.generator_matrix(arr.from), w);
        std::vector<std::size_t> prefix{a};
        for (std::size_t t = 0; t < ps.arrows.size(); ++t) {
          const auto& fr = g_.arrow(ps.arrows[t]).right_frame;
          w = tensor_embed(k, fr, fr.generator(digits[t]), space_of(prefix.size(), prefix).left_action, w);
          prefix.push_back(ps.arrows[t]);
        }
        for (std::size_t p = 0; p < w.size(); ++p) out[target.offset + p] = k.add(out[target.offset + p], k.mul(c, w[p]));
      }
    }
    return out;
  }

 private:
  const PathSpace<K>& space_of(std::size_t n, const std::vector<std::size_t>& arrows) {
    for (auto& ps : tensor_degree(n))
      if (ps.arrows == arrows) return ps;
    throw Error("internal: unknown path");
  }

  void extend_spaces() {
    const auto& k = g_.base();
    std::vector<PathSpace<K>> next;
    if (spaces_.empty()) {
      for (std::size_t i = 0; i < g_.size(); ++i)
        next.push_back(PathSpace<K>{{i}, {}, g_.degree(i), 0, g_.generator_matrix(i)});
    } else {
      for (auto& ps : spaces_.back())
        for (std::size_t a : g_.arrows_out(ps.vertices.back())) {
          const auto& arr = g_.arrow(a);
          PathSpace<K> s;
          s.vertices = ps.vertices;
          s.vertices.push_back(arr.to);
          s.arrows = ps.arrows;
          s.arrows.push_back(a);
          s.base_dim = arr.right_frame.rank * ps.base_dim;
          s.left_action = tensor_left_action(k, arr.right_frame, arr.bimodule.left_gen_action, ps.left_action);
          next.push_back(std::move(s));
        }
      std::sort(next.begin(), next.end(), [](const auto& x, const auto& y) { return x.vertices < y.vertices; });
    }
    std::size_t off = 0;
    for (auto& s : next) {
      s.offset = off;
      off += s.base_dim;
    }
    spaces_.push_back(std::move(next));
  }

  void extend_ideal() {
    const auto& k = g_.base();
    const std::size_t n = ideals_.size();
    const std::size_t dim = tensor_dim(n);
    if (n < 2) {
      ideals_.push_back(zeros(k, dim, 0));
      return;
    }
    std::vector<VectorOf<K>> gens;
    // T_1 I_{n-1}
    const auto& prev = ideals_[n - 1];
    for (std::size_t c = 0; c < prev.cols(); ++c) {
      const auto y = prev.column(c);
      for (std::size_t a = 0; a < g_.arrows().size(); ++a)
        for (std::size_t e = 0; e < g_.arrow(a).bimodule.base_dim; ++e) {
          VectorOf<K> m(g_.arrow(a).bimodule.base_dim, k.zero());
          m[e] = k.one();
          auto v = left_multiply(n - 1, a, m, y);
          if (!is_zero(k, v)) gens.push_back(std::move(v));
        }
    }
    // z^l r_i (x) T_{n-2}
    for (auto& ps : tensor_degree(n - 2)) {
      const std::size_t i = ps.vertices.back();
      for (std::size_t e = 0; e < ps.base_dim; ++e) {
        VectorOf<K> y(ps.base_dim, k.zero());
        y[e] = k.one();
        VectorOf<K> acc(dim, k.zero());
        for (std::size_t c : g_.arrows_out(i)) {
          const auto& arr = g_.arrow(c);
          auto mid_arrows = ps.arrows;
          mid_arrows.push_back(c);
          const auto& mid = space_of(n - 1, mid_arrows);
          auto full_arrows = mid_arrows;
          full_arrows.push_back(arr.reverse);
          const auto& full = space_of(n, full_arrows);
          for (auto& [vk, vk_dual] : g_.canonical(c).terms) {
            const auto w = tensor_embed(k, arr.right_frame, vk_dual, ps.left_action, y);
            const auto u = tensor_embed(k, g_.arrow(arr.reverse).right_frame, vk, mid.left_action, w);
            for (std::size_t p = 0; p < u.size(); ++p) acc[full.offset + p] = k.add(acc[full.offset + p], u[p]);
          }
        }
        for (std::size_t l = 0; l < g_.degree(i); ++l) {
          if (!is_zero(k, acc)) gens.push_back(acc);
          for (auto& ps2 : tensor_degree(n)) {
            if (ps2.vertices.back() != i) continue;
            VectorOf<K> block(acc.begin() + ps2.offset, acc.begin() + ps2.offset + ps2.base_dim);
            block = apply(k, ps2.left_action, block);
            std::copy(block.begin(), block.end(), acc.begin() + ps2.offset);
          }
        }
      }
    }
    ideals_.push_back(gens.empty() ? zeros(k, dim, 0) : column_space(k, from_columns(k, dim, gens)));
  }

  const ModulatedGraph<K>& g_;
  std::vector<std::vector<PathSpace<K>>> spaces_;
  std::vector<MatrixOf<K>> ideals_;
};

}  // namespace species
