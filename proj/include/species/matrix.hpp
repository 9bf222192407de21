/**
 * @file matrix.hpp
 * @brief Dense matrices and exact Gauss-Jordan linear algebra over any Field.
 */
#pragma once

#include "species/field.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace species {

/// Row-major dense matrix. Arithmetic lives in free functions that take the
/// field descriptor, so the same container serves every field.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }
  void set_column(std::size_t c, const std::vector<T>& v) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }
  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <Field F>
using MatrixOf = Matrix<typename F::value_type>;
template <Field F>
using VectorOf = std::vector<typename F::value_type>;

// ---------------------------------------------------------------------------
// Construction

template <Field F>
MatrixOf<F> zeros(const F& f, std::size_t rows, std::size_t cols) {
  return MatrixOf<F>(rows, cols, f.zero());
}

template <Field F>
MatrixOf<F> identity(const F& f, std::size_t n) {
  auto m = zeros(f, n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = f.one();
  return m;
}

template <Field F>
MatrixOf<F> from_columns(const F& f, std::size_t rows, const std::vector<VectorOf<F>>& cols) {
  auto m = zeros(f, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

template <Field F>
MatrixOf<F> from_rows(const F& f, std::size_t cols, const std::vector<VectorOf<F>>& rows) {
  auto m = zeros(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  return m;
}

/// Companion matrix of a monic polynomial (constant term first): the matrix of
/// multiplication by x on the power basis.
template <Field F>
MatrixOf<F> companion(const F& f, const std::vector<typename F::value_type>& monic) {
  const std::size_t d = monic.size() - 1;
  auto m = zeros(f, d, d);
  for (std::size_t k = 0; k + 1 < d; ++k) m(k + 1, k) = f.one();
  for (std::size_t k = 0; k < d; ++k) m(k, d - 1) = f.neg(monic[k]);
  return m;
}

// ---------------------------------------------------------------------------
// Arithmetic

template <Field F>
MatrixOf<F> add(const F& f, const MatrixOf<F>& a, const MatrixOf<F>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("matrix shape mismatch in add");
  auto r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = f.add(a(i, j), b(i, j));
  return r;
}

template <Field F>
MatrixOf<F> sub(const F& f, const MatrixOf<F>& a, const MatrixOf<F>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("matrix shape mismatch in sub");
  auto r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = f.sub(a(i, j), b(i, j));
  return r;
}

template <Field F>
MatrixOf<F> scale(const F& f, const typename F::value_type& c, const MatrixOf<F>& a) {
  auto r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = f.mul(c, a(i, j));
  return r;
}

template <Field F>
MatrixOf<F> mul(const F& f, const MatrixOf<F>& a, const MatrixOf<F>& b) {
  if (a.cols() != b.rows()) throw Error("matrix shape mismatch in mul");
  auto r = zeros(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (f.is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!f.is_zero(b(k, j))) r(i, j) = f.add(r(i, j), f.mul(aik, b(k, j)));
    }
  return r;
}

template <Field F>
VectorOf<F> apply(const F& f, const MatrixOf<F>& a, const VectorOf<F>& v) {
  if (a.cols() != v.size()) throw Error("matrix shape mismatch in apply");
  VectorOf<F> r(a.rows(), f.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (!f.is_zero(v[k]) && !f.is_zero(a(i, k))) r[i] = f.add(r[i], f.mul(a(i, k), v[k]));
  return r;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
  Matrix<T> r(a.cols(), a.rows(), T{});
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
  return r;
}

template <Field F>
bool is_zero(const F& f, const MatrixOf<F>& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!f.is_zero(a(i, j))) return false;
  return true;
}

template <Field F>
bool is_zero(const F& f, const VectorOf<F>& v) {
  return std::all_of(v.begin(), v.end(), [&](const auto& x) { return f.is_zero(x); });
}

template <Field F>
bool equal(const F& f, const MatrixOf<F>& a, const MatrixOf<F>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!f.equal(a(i, j), b(i, j))) return false;
  return true;
}

template <Field F>
MatrixOf<F> hstack(const F& f, const MatrixOf<F>& a, const MatrixOf<F>& b) {
  if (a.rows() != b.rows()) throw Error("row mismatch in hstack");
  auto r = zeros(f, a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

template <Field F>
MatrixOf<F> vstack(const F& f, const MatrixOf<F>& a, const MatrixOf<F>& b) {
  if (a.cols() != b.cols()) throw Error("column mismatch in vstack");
  auto r = zeros(f, a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, j) = b(i, j);
  return r;
}

template <Field F>
MatrixOf<F> block_diagonal(const F& f, const MatrixOf<F>& a, const MatrixOf<F>& b) {
  auto r = zeros(f, a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
  return r;
}

/// `copies` copies of a on the diagonal.
template <Field F>
MatrixOf<F> repeat_diagonal(const F& f, const MatrixOf<F>& a, std::size_t copies) {
  auto r = zeros(f, a.rows() * copies, a.cols() * copies);
  for (std::size_t b = 0; b < copies; ++b)
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) r(b * a.rows() + i, b * a.cols() + j) = a(i, j);
  return r;
}

template <Field F>
MatrixOf<F> submatrix(const F& f, const MatrixOf<F>& a, std::size_t r0, std::size_t c0, std::size_t rows,
                      std::size_t cols) {
  auto r = zeros(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) r(i, j) = a(r0 + i, c0 + j);
  return r;
}

/// p(A) for a polynomial given constant term first (Horner).
template <Field F>
MatrixOf<F> evaluate_polynomial(const F& f, const std::vector<typename F::value_type>& p, const MatrixOf<F>& a) {
  auto r = zeros(f, a.rows(), a.cols());
  const auto id = identity(f, a.rows());
  for (std::size_t k = p.size(); k-- > 0;) r = add(f, mul(f, r, a), scale(f, p[k], id));
  return r;
}

// ---------------------------------------------------------------------------
// Elimination

template <Field F>
struct Echelon {
  MatrixOf<F> reduced;               ///< reduced row echelon form
  std::vector<std::size_t> pivots;   ///< pivot column of each nonzero row
};

template <Field F>
Echelon<F> rref(const F& f, MatrixOf<F> m) {
  Echelon<F> out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && f.is_zero(m(piv, col))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    const auto inv = f.inv(m(row, col));
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = f.mul(m(row, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || f.is_zero(m(i, col))) continue;
      const auto factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!f.is_zero(m(row, j))) m(i, j) = f.sub(m(i, j), f.mul(factor, m(row, j)));
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

template <Field F>
std::size_t rank(const F& f, const MatrixOf<F>& m) {
  return rref(f, m).pivots.size();
}

/// Basis of {x : m x = 0}, one vector per free column.
template <Field F>
std::vector<VectorOf<F>> kernel(const F& f, const MatrixOf<F>& m) {
  const auto e = rref(f, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<VectorOf<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    VectorOf<F> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = f.neg(e.reduced(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

template <Field F>
struct LinearSolution {
  bool consistent = false;
  VectorOf<F> particular;
  std::vector<VectorOf<F>> kernel;
};

/// Solves a x = b exactly: a particular solution (free variables zero) plus a
/// kernel basis, or consistent == false.
template <Field F>
LinearSolution<F> solve_linear(const F& f, const MatrixOf<F>& a, const VectorOf<F>& b) {
  if (a.rows() != b.size()) throw Error("row count mismatch in solve_linear");
  auto aug = zeros(f, a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto e = rref(f, aug);
  LinearSolution<F> out;
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return out;
  out.consistent = true;
  out.particular.assign(a.cols(), f.zero());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) out.particular[e.pivots[r]] = e.reduced(r, a.cols());
  out.kernel = kernel(f, a);
  return out;
}

template <Field F>
std::optional<MatrixOf<F>> inverse(const F& f, const MatrixOf<F>& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const std::size_t n = a.rows();
  const auto e = rref(f, hstack(f, a, identity(f, n)));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] >= n)) return std::nullopt;
  return submatrix(f, e.reduced, 0, n, n, n);
}

/// Indices of a maximal linearly independent subset of the given columns,
/// chosen greedily left to right.
template <Field F>
std::vector<std::size_t> independent_columns(const F& f, const MatrixOf<F>& m) {
  return rref(f, m).pivots;
}

/// Column-space basis as a matrix (the independent columns of m).
template <Field F>
MatrixOf<F> column_space(const F& f, const MatrixOf<F>& m) {
  const auto piv = independent_columns(f, m);
  auto r = zeros(f, m.rows(), piv.size());
  for (std::size_t k = 0; k < piv.size(); ++k) r.set_column(k, m.column(piv[k]));
  return r;
}

/// Whether v lies in the column span of m.
template <Field F>
bool in_span(const F& f, const MatrixOf<F>& m, const VectorOf<F>& v) {
  return rank(f, hstack(f, m, from_columns(f, m.rows(), {v}))) == rank(f, m);
}

// ---------------------------------------------------------------------------
// Scalar restriction

template <Field Base>
struct RestrictedSpace {
  std::size_t base_dimension = 0;
  MatrixOf<Base> generator_action;  ///< action of the extension generator
};

/// An n-dimensional space over the extension seen as a base-field space: the
/// generator acts block-diagonally by the companion matrix of the minpoly.
template <Field Base>
RestrictedSpace<Base> restrict_scalars(const ExtensionField<Base>& ext, std::size_t n) {
  const auto& base = ext.base();
  return {n * ext.degree(), repeat_diagonal(base, companion(base, ext.minpoly()), n)};
}

/// Base-field matrix of multiplication by an extension element.
template <Field Base>
MatrixOf<Base> multiplication_matrix(const ExtensionField<Base>& ext, const typename ExtensionField<Base>::value_type& a) {
  const auto& base = ext.base();
  const std::size_t d = ext.degree();
  auto m = zeros(base, d, d);
  auto power = ext.one();
  const auto x = ext.generator();
  for (std::size_t k = 0; k < d; ++k) {
    auto col = ext.mul(a, power);
    for (std::size_t r = 0; r < d; ++r) m(r, k) = col[r];
    power = ext.mul(power, x);
  }
  return m;
}

template <Field F>
std::string to_string(const F& f, const MatrixOf<F>& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? "," : "") + f.to_string(m(i, j));
    s += "]";
  }
  return s + "]";
}

}  // namespace species
