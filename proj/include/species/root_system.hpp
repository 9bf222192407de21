/**
 * @file root_system.hpp
 * @brief Combinatorial oracle: finite-type test, positive roots and Kostant
 *        partition counts, computed from the Cartan matrix alone.
 */
#pragma once

#include "species/modulated_graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace species {

using Weight = std::vector<long long>;

struct FiniteTypeVerdict {
  bool finite = false;
  std::string label;  ///< e.g. "B2/C2", "A1xA1"; empty when not finite
};

namespace detail {

inline void check_cartan(const CartanData& cd) {
  const std::size_t n = cd.rank();
  if (cd.c.size() != n) throw Error("not a Cartan matrix: shape");
  for (std::size_t i = 0; i < n; ++i) {
    if (cd.c[i].size() != n || cd.c[i][i] != 2) throw Error("not a Cartan matrix: diagonal must be 2");
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && (cd.c[i][j] > 0 || (cd.c[i][j] == 0) != (cd.c[j][i] == 0)))
        throw Error("not a Cartan matrix: off-diagonal entries");
  }
}

/// Leading principal minors of the symmetrized matrix, by exact elimination.
inline bool positive_definite(const std::vector<std::vector<mpq_class>>& m) {
  auto a = m;
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(a[k][k]) <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      const mpq_class f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return true;
}

inline std::vector<std::vector<std::size_t>> components(const CartanData& cd) {
  const std::size_t n = cd.rank();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp{s}, stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j)
        if (!seen[j] && cd.c[i][j] != 0) {
          seen[j] = 1;
          comp.push_back(j);
          stack.push_back(j);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(comp);
  }
  return out;
}

inline CartanData restrict_to(const CartanData& cd, const std::vector<std::size_t>& verts) {
  CartanData r;
  for (std::size_t i : verts) {
    r.d.push_back(cd.d[i]);
    std::vector<long long> row;
    for (std::size_t j : verts) row.push_back(cd.c[i][j]);
    r.c.push_back(row);
  }
  return r;
}

}  // namespace detail

template <class Cartan>
std::vector<Weight> positive_roots(const Cartan& cd);

/// Finite type iff the symmetrized matrix DC is positive definite.
inline FiniteTypeVerdict is_finite_type(const CartanData& cd) {
  detail::check_cartan(cd);
  const std::size_t n = cd.rank();
  std::vector<std::vector<mpq_class>> dc(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) dc[i][j] = mpq_class(static_cast<long>(cd.d[i] * cd.c[i][j]));
  FiniteTypeVerdict v;
  v.finite = detail::positive_definite(dc);
  if (!v.finite) return v;
  std::vector<std::string> labels;
  for (auto& comp : detail::components(cd)) {
    const auto sub = detail::restrict_to(cd, comp);
    const std::size_t r = comp.size();
    const std::size_t np = positive_roots(sub).size();
    bool simply_laced = true;
    for (auto& row : sub.c)
      for (long long x : row)
        if (x < -1) simply_laced = false;
    const std::string rs = std::to_string(r);
    std::string label;
    if (simply_laced) {
      if (np == r * (r + 1) / 2) label = "A" + rs;
      else if (r >= 4 && np == r * (r - 1)) label = "D" + rs;
      else if (np == 36) label = "E6";
      else if (np == 63) label = "E7";
      else if (np == 120) label = "E8";
    } else if (r == 2) {
      label = np == 4 ? "B2/C2" : "G2";
    } else if (r == 4 && np == 24) {
      label = "F4";
    } else if (np == r * r) {
      // B_n has a single short simple root, C_n a single long one; short roots carry the smaller d_i.
      std::size_t shorter = 0;
      for (std::size_t i = 0; i < r; ++i)
        if (sub.d[i] == *std::min_element(sub.d.begin(), sub.d.end())) ++shorter;
      label = (shorter == 1 ? "B" : "C") + rs;
    }
    if (label.empty()) label = "?" + rs;
    labels.push_back(label);
  }
  for (std::size_t i = 0; i < labels.size(); ++i) v.label += (i ? "x" : "") + labels[i];
  return v;
}

/// Closure of the simple roots under s_i(a) = a - <a, a_i^vee> a_i, keeping
/// positive vectors. Order: discovery order of a breadth-first closure.
template <class Cartan>
std::vector<Weight> positive_roots(const Cartan& cd) {
  const std::size_t n = cd.rank();
  if (n == 0) return {};
  std::vector<std::vector<mpq_class>> dc(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) dc[i][j] = mpq_class(static_cast<long>(cd.d[i] * cd.c[i][j]));
  if (!detail::positive_definite(dc)) throw Error("positive roots requested for a Cartan matrix of infinite type");
  std::vector<Weight> roots;
  std::set<Weight> seen;
  for (std::size_t i = 0; i < n; ++i) {
    Weight a(n, 0);
    a[i] = 1;
    roots.push_back(a);
    seen.insert(a);
  }
  for (std::size_t head = 0; head < roots.size(); ++head) {
    for (std::size_t i = 0; i < n; ++i) {
      Weight b = roots[head];
      const long long p = cd.pairing(b, i);
      b[i] -= p;
      if (std::any_of(b.begin(), b.end(), [](long long x) { return x < 0; })) continue;
      if (std::all_of(b.begin(), b.end(), [](long long x) { return x == 0; })) continue;
      if (seen.insert(b).second) roots.push_back(b);
    }
  }
  return roots;
}

/// Number of multisets of positive roots summing to v, by dynamic programming
/// over the given root order with memoization on (root index, remainder).
inline unsigned long long kostant_count(const std::vector<Weight>& roots, const Weight& v) {
  if (std::any_of(v.begin(), v.end(), [](long long x) { return x < 0; })) return 0;
  std::map<std::pair<std::size_t, Weight>, unsigned long long> memo;
  std::function<unsigned long long(std::size_t, const Weight&)> count = [&](std::size_t idx, const Weight& rest) {
    if (std::all_of(rest.begin(), rest.end(), [](long long x) { return x == 0; })) return 1ULL;
    if (idx == roots.size()) return 0ULL;
    auto key = std::make_pair(idx, rest);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    unsigned long long total = 0;
    Weight r = rest;
    for (;;) {
      total += count(idx + 1, r);
      bool ok = true;
      for (std::size_t j = 0; j < r.size(); ++j) {
        r[j] -= roots[idx][j];
        if (r[j] < 0) ok = false;
      }
      if (!ok) break;
    }
    memo[key] = total;
    return total;
  };
  return count(0, v);
}

inline unsigned long long kostant_count(const CartanData& cd, const Weight& v) {
  if (v.size() != cd.rank()) throw Error("weight length mismatch");
  return kostant_count(positive_roots(cd), v);
}

/// All nonnegative weights of total size <= depth, in lexicographic order.
inline std::vector<Weight> weights_up_to(std::size_t rank, long long depth) {
  std::vector<Weight> out;
  Weight w(rank, 0);
  std::function<void(std::size_t, long long)> rec = [&](std::size_t i, long long left) {
    if (i == rank) {
      out.push_back(w);
      return;
    }
    for (long long x = 0; x <= left; ++x) {
      w[i] = x;
      rec(i + 1, left - x);
    }
    w[i] = 0;
  };
  rec(0, depth);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace species
