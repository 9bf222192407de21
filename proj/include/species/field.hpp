/**
 * @file field.hpp
 * @brief Exact base fields (rationals, prime fields) and finite extensions.
 *
 * Every field is a small descriptor object that owns no elements; elements are
 * plain values (`value_type`) and all arithmetic goes through the descriptor:
 *
 * @code{.cpp}
 * RationalField Q;
 * auto Qi = make_extension(Q, {Q.from_int(1), Q.zero(), Q.one()});  // Q[x]/(x^2+1)
 * auto i = Qi.generator();
 * assert(Qi.equal(Qi.mul(i, i), Qi.from_int(-1)));
 * @endcode
 *
 * The same descriptor interface (the `Field` concept below) is implemented by
 * RationalField, PrimeField and ExtensionField<Base>, so the dense linear
 * algebra in matrix.hpp runs unchanged over every field of the tower.
 */
#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace species {

/// Domain error raised by every library operation (bad input, failed invariant).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Rng = std::mt19937_64;

/// Uniform integer in [-bound, bound] drawn from the raw engine output, so
/// sequences are identical across standard library implementations.
inline long long random_int(Rng& rng, long long bound) {
  const auto span = static_cast<std::uint64_t>(2 * bound + 1);
  return static_cast<long long>(rng() % span) - bound;
}

template <class F>
concept Field = requires(const F& f, const typename F::value_type& a, long long n, Rng& rng) {
  typename F::value_type;
  { f.zero() } -> std::same_as<typename F::value_type>;
  { f.one() } -> std::same_as<typename F::value_type>;
  { f.from_int(n) } -> std::same_as<typename F::value_type>;
  { f.add(a, a) } -> std::same_as<typename F::value_type>;
  { f.sub(a, a) } -> std::same_as<typename F::value_type>;
  { f.mul(a, a) } -> std::same_as<typename F::value_type>;
  { f.neg(a) } -> std::same_as<typename F::value_type>;
  { f.inv(a) } -> std::same_as<typename F::value_type>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.equal(a, a) } -> std::convertible_to<bool>;
  { f.random(rng, n) } -> std::same_as<typename F::value_type>;
  { f.to_string(a) } -> std::convertible_to<std::string>;
  { f.degree() } -> std::convertible_to<std::size_t>;
  { f.infinite() } -> std::convertible_to<bool>;
};

// ---------------------------------------------------------------------------
// Base fields

/// The rationals with arbitrary-precision numerators and denominators.
struct RationalField {
  using value_type = mpq_class;

  value_type zero() const { return value_type(0); }
  value_type one() const { return value_type(1); }
  value_type from_int(long long n) const { return value_type(mpz_class(std::to_string(n))); }
  value_type from_rational(const mpq_class& q) const { return q; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const {
    if (sgn(a) == 0) throw Error("division by zero");
    return 1 / a;
  }
  value_type div(const value_type& a, const value_type& b) const { return mul(a, inv(b)); }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  value_type random(Rng& rng, long long bound) const { return from_int(random_int(rng, bound)); }
  std::string to_string(const value_type& a) const { return a.get_str(); }
  std::size_t degree() const { return 1; }
  bool infinite() const { return true; }
  std::string name() const { return "rationals"; }
  bool operator==(const RationalField&) const = default;
};

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

/// Z/pZ for a prime p < 2^31.
class PrimeField {
 public:
  using value_type = std::uint64_t;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p >= (1ULL << 31) || !is_prime(p)) throw Error("prime field size must be a prime below 2^31");
  }

  std::uint64_t characteristic() const { return p_; }
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long n) const {
    const auto m = static_cast<long long>(p_);
    return static_cast<value_type>(((n % m) + m) % m);
  }
  value_type from_rational(const mpq_class& q) const {
    mpz_class num = q.get_num() % mpz_class(static_cast<unsigned long>(p_));
    mpz_class den = q.get_den() % mpz_class(static_cast<unsigned long>(p_));
    if (den == 0) throw Error("denominator vanishes modulo p");
    if (num < 0) num += static_cast<unsigned long>(p_);
    return mul(num.get_ui(), inv(den.get_ui()));
  }
  value_type add(value_type a, value_type b) const { return (a + b) % p_; }
  value_type sub(value_type a, value_type b) const { return (a + p_ - b) % p_; }
  value_type mul(value_type a, value_type b) const { return (a * b) % p_; }
  value_type neg(value_type a) const { return (p_ - a) % p_; }
  value_type inv(value_type a) const {
    if (a == 0) throw Error("division by zero");
    return pow(a, p_ - 2);
  }
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
  value_type pow(value_type a, std::uint64_t e) const {
    value_type r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  bool is_zero(value_type a) const { return a == 0; }
  bool equal(value_type a, value_type b) const { return a == b; }
  value_type random(Rng& rng, long long) const { return rng() % p_; }
  std::string to_string(value_type a) const { return std::to_string(a); }
  std::size_t degree() const { return 1; }
  bool infinite() const { return false; }
  std::string name() const { return "prime " + std::to_string(p_); }
  bool operator==(const PrimeField&) const = default;

 private:
  std::uint64_t p_;
};

// ---------------------------------------------------------------------------
// Dense univariate polynomials over a base field, constant term first.

namespace poly {

template <class F>
using Poly = std::vector<typename F::value_type>;

template <class F>
void trim(const F& f, Poly<F>& a) {
  while (!a.empty() && f.is_zero(a.back())) a.pop_back();
}

template <class F>
Poly<F> mul(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<F> r(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (f.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(f, r);
  return r;
}

template <class F>
Poly<F> sub(const F& f, Poly<F> a, const Poly<F>& b) {
  if (a.size() < b.size()) a.resize(b.size(), f.zero());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
  trim(f, a);
  return a;
}

/// Quotient and remainder; b must be nonzero.
template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const F& f, Poly<F> a, Poly<F> b) {
  trim(f, a);
  trim(f, b);
  if (b.empty()) throw Error("polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  Poly<F> q(a.size() - b.size() + 1, f.zero());
  const auto lead_inv = f.inv(b.back());
  for (std::size_t k = a.size(); k-- >= b.size();) {
    const auto c = f.mul(a[k], lead_inv);
    q[k - (b.size() - 1)] = c;
    if (f.is_zero(c)) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      auto& slot = a[k - (b.size() - 1) + j];
      slot = f.sub(slot, f.mul(c, b[j]));
    }
  }
  a.resize(b.size() - 1);
  trim(f, a);
  trim(f, q);
  return {q, a};
}

template <class F>
Poly<F> mod(const F& f, const Poly<F>& a, const Poly<F>& b) {
  return divmod(f, a, b).second;
}

template <class F>
Poly<F> gcd(const F& f, Poly<F> a, Poly<F> b) {
  trim(f, a);
  trim(f, b);
  while (!b.empty()) {
    auto r = mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Extended Euclid: returns (g, s) with s*a = g mod b.
template <class F>
std::pair<Poly<F>, Poly<F>> half_gcd_inverse(const F& f, Poly<F> a, Poly<F> b) {
  trim(f, a);
  trim(f, b);
  Poly<F> s0{f.one()}, s1{};
  while (!b.empty()) {
    auto [q, r] = divmod(f, a, b);
    auto s2 = sub(f, s0, mul(f, q, s1));
    a = std::move(b);
    b = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  return {a, s0};
}

/// x^e mod m by repeated squaring.
template <class F>
Poly<F> pow_x_mod(const F& f, mpz_class e, const Poly<F>& m) {
  Poly<F> result{f.one()};
  Poly<F> base = mod(f, Poly<F>{f.zero(), f.one()}, m);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = mod(f, mul(f, result, base), m);
    base = mod(f, mul(f, base, base), m);
    e >>= 1;
  }
  return result;
}

}  // namespace poly

// ---------------------------------------------------------------------------
// Irreducibility

/// Largest minimal-polynomial degree accepted over the rationals.
inline constexpr std::size_t kMaxRationalExtensionDegree = 4;
/// Largest minimal-polynomial degree accepted over a prime field.
inline constexpr std::size_t kMaxPrimeExtensionDegree = 16;

namespace detail {

inline std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  std::vector<mpz_class> signed_out;
  for (auto& d : out) {
    signed_out.push_back(d);
    signed_out.push_back(-d);
  }
  return signed_out;
}

inline bool is_square(const mpz_class& n, mpz_class& root) {
  if (n < 0) return false;
  root = sqrt(n);
  return root * root == n;
}

}  // namespace detail

/// Deterministic test for monic rational polynomials of degree <= 4: the
/// polynomial is rescaled to a monic integer one, then checked for integer
/// roots and (degree 4) for monic integer quadratic factors.
inline bool is_irreducible(const RationalField&, const std::vector<mpq_class>& monic) {
  const std::size_t n = monic.size() - 1;
  if (n == 1) return true;
  if (n > kMaxRationalExtensionDegree)
    throw Error("minimal polynomial degree " + std::to_string(n) + " exceeds the supported bound " +
                std::to_string(kMaxRationalExtensionDegree));
  mpz_class scale = 1;
  for (auto& c : monic) scale = lcm(scale, mpz_class(c.get_den()));
  // g(y) = scale^n * f(y / scale) is monic with integer coefficients.
  std::vector<mpz_class> g(n + 1);
  mpz_class power = 1;
  for (std::size_t k = n + 1; k-- > 0;) {
    mpq_class c = monic[k] * mpq_class(power);
    g[k] = c.get_num();
    power *= scale;
  }
  auto eval = [&](const mpz_class& x) {
    mpz_class acc = 0;
    for (std::size_t k = n + 1; k-- > 0;) acc = acc * x + g[k];
    return acc;
  };
  if (g[0] == 0) return false;
  for (auto& d : detail::divisors(g[0]))
    if (eval(d) == 0) return false;
  if (n < 4) return true;
  // (y^2 + a y + b)(y^2 + c y + d) with b d = g0, a + c = g3, b + d + a c = g2, a d + b c = g1.
  for (auto& b : detail::divisors(g[0])) {
    const mpz_class d = g[0] / b;
    const mpz_class disc = g[3] * g[3] - 4 * (g[2] - b - d);
    mpz_class root;
    if (!detail::is_square(disc, root)) continue;
    for (const mpz_class& twice_a : {mpz_class(g[3] + root), mpz_class(g[3] - root)}) {
      if (!mpz_even_p(twice_a.get_mpz_t())) continue;
      const mpz_class a = twice_a / 2;
      const mpz_class c = g[3] - a;
      if (a * d + b * c == g[1] && b + d + a * c == g[2]) return false;
    }
  }
  return true;
}

/// Rabin's test over F_p.
inline bool is_irreducible(const PrimeField& f, const std::vector<std::uint64_t>& monic) {
  const std::size_t n = monic.size() - 1;
  if (n == 1) return true;
  if (n > kMaxPrimeExtensionDegree)
    throw Error("minimal polynomial degree exceeds the supported bound " + std::to_string(kMaxPrimeExtensionDegree));
  const mpz_class p(static_cast<unsigned long>(f.characteristic()));
  const poly::Poly<PrimeField> x{0, 1};
  auto x_to_p_power = [&](std::size_t k) {
    mpz_class e;
    mpz_pow_ui(e.get_mpz_t(), p.get_mpz_t(), k);
    return poly::pow_x_mod(f, e, monic);
  };
  if (!poly::sub(f, x_to_p_power(n), poly::mod(f, x, monic)).empty()) return false;
  for (std::size_t q = 2; q <= n; ++q) {
    if (n % q != 0 || !is_prime(q)) continue;
    auto h = poly::sub(f, x_to_p_power(n / q), x);
    auto g = poly::gcd(f, monic, h);
    if (g.size() != 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Finite extensions

/// F[x]/(minpoly) for a monic irreducible minpoly over the base field F.
/// Elements are coordinate vectors over the power basis 1, x, ..., x^{d-1}.
template <Field Base>
class ExtensionField {
 public:
  using base_type = Base;
  using base_value = typename Base::value_type;
  using value_type = std::vector<base_value>;

  ExtensionField(Base base, std::vector<base_value> minpoly) : base_(std::move(base)), minpoly_(std::move(minpoly)) {}

  const Base& base() const { return base_; }
  const std::vector<base_value>& minpoly() const { return minpoly_; }
  std::size_t degree() const { return minpoly_.size() - 1; }
  bool infinite() const { return base_.infinite(); }

  value_type zero() const { return value_type(degree(), base_.zero()); }
  value_type one() const { return embed(base_.one()); }
  value_type from_int(long long n) const { return embed(base_.from_int(n)); }
  value_type embed(const base_value& c) const {
    auto r = zero();
    r[0] = c;
    if (degree() == 1) r = reduce({c});
    return r;
  }
  /// The class of x.
  value_type generator() const { return reduce({base_.zero(), base_.one()}); }

  value_type add(const value_type& a, const value_type& b) const {
    value_type r(degree());
    for (std::size_t k = 0; k < degree(); ++k) r[k] = base_.add(a[k], b[k]);
    return r;
  }
  value_type sub(const value_type& a, const value_type& b) const {
    value_type r(degree());
    for (std::size_t k = 0; k < degree(); ++k) r[k] = base_.sub(a[k], b[k]);
    return r;
  }
  value_type neg(const value_type& a) const {
    value_type r(degree());
    for (std::size_t k = 0; k < degree(); ++k) r[k] = base_.neg(a[k]);
    return r;
  }
  value_type mul(const value_type& a, const value_type& b) const { return reduce(poly::mul(base_, a, b)); }
  value_type inv(const value_type& a) const {
    if (is_zero(a)) throw Error("division by zero");
    auto [g, s] = poly::half_gcd_inverse(base_, a, minpoly_);
    // g is a nonzero constant because minpoly is irreducible.
    const auto c = base_.inv(g[0]);
    for (auto& coeff : s) coeff = base_.mul(coeff, c);
    return reduce(s);
  }
  value_type div(const value_type& a, const value_type& b) const { return mul(a, inv(b)); }
  value_type scale(const base_value& c, const value_type& a) const {
    value_type r(degree());
    for (std::size_t k = 0; k < degree(); ++k) r[k] = base_.mul(c, a[k]);
    return r;
  }
  bool is_zero(const value_type& a) const {
    for (auto& c : a)
      if (!base_.is_zero(c)) return false;
    return true;
  }
  bool equal(const value_type& a, const value_type& b) const { return is_zero(sub(a, b)); }
  value_type random(Rng& rng, long long bound) const {
    value_type r(degree());
    for (auto& c : r) c = base_.random(rng, bound);
    return r;
  }
  std::string to_string(const value_type& a) const {
    std::ostringstream os;
    os << '[';
    for (std::size_t k = 0; k < a.size(); ++k) os << (k ? "," : "") << base_.to_string(a[k]);
    os << ']';
    return os.str();
  }

  /// Full reduction of an arbitrary-length coefficient list modulo minpoly.
  value_type reduce(poly::Poly<Base> p) const {
    auto r = poly::mod(base_, p, minpoly_);
    r.resize(degree(), base_.zero());
    return r;
  }

  bool operator==(const ExtensionField& o) const {
    if (!(base_ == o.base_) || minpoly_.size() != o.minpoly_.size()) return false;
    for (std::size_t k = 0; k < minpoly_.size(); ++k)
      if (!base_.equal(minpoly_[k], o.minpoly_[k])) return false;
    return true;
  }

 private:
  Base base_;
  std::vector<base_value> minpoly_;
};

/// Validates minpoly (monic, degree >= 1, irreducible) and builds the extension.
template <Field Base>
ExtensionField<Base> make_extension(const Base& base, std::vector<typename Base::value_type> minpoly) {
  poly::trim(base, minpoly);
  if (minpoly.size() < 2) throw Error("minimal polynomial must have positive degree");
  if (!base.equal(minpoly.back(), base.one())) throw Error("minimal polynomial must be monic");
  if (!is_irreducible(base, minpoly)) throw Error("not a field: minimal polynomial is reducible");
  return ExtensionField<Base>(base, std::move(minpoly));
}

/// The base field viewed as the degree-1 extension F[x]/(x).
template <Field Base>
ExtensionField<Base> trivial_extension(const Base& base) {
  return ExtensionField<Base>(base, {base.zero(), base.one()});
}

}  // namespace species
