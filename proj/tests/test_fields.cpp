#include "species/field.hpp"
#include "species/matrix.hpp"

#include <gtest/gtest.h>

using namespace species;

namespace {

RationalField Q;

std::vector<mpq_class> qpoly(std::initializer_list<long long> c) {
  std::vector<mpq_class> out;
  for (long long x : c) out.push_back(Q.from_int(x));
  return out;
}

template <Field F>
void check_axioms(const F& f, std::uint64_t seed, int samples) {
  Rng rng(seed);
  for (int t = 0; t < samples; ++t) {
    auto a = f.random(rng, 50), b = f.random(rng, 50), c = f.random(rng, 50);
    ASSERT_TRUE(f.equal(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c))));
    ASSERT_TRUE(f.equal(f.add(f.add(a, b), c), f.add(a, f.add(b, c))));
    ASSERT_TRUE(f.equal(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c))));
    ASSERT_TRUE(f.equal(f.mul(a, b), f.mul(b, a)));
    if (!f.is_zero(a)) ASSERT_TRUE(f.equal(f.mul(a, f.inv(a)), f.one()));
  }
}

}  // namespace

TEST(Extension, GaussianRationals) {
  auto Qi = make_extension(Q, qpoly({1, 0, 1}));
  EXPECT_EQ(Qi.degree(), 2u);
  auto i = Qi.generator();
  EXPECT_TRUE(Qi.equal(Qi.mul(i, i), Qi.from_int(-1)));
}

TEST(Extension, LinearBehavesLikeBase) {
  auto F = make_extension(Q, qpoly({-3, 1}));
  EXPECT_EQ(F.degree(), 1u);
  EXPECT_TRUE(F.equal(F.generator(), F.from_int(3)));
  auto a = F.from_int(7), b = F.from_int(-2);
  EXPECT_TRUE(F.equal(F.mul(a, b), F.from_int(-14)));
  EXPECT_TRUE(F.equal(F.inv(a), F.embed(mpq_class(1, 7))));
}

TEST(Extension, Rejections) {
  EXPECT_THROW(make_extension(Q, qpoly({-1, 0, 1})), Error);
  try {
    make_extension(Q, qpoly({-1, 0, 1}));
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("not a field"), std::string::npos);
  }
  EXPECT_THROW(make_extension(Q, qpoly({1, 0, 2})), Error);
  // (x^2+1)^2 has no rational roots but factors
  EXPECT_THROW(make_extension(Q, qpoly({1, 0, 2, 0, 1})), Error);
  EXPECT_THROW(make_extension(Q, qpoly({4, 0, 0, 0, 1})), Error);  // (x^2+2x+2)(x^2-2x+2)
  EXPECT_NO_THROW(make_extension(Q, qpoly({-2, 0, 0, 0, 1})));
  EXPECT_NO_THROW(make_extension(Q, qpoly({-2, 0, 0, 1})));
  EXPECT_THROW(make_extension(Q, qpoly({-1, 0, 0, 0, 0, 1})), Error);  // degree bound
}

TEST(Extension, PrimeBase) {
  PrimeField F5(5);
  EXPECT_THROW(make_extension(F5, std::vector<std::uint64_t>{1, 0, 1}), Error);  // 2^2 = -1
  auto F25 = make_extension(F5, std::vector<std::uint64_t>{2, 0, 1});
  check_axioms(F25, 3, 1000);
  EXPECT_THROW(PrimeField(6), Error);
}

TEST(FieldAxioms, RandomSamples) {
  check_axioms(Q, 1, 1000);
  check_axioms(make_extension(Q, qpoly({1, 0, 1})), 2, 1000);
  check_axioms(make_extension(Q, qpoly({-2, 0, 1})), 3, 1000);
  check_axioms(make_extension(Q, qpoly({-2, 0, 0, 1})), 4, 1000);
  check_axioms(PrimeField(7), 5, 1000);
  check_axioms(PrimeField(101), 6, 1000);
}

TEST(Solve, Identity) {
  auto b = VectorOf<RationalField>{Q.from_int(4), Q.from_int(-1), mpq_class(2, 3)};
  auto s = solve_linear(Q, identity(Q, 3), b);
  ASSERT_TRUE(s.consistent);
  EXPECT_EQ(s.particular, b);
  EXPECT_TRUE(s.kernel.empty());
}

TEST(Solve, Zero) {
  auto s = solve_linear(Q, zeros(Q, 2, 2), VectorOf<RationalField>(2, Q.zero()));
  ASSERT_TRUE(s.consistent);
  EXPECT_TRUE(is_zero(Q, s.particular));
  EXPECT_EQ(s.kernel.size(), 2u);
}

TEST(Solve, Inconsistent) {
  auto s = solve_linear(Q, zeros(Q, 1, 1), VectorOf<RationalField>{Q.one()});
  EXPECT_FALSE(s.consistent);
}

TEST(Solve, OverGaussianRationals) {
  auto Qi = make_extension(Q, qpoly({1, 0, 1}));
  MatrixOf<decltype(Qi)> a(1, 1, Qi.generator());
  auto s = solve_linear(Qi, a, {Qi.one()});
  ASSERT_TRUE(s.consistent);
  EXPECT_TRUE(Qi.equal(s.particular[0], Qi.neg(Qi.generator())));
  EXPECT_TRUE(s.kernel.empty());
}

TEST(Solve, RankNullityAndConsistency) {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    auto a = zeros(Q, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a(i, j) = rng() % 3 == 0 ? Q.zero() : Q.random(rng, 3);
    if (t % 4 == 0 && r > 1) a.set_column(0, VectorOf<RationalField>(r, Q.zero()));
    const auto ker = kernel(Q, a);
    EXPECT_EQ(rank(Q, a) + ker.size(), c);
    for (auto& k : ker) EXPECT_TRUE(is_zero(Q, apply(Q, a, k)));
    VectorOf<RationalField> x(c);
    for (auto& e : x) e = Q.random(rng, 5);
    const auto b = apply(Q, a, x);
    const auto s = solve_linear(Q, a, b);
    ASSERT_TRUE(s.consistent);
    EXPECT_EQ(apply(Q, a, s.particular), b);
  }
}

TEST(RestrictScalars, Dimensions) {
  auto Qi = make_extension(Q, qpoly({1, 0, 1}));
  auto one = restrict_scalars(Qi, 1);
  EXPECT_EQ(one.base_dimension, 2u);
  auto expected = zeros(Q, 2, 2);
  expected(1, 0) = Q.one();
  expected(0, 1) = Q.from_int(-1);
  EXPECT_TRUE(equal(Q, one.generator_action, expected));
  EXPECT_EQ(restrict_scalars(Qi, 0).base_dimension, 0u);
  auto lin = make_extension(Q, qpoly({-5, 1}));
  auto two = restrict_scalars(lin, 2);
  EXPECT_EQ(two.base_dimension, 2u);
  EXPECT_TRUE(equal(Q, two.generator_action, scale(Q, Q.from_int(5), identity(Q, 2))));
}

TEST(RestrictScalars, SatisfiesMinimalPolynomial) {
  for (auto mp : {qpoly({1, 0, 1}), qpoly({-2, 0, 0, 1}), qpoly({-2, 0, 0, 0, 1}), qpoly({1, 1, 1})}) {
    auto F = make_extension(Q, mp);
    for (std::size_t n : {1u, 2u, 3u}) {
      auto rs = restrict_scalars(F, n);
      EXPECT_EQ(rs.base_dimension, n * F.degree());
      EXPECT_TRUE(is_zero(Q, evaluate_polynomial(Q, mp, rs.generator_action)));
    }
  }
}
