#include "species/preprojective_algebra.hpp"
#include "species/presets.hpp"
#include "species/root_system.hpp"

#include <gtest/gtest.h>

using namespace species;

namespace {

std::size_t path_index(GradedAlgebra<RationalField>& alg, std::size_t n, std::vector<std::size_t> vertices) {
  const auto& sp = alg.tensor_degree(n);
  for (std::size_t p = 0; p < sp.size(); ++p)
    if (sp[p].vertices == vertices) return p;
  throw Error("no such path");
}

}  // namespace

TEST(TensorDegree, C2PathSpaces) {
  auto g = rational_preset("c2");
  GradedAlgebra<RationalField> alg(*g);
  const auto& d1 = alg.tensor_degree(1);
  ASSERT_EQ(d1.size(), 2u);
  EXPECT_EQ(d1[0].base_dim, 2u);
  EXPECT_EQ(d1[1].base_dim, 2u);
  const auto& d2 = alg.tensor_degree(2);
  ASSERT_EQ(d2.size(), 2u);
  // C (x)_C C over Q has dim 2, C (x)_Q C has dim 4
  EXPECT_EQ(d2[path_index(alg, 2, {0, 1, 0})].base_dim, 2u);
  EXPECT_EQ(d2[path_index(alg, 2, {1, 0, 1})].base_dim, 4u);
}

TEST(TensorDegree, EdgelessHasNoPaths) {
  auto g = rational_preset("a1xa1");
  GradedAlgebra<RationalField> alg(*g);
  EXPECT_TRUE(alg.tensor_degree(1).empty());
  EXPECT_EQ(alg.tensor_dim(0), 2u);
}

TEST(Ideal, C2DegreeTwo) {
  auto g = rational_preset("c2");
  GradedAlgebra<RationalField> alg(*g);
  EXPECT_EQ(alg.ideal_component(0).cols(), 0u);
  EXPECT_EQ(alg.ideal_component(1).cols(), 0u);
  EXPECT_EQ(alg.ideal_dim_within(2, path_index(alg, 2, {0, 1, 0})), 1u);
  EXPECT_EQ(alg.ideal_dim_within(2, path_index(alg, 2, {1, 0, 1})), 2u);
  auto by_ends = alg.ideal_dims_by_endpoints(2);
  EXPECT_EQ((by_ends[{0, 0}]), 1u);
  EXPECT_EQ((by_ends[{1, 1}]), 2u);
}

TEST(Ideal, EdgelessIsZero) {
  auto g = rational_preset("a1xa1");
  GradedAlgebra<RationalField> alg(*g);
  for (std::size_t n = 2; n < 5; ++n) EXPECT_EQ(alg.ideal_component(n).cols(), 0u);
}

TEST(Ideal, TwoSided) {
  for (auto name : {"c2", "c2-sqrt2", "a2-lusztig", "a3", "sl2hat-z"}) {
    auto g = rational_preset(name);
    GradedAlgebra<RationalField> alg(*g);
    const auto& k = g->base();
    for (std::size_t n = 2; n <= 3; ++n) {
      const auto& I = alg.ideal_component(n);
      const auto next = alg.ideal_component(n + 1);
      for (std::size_t c = 0; c < I.cols(); ++c)
        for (std::size_t a = 0; a < g->arrows().size(); ++a)
          for (std::size_t e = 0; e < g->arrow(a).bimodule.base_dim; ++e) {
            VectorOf<RationalField> m(g->arrow(a).bimodule.base_dim, k.zero());
            m[e] = k.one();
            EXPECT_TRUE(in_span(k, next, alg.left_multiply(n, a, m, I.column(c)))) << name;
            EXPECT_TRUE(in_span(k, next, alg.right_multiply(n, a, I.column(c), m))) << name;
          }
    }
  }
}

TEST(RightMultiply, AgreesWithLeftOnPureTensors) {
  // (m2 (x) 1) (x) m1 = m2 (x) (m1 (x) 1) for single arrows
  auto g = rational_preset("c2");
  GradedAlgebra<RationalField> alg(*g);
  const auto& k = g->base();
  for (std::size_t a1 = 0; a1 < 2; ++a1)
    for (std::size_t a2 = 0; a2 < 2; ++a2) {
      if (g->arrow(a1).to != g->arrow(a2).from) continue;
      for (std::size_t e1 = 0; e1 < 2; ++e1)
        for (std::size_t e2 = 0; e2 < 2; ++e2) {
          VectorOf<RationalField> m1(2, k.zero()), m2(2, k.zero());
          m1[e1] = m2[e2] = k.one();
          const auto s = g->arrow(a1).from, mid = g->arrow(a2).from;
          VectorOf<RationalField> one_s(alg.tensor_dim(0), k.zero()), one_mid(alg.tensor_dim(0), k.zero());
          one_s[alg.tensor_degree(0)[s].offset] = k.one();
          one_mid[alg.tensor_degree(0)[mid].offset] = k.one();
          const auto lhs = alg.right_multiply(1, a1, alg.left_multiply(0, a2, m2, one_mid), m1);
          const auto rhs = alg.left_multiply(1, a2, m2, alg.left_multiply(0, a1, m1, one_s));
          EXPECT_EQ(lhs, rhs);
        }
    }
}

TEST(GradedDimensions, C2) {
  auto g = rational_preset("c2");
  GradedAlgebra<RationalField> alg(*g);
  auto gd = alg.graded_dimensions(10);
  EXPECT_EQ(gd.dims, (std::vector<std::size_t>{3, 4, 3, 0}));
  EXPECT_TRUE(gd.finite);
  EXPECT_EQ(gd.total, 10u);
  EXPECT_EQ(alg.quotient_basis(2).size(), 3u);
}

TEST(GradedDimensions, SimplyLacedAndEdgeless) {
  for (auto [name, total] : std::vector<std::pair<std::string, std::size_t>>{{"a1xa1", 2}, {"a2-lusztig", 4}, {"a3", 10}, {"c2-sqrt2", 10}}) {
    auto g = rational_preset(name);
    GradedAlgebra<RationalField> alg(*g);
    auto gd = alg.graded_dimensions(10);
    EXPECT_TRUE(gd.finite) << name;
    EXPECT_EQ(gd.total, total) << name;
  }
  auto g = rational_preset("a1xa1");
  GradedAlgebra<RationalField> alg(*g);
  EXPECT_EQ(alg.graded_dimensions(5).dims, (std::vector<std::size_t>{2, 0}));
}

TEST(GradedDimensions, Sl2hatInfinite) {
  for (auto z : {"1", "-1"}) {
    auto g = rational_preset("sl2hat-z", z);
    GradedAlgebra<RationalField> alg(*g);
    auto gd = alg.graded_dimensions(6);
    EXPECT_FALSE(gd.finite);
    ASSERT_EQ(gd.dims.size(), 7u);
    for (auto d : gd.dims) EXPECT_GT(d, 0u);
    EXPECT_EQ(gd.verdict(), "not finite by degree 6");
  }
}

TEST(GradedDimensions, LowDegreeInvariantsAndVerdict) {
  for (auto& name : preset_names()) {
    auto g = rational_preset(name);
    GradedAlgebra<RationalField> alg(*g);
    std::size_t sum_d = 0, sum_m = 0;
    for (std::size_t i = 0; i < g->size(); ++i) sum_d += g->degree(i);
    for (auto& arr : g->arrows()) sum_m += arr.bimodule.base_dim;
    EXPECT_EQ(alg.quotient_dim(0), sum_d) << name;
    EXPECT_EQ(alg.quotient_dim(1), sum_m) << name;
    EXPECT_EQ(alg.graded_dimensions(6).finite, is_finite_type(cartan_matrix(*g)).finite) << name;
  }
}
