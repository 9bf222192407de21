#include "species/named_modules.hpp"
#include "species/presets.hpp"

#include <gtest/gtest.h>

using namespace species;

namespace {

using Q = RationalField;
using Rep = Representation<Q>;

std::size_t hom_dim(const Rep& a, const Rep& b) { return hom_space(a, b).size(); }

/// v = (1,1): y = (z1, zi) in V_2 = C, w(1) = w1, w(i) = wi.
Rep point_11(const ModulatedGraph<Q>& g, long long z1, long long zi, long long w1, long long wi) {
  return c2_module(g, 1, 1, detail::qmat(2, 1, {z1, zi}), detail::qmat(1, 2, {w1, wi}));
}

}  // namespace

TEST(Simples, Basics) {
  auto g = rational_preset("c2");
  const auto s1 = simple_module(*g, 0), s2 = simple_module(*g, 1);
  EXPECT_TRUE(check_representation(s1).valid());
  EXPECT_EQ(s2.base_dim(1), 2u);
  EXPECT_EQ(hom_dim(s1, s2), 0u);
  EXPECT_EQ(hom_dim(s2, s1), 0u);
  EXPECT_EQ(hom_dim(s1, s1), 1u);
  EXPECT_EQ(hom_dim(s2, s2), 2u);  // F_2 = C has base dimension 2
  for (std::size_t i = 0; i < 2; ++i) {
    const auto s = simple_module(*g, i);
    EXPECT_EQ(phi(s, i), 1u);
    EXPECT_EQ(phi_star(s, i), 1u);
    const auto td = tilde_maps(s, i);
    EXPECT_EQ(td.out_map.rows(), 0u);  // V^i = 0 for a simple
  }
}

TEST(Simples, ZeroModule) {
  auto g = rational_preset("c2");
  const auto z = zero_representation(*g, {0, 0});
  EXPECT_TRUE(check_representation(z).valid());
  EXPECT_EQ(tilde_maps(z, 0).out_map.rows(), 0u);
  const auto hs = head_socle_dims(z);
  EXPECT_EQ(hs.total_head, 0u);
  EXPECT_EQ(hs.total_socle, 0u);
}

TEST(GaussianPoints, ValidAndInvalidPoints) {
  auto g = rational_preset("c2");
  const auto good = point_11(*g, 1, 0, 0, 0);
  EXPECT_TRUE(check_representation(good).valid()) << check_representation(good).summary();
  const auto bad = point_11(*g, 1, 0, 1, 0);
  const auto rpt = check_representation(bad);
  EXPECT_FALSE(rpt.valid());
  EXPECT_FALSE(rpt.relation_holds[0]);  // w1 z1 + wi zi = 1
  EXPECT_THROW(require_valid(bad), Error);
  // the other component {z = 0}
  EXPECT_TRUE(check_representation(point_11(*g, 0, 0, 2, -3)).valid());
  // both relations, as stated: w1 z1 + wi zi = 0 and zi w1 - z1 wi = 0
  EXPECT_FALSE(check_representation(point_11(*g, 1, 1, 1, -1)).valid());
  EXPECT_FALSE(check_representation(point_11(*g, 1, 0, 0, 1)).valid());
}

TEST(GaussianPoints, TildeMapsAtValidPoint) {
  auto g = rational_preset("c2");
  const auto rep = point_11(*g, 1, 0, 0, 0);
  EXPECT_EQ(phi(rep, 1), 1u);
  EXPECT_EQ(phi(rep, 0), 0u);
  const auto t1 = tilde_maps(rep, 0);
  EXPECT_EQ(rank(Q{}, t1.out_map), t1.out_map.cols());
  EXPECT_TRUE(is_zero(Q{}, tilde_maps(rep, 1).out_map));
}

TEST(GaussianPoints, LinearityFailure) {
  auto g = rational_preset("c2");
  auto rep = point_11(*g, 1, 0, 0, 0);
  rep.maps[0](0, 1) = 1;  // no longer of the form [y | Z y]
  EXPECT_FALSE(check_representation(rep).linearity_failures.empty());
}

TEST(NamedModules, C2IndecomposablesAreValid) {
  auto g = rational_preset("c2");
  for (auto name : {"R", "C", "RC", "CR", "CR2", "R2C", "RCR", "CR2C"}) {
    const auto m = c2_indecomposable(*g, name);
    EXPECT_TRUE(check_representation(m).valid()) << name << ": " << check_representation(m).summary();
    EXPECT_GE(hom_dim(m, m), 1u) << name;
  }
}

TEST(NamedModules, LoewyHeadsAndSocles) {
  auto g = rational_preset("c2");
  const auto rc = c2_indecomposable(*g, "RC");
  EXPECT_EQ(phi(rc, 0), 0u);
  EXPECT_EQ(phi(rc, 1), 1u);
  EXPECT_EQ(phi_star(rc, 0), 1u);
  EXPECT_EQ(phi_star(rc, 1), 0u);
  const auto rcr = c2_indecomposable(*g, "RCR");
  const auto hs = head_socle_dims(rcr);
  EXPECT_EQ(hs.head, (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(hs.socle, (std::vector<std::size_t>{1, 0}));
  const auto c = c2_indecomposable(*g, "CR2C");
  EXPECT_EQ(head_socle_dims(c).head, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(head_socle_dims(c).socle, (std::vector<std::size_t>{0, 1}));
}

TEST(Ext, SmallCases) {
  auto g = rational_preset("c2");
  const auto s1 = simple_module(*g, 0), s2 = simple_module(*g, 1);
  const auto e12 = ext1_space(s1, s2);
  EXPECT_EQ(e12.dimension, 2u);  // F_2-dimension 1
  EXPECT_EQ(ext1_space(s2, s1).dimension, 2u);
  EXPECT_EQ(ext1_space(s1, s1).dimension, 0u);
  EXPECT_EQ(ext1_space(s2, s2).dimension, 0u);
  for (auto& cls : e12.classes) {
    const auto e = assemble_extension(s1, s2, cls);
    EXPECT_TRUE(check_representation(e).valid());
  }
}

TEST(Ext, CoboundaryKernelIsHom) {
  auto g = rational_preset("c2");
  std::vector<std::string> names{"R", "C", "RC", "CR", "CR2", "R2C", "RCR", "CR2C"};
  for (auto& a : names)
    for (auto& b : names) {
      const auto A = c2_indecomposable(*g, a), B = c2_indecomposable(*g, b);
      const auto ext = ext1_space(A, B);
      EXPECT_EQ(ext.splitting_kernel, hom_dim(A, B)) << a << " " << b;
      EXPECT_EQ(ext.dimension, ext.cocycle_dim - ext.coboundary_dim);
      EXPECT_EQ(ext.classes.size(), ext.dimension);
    }
}

TEST(Ext, RigidSumsOfWeight32) {
  auto g = rational_preset("c2");
  for (auto& parts : c2_rigid_32()) {
    std::vector<Rep> mods;
    for (auto& p : parts) mods.push_back(c2_indecomposable(*g, p));
    const auto m = direct_sum_of(mods);
    EXPECT_EQ(m.dims, (std::vector<std::size_t>{3, 2}));
    EXPECT_EQ(ext1_space(m, m).dimension, 0u) << parts[0] << "+" << parts[1];
  }
}

TEST(GenericExtension, C2Examples) {
  auto g = rational_preset("c2");
  const auto s1 = simple_module(*g, 0), s2 = simple_module(*g, 1);
  const auto rc = generic_extension(s1, s2, 11);
  EXPECT_TRUE(is_isomorphic(rc, c2_indecomposable(*g, "RC"), 1));
  EXPECT_TRUE(is_isomorphic(generic_extension(zero_representation(*g, {0, 0}), s1, 2), s1, 3));
  const auto ss = generic_extension(s1, s1, 4);
  EXPECT_EQ(ss.dims, (std::vector<std::size_t>{2, 0}));
  EXPECT_TRUE(is_isomorphic(ss, direct_sum(s1, s1), 5));
}

TEST(SocleAndHead, C2Examples) {
  auto g = rational_preset("c2");
  const auto rc = c2_indecomposable(*g, "RC");
  EXPECT_TRUE(is_isomorphic(generic_socle_quotient(rc, 1, 1), simple_module(*g, 0), 2));
  EXPECT_TRUE(is_isomorphic(generic_head_submodule(rc, 0, 3), simple_module(*g, 1), 4));
  EXPECT_TRUE(generic_socle_quotient(simple_module(*g, 0), 0, 5).is_zero_module());
  EXPECT_THROW(generic_socle_quotient(rc, 0, 6), Error);
  EXPECT_THROW(generic_head_submodule(rc, 1, 7), Error);
  try {
    generic_socle_quotient(rc, 0, 6);
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("no socle"), std::string::npos);
  }
}

TEST(Isomorphism, Examples) {
  auto g = rational_preset("c2");
  const auto s1 = simple_module(*g, 0), s2 = simple_module(*g, 1);
  EXPECT_TRUE(is_isomorphic(s1, s1, 0));
  EXPECT_FALSE(is_isomorphic(direct_sum(s1, s2), c2_indecomposable(*g, "RC"), 0));
  EXPECT_FALSE(is_isomorphic(c2_indecomposable(*g, "RC"), c2_indecomposable(*g, "CR"), 0));
  EXPECT_FALSE(is_isomorphic(c2_indecomposable(*g, "R2C"), c2_indecomposable(*g, "RCR"), 0));
  // summands in the other order
  const auto a = direct_sum(c2_indecomposable(*g, "RC"), s1);
  const auto b = direct_sum(s1, c2_indecomposable(*g, "RC"));
  EXPECT_TRUE(is_isomorphic(a, b, 9));
}

TEST(Sl2hat, HomExtAndHeads) {
  for (auto [z, expect_head_one] : {std::pair{"1", false}, std::pair{"-1", true}}) {
    auto g = rational_preset("sl2hat-z", z);
    const auto v = sl2hat_module_v(*g);
    ASSERT_TRUE(check_representation(v).valid()) << check_representation(v).summary();
    EXPECT_EQ(hom_dim(v, v), 1u);
    const auto ext = ext1_space(v, v);
    EXPECT_TRUE(is_isomorphic(v, v, 1));
    if (!expect_head_one) {
      EXPECT_EQ(ext.dimension, 1u);
      // every nonzero class is a nonzero multiple of the basis class
      for (long c : {1L, -1L, 3L}) {
        MapFamily<Q> zeta;
        for (auto& m : ext.classes.front()) zeta.push_back(scale(Q{}, mpq_class(c), m));
        const auto e = assemble_extension(v, v, zeta);
        EXPECT_TRUE(check_representation(e).valid());
        EXPECT_EQ(head_socle_dims(e).total_head, 2u);
      }
    } else {
      bool found = false;
      Rng rng(3);
      for (auto& cls : ext.classes)
        found |= head_socle_dims(assemble_extension(v, v, cls)).total_head == 1;
      for (int t = 0; t < 10 && !found; ++t)
        found |= head_socle_dims(assemble_extension(v, v, random_class(Q{}, ext, rng, 10))).total_head == 1;
      EXPECT_TRUE(found);
    }
  }
}

TEST(Sl2hat, NegativeControl) {
  auto g = rational_preset("sl2hat-z", "1");
  const auto v = sl2hat_module_v(*g);
  const auto& cd = cartan_matrix(*g);
  const long long lhs = static_cast<long long>(ext1_space(v, v).dimension);
  const long long rhs = 2 * static_cast<long long>(hom_dim(v, v)) - cd.symmetric_form(v.dimension_vector(), v.dimension_vector());
  EXPECT_EQ(lhs, 1);
  EXPECT_EQ(rhs, 2);
  EXPECT_NE(lhs, rhs);
}

TEST(Sl2hat, GaussianParameter) {
  auto any = load_preset("sl2hat-z", "1+2i");
  auto g = std::get<GraphPtr<Q>>(any);
  const auto v = sl2hat_module_v(*g);
  EXPECT_TRUE(check_representation(v).valid()) << check_representation(v).summary();
  EXPECT_EQ(hom_dim(v, v), 2u);  // F = Q(i)
}
