#include "species/crystal_io.hpp"
#include "species/named_modules.hpp"
#include "species/presets.hpp"

#include <gtest/gtest.h>

using namespace species;

namespace {

using Q = RationalField;

const CrystalGraph<Q>& c2_crystal() {
  static auto g = rational_preset("c2");
  static auto cg = enumerate_crystal(*g, 5, 0);
  return cg;
}

std::size_t node_of(const CrystalGraph<Q>& cg, const Representation<Q>& rep) {
  for (auto& nd : cg.nodes)
    if (nd.weight == rep.dimension_vector() && is_isomorphic(nd.rep, rep, 1)) return nd.id;
  return kNoNode;
}

}  // namespace

TEST(Crystal, LowestNode) {
  auto g = rational_preset("c2");
  const auto b = lowest_node(*g);
  EXPECT_TRUE(b.rep.is_zero_module());
  EXPECT_EQ(b.phi, (std::vector<long long>{0, 0}));
  EXPECT_EQ(b.phi_star, (std::vector<long long>{0, 0}));
  EXPECT_EQ(b.eps, (std::vector<long long>{0, 0}));
  const auto& cg = c2_crystal();
  EXPECT_EQ(cg.e[0][0], cg.e_star[0][0]);
  EXPECT_EQ(cg.e[1][0], cg.e_star[1][0]);
}

TEST(Crystal, DepthOne) {
  auto g = rational_preset("c2");
  const auto cg = enumerate_crystal(*g, 1, 0);
  ASSERT_EQ(cg.nodes.size(), 3u);
  EXPECT_EQ(cg.nodes[1].weight, (Weight{0, 1}));
  EXPECT_EQ(cg.nodes[2].weight, (Weight{1, 0}));
}

TEST(Crystal, C2Operators) {
  const auto& cg = c2_crystal();
  auto g = cg.graph;
  const std::size_t s1 = node_of(cg, simple_module(*g, 0));
  const std::size_t rc = node_of(cg, c2_indecomposable(*g, "RC"));
  ASSERT_NE(s1, kNoNode);
  ASSERT_NE(rc, kNoNode);
  EXPECT_EQ(cg.e[1][s1], rc);
  EXPECT_EQ(node_of(cg, direct_sum(simple_module(*g, 0), simple_module(*g, 0))), cg.e[0][s1]);
  EXPECT_EQ(cg.f[0][s1], 0u);
  EXPECT_EQ(cg.f[0][rc], kNoNode);
  EXPECT_EQ(cg.f[1][rc], s1);
}

TEST(Crystal, C2WeightThreeTwo) {
  const auto& cg = c2_crystal();
  auto g = cg.graph;
  const auto ids = cg.nodes_of_weight({3, 2});
  ASSERT_EQ(ids.size(), 5u);
  std::vector<int> matched(5, 0);
  const auto rigid = c2_rigid_32();
  for (std::size_t t = 0; t < rigid.size(); ++t) {
    std::vector<Representation<Q>> parts;
    for (auto& p : rigid[t]) parts.push_back(c2_indecomposable(*g, p));
    const std::size_t id = node_of(cg, direct_sum_of(parts));
    ASSERT_NE(id, kNoNode) << rigid[t][0] << "+" << rigid[t][1];
    for (std::size_t u = 0; u < ids.size(); ++u)
      if (ids[u] == id) ++matched[u];
  }
  EXPECT_EQ(matched, (std::vector<int>{1, 1, 1, 1, 1}));
}

TEST(Crystal, AxiomsAndInvariantsC2) {
  const auto& cg = c2_crystal();
  const auto rpt = check_axioms(cg);
  EXPECT_EQ(rpt.checked_depth, 3u);
  EXPECT_GT(rpt.nodes_checked, 0u);
  for (auto& v : rpt.violations) ADD_FAILURE() << v;
  for (auto& nd : cg.nodes) {
    EXPECT_TRUE(is_rigid(nd.rep)) << nd.id;
    for (auto& v : self_ext_invariant(nd)) ADD_FAILURE() << v;
  }
}

TEST(Crystal, SelfExtPinnedValues) {
  const auto& cg = c2_crystal();
  auto g = cg.graph;
  const auto& nd = cg.nodes[node_of(cg, c2_indecomposable(*g, "RC"))];
  const auto& cd = cartan_matrix(*g);
  // phi_1 + phi*_1 - <a1 + a2, a1^vee> = 0 + 1 - (2 - 2) = 1
  EXPECT_EQ(nd.phi[0] + nd.phi_star[0] - cd.pairing(nd.weight, 0), 1);
  EXPECT_EQ(ext1_space(nd.rep, simple_module(*g, 0)).dimension, 1u);
  EXPECT_TRUE(self_ext_invariant(nd).empty());
}

TEST(Crystal, CorruptedGraphIsCaught) {
  auto cg = c2_crystal();
  const std::size_t s1 = cg.e[0][0];
  cg.e[1][s1] = cg.e[0][s1];
  EXPECT_FALSE(check_axioms(cg).ok());
}

TEST(Crystal, ScopeError) {
  auto g = rational_preset("sl2hat-z");
  try {
    enumerate_crystal(*g, 2, 0);
    ADD_FAILURE() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("crystal scope error"), std::string::npos);
  }
}

TEST(Crystal, A1xA1Grid) {
  auto g = rational_preset("a1xa1");
  const auto cg = enumerate_crystal(*g, 6, 0);
  for (auto& [w, c] : weight_counts(cg)) EXPECT_EQ(c, 1u);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t id = 0; id < cg.nodes.size(); ++id) EXPECT_EQ(cg.e[i][id], cg.e_star[i][id]);
  EXPECT_TRUE(check_axioms(cg).ok());
}

TEST(Crystal, Deterministic) {
  auto g = rational_preset("c2");
  const auto a = enumerate_crystal(*g, 4, 7), b = enumerate_crystal(*g, 4, 7);
  EXPECT_EQ(crystal_to_json(a).dump(), crystal_to_json(b).dump());
  EXPECT_EQ(crystal_to_dot(a), crystal_to_dot(b));
}

TEST(Crystal, DotStyles) {
  const auto dot = crystal_to_dot(c2_crystal());
  EXPECT_NE(dot.find("style=dashed"), std::string::npos);
  EXPECT_NE(dot.find("n0 -> n"), std::string::npos);
}

TEST(Crystal, KostantCounts) {
  for (auto [name, depth] : {std::pair{"a1xa1", 6}, std::pair{"a2-lusztig", 8}, std::pair{"c2", 7}, std::pair{"a3", 5},
                             std::pair{"c2-sqrt2", 5}}) {
    auto g = rational_preset(name);
    const auto cg = enumerate_crystal(*g, depth, 0);
    const auto roots = positive_roots(cartan_matrix(*g));
    for (auto& [w, c] : weight_counts(cg)) EXPECT_EQ(c, kostant_count(roots, w)) << name << " " << detail::weight_label(w);
  }
}
