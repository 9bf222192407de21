#include "species/presets.hpp"

#include <gtest/gtest.h>

using namespace species;

namespace {

std::string error_of(const json& spec) {
  try {
    graph_from_json(spec);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

bool contains(const std::string& s, const std::string& t) { return s.find(t) != std::string::npos; }

std::size_t arrow_between(const ModulatedGraph<RationalField>& g, std::size_t u, std::size_t v) {
  for (std::size_t a = 0; a < g.arrows().size(); ++a)
    if (g.arrow(a).from == u && g.arrow(a).to == v) return a;
  throw Error("no arrow");
}

}  // namespace

TEST(Cartan, C2) {
  auto g = rational_preset("c2");
  const auto& cd = cartan_matrix(*g);
  EXPECT_EQ(cd.c, (std::vector<std::vector<long long>>{{2, -2}, {-1, 2}}));
  EXPECT_EQ(cd.d, (std::vector<long long>{1, 2}));
}

TEST(Cartan, Sl2hat) {
  for (auto z : {"1", "-1", "3/2", "1+2i"}) {
    auto g = load_preset("sl2hat-z", z);
    std::visit(
        [](auto& gp) {
          EXPECT_EQ(cartan_matrix(*gp).c, (std::vector<std::vector<long long>>{{2, -2}, {-2, 2}}));
          EXPECT_EQ(cartan_matrix(*gp).d[0], cartan_matrix(*gp).d[1]);
        },
        g);
  }
  EXPECT_EQ(cartan_matrix(*rational_preset("sl2hat-z")).d, (std::vector<long long>{1, 1}));
}

TEST(Cartan, EdgelessAndSimplyLaced) {
  EXPECT_EQ(cartan_matrix(*rational_preset("a1xa1")).c, (std::vector<std::vector<long long>>{{2, 0}, {0, 2}}));
  EXPECT_EQ(cartan_matrix(*rational_preset("a2-lusztig")).c, (std::vector<std::vector<long long>>{{2, -1}, {-1, 2}}));
  EXPECT_EQ(cartan_matrix(*rational_preset("a3")).c,
            (std::vector<std::vector<long long>>{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}));
  EXPECT_EQ(cartan_matrix(*rational_preset("c2-sqrt2")).c, cartan_matrix(*rational_preset("c2")).c);
}

TEST(Cartan, Symmetrizable) {
  for (auto& name : preset_names()) {
    auto g = rational_preset(name);
    const auto& cd = cartan_matrix(*g);
    for (std::size_t i = 0; i < cd.rank(); ++i) {
      EXPECT_EQ(cd.c[i][i], 2);
      for (std::size_t j = 0; j < cd.rank(); ++j) {
        EXPECT_EQ(cd.d[i] * cd.c[i][j], cd.d[j] * cd.c[j][i]);
        if (i != j) {
          EXPECT_LE(cd.c[i][j], 0);
          EXPECT_EQ(cd.c[i][j] == 0, cd.c[j][i] == 0);
        }
      }
    }
  }
}

TEST(Validate, DegenerateForm) {
  auto spec = preset_json("c2");
  spec["edges"][0]["form_into_u"] = json::parse("[[0,0],[0,0]]");
  EXPECT_TRUE(contains(error_of(spec), "degenerate form on arrow (1,2)")) << error_of(spec);
  auto a2 = preset_json("a2-lusztig");
  a2["edges"][0]["form_into_v"] = json::parse("[[0]]");
  EXPECT_TRUE(contains(error_of(a2), "degenerate form on arrow (2,1)")) << error_of(a2);
}

TEST(Validate, NonCommutingActions) {
  auto spec = preset_json("c2-sqrt2");
  // F_1 = Q(sqrt 3) acting on the right by a matrix that does not commute with the left action
  spec["vertex_fields"]["1"] = json::parse(R"({"minpoly": [-3, 0, 1]})");
  spec["edges"][0]["bimodule_uv"]["right_gen_action"] = json::parse("[[1,1],[2,-1]]");
  EXPECT_TRUE(contains(error_of(spec), "not a bimodule")) << error_of(spec);
}

TEST(Validate, ActionViolatesMinpoly) {
  auto spec = preset_json("c2");
  spec["edges"][0]["bimodule_uv"]["left_gen_action"] = json::parse("[[1,0],[0,1]]");
  EXPECT_TRUE(contains(error_of(spec), "not a bimodule")) << error_of(spec);
}

TEST(Validate, InvalidGraphs) {
  auto loop = preset_json("a2-lusztig");
  loop["edges"][0]["v"] = "1";
  EXPECT_TRUE(contains(error_of(loop), "invalid graph")) << error_of(loop);
  auto multi = preset_json("a2-lusztig");
  multi["edges"].push_back(multi["edges"][0]);
  EXPECT_TRUE(contains(error_of(multi), "invalid graph")) << error_of(multi);
}

TEST(Validate, UnbalancedForm) {
  auto spec = preset_json("c2");
  spec["edges"][0]["form_into_u"] = json::parse("[[1,0],[0,1]]");
  EXPECT_TRUE(contains(error_of(spec), "not balanced")) << error_of(spec);
}

TEST(Canonical, C2TermCounts) {
  auto g = rational_preset("c2");
  // r_1 is the single term tau-bar (x) tau, r_2 has two terms
  EXPECT_EQ(g->canonical(arrow_between(*g, 0, 1)).terms.size(), 1u);
  EXPECT_EQ(g->canonical(arrow_between(*g, 1, 0)).terms.size(), 2u);
}

TEST(Canonical, DualBasisProperty) {
  for (auto& name : preset_names()) {
    auto g = rational_preset(name);
    for (std::size_t a = 0; a < g->arrows().size(); ++a) {
      const auto& ce = g->canonical(a);
      const auto& fj = g->field(g->arrow(a).to);
      for (std::size_t l = 0; l < ce.terms.size(); ++l)
        for (std::size_t k = 0; k < ce.terms.size(); ++k) {
          auto v = g->evaluate_form(g->arrow(a).reverse, ce.terms[l].second, ce.terms[k].first);
          EXPECT_TRUE(fj.equal(v, l == k ? fj.one() : fj.zero())) << name;
        }
    }
  }
}

TEST(Canonical, CentralAndBasisIndependent) {
  Rng rng(5);
  for (auto& name : preset_names()) {
    auto g = rational_preset(name);
    for (std::size_t a = 0; a < g->arrows().size(); ++a) {
      EXPECT_TRUE(canonical_is_central(*g, a)) << name;
      const auto t = canonical_tensor(*g, g->canonical(a));
      for (int s = 0; s < 5; ++s) EXPECT_EQ(canonical_tensor_with_random_basis(*g, a, rng), t) << name;
    }
  }
}

TEST(Canonical, C2RelationAtVertexTwo) {
  // r_2 = tau tau-bar - i tau tau-bar i: as a tensor in 2M_1 (x)_Q 1M_2 with
  // bases (1, i) on both sides this is 1(x)1 - i(x)i, i.e. coordinates (1,0,0,-1)
  // up to the frame normalization of 2M_1, which is the standard basis here.
  auto g = rational_preset("c2");
  const auto t = canonical_tensor(*g, g->canonical(arrow_between(*g, 1, 0)));
  ASSERT_EQ(t.size(), 4u);
  EXPECT_EQ(t[0], 1);
  EXPECT_EQ(t[1], 0);
  EXPECT_EQ(t[2], 0);
  EXPECT_EQ(t[3], -1);
}

TEST(SymmetricForm, Values) {
  auto c2 = rational_preset("c2");
  EXPECT_EQ(symmetric_form(*c2, {1, 0}, {0, 1}), -2);
  EXPECT_EQ(symmetric_form(*c2, {1, 1}, {1, 1}), 2);
  EXPECT_EQ(symmetric_form(*rational_preset("sl2hat-z"), {1, 1}, {1, 1}), 0);
  EXPECT_THROW(symmetric_form(*c2, {1}, {1, 1}), Error);
}

TEST(SymmetricForm, SymmetricAndDimensionIdentity) {
  Rng rng(17);
  for (auto& name : preset_names()) {
    auto g = rational_preset(name);
    const auto& cd = cartan_matrix(*g);
    const std::size_t n = cd.rank();
    for (int t = 0; t < 1000; ++t) {
      std::vector<long long> v(n), w(n);
      for (auto& x : v) x = random_int(rng, 6) + 6;
      for (auto& x : w) x = random_int(rng, 6);
      ASSERT_EQ(cd.symmetric_form(v, w), cd.symmetric_form(w, v));
      const std::size_t i = rng() % n;
      const long long k = random_int(rng, 6);
      auto u = v;
      u[i] -= k;
      std::vector<long long> ai(n, 0);
      ai[i] = 1;
      // D(v - k a_i) - (v-k a_i, v-k a_i)/2 + 2 k d_i v_i - k (v, a_i) = D(v) - (v, v)/2, doubled to stay integral
      const long long lhs = 2 * quadratic_dimension(cd, u) - cd.symmetric_form(u, u) + 4 * k * cd.d[i] * v[i] -
                            2 * k * cd.symmetric_form(v, ai);
      const long long rhs = 2 * quadratic_dimension(cd, v) - cd.symmetric_form(v, v);
      ASSERT_EQ(lhs, rhs) << name;
    }
  }
}
