/**
 * @file acceptance.hpp
 * @brief The eight acceptance criteria, runnable from the test binary and from
 *        the CLI's selftest command. Each prints one PASS/FAIL line.
 */
#pragma once

#include "species/crystal_io.hpp"
#include "species/preprojective_algebra.hpp"
#include "species/presets.hpp"
#include "species/properties.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace species {

struct CriterionResult {
  int number = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

namespace acceptance {

using Q = RationalField;

inline std::string weights_str(const std::vector<Weight>& ws) {
  std::string s = "{";
  for (std::size_t t = 0; t < ws.size(); ++t) s += (t ? "," : "") + detail::weight_label(ws[t]);
  return s + "}";
}

/// 1. Five nodes of weight (3,2) in the C2 crystal at depth 5, matching the
/// five rigid Krull-Schmidt types by summand dimension vectors.
inline std::pair<bool, std::string> c2_components(std::uint64_t seed) {
  auto g = rational_preset("c2");
  const auto cg = enumerate_crystal(*g, 5, seed, {}, "c2");
  const auto ids = cg.nodes_of_weight({3, 2});
  if (ids.size() != 5) return {false, std::to_string(ids.size()) + " nodes of weight (3,2), expected 5"};
  std::vector<std::vector<Weight>> expected, found;
  std::vector<int> hits(ids.size(), 0);
  for (auto& parts : c2_rigid_32()) {
    std::vector<Representation<Q>> mods;
    std::vector<Weight> dims;
    for (auto& p : parts) {
      mods.push_back(c2_indecomposable(*g, p));
      dims.push_back(mods.back().dimension_vector());
    }
    std::sort(dims.begin(), dims.end());
    expected.push_back(dims);
    const auto sum = direct_sum_of(mods);
    for (std::size_t u = 0; u < ids.size(); ++u)
      if (is_isomorphic(cg.nodes[ids[u]].rep, sum, derive_seed(seed, u))) {
        ++hits[u];
        found.push_back(dims);
      }
  }
  std::sort(expected.begin(), expected.end());
  std::sort(found.begin(), found.end());
  const bool bijective = std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
  std::string d = "5 nodes of weight (3,2); summand dimension vectors ";
  for (auto& f : found) d += weights_str(f) + " ";
  return {bijective && found == expected, d};
}

/// 2. dim Lambda = 10 for C2 with graded profile [3,4,3,0] and degree-2 split 1 + 2.
inline std::pair<bool, std::string> c2_algebra_dimension() {
  auto g = rational_preset("c2");
  GradedAlgebra<Q> alg(*g);
  const auto gd = alg.graded_dimensions(10);
  // degree 2 by hand: paths 1->2->1 span 2 dims, 2->1->2 span 4; the relations
  // cut out 1 and 2 dims, leaving 1 and 2
  std::vector<std::size_t> split;
  const auto& paths = alg.tensor_degree(2);
  for (std::size_t p = 0; p < paths.size(); ++p) split.push_back(paths[p].base_dim - alg.ideal_dim_within(2, p));
  std::sort(split.begin(), split.end());
  std::ostringstream os;
  os << "total " << gd.total << ", profile [";
  for (std::size_t t = 0; t < gd.dims.size(); ++t) os << (t ? "," : "") << gd.dims[t];
  os << "], degree-2 split " << split[0] << "+" << (split.size() > 1 ? split[1] : 0);
  const bool ok = gd.finite && gd.total == 10 && gd.dims == std::vector<std::size_t>{3, 4, 3, 0} &&
                  split == std::vector<std::size_t>{1, 2};
  return {ok, os.str()};
}

/// 3. Node counts per weight equal Kostant partition counts.
inline std::pair<bool, std::string> kostant_agreement(std::uint64_t seed) {
  std::ostringstream os;
  bool ok = true;
  for (auto [name, depth] : {std::pair{"a1xa1", 6}, std::pair{"a2-lusztig", 8}, std::pair{"c2", 7}, std::pair{"a3", 5}}) {
    auto g = rational_preset(name);
    const auto cg = enumerate_crystal(*g, depth, seed, {}, name);
    const auto roots = positive_roots(cartan_matrix(*g));
    std::size_t bad = 0, weights = 0;
    for (auto& [w, c] : weight_counts(cg)) {
      ++weights;
      if (c != kostant_count(roots, w)) ++bad;
    }
    ok = ok && bad == 0;
    os << name << "@" << depth << ": " << cg.nodes.size() << " nodes, " << weights - bad << "/" << weights
       << " weights agree; ";
  }
  return {ok, os.str()};
}

/// 4. No axiom violations for c2 and a2-lusztig at depth 6.
inline std::pair<bool, std::string> axiom_suite(std::uint64_t seed) {
  std::ostringstream os;
  bool ok = true;
  for (auto name : {"c2", "a2-lusztig"}) {
    auto g = rational_preset(name);
    const auto cg = enumerate_crystal(*g, 6, seed, {}, name);
    const auto rpt = check_axioms(cg);
    ok = ok && rpt.ok();
    os << name << ": " << rpt.violations.size() << " violations over " << rpt.nodes_checked
       << " nodes (weight <= " << rpt.checked_depth << "); ";
    if (!rpt.ok()) os << "first: " << rpt.violations.front() << "; ";
  }
  return {ok, os.str()};
}

/// 5. The deformed affine sl_2 example.
inline std::pair<bool, std::string> sl2hat_example(std::uint64_t seed) {
  std::ostringstream os;
  auto g1 = rational_preset("sl2hat-z", "1");
  const auto v1 = sl2hat_module_v(*g1);
  const auto hom = hom_space(v1, v1).size();
  const auto ext = ext1_space(v1, v1);
  bool heads_two = ext.dimension > 0;
  Rng rng(seed);
  // every nonzero class: the basis classes, then random nonzero combinations
  std::vector<MapFamily<Q>> classes = ext.classes;
  for (int t = 0; t < 10 && ext.dimension > 0; ++t) classes.push_back(random_class(Q{}, ext, rng, 1 << 20));
  for (auto& cls : classes) heads_two = heads_two && head_socle_dims(assemble_extension(v1, v1, cls)).total_head == 2;
  os << "z=1: Hom " << hom << ", Ext " << ext.dimension << ", nonzero classes have head 2: " << (heads_two ? "yes" : "no");

  auto gm = rational_preset("sl2hat-z", "-1");
  const auto vm = sl2hat_module_v(*gm);
  const auto extm = ext1_space(vm, vm);
  std::size_t min_head = 99;
  for (auto& cls : extm.classes) min_head = std::min(min_head, head_socle_dims(assemble_extension(vm, vm, cls)).total_head);
  os << "; z=-1: Ext " << extm.dimension << ", smallest self-extension head " << min_head;
  return {hom == 1 && ext.dimension == 1 && heads_two && min_head == 1, os.str()};
}

/// 6. Hom/Ext formulas for simples on random modules, plus the negative control.
inline std::pair<bool, std::string> hom_ext_suite(std::uint64_t seed) {
  std::ostringstream os;
  bool ok = true;
  for (auto& name : preset_names()) {
    auto g = rational_preset(name);
    Rng rng(derive_seed(seed, 0x3738, name_hash(name)));
    std::size_t bad = 0;
    for (int t = 0; t < 200; ++t) {
      const auto v = random_module(*g, rng, 3);
      if (!check_representation(v).valid() || !check_simple_ext_formulas(v).empty()) ++bad;
    }
    ok = ok && bad == 0;
    os << name << " " << 200 - bad << "/200; ";
  }
  auto g = rational_preset("sl2hat-z", "1");
  const auto t = self_identity_terms(sl2hat_module_v(*g));
  const bool control = t == std::vector<long long>{1, 2, 0} && t[0] - t[1] + t[2] != 0;
  os << "control " << t[0] << " - " << t[1] << " + " << t[2] << (control ? " != 0" : " unexpected");
  return {ok && control, os.str()};
}

/// 7. Induction-step identity of the dimension formula.
inline std::pair<bool, std::string> dimension_identity(std::uint64_t seed) {
  std::ostringstream os;
  bool ok = true;
  for (auto& name : preset_names()) {
    auto g = rational_preset(name);
    const auto& cd = cartan_matrix(*g);
    Rng rng(derive_seed(seed, 0x311, name_hash(name)));
    std::size_t good = 0;
    for (int t = 0; t < 1000; ++t) {
      Weight v(cd.rank());
      for (auto& x : v) x = static_cast<long long>(rng() % 10);
      const std::size_t i = rng() % cd.rank();
      const long long k = static_cast<long long>(rng() % 6);
      good += dimension_identity_holds(cd, v, i, k);
    }
    ok = ok && good == 1000;
    os << name << " " << good << "/1000; ";
  }
  return {ok, os.str()};
}

/// 8. Two runs of the C2 crystal at depth 5, seed 7, give identical output.
inline std::pair<bool, std::string> determinism() {
  auto g = rational_preset("c2");
  const auto a = enumerate_crystal(*g, 5, 7, {}, "c2");
  const auto b = enumerate_crystal(*g, 5, 7, {}, "c2");
  const auto ja = crystal_to_json(a).dump(2), jb = crystal_to_json(b).dump(2);
  const auto da = crystal_to_dot(a), db = crystal_to_dot(b);
  return {ja == jb && da == db, "JSON " + std::to_string(ja.size()) + " bytes, DOT " + std::to_string(da.size()) +
                                    " bytes, identical: " + (ja == jb && da == db ? "yes" : "no")};
}

}  // namespace acceptance

/// Runs every criterion, printing one line each as it finishes.
inline std::vector<CriterionResult> run_acceptance(std::ostream& out, std::uint64_t seed = 0) {
  using Fn = std::function<std::pair<bool, std::string>()>;
  const std::vector<std::pair<std::string, Fn>> criteria = {
      {"C2 component count", [&] { return acceptance::c2_components(seed); }},
      {"C2 algebra dimension", [] { return acceptance::c2_algebra_dimension(); }},
      {"Kostant oracle agreement", [&] { return acceptance::kostant_agreement(seed); }},
      {"crystal axiom suite", [&] { return acceptance::axiom_suite(seed); }},
      {"deformed affine sl2 example", [&] { return acceptance::sl2hat_example(seed); }},
      {"Hom/Ext property suite", [&] { return acceptance::hom_ext_suite(seed); }},
      {"dimension-formula identity", [&] { return acceptance::dimension_identity(seed); }},
      {"determinism", [] { return acceptance::determinism(); }},
  };
  std::vector<CriterionResult> results;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    CriterionResult r;
    r.number = static_cast<int>(c + 1);
    r.title = criteria[c].first;
    const auto start = std::chrono::steady_clock::now();
    try {
      std::tie(r.pass, r.detail) = criteria[c].second();
      while (!r.detail.empty() && (r.detail.back() == ' ' || r.detail.back() == ';')) r.detail.pop_back();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out << (r.pass ? "PASS" : "FAIL") << " [" << r.number << "] " << r.title << ": " << r.detail << " ("
        << static_cast<long long>(r.seconds * 1000) << " ms)" << std::endl;
    results.push_back(r);
  }
  return results;
}

}  // namespace species
