#include "species/named_modules.hpp"
#include "species/presets.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace species;

namespace {

const std::string data_dir = SPECIES_DATA_DIR;

std::string error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(DataFiles, PresetsMatchBuiltins) {
  for (auto& name : preset_names()) {
    const auto file = data_dir + "/presets/" + name + ".json";
    ASSERT_TRUE(std::filesystem::exists(file)) << file;
    const auto from_file = std::get<GraphPtr<RationalField>>(load_preset(file));
    EXPECT_EQ(cartan_matrix(*from_file).c, cartan_matrix(*rational_preset(name)).c) << name;
    EXPECT_EQ(read_json_file(file), preset_json(name)) << name;
  }
}

TEST(DataFiles, PrimeFieldPresets) {
  auto g = load_preset(data_dir + "/presets/c2-mod3.json");
  ASSERT_TRUE(std::holds_alternative<GraphPtr<PrimeField>>(g));
  const auto& gp = std::get<GraphPtr<PrimeField>>(g);
  EXPECT_EQ(cartan_matrix(*gp).c, cartan_matrix(*rational_preset("c2")).c);
  EXPECT_EQ(gp->degree(1), 2u);
  // x^2 + 1 splits mod 5, so the same preset is refused there
  auto spec = read_json_file(data_dir + "/presets/c2-mod3.json");
  spec["base_field"]["type"]["prime"] = 5;
  EXPECT_THROW(graph_from_json(spec), Error);
}

TEST(DataFiles, ModulesRoundTrip) {
  auto g = rational_preset("c2");
  for (auto name : {"R", "C", "RC", "CR", "CR2", "R2C", "RCR", "CR2C"}) {
    const auto j = read_json_file(data_dir + "/modules/c2_" + name + ".json");
    const auto rep = representation_from_json(*g, j);
    const auto expect = c2_indecomposable(*g, name);
    for (std::size_t a = 0; a < rep.maps.size(); ++a) EXPECT_TRUE(equal(RationalField{}, rep.maps[a], expect.maps[a])) << name;
    EXPECT_EQ(representation_to_json(rep), j) << name;
  }
  auto s = rational_preset("sl2hat-z");
  const auto v = representation_from_json(*s, read_json_file(data_dir + "/modules/sl2hat_V.json"));
  EXPECT_EQ(hom_space(v, v).size(), 1u);
}

TEST(RepresentationFiles, Errors) {
  auto g = rational_preset("c2");
  auto j = representation_to_json(c2_indecomposable(*g, "RC"));
  auto wrong_graph = j;
  wrong_graph["graph"] = "a3";
  EXPECT_NE(error_of([&] { representation_from_json(*g, wrong_graph); }).find("belongs to graph"), std::string::npos);
  auto bad_vertex = j;
  bad_vertex["maps"][0]["from"] = "7";
  EXPECT_NE(error_of([&] { representation_from_json(*g, bad_vertex); }).find("unknown vertex"), std::string::npos);
  auto bad_shape = j;
  bad_shape["maps"][1]["matrix"] = json::parse("[[1]]");
  EXPECT_NE(error_of([&] { representation_from_json(*g, bad_shape); }).find("columns"), std::string::npos);
  auto invalid = j;
  invalid["maps"][1]["matrix"] = json::parse(R"([["1","0"]])");
  EXPECT_NE(error_of([&] { representation_from_json(*g, invalid); }).find("invalid representation"), std::string::npos);
  auto dims_array = j;
  dims_array["dims"] = json::parse("[1, 1]");
  EXPECT_NO_THROW(representation_from_json(*g, dims_array));
}

TEST(PresetFiles, Errors) {
  EXPECT_NE(error_of([] { load_preset("no-such-preset"); }).find("unknown preset"), std::string::npos);
  auto spec = preset_json("c2");
  spec["base_field"] = "reals";
  EXPECT_NE(error_of([&] { graph_from_json(spec); }).find("base_field"), std::string::npos);
  EXPECT_NE(error_of([] { parse_rational(json(1.5)); }).find("expected an integer"), std::string::npos);
  EXPECT_EQ(parse_rational(json("6/4")), mpq_class(3, 2));
  EXPECT_THROW(preset_json("sl2hat-z", "0"), Error);
}

TEST(PresetFiles, Sl2hatParameter) {
  auto spec = preset_json("sl2hat-z", "3/2");
  EXPECT_EQ(spec["params"]["z"], "3/2");
  auto g = rational_preset("sl2hat-z", "3/2");
  EXPECT_EQ(cartan_matrix(*g).c, (std::vector<std::vector<long long>>{{2, -2}, {-2, 2}}));
}
