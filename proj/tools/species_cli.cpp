// Command-line front end: presets, algebra dimensions, root-system oracle,
// Ext between module files, crystal enumeration and the acceptance suite.

#include "species/acceptance.hpp"
#include "species/crystal_io.hpp"
#include "species/io.hpp"
#include "species/preprojective_algebra.hpp"
#include "species/presets.hpp"
#include "species/root_system.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <variant>

using namespace species;

namespace {

struct Options {
  std::string preset;
  std::string z = "1";
  std::uint64_t seed = 0;
  std::size_t samples = 3;
  std::size_t max_degree = 6;
  std::size_t depth = 4;
  std::string weight;
  std::string module_a, module_b;
  std::string format = "json";
};

Weight parse_weight(const std::string& s, std::size_t rank) {
  Weight w;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      w.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--weight", "expected comma-separated integers, got " + s);
    }
  }
  if (w.size() != rank)
    throw CLI::ValidationError("--weight", "expected " + std::to_string(rank) + " entries, got " + std::to_string(w.size()));
  return w;
}

template <class Fn>
void with_graph(const Options& o, Fn&& fn) {
  std::visit([&](const auto& g) { fn(*g); }, load_preset(o.preset, o.z));
}

void print_cartan(const CartanData& cd) {
  std::cout << "C =\n";
  for (auto& row : cd.c) {
    std::cout << " ";
    for (long long x : row) std::cout << " " << x;
    std::cout << "\n";
  }
  std::cout << "D = diag(";
  for (std::size_t i = 0; i < cd.d.size(); ++i) std::cout << (i ? ", " : "") << cd.d[i];
  std::cout << ")\n";
}

int cmd_validate(const Options& o) {
  with_graph(o, [](const auto& g) {
    std::cout << "valid modulated graph " << g.name() << ": " << g.size() << " vertices, " << g.arrows().size() / 2
              << " edges\n";
    for (std::size_t i = 0; i < g.size(); ++i)
      std::cout << "  vertex " << g.vertex_name(i) << ": field of degree " << g.degree(i) << "\n";
  });
  return 0;
}

int cmd_cartan(const Options& o) {
  with_graph(o, [](const auto& g) {
    const auto& cd = cartan_matrix(g);
    print_cartan(cd);
    const auto v = is_finite_type(cd);
    std::cout << "type: " << (v.finite ? "finite, " + v.label : std::string("not finite")) << "\n";
  });
  return 0;
}

int cmd_algebra_dims(const Options& o) {
  with_graph(o, [&](const auto& g) {
    using K = std::decay_t<decltype(g.base())>;
    GradedAlgebra<K> alg(g);
    const auto gd = alg.graded_dimensions(o.max_degree);
    json j;
    j["graded_dimensions"] = gd.dims;
    j["finite"] = gd.finite;
    if (gd.finite) j["total"] = gd.total;
    else j["total"] = nullptr;
    j["verdict"] = gd.verdict();
    std::cout << j.dump(2) << "\n";
  });
  return 0;
}

int cmd_roots(const Options& o) {
  with_graph(o, [](const auto& g) {
    const auto& cd = cartan_matrix(g);
    const auto v = is_finite_type(cd);
    if (!v.finite) throw Error("Cartan matrix of " + g.name() + " is not of finite type");
    const auto roots = positive_roots(cd);
    std::cout << "type " << v.label << ", " << roots.size() << " positive roots\n";
    for (auto& r : roots) std::cout << "  " << detail::weight_label(r) << "\n";
  });
  return 0;
}

int cmd_kostant(const Options& o) {
  with_graph(o, [&](const auto& g) {
    const auto& cd = cartan_matrix(g);
    const auto w = parse_weight(o.weight, cd.rank());
    std::cout << kostant_count(cd, w) << "\n";
  });
  return 0;
}

int cmd_ext(const Options& o) {
  with_graph(o, [&](const auto& g) {
    const auto a = representation_from_json(g, read_json_file(o.module_a));
    const auto b = representation_from_json(g, read_json_file(o.module_b));
    const auto ext = ext1_space(a, b);
    json j;
    j["dim_hom"] = hom_space(a, b).size();
    j["dim_ext1"] = ext.dimension;
    j["cocycles"] = ext.cocycle_dim;
    j["coboundaries"] = ext.coboundary_dim;
    j["note"] = "dimensions over the base field";
    std::cout << j.dump(2) << "\n";
  });
  return 0;
}

int cmd_crystal(const Options& o, const GenericityConfig& cfg) {
  with_graph(o, [&](const auto& g) {
    const auto cg = enumerate_crystal(g, o.depth, o.seed, cfg, o.preset);
    if (o.format == "dot") std::cout << crystal_to_dot(cg);
    else std::cout << crystal_to_json(cg).dump(2) << "\n";
  });
  return 0;
}

int cmd_check_axioms(const Options& o, const GenericityConfig& cfg) {
  with_graph(o, [&](const auto& g) {
    const auto cg = enumerate_crystal(g, o.depth, o.seed, cfg, o.preset);
    auto j = axiom_report_to_json(check_axioms(cg));
    std::size_t rigid = 0, self_ext_ok = 0;
    for (auto& nd : cg.nodes) {
      rigid += is_rigid(nd.rep);
      self_ext_ok += self_ext_invariant(nd).empty();
    }
    j["nodes"] = cg.nodes.size();
    j["rigid_nodes"] = rigid;
    j["self_ext_invariant_holds"] = self_ext_ok;
    std::cout << j.dump(2) << "\n";
  });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Preprojective algebras of modulated graphs: algebra dimensions, Ext, and the crystal B(-infinity)"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--seed", o.seed, "master seed")->capture_default_str();
  app.add_option("--samples", o.samples, "independent samples required to agree for genericity")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--z", o.z, "parameter of sl2hat-z: rational or a+bi")->capture_default_str();

  auto preset_arg = [&](CLI::App* sub) {
    sub->add_option("preset", o.preset, "built-in preset name or path to a preset JSON file")->required();
    sub->fallthrough();
  };
  auto* validate = app.add_subcommand("validate", "validate a modulated graph");
  preset_arg(validate);
  auto* cartan = app.add_subcommand("cartan", "Cartan matrix and symmetrizer");
  preset_arg(cartan);
  auto* dims = app.add_subcommand("algebra-dims", "graded dimensions of the preprojective algebra");
  preset_arg(dims);
  dims->add_option("--max-degree", o.max_degree, "largest degree computed")->capture_default_str();
  auto* roots = app.add_subcommand("roots", "positive roots (finite type)");
  preset_arg(roots);
  auto* kostant = app.add_subcommand("kostant", "Kostant partition count");
  preset_arg(kostant);
  kostant->add_option("--weight", o.weight, "weight as comma-separated integers, e.g. 3,2")->required();
  auto* ext = app.add_subcommand("ext", "Hom and Ext^1 between two module files");
  preset_arg(ext);
  ext->add_option("--module-a", o.module_a, "module JSON (the quotient)")->required()->check(CLI::ExistingFile);
  ext->add_option("--module-b", o.module_b, "module JSON (the submodule)")->required()->check(CLI::ExistingFile);
  auto* crystal = app.add_subcommand("crystal", "enumerate the crystal to a total weight");
  preset_arg(crystal);
  crystal->add_option("--depth", o.depth, "largest total weight")->capture_default_str();
  crystal->add_option("--format", o.format, "json or dot")->check(CLI::IsMember({"json", "dot"}))->capture_default_str();
  auto* axioms = app.add_subcommand("check-axioms", "enumerate and check the crystal axioms");
  preset_arg(axioms);
  axioms->add_option("--depth", o.depth, "largest total weight")->capture_default_str();
  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  selftest->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  GenericityConfig cfg;
  cfg.samples = o.samples;
  try {
    if (*validate) return cmd_validate(o);
    if (*cartan) return cmd_cartan(o);
    if (*dims) return cmd_algebra_dims(o);
    if (*roots) return cmd_roots(o);
    if (*kostant) return cmd_kostant(o);
    if (*ext) return cmd_ext(o);
    if (*crystal) return cmd_crystal(o, cfg);
    if (*axioms) return cmd_check_axioms(o, cfg);
    if (*selftest) {
      const auto results = run_acceptance(std::cout, o.seed);
      std::size_t passed = 0;
      for (auto& r : results) passed += r.pass;
      std::cout << passed << "/" << results.size() << " criteria passed\n";
      return passed == results.size() ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
