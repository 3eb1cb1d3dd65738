// dray: sample, verify and test invariant double-ray constructions.
//
//   dray [run] <command> [flags]
//   dray [run] --config experiment.json [<command>] [flags]
//
// Flags given on the command line override values from the config file.
// Artifacts go to --out, else $DRAY_OUT_DIR, else the working directory.
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "runner.hpp"

namespace {

using dray::runner::ExperimentConfig;

void add_common(CLI::App* sub, ExperimentConfig& c) {
  sub->add_option("--seed", c.seed, "root seed");
  sub->add_option("--out", c.out_dir, "output directory");
}

void add_window(CLI::App* sub, ExperimentConfig& c) {
  sub->add_option("--radius", c.radius, "window radius");
  sub->add_option("--margin", c.margin, "trusted-region margin");
  sub->add_option("--samples", c.samples, "number of samples");
  sub->add_flag("--verify,!--no-verify", c.verify, "run the matching verification suite");
  sub->add_flag("--svg,!--no-svg", c.svg, "write renderings");
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (!args.empty() && args.front() == "run") args.erase(args.begin());

  ExperimentConfig config;
  // The config file seeds the defaults; CLI11 only overwrites given flags.
  for (std::size_t i = 0; i + 1 < args.size(); ++i) {
    if (args[i] == "--config") {
      try {
        dray::runner::apply_config_json(dray::read_json(args[i + 1]), config);
      } catch (const std::exception& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
      }
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      break;
    }
  }

  CLI::App app{"Sample and verify invariant spanning double rays"};
  app.require_subcommand(0, 1);

  auto* tiling = app.add_subcommand("sample-tiling", "two-colour tiling of Z^2 into double rays");
  add_common(tiling, config);
  add_window(tiling, config);

  auto* cube = app.add_subcommand("sample-cube", "spanning double ray of the cube of a graph");
  add_common(cube, config);
  add_window(cube, config);
  cube->add_option("--graph", config.graph_path, "graph JSON (default: Z^2 box of --radius)");
  cube->add_option("--ends", config.ends, "tree ends (1 or 2)");

  auto* product = app.add_subcommand("sample-product", "product construction in Z^d");
  add_common(product, config);
  add_window(product, config);
  product->add_option("--dim", config.dimension, "dimension d >= 3");

  auto* abelian = app.add_subcommand("sample-abelian", "assembly in Z^rank x Z_m1 x ...");
  add_common(abelian, config);
  add_window(abelian, config);
  abelian->add_option("--rank", config.rank, "free rank");
  abelian->add_option("--moduli", config.moduli, "torsion moduli")->expected(0, -1);

  auto* sweep = app.add_subcommand("sweep-cube", "finite Hamilton cycles on all small connected graphs");
  add_common(sweep, config);
  sweep->add_option("--max-vertices", config.max_vertices, "largest graph size (<= 7)");
  sweep->add_option("--exhaustive-orders", config.exhaustive_orders, "all child orders up to this size");
  sweep->add_option("--random-orders", config.random_orders, "random orders per tree above it");

  auto* inv = app.add_subcommand("invariance", "translation-invariance campaign");
  add_common(inv, config);
  inv->add_option("--construction", config.construction, "tiling | tiling-raw | bernoulli");
  inv->add_option("--N", config.n, "samples per translate");
  inv->add_option("--alpha", config.alpha, "family-wise level");
  inv->add_option("--radius", config.radius, "window radius");
  inv->add_option("--margin", config.margin, "trusted-region margin");

  auto* verify = app.add_subcommand("verify", "run a verification suite on a sample document");
  add_common(verify, config);
  verify->add_option("--in", config.in_path, "sample JSON")->required();
  verify->add_option("--suite", config.suite, "tiling | cube | product | abelian");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  for (auto* sub : app.get_subcommands()) config.command = sub->get_name();
  if (config.command.empty()) {
    std::cerr << app.help();
    return 2;
  }
  return dray::runner::run(config, std::cout);
}
