// Command-line front end: solve a temporal graph instance or emit a fixture.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mtsp/fixtures.hpp"
#include "mtsp/run.hpp"

int main(int argc, char** argv) {
  using mtsp::cli::Algorithm;
  using mtsp::cli::Mode;

  CLI::App app{"Multiobjective temporal shortest paths by label correcting"};

  mtsp::cli::RunConfig config;
  std::string graph, objectives, waiting, out, fixture;
  std::size_t K = 0;
  std::uint64_t kappa = 0;
  std::vector<std::uint64_t> kappa_per_objective;
  int fixture_k = 2;

  const std::map<std::string, Algorithm> algorithms{
      {"isotonic", Algorithm::isotonic}, {"general", Algorithm::general}, {"additive", Algorithm::additive}};
  const std::map<std::string, Mode> modes{{"bounded", Mode::bounded},
                                          {"auto_no_zero_cycle", Mode::auto_no_zero_cycle},
                                          {"auto_waiting", Mode::auto_waiting},
                                          {"auto_kappa", Mode::auto_kappa}};

  app.add_option("--graph", graph, "Graph JSON file");
  app.add_option("--objectives", objectives, "Objective config JSON file");
  app.add_option("--source", config.source, "Source node id");
  std::string algorithm = "general", mode = "bounded";
  app.add_option("--algorithm", algorithm, "isotonic | general | additive")
      ->check(CLI::IsMember({"isotonic", "general", "additive"}));
  auto* k_opt = app.add_option("--K", K, "Maximum path length (bounded mode)");
  app.add_option("--mode", mode, "bounded | auto_no_zero_cycle | auto_waiting | auto_kappa")
      ->check(CLI::IsMember({"bounded", "auto_no_zero_cycle", "auto_waiting", "auto_kappa"}));
  auto* kappa_opt = app.add_option("--kappa", kappa, "Bound on distinct images per node (auto_kappa)");
  auto* kappa_list_opt =
      app.add_option("--kappa-per-objective", kappa_per_objective, "Per-objective value bounds (auto_kappa)")
          ->excludes(kappa_opt);
  app.add_option("--waiting", waiting, "Minimum waiting time JSON file");
  app.add_option("--out", out, "Result file, or target directory with --fixture");
  app.add_flag("--oracle-check", config.oracle_check, "Cross-check against brute-force enumeration");
  auto* fixture_opt = app.add_option("--fixture", fixture, "Write a built-in fixture instead of solving")
                          ->check(CLI::IsMember({"example_2_1", "example_2_2", "additive_loop", "category_chain"}));
  app.add_option("--k", fixture_k, "Size parameter for example_2_1")->needs(fixture_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : mtsp::cli::kInputError;
  }

  if (*fixture_opt) {
    try {
      auto f = mtsp::fixtures::generate_fixture(fixture, fixture_k);
      mtsp::cli::write_fixture(f, out.empty() ? std::string(".") : out);
      std::cout << f.name << ".graph.json " << f.name << ".objectives.json\n";
      return 0;
    } catch (const mtsp::InputError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return mtsp::cli::kInputError;
    }
  }

  if (graph.empty() || objectives.empty() || config.source.empty()) {
    std::cerr << "error: --graph, --objectives and --source are required\n";
    return mtsp::cli::kInputError;
  }
  config.algorithm = algorithms.at(algorithm);
  config.mode = modes.at(mode);
  config.graph_path = graph;
  config.objectives_path = objectives;
  if (*k_opt) config.K = K;
  if (*kappa_opt) config.kappa = mtsp::KappaBound{kappa, {}};
  if (*kappa_list_opt) config.kappa = mtsp::KappaBound{std::nullopt, kappa_per_objective};
  if (!waiting.empty()) config.waiting_path = waiting;
  if (!out.empty()) config.output_path = out;

  auto report = mtsp::cli::run(config);
  if (report.exit_code == mtsp::cli::kInputError || report.exit_code == mtsp::cli::kUnbounded) {
    std::cerr << "error: " << report.diagnostic << "\n";
    return report.exit_code;
  }
  if (!config.output_path) std::cout << report.document.dump(2) << "\n";
  if (report.exit_code == mtsp::cli::kOracleMismatch) std::cerr << "oracle mismatch: " << report.diagnostic << "\n";
  return report.exit_code;
}
