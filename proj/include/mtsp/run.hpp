#ifndef MTSP_RUN_HPP
#define MTSP_RUN_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mtsp/errors.hpp"
#include "mtsp/fixtures.hpp"
#include "mtsp/io.hpp"
#include "mtsp/labeling.hpp"
#include "mtsp/oracle.hpp"

namespace mtsp::cli {

enum class Algorithm { isotonic, general, additive };
enum class Mode { bounded, auto_no_zero_cycle, auto_waiting, auto_kappa };

enum ExitCode : int { kOk = 0, kInputError = 2, kUnbounded = 3, kOracleMismatch = 4 };

inline std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::isotonic: return "isotonic";
    case Algorithm::general: return "general";
    case Algorithm::additive: return "additive";
  }
  return "?";
}

inline std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::bounded: return "bounded";
    case Mode::auto_no_zero_cycle: return "auto_no_zero_cycle";
    case Mode::auto_waiting: return "auto_waiting";
    case Mode::auto_kappa: return "auto_kappa";
  }
  return "?";
}

struct RunConfig {
  std::filesystem::path graph_path;
  std::filesystem::path objectives_path;
  std::string source;
  Algorithm algorithm = Algorithm::general;
  Mode mode = Mode::bounded;
  std::optional<std::size_t> K;
  std::optional<KappaBound> kappa;
  std::optional<std::filesystem::path> waiting_path;
  std::optional<std::filesystem::path> output_path;
  bool oracle_check = false;
  std::size_t oracle_max_paths = 1'000'000;
};

struct RunReport {
  int exit_code = kOk;
  io::ordered_json document;
  /// Human-readable error or mismatch summary; empty on plain success.
  std::string diagnostic;
};

namespace detail {

/// Re-validates every reported path and, when the budget allows, compares the image sets
/// with brute-force enumeration. Returns mismatch descriptions.
inline std::vector<std::string> cross_check(const TemporalGraph& g, const ObjectiveSuite& suite, NodeIndex source,
                                            const SolveResult& result, const std::optional<WaitingTimes>& waiting,
                                            std::size_t max_paths, io::ordered_json& meta) {
  std::vector<std::string> problems;
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    for (const auto& sol : result.per_node[v]) {
      if (!validate_path(g, sol.path, waiting) || sol.path.start != source || sol.path.end_node(g) != v ||
          path_image(suite, g, sol.path) != sol.image) {
        problems.push_back("node " + g.node_name(v) + ": reported path does not reproduce its image");
      }
    }
  }

  if (result.stop_reason == StopReason::improving_cycle_detected) {
    const auto& w = *result.witness;
    const auto ea = earliest_arrival_times(g, source);
    bool ok = !w.cycle.empty() && validate_path(g, w.cycle) && w.cycle.end_node(g) == w.cycle.start &&
              path_duration(g, w.cycle) == 0 && ea[w.cycle.start] && *ea[w.cycle.start] <= g.arc(w.cycle.arcs[0]).tau;
    if (!ok) problems.push_back("witness is not a reachable zero-duration cycle");
    meta["oracle_check"] = problems.empty() ? "passed" : "failed";
    return problems;
  }

  try {
    auto expected = oracle::k_nondominated_sets(g, suite, source, {result.effective_K, max_paths, waiting});
    for (NodeIndex v = 0; v < g.node_count(); ++v) {
      std::vector<Image> got;
      for (const auto& sol : result.per_node[v]) got.push_back(sol.image);
      if (got != expected[v]) problems.push_back("node " + g.node_name(v) + ": image set differs from oracle");
    }
    meta["oracle_check"] = problems.empty() ? "passed" : "failed";
  } catch (const BudgetError& e) {
    meta["oracle_check"] = std::string("skipped: ") + e.what();
  }
  return problems;
}

}  // namespace detail

/// Loads inputs, resolves the iteration bound, solves, optionally cross-checks, and
/// writes the result document when an output path is configured.
inline RunReport run(const RunConfig& config) {
  RunReport report;
  try {
    const TemporalGraph graph = io::graph_from_json(io::load_json_file(config.graph_path));
    const auto configs = io::objectives_from_json(io::load_json_file(config.objectives_path));
    const ObjectiveSuite suite = io::make_suite(configs);
    const NodeIndex source = graph.node(config.source);
    std::optional<WaitingTimes> waiting;
    if (config.waiting_path) waiting = io::waiting_from_json(io::load_json_file(*config.waiting_path), graph);

    std::size_t K = graph.arc_count();
    bool user_bound = false;
    if (config.algorithm != Algorithm::additive) {
      switch (config.mode) {
        case Mode::bounded:
          if (!config.K) throw InputError("--mode bounded requires --K");
          K = *config.K;
          user_bound = true;
          break;
        case Mode::auto_no_zero_cycle: {
          auto bound = iteration_bound(graph, source, BoundMode::no_zero_cycle);
          if (!bound) {
            report.exit_code = kUnbounded;
            report.diagnostic =
                "a zero-duration cycle is reachable from '" + config.source + "'; supply --mode bounded --K";
            return report;
          }
          K = *bound;
          break;
        }
        case Mode::auto_waiting:
          if (!waiting) throw InputError("--mode auto_waiting requires --waiting");
          K = *iteration_bound(graph, source, BoundMode::waiting_times);
          break;
        case Mode::auto_kappa:
          K = *iteration_bound(graph, source, BoundMode::kappa_bound, config.kappa);
          break;
      }
    }

    SolveOptions options;
    options.waiting = waiting;
    SolveResult result;
    switch (config.algorithm) {
      case Algorithm::isotonic: result = solve_isotonic(graph, suite, source, K, options); break;
      case Algorithm::general: result = solve_general(graph, suite, source, K, options); break;
      case Algorithm::additive: result = solve_additive(graph, suite, source, options); break;
    }

    std::string_view kind = "nondominated";
    if (result.stop_reason == StopReason::improving_cycle_detected) {
      kind = "improving_cycle";
    } else if (result.stop_reason == StopReason::reached_K && user_bound) {
      kind = "K-nondominated";
    }
    report.document = io::result_to_json(graph, result, kind);
    io::ordered_json& meta = report.document["metadata"];
    meta["algorithm"] = std::string(to_string(config.algorithm));
    meta["mode"] = std::string(config.algorithm == Algorithm::additive ? "additive" : to_string(config.mode));
    meta["source"] = config.source;
    meta["objectives"] = io::ordered_json::array();
    for (const auto& spec : suite.objectives()) meta["objectives"].push_back(spec.name);
    if (result.witness) meta["witness_objective"] = suite[result.witness->objective].name;

    if (config.oracle_check) {
      auto problems = detail::cross_check(graph, suite, source, result, waiting, config.oracle_max_paths, meta);
      if (!problems.empty()) {
        meta["oracle_mismatches"] = problems;
        report.exit_code = kOracleMismatch;
        report.diagnostic = problems.front();
      }
    }
    if (config.output_path) io::write_text_file(*config.output_path, report.document.dump(2) + "\n");
  } catch (const InputError& e) {
    report = {kInputError, {}, e.what()};
  } catch (const ConfigError& e) {
    report = {kInputError, {}, e.what()};
  } catch (const PreconditionError& e) {
    report = {kInputError, {}, e.what()};
  } catch (const nlohmann::json::exception& e) {
    report = {kInputError, {}, e.what()};
  }
  return report;
}

/// Writes <dir>/<name>.graph.json and <dir>/<name>.objectives.json.
inline void write_fixture(const fixtures::Fixture& fixture, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  io::write_text_file(dir / (fixture.name + ".graph.json"), io::graph_to_json(fixture.graph).dump(2) + "\n");
  io::write_text_file(dir / (fixture.name + ".objectives.json"),
                      io::objectives_to_json(fixture.objectives).dump(2) + "\n");
}

}  // namespace mtsp::cli

#endif  // MTSP_RUN_HPP
