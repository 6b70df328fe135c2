#ifndef MTSP_ORACLE_HPP
#define MTSP_ORACLE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mtsp/errors.hpp"
#include "mtsp/objectives.hpp"
#include "mtsp/temporal_graph.hpp"

// Brute-force ground truth for desk-sized instances. Nothing here shares code with
// the label-correcting solvers.

namespace mtsp::oracle {

struct EnumerationBudget {
  std::size_t max_length = 0;
  std::size_t max_paths = 1'000'000;
  std::optional<WaitingTimes> waiting{};
};

/// Every temporal path from `source` with at most max_length arcs, the zero-arcs path
/// first, in depth-first order with arcs taken in input order.
inline std::vector<TemporalPath> enumerate_paths(const TemporalGraph& g, NodeIndex source,
                                                 const EnumerationBudget& budget) {
  g.check_node(source);
  detail::check_waiting(g, budget.waiting);
  if (budget.max_paths == 0) throw InputError("max_paths must be positive");

  std::vector<TemporalPath> out;
  TemporalPath current{source, {}};
  auto emit = [&] {
    if (out.size() == budget.max_paths) {
      throw BudgetError("more than " + std::to_string(budget.max_paths) + " temporal paths");
    }
    out.push_back(current);
  };

  // Explicit recursion on the current path keeps the order obvious.
  auto extend = [&](auto&& self) -> void {
    emit();
    if (current.arcs.size() == budget.max_length) return;
    NodeIndex at = current.end_node(g);
    for (ArcIndex r : g.out_arcs(at)) {
      if (!current.arcs.empty() && !detail::may_follow(g.arc(current.arcs.back()), g.arc(r), budget.waiting)) {
        continue;
      }
      current.arcs.push_back(r);
      self(self);
      current.arcs.pop_back();
    }
  };
  extend(extend);
  return out;
}

/// Per node, the nondominated images over all source paths of length <= max_length.
inline std::vector<std::vector<Image>> k_nondominated_sets(const TemporalGraph& g, const ObjectiveSuite& suite,
                                                           NodeIndex source, const EnumerationBudget& budget) {
  std::vector<std::vector<Image>> images(g.node_count());
  for (const TemporalPath& p : enumerate_paths(g, source, budget)) {
    images[p.end_node(g)].push_back(path_image(suite, g, p));
  }
  for (auto& bucket : images) bucket = nondominated_filter(suite, std::move(bucket));
  return images;
}

/// Finite proxy for improving cycles: do the nondominated sets at path length <= horizon
/// differ from those at length <= horizon - m anywhere? A true answer is strong evidence;
/// false at a small horizon proves nothing.
inline bool improving_cycle_probe(const TemporalGraph& g, const ObjectiveSuite& suite, NodeIndex source,
                                  std::size_t horizon, std::size_t max_paths = 1'000'000) {
  const std::size_t m = g.arc_count();
  if (horizon < 2 * m) throw InputError("improving_cycle_probe needs horizon >= 2m");
  auto later = k_nondominated_sets(g, suite, source, {horizon, max_paths, std::nullopt});
  auto earlier = k_nondominated_sets(g, suite, source, {horizon - m, max_paths, std::nullopt});
  return later != earlier;
}

}  // namespace mtsp::oracle

#endif  // MTSP_ORACLE_HPP
