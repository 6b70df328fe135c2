#ifndef MTSP_LABELING_HPP
#define MTSP_LABELING_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "mtsp/errors.hpp"
#include "mtsp/objectives.hpp"
#include "mtsp/temporal_graph.hpp"

namespace mtsp {

using LabelId = std::uint32_t;

/// Image plus predecessor arc/label; the root label has neither.
struct Label {
  NodeIndex node = 0;
  Image image;
  std::optional<ArcIndex> pred_arc;
  std::optional<LabelId> pred_label;
  LabelId id = 0;
};

/// Append-only label store. Ids are positions, so they increase in creation order
/// and a predecessor always has a smaller id than its successors.
class LabelArena {
 public:
  LabelId add(NodeIndex node, Image image, std::optional<ArcIndex> pred_arc, std::optional<LabelId> pred_label) {
    auto id = static_cast<LabelId>(labels_.size());
    labels_.push_back({node, std::move(image), pred_arc, pred_label, id});
    return id;
  }

  const Label& operator[](LabelId id) const {
    if (id >= labels_.size()) throw InternalError("label id " + std::to_string(id) + " not in arena");
    return labels_[id];
  }

  std::size_t size() const { return labels_.size(); }

 private:
  std::vector<Label> labels_;
};

/// Walks predecessor links back to the root and returns the arcs in path order.
inline TemporalPath reconstruct_path(const LabelArena& arena, LabelId id) {
  std::vector<ArcIndex> reversed;
  const Label* at = &arena[id];
  while (at->pred_label) {
    if (!at->pred_arc || *at->pred_label >= at->id) {
      throw InternalError("label " + std::to_string(at->id) + " has a malformed predecessor link");
    }
    reversed.push_back(*at->pred_arc);
    at = &arena[*at->pred_label];
  }
  if (at->pred_arc) throw InternalError("root label carries a predecessor arc");
  return TemporalPath{at->node, {reversed.rbegin(), reversed.rend()}};
}

enum class StopReason { fixed_point, reached_K, improving_cycle_detected };

inline std::string_view to_string(StopReason s) {
  switch (s) {
    case StopReason::fixed_point: return "fixed_point";
    case StopReason::reached_K: return "reached_K";
    case StopReason::improving_cycle_detected: return "improving_cycle_detected";
  }
  return "?";
}

struct NodeSolution {
  Image image;
  TemporalPath path;
};

/// Zero-duration cycle whose additive value improves objective `objective`.
struct ImprovingCycle {
  TemporalPath cycle;
  std::size_t objective = 0;
  Rational cycle_value{0};
};

struct SolveResult {
  /// Indexed by NodeIndex; each list is nondominated and sorted with BetterFirst.
  std::vector<std::vector<NodeSolution>> per_node;
  /// Index k of the final iteration; the returned sets are L(., k).
  std::size_t iterations = 0;
  std::size_t effective_K = 0;
  StopReason stop_reason = StopReason::reached_K;
  std::optional<ImprovingCycle> witness;
};

struct SolveOptions {
  std::optional<WaitingTimes> waiting;
  /// Off: always run until k = K (the result must not change).
  bool fixed_point_stop = true;
  /// Called with every materialized layer L(., k), k = 0, 1, ...
  std::function<void(std::size_t k, const LabelArena&, std::span<const std::vector<LabelId>>)> on_layer;
};

namespace detail {

/// Isotonic insertion: keep each set free of weakly dominated labels.
struct PruneDominated {
  const ObjectiveSuite& suite;
  const LabelArena& arena;
  std::monostate unused;

  void reset(std::size_t) {}

  bool try_insert(std::vector<LabelId>& bucket, NodeIndex, const Image& image) {
    for (LabelId other : bucket) {
      if (weakly_dominates(suite, arena[other].image, image)) return false;
    }
    std::erase_if(bucket, [&](LabelId other) { return dominates(suite, image, arena[other].image); });
    return true;
  }
};

/// General insertion: only reject exact image duplicates.
struct KeepDistinct {
  const ObjectiveSuite& suite;
  const LabelArena& arena;
  std::vector<std::unordered_set<Image, ImageHash>> seen;

  void reset(std::size_t n) { seen.assign(n, {}); }

  void remember(NodeIndex v, const Image& image) { seen[v].insert(image); }

  bool try_insert(std::vector<LabelId>&, NodeIndex u, const Image& image) { return seen[u].insert(image).second; }
};

struct RunOutcome {
  LabelArena arena;
  std::vector<std::vector<LabelId>> layer;
  std::size_t k = 0;
  bool fixed_point = false;
  /// Labels created in the last executed iteration that survived into L(., k+1).
  std::vector<LabelId> fresh;
};

/// Scaffolding shared by all three algorithms. `max_k` is K; the loop body for
/// iteration k is always executed so that a fixed point at k = K is detected too.
template <class Insertion>
RunOutcome label_correcting(const TemporalGraph& g, const ObjectiveSuite& suite, NodeIndex source, std::size_t max_k,
                            const SolveOptions& options) {
  g.check_node(source);
  check_waiting(g, options.waiting);
  if (options.waiting) {
    for (const Rational& d : *options.waiting) {
      if (d <= 0) throw InputError("minimum waiting times must be positive");
    }
  }
  const std::vector<Image> arc_rows = suite.arc_values(g);
  const std::size_t n = g.node_count();

  RunOutcome run;
  Insertion insertion{suite, run.arena, {}};
  std::vector<std::vector<LabelId>>& current = run.layer;
  current.assign(n, {});
  current[source].push_back(run.arena.add(source, suite.neutral_image(), std::nullopt, std::nullopt));

  for (std::size_t k = 0;; ++k) {
    if (options.on_layer) options.on_layer(k, run.arena, current);

    std::vector<std::vector<LabelId>> next = current;
    const auto first_new = static_cast<LabelId>(run.arena.size());
    if constexpr (requires { insertion.remember(NodeIndex{}, Image{}); }) {
      insertion.reset(n);
      for (NodeIndex v = 0; v < n; ++v) {
        for (LabelId l : next[v]) insertion.remember(v, run.arena[l].image);
      }
    }

    for (NodeIndex v = 0; v < n; ++v) {
      if (current[v].empty()) continue;
      for (ArcIndex r : g.out_arcs(v)) {
        const TemporalArc& arc = g.arc(r);
        const NodeIndex u = arc.to;
        for (LabelId id : current[v]) {
          const Label& l = run.arena[id];
          // Waiting applies at intermediate nodes only, i.e. never before the first arc.
          Rational ready = l.image[0].rational();
          if (options.waiting && l.pred_arc) ready += (*options.waiting)[v];
          if (arc.tau < ready) continue;
          Image extended = suite.extend(l.image, arc_rows[r]);
          if (insertion.try_insert(next[u], u, extended)) {
            next[u].push_back(run.arena.add(u, std::move(extended), r, id));
          }
        }
      }
    }

    const bool unchanged = next == current;
    if ((unchanged && options.fixed_point_stop) || k == max_k) {
      run.k = k;
      run.fixed_point = unchanged;
      for (const auto& bucket : next) {
        for (LabelId l : bucket) {
          if (l >= first_new) run.fresh.push_back(l);
        }
      }
      std::sort(run.fresh.begin(), run.fresh.end());
      if (options.on_layer && !unchanged) options.on_layer(k + 1, run.arena, next);
      return run;
    }
    current = std::move(next);
  }
}

inline SolveResult collect(const TemporalGraph& g, const ObjectiveSuite& suite, const RunOutcome& run,
                           bool prune_dominated) {
  SolveResult result;
  result.iterations = run.k;
  result.per_node.resize(g.node_count());
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    std::vector<LabelId> ids = run.layer[v];
    if (prune_dominated) {
      std::erase_if(ids, [&](LabelId id) {
        return std::any_of(run.layer[v].begin(), run.layer[v].end(),
                           [&](LabelId other) { return dominates(suite, run.arena[other].image, run.arena[id].image); });
      });
    }
    std::sort(ids.begin(), ids.end(),
              [&](LabelId a, LabelId b) { return BetterFirst{&suite}(run.arena[a].image, run.arena[b].image); });
    for (LabelId id : ids) result.per_node[v].push_back({run.arena[id].image, reconstruct_path(run.arena, id)});
  }
  return result;
}

}  // namespace detail

/// Label correcting for isotonic suites: dominated labels are dropped in every iteration.
/// Returns the K-nondominated images at every node with one path each.
inline SolveResult solve_isotonic(const TemporalGraph& g, const ObjectiveSuite& suite, NodeIndex source, std::size_t K,
                                  const SolveOptions& options = {}) {
  if (!suite.all_isotonic()) throw ConfigError("solve_isotonic requires every objective to be isotonic");
  auto run = detail::label_correcting<detail::PruneDominated>(g, suite, source, K, options);
  SolveResult result = detail::collect(g, suite, run, false);
  result.effective_K = K;
  result.stop_reason = run.fixed_point ? StopReason::fixed_point : StopReason::reached_K;
  return result;
}

/// Label correcting without isotonicity: every distinct image is kept until termination,
/// then dominated labels are removed.
inline SolveResult solve_general(const TemporalGraph& g, const ObjectiveSuite& suite, NodeIndex source, std::size_t K,
                                 const SolveOptions& options = {}) {
  auto run = detail::label_correcting<detail::KeepDistinct>(g, suite, source, K, options);
  SolveResult result = detail::collect(g, suite, run, true);
  result.effective_K = K;
  result.stop_reason = run.fixed_point ? StopReason::fixed_point : StopReason::reached_K;
  return result;
}

/// Isotonic label correcting with K = m for rational additive suites. Either reaches a
/// fixed point (all nondominated images) or reports an improving cycle with a witness.
inline SolveResult solve_additive(const TemporalGraph& g, const ObjectiveSuite& suite, NodeIndex source,
                                  const SolveOptions& options = {}) {
  if (!suite.all_additive()) {
    throw ConfigError("solve_additive requires objectives 2..p to be rational additive");
  }
  SolveOptions opts = options;
  opts.fixed_point_stop = true;
  const std::size_t m = g.arc_count();
  auto run = detail::label_correcting<detail::PruneDominated>(g, suite, source, m, opts);
  if (run.fixed_point) {
    SolveResult result = detail::collect(g, suite, run, false);
    result.effective_K = m;
    result.stop_reason = StopReason::fixed_point;
    return result;
  }

  SolveResult result;
  result.per_node.resize(g.node_count());
  result.iterations = run.k;
  result.effective_K = m;
  result.stop_reason = StopReason::improving_cycle_detected;
  if (run.fresh.empty()) throw InternalError("label sets changed in the last iteration without a new label");

  // A label new in iteration m has an (m+1)-arc path, so some arc repeats; the stretch
  // between its first two traversals is a zero-duration cycle that improves some objective.
  TemporalPath path = reconstruct_path(run.arena, run.fresh.front());
  for (std::size_t j = 1; j < path.arcs.size(); ++j) {
    auto first = std::find(path.arcs.begin(), path.arcs.begin() + static_cast<std::ptrdiff_t>(j), path.arcs[j]);
    if (first == path.arcs.begin() + static_cast<std::ptrdiff_t>(j)) continue;
    ImprovingCycle cycle;
    cycle.cycle.start = g.arc(*first).from;
    cycle.cycle.arcs.assign(first, path.arcs.begin() + static_cast<std::ptrdiff_t>(j));
    const std::vector<Image> rows = suite.arc_values(g);
    for (std::size_t obj = 1; obj < suite.size(); ++obj) {
      Rational sum{0};
      for (ArcIndex r : cycle.cycle.arcs) sum += rows[r][obj].rational();
      bool improving = suite[obj].direction == Direction::min ? sum < 0 : sum > 0;
      if (improving) {
        cycle.objective = obj;
        cycle.cycle_value = sum;
        result.witness = std::move(cycle);
        return result;
      }
    }
    throw InternalError("repeated-arc cycle is not improving in any objective");
  }
  throw InternalError("label created in iteration m has no repeated arc");
}

enum class BoundMode { no_zero_cycle, waiting_times, kappa_bound };

/// Either one overall bound kappa on distinct images per node, or one bound per objective.
struct KappaBound {
  std::optional<std::uint64_t> kappa;
  std::vector<std::uint64_t> per_objective;
};

/// Iteration count after which the algorithms are complete without a user-supplied K;
/// nullopt means no bound is available (a reachable zero-duration cycle exists).
inline std::optional<std::size_t> iteration_bound(const TemporalGraph& g, NodeIndex source, BoundMode mode,
                                                  const std::optional<KappaBound>& kappa = std::nullopt) {
  g.check_node(source);
  const std::uint64_t m = g.arc_count();
  switch (mode) {
    case BoundMode::no_zero_cycle:
      if (find_reachable_zero_duration_cycle(g, source)) return std::nullopt;
      return m;
    case BoundMode::waiting_times:
      return m;
    case BoundMode::kappa_bound: {
      if (!kappa || (!kappa->kappa && kappa->per_objective.empty())) {
        throw InputError("kappa_bound mode needs kappa or per-objective kappa values");
      }
      std::uint64_t total = 1;
      if (kappa->kappa) {
        total = *kappa->kappa;
      } else {
        for (std::uint64_t c : kappa->per_objective) {
          if (c == 0) throw InputError("per-objective kappa values must be at least 1");
          if (__builtin_mul_overflow(total, c, &total)) throw InputError("kappa product overflows");
        }
      }
      if (total == 0) throw InputError("kappa must be at least 1");
      std::uint64_t bound = 0;
      if (__builtin_mul_overflow(m, total, &bound) || bound > std::numeric_limits<std::size_t>::max()) {
        throw InputError("iteration bound m * kappa overflows");
      }
      return static_cast<std::size_t>(bound);
    }
  }
  return std::nullopt;
}

}  // namespace mtsp

#endif  // MTSP_LABELING_HPP
