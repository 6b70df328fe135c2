#ifndef MTSP_TEMPORAL_GRAPH_HPP
#define MTSP_TEMPORAL_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mtsp/errors.hpp"
#include "mtsp/rational.hpp"
#include "mtsp/value.hpp"

namespace mtsp {

using NodeIndex = std::uint32_t;
using ArcIndex = std::uint32_t;

/// Arc (alpha, omega, tau, lambda) plus the raw per-objective arc values.
struct TemporalArc {
  std::string id;
  NodeIndex from = 0;
  NodeIndex to = 0;
  Rational tau{0};
  Rational lambda{0};
  std::map<std::string, ObjectiveValue, std::less<>> values;

  Rational arrival() const { return tau + lambda; }
};

/// Immutable temporal graph. Node and arc ids are opaque strings mapped to
/// dense indices in insertion order; adjacency lists keep arc input order.
class TemporalGraph {
 public:
  TemporalGraph() = default;

  std::size_t node_count() const { return node_names_.size(); }
  std::size_t arc_count() const { return arcs_.size(); }

  const std::string& node_name(NodeIndex v) const {
    check_node(v);
    return node_names_[v];
  }

  std::optional<NodeIndex> find_node(std::string_view name) const {
    auto it = node_lookup_.find(name);
    if (it == node_lookup_.end()) return std::nullopt;
    return it->second;
  }

  /// Throws InputError for unknown names.
  NodeIndex node(std::string_view name) const {
    if (auto v = find_node(name)) return *v;
    throw InputError("unknown node '" + std::string(name) + "'");
  }

  const TemporalArc& arc(ArcIndex r) const {
    check_arc(r);
    return arcs_[r];
  }

  std::optional<ArcIndex> find_arc(std::string_view id) const {
    auto it = arc_lookup_.find(id);
    if (it == arc_lookup_.end()) return std::nullopt;
    return it->second;
  }

  std::span<const TemporalArc> arcs() const { return arcs_; }

  std::span<const ArcIndex> out_arcs(NodeIndex v) const {
    check_node(v);
    return out_[v];
  }

  std::span<const ArcIndex> in_arcs(NodeIndex v) const {
    check_node(v);
    return in_[v];
  }

  bool has_node(NodeIndex v) const { return v < node_names_.size(); }
  bool has_arc(ArcIndex r) const { return r < arcs_.size(); }

  void check_node(NodeIndex v) const {
    if (!has_node(v)) throw InputError("node index " + std::to_string(v) + " out of range");
  }
  void check_arc(ArcIndex r) const {
    if (!has_arc(r)) throw InputError("arc index " + std::to_string(r) + " out of range");
  }

 private:
  friend class GraphBuilder;

  std::vector<std::string> node_names_;
  std::map<std::string, NodeIndex, std::less<>> node_lookup_;
  std::vector<TemporalArc> arcs_;
  std::map<std::string, ArcIndex, std::less<>> arc_lookup_;
  std::vector<std::vector<ArcIndex>> out_;
  std::vector<std::vector<ArcIndex>> in_;
};

class GraphBuilder {
 public:
  /// Returns the existing index when the node is already known.
  NodeIndex add_node(std::string_view name) {
    if (auto it = graph_.node_lookup_.find(name); it != graph_.node_lookup_.end()) return it->second;
    auto v = static_cast<NodeIndex>(graph_.node_names_.size());
    graph_.node_names_.emplace_back(name);
    graph_.node_lookup_.emplace(std::string(name), v);
    graph_.out_.emplace_back();
    graph_.in_.emplace_back();
    return v;
  }

  /// Unknown endpoint names are added as nodes.
  ArcIndex add_arc(std::string id, std::string_view from, std::string_view to, Rational tau, Rational lambda,
                   std::map<std::string, ObjectiveValue, std::less<>> values = {}) {
    if (tau < 0 || lambda < 0) {
      throw InputError("arc '" + id + "': tau and lambda must be nonnegative");
    }
    if (graph_.arc_lookup_.contains(id)) throw InputError("duplicate arc id '" + id + "'");
    TemporalArc a;
    a.from = add_node(from);
    a.to = add_node(to);
    a.tau = tau;
    a.lambda = lambda;
    a.values = std::move(values);
    auto r = static_cast<ArcIndex>(graph_.arcs_.size());
    graph_.out_[a.from].push_back(r);
    graph_.in_[a.to].push_back(r);
    graph_.arc_lookup_.emplace(id, r);
    a.id = std::move(id);
    graph_.arcs_.push_back(std::move(a));
    return r;
  }

  TemporalGraph build() && { return std::move(graph_); }
  TemporalGraph build() const& { return graph_; }

 private:
  TemporalGraph graph_;
};

/// A temporal path (v0, r1, v1, ..., rk, vk). An empty arc list is the zero-arcs path (v0).
struct TemporalPath {
  NodeIndex start = 0;
  std::vector<ArcIndex> arcs;

  std::size_t length() const { return arcs.size(); }
  bool empty() const { return arcs.empty(); }

  NodeIndex end_node(const TemporalGraph& g) const { return arcs.empty() ? start : g.arc(arcs.back()).to; }

  friend bool operator==(const TemporalPath&, const TemporalPath&) = default;
};

/// Minimum waiting time per node, indexed by NodeIndex.
using WaitingTimes = std::vector<Rational>;

namespace detail {

inline void check_waiting(const TemporalGraph& g, const std::optional<WaitingTimes>& waiting) {
  if (waiting && waiting->size() != g.node_count()) {
    throw InputError("waiting-time map must cover every node");
  }
}

/// Extension guard: may `next` follow `prev` at node omega(prev)?
inline bool may_follow(const TemporalArc& prev, const TemporalArc& next,
                       const std::optional<WaitingTimes>& waiting) {
  Rational ready = prev.arrival();
  if (waiting) ready += (*waiting)[prev.to];
  return ready <= next.tau;
}

}  // namespace detail

/// Chaining and temporal validity; with waiting times, Delta(v_i) must be spent at
/// every intermediate node.
inline bool validate_path(const TemporalGraph& g, const TemporalPath& p,
                          const std::optional<WaitingTimes>& waiting = std::nullopt) {
  g.check_node(p.start);
  for (ArcIndex r : p.arcs) g.check_arc(r);
  detail::check_waiting(g, waiting);
  NodeIndex at = p.start;
  for (std::size_t i = 0; i < p.arcs.size(); ++i) {
    const TemporalArc& a = g.arc(p.arcs[i]);
    if (a.from != at) return false;
    if (i > 0 && !detail::may_follow(g.arc(p.arcs[i - 1]), a, waiting)) return false;
    at = a.to;
  }
  return true;
}

/// Arrival time of the last arc; zero for the zero-arcs path.
inline Rational path_arrival(const TemporalGraph& g, const TemporalPath& p) {
  return p.empty() ? Rational(0) : g.arc(p.arcs.back()).arrival();
}

inline Rational path_duration(const TemporalGraph& g, const TemporalPath& p) {
  if (!validate_path(g, p)) throw InputError("path_duration: path is not a valid temporal path");
  if (p.empty()) return Rational(0);
  return g.arc(p.arcs.back()).arrival() - g.arc(p.arcs.front()).tau;
}

inline TemporalPath concatenate(const TemporalGraph& g, const TemporalPath& p1, const TemporalPath& p2) {
  g.check_node(p1.start);
  g.check_node(p2.start);
  if (p1.end_node(g) != p2.start) {
    throw PreconditionError("concatenate: first path does not end where the second starts");
  }
  if (!p1.empty() && !p2.empty() && g.arc(p1.arcs.back()).arrival() > g.arc(p2.arcs.front()).tau) {
    throw PreconditionError("concatenate: second path starts before the first one arrives");
  }
  TemporalPath out{p1.start, p1.arcs};
  out.arcs.insert(out.arcs.end(), p2.arcs.begin(), p2.arcs.end());
  return out;
}

/// Earliest arrival time at every node over temporal source paths; nullopt when
/// unreachable. The source gets 0 from its zero-arcs path.
///
/// One scan over arcs in nondecreasing tau. Arcs sharing a start time are rescanned
/// until nothing changes, since zero-traversal chains at one timestamp can cascade.
inline std::vector<std::optional<Rational>> earliest_arrival_times(const TemporalGraph& g, NodeIndex source) {
  g.check_node(source);
  std::vector<std::optional<Rational>> ea(g.node_count());
  ea[source] = Rational(0);

  std::vector<ArcIndex> order(g.arc_count());
  for (ArcIndex r = 0; r < order.size(); ++r) order[r] = r;
  std::stable_sort(order.begin(), order.end(),
                   [&](ArcIndex a, ArcIndex b) { return g.arc(a).tau < g.arc(b).tau; });

  for (std::size_t lo = 0; lo < order.size();) {
    std::size_t hi = lo;
    while (hi < order.size() && g.arc(order[hi]).tau == g.arc(order[lo]).tau) ++hi;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = lo; i < hi; ++i) {
        const TemporalArc& a = g.arc(order[i]);
        if (!ea[a.from] || *ea[a.from] > a.tau) continue;
        if (!ea[a.to] || a.arrival() < *ea[a.to]) {
          ea[a.to] = a.arrival();
          changed = true;
        }
      }
    }
    lo = hi;
  }
  return ea;
}

/// A zero-duration cycle reachable from the source, or nullopt.
///
/// For each timestamp t of a zero-traversal arc (ascending), searches the subgraph of
/// zero-traversal arcs starting at t between nodes reachable by time t for a directed
/// cycle. The first cycle in (timestamp, DFS) order is returned.
inline std::optional<TemporalPath> find_reachable_zero_duration_cycle(const TemporalGraph& g, NodeIndex source) {
  const auto ea = earliest_arrival_times(g, source);

  std::vector<Rational> stamps;
  for (const TemporalArc& a : g.arcs()) {
    if (a.lambda == 0) stamps.push_back(a.tau);
  }
  std::sort(stamps.begin(), stamps.end());
  stamps.erase(std::unique(stamps.begin(), stamps.end()), stamps.end());

  const std::size_t n = g.node_count();
  enum class Color : std::uint8_t { white, gray, black };

  for (const Rational& t : stamps) {
    auto usable = [&](ArcIndex r) {
      const TemporalArc& a = g.arc(r);
      return a.lambda == 0 && a.tau == t && ea[a.from] && *ea[a.from] <= t && ea[a.to] && *ea[a.to] <= t;
    };

    std::vector<Color> color(n, Color::white);
    struct Frame {
      NodeIndex node;
      std::optional<ArcIndex> via;
      std::size_t next = 0;
    };
    for (NodeIndex root = 0; root < n; ++root) {
      if (color[root] != Color::white || !ea[root] || *ea[root] > t) continue;
      std::vector<Frame> stack;
      stack.push_back(Frame{root, std::nullopt, 0});
      color[root] = Color::gray;
      while (!stack.empty()) {
        Frame& top = stack.back();
        auto out = g.out_arcs(top.node);
        if (top.next == out.size()) {
          color[top.node] = Color::black;
          stack.pop_back();
          continue;
        }
        ArcIndex r = out[top.next++];
        if (!usable(r)) continue;
        NodeIndex w = g.arc(r).to;
        if (color[w] == Color::gray) {
          auto it = std::find_if(stack.begin(), stack.end(), [&](const Frame& f) { return f.node == w; });
          TemporalPath cycle{w, {}};
          for (auto f = std::next(it); f != stack.end(); ++f) cycle.arcs.push_back(*f->via);
          cycle.arcs.push_back(r);
          return cycle;
        }
        if (color[w] == Color::white) {
          color[w] = Color::gray;
          stack.push_back({w, r, 0});
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace mtsp

#endif  // MTSP_TEMPORAL_GRAPH_HPP
