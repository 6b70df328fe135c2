#ifndef MTSP_FIXTURES_HPP
#define MTSP_FIXTURES_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mtsp/errors.hpp"
#include "mtsp/io.hpp"
#include "mtsp/temporal_graph.hpp"

namespace mtsp::fixtures {

struct Fixture {
  std::string name;
  TemporalGraph graph;
  std::vector<io::ObjectiveConfig> objectives;
};

inline const io::ObjectiveConfig kArrival{"arrival", ObjectiveKind::earliest_arrival, std::nullopt, std::nullopt};

/// Chain s -> v1 (tau 0, lambda 1, decay value k^(k+1)) into the zero-traversal cycle
/// v1 -> v2 -> ... -> vk -> v1 at time 1 with decay values 0. Objectives: arrival, decay_max.
inline Fixture example_2_1(int k) {
  if (k < 1) throw InputError("example_2_1 needs k >= 1");
  std::int64_t big = 1;
  for (int i = 0; i <= k; ++i) {
    if (__builtin_mul_overflow(big, static_cast<std::int64_t>(k), &big)) {
      throw InputError("example_2_1: k^(k+1) does not fit in 64 bits");
    }
  }
  GraphBuilder b;
  b.add_node("s");
  for (int i = 1; i <= k; ++i) b.add_node("v" + std::to_string(i));
  b.add_arc("r1", "s", "v1", Rational(0), Rational(1), {{"decay", ObjectiveValue(Rational(big))}});
  for (int i = 2; i <= k + 1; ++i) {
    std::string from = "v" + std::to_string(i - 1);
    std::string to = i == k + 1 ? "v1" : "v" + std::to_string(i);
    b.add_arc("r" + std::to_string(i), from, to, Rational(1), Rational(0), {{"decay", ObjectiveValue(0)}});
  }
  return {"example_2_1_k" + std::to_string(k),
          std::move(b).build(),
          {kArrival, {"decay", ObjectiveKind::decay_max, std::nullopt, std::nullopt}}};
}

/// s -> v, and two return arcs v -> s, everything at time 0 with zero traversal.
/// Objectives: arrival and two min_combine objectives f2, f3.
inline Fixture example_2_2() {
  GraphBuilder b;
  b.add_node("s");
  b.add_node("v");
  b.add_arc("r1", "s", "v", Rational(0), Rational(0), {{"f2", ObjectiveValue(0)}, {"f3", ObjectiveValue(0)}});
  b.add_arc("r2", "v", "s", Rational(0), Rational(0), {{"f2", ObjectiveValue(-1)}, {"f3", ObjectiveValue(0)}});
  b.add_arc("r3", "v", "s", Rational(0), Rational(0), {{"f2", ObjectiveValue(0)}, {"f3", ObjectiveValue(-1)}});
  return {"example_2_2",
          std::move(b).build(),
          {kArrival,
           {"f2", ObjectiveKind::min_combine, std::nullopt, std::nullopt},
           {"f3", ObjectiveKind::min_combine, std::nullopt, std::nullopt}}};
}

/// Two-arc zero-duration loop s -> v -> s with additive cost -1 per arc.
inline Fixture additive_loop() {
  GraphBuilder b;
  b.add_arc("r1", "s", "v", Rational(0), Rational(0), {{"cost", ObjectiveValue(-1)}});
  b.add_arc("r2", "v", "s", Rational(0), Rational(0), {{"cost", ObjectiveValue(-1)}});
  return {"additive_loop",
          std::move(b).build(),
          {kArrival, {"cost", ObjectiveKind::additive, Direction::min, std::nullopt}}};
}

/// Three-arc chain s -> a -> b -> c with categories 2, 2, 5 (category_max).
inline Fixture category_chain() {
  GraphBuilder b;
  b.add_arc("r1", "s", "a", Rational(0), Rational(1), {{"category", ObjectiveValue(2)}});
  b.add_arc("r2", "a", "b", Rational(1), Rational(1), {{"category", ObjectiveValue(2)}});
  b.add_arc("r3", "b", "c", Rational(2), Rational(1), {{"category", ObjectiveValue(5)}});
  return {"category_chain",
          std::move(b).build(),
          {kArrival, {"category", ObjectiveKind::category_max, std::nullopt, std::nullopt}}};
}

inline constexpr std::string_view kFixtureNames[] = {"example_2_1", "example_2_2", "additive_loop", "category_chain"};

inline Fixture generate_fixture(std::string_view name, int k = 2) {
  if (name == "example_2_1") return example_2_1(k);
  if (name == "example_2_2") return example_2_2();
  if (name == "additive_loop") return additive_loop();
  if (name == "category_chain") return category_chain();
  throw InputError("unknown fixture '" + std::string(name) + "'");
}

}  // namespace mtsp::fixtures

#endif  // MTSP_FIXTURES_HPP
