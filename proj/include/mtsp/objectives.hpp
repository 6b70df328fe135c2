#ifndef MTSP_OBJECTIVES_HPP
#define MTSP_OBJECTIVES_HPP

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mtsp/errors.hpp"
#include "mtsp/temporal_graph.hpp"
#include "mtsp/value.hpp"

namespace mtsp {

enum class Direction { min, max };

inline std::string_view to_string(Direction d) { return d == Direction::min ? "min" : "max"; }

enum class ObjectiveKind {
  earliest_arrival,
  latest_start,
  additive,
  decay_max,
  min_combine,
  category_max,
  last_if_nondecreasing,
  custom,
};

inline constexpr ObjectiveKind kBuiltinKinds[] = {
    ObjectiveKind::earliest_arrival, ObjectiveKind::latest_start, ObjectiveKind::additive,
    ObjectiveKind::decay_max,        ObjectiveKind::min_combine,  ObjectiveKind::category_max,
    ObjectiveKind::last_if_nondecreasing,
};

inline std::string_view to_string(ObjectiveKind k) {
  switch (k) {
    case ObjectiveKind::earliest_arrival: return "earliest_arrival";
    case ObjectiveKind::latest_start: return "latest_start";
    case ObjectiveKind::additive: return "additive";
    case ObjectiveKind::decay_max: return "decay_max";
    case ObjectiveKind::min_combine: return "min_combine";
    case ObjectiveKind::category_max: return "category_max";
    case ObjectiveKind::last_if_nondecreasing: return "last_if_nondecreasing";
    case ObjectiveKind::custom: return "custom";
  }
  return "custom";
}

inline ObjectiveKind parse_objective_kind(std::string_view s) {
  for (ObjectiveKind k : kBuiltinKinds) {
    if (to_string(k) == s) return k;
  }
  throw ConfigError("unknown objective kind '" + std::string(s) + "'");
}

/// One objective (M, <=, f, combine, neutral, dir).
///
/// `combine` must be pure, `neutral` left-neutral for it, and every value produced
/// by `combine` and `arc_value` must satisfy `value_domain`. These are contracts on
/// custom objectives; verify_spec_laws can sample-check them.
struct ObjectiveSpec {
  using Combine = std::function<ObjectiveValue(const ObjectiveValue&, const ObjectiveValue&)>;
  using ArcValue = std::function<ObjectiveValue(const TemporalArc&)>;
  using Domain = std::function<bool(const ObjectiveValue&)>;

  std::string name;
  ObjectiveKind kind = ObjectiveKind::custom;
  Direction direction = Direction::min;
  ObjectiveValue neutral;
  Combine combine;
  ArcValue arc_value;
  bool declared_isotonic = false;
  bool declared_monotone = false;
  Domain value_domain = [](const ObjectiveValue&) { return true; };

  bool rational_additive() const { return kind == ObjectiveKind::additive; }

  /// Strictly better in this objective's direction.
  bool better(const ObjectiveValue& a, const ObjectiveValue& b) const {
    return direction == Direction::min ? a < b : a > b;
  }
  bool at_least_as_good(const ObjectiveValue& a, const ObjectiveValue& b) const { return !better(b, a); }
};

struct BuiltinParams {
  std::optional<Direction> direction;
  /// Key into TemporalArc::values; defaults to the objective name.
  std::optional<std::string> key;
};

namespace detail {

inline bool nonneg_rational(const ObjectiveValue& v) { return v.is_finite() && v.rational() >= 0; }

inline bool natural(const ObjectiveValue& v) {
  return v.is_finite() && v.rational() >= 0 && v.rational().denominator() == 1;
}

inline ObjectiveSpec::ArcValue lookup_arc_value(std::string objective, std::string key,
                                                ObjectiveSpec::Domain domain) {
  return [objective = std::move(objective), key = std::move(key),
          domain = std::move(domain)](const TemporalArc& a) -> ObjectiveValue {
    auto it = a.values.find(key);
    if (it == a.values.end()) {
      throw InputError("arc '" + a.id + "' has no value '" + key + "' for objective '" + objective + "'");
    }
    if (!domain(it->second)) {
      throw InputError("arc '" + a.id + "' value " + to_string(it->second) + " is outside the domain of objective '" +
                       objective + "'");
    }
    return it->second;
  };
}

inline ObjectiveValue value_max(const ObjectiveValue& a, const ObjectiveValue& b) { return a < b ? b : a; }
inline ObjectiveValue value_min(const ObjectiveValue& a, const ObjectiveValue& b) { return b < a ? b : a; }

}  // namespace detail

/// Built-in objectives. Only `additive` takes a direction; the others have a fixed one
/// and reject a conflicting request.
inline ObjectiveSpec builtin(ObjectiveKind kind, std::string name, const BuiltinParams& params = {}) {
  ObjectiveSpec spec;
  spec.name = std::move(name);
  spec.kind = kind;
  const std::string key = params.key.value_or(spec.name);

  auto fixed_direction = [&](Direction d) {
    if (params.direction && *params.direction != d) {
      throw ConfigError("objective '" + spec.name + "' of kind " + std::string(to_string(kind)) +
                        " only supports direction " + std::string(to_string(d)));
    }
    spec.direction = d;
  };

  switch (kind) {
    case ObjectiveKind::earliest_arrival:
      fixed_direction(Direction::min);
      spec.neutral = Rational(0);
      spec.combine = detail::value_max;
      spec.arc_value = [](const TemporalArc& a) { return ObjectiveValue(a.arrival()); };
      spec.value_domain = detail::nonneg_rational;
      spec.declared_isotonic = spec.declared_monotone = true;
      break;

    case ObjectiveKind::latest_start:
      fixed_direction(Direction::max);
      spec.neutral = ObjectiveValue::plus_infinity();
      spec.combine = detail::value_min;
      spec.arc_value = [](const TemporalArc& a) { return ObjectiveValue(a.tau); };
      spec.value_domain = [](const ObjectiveValue& v) { return v.is_plus_infinity() || detail::nonneg_rational(v); };
      spec.declared_isotonic = spec.declared_monotone = true;
      break;

    case ObjectiveKind::additive:
      spec.direction = params.direction.value_or(Direction::min);
      spec.neutral = Rational(0);
      spec.combine = [](const ObjectiveValue& a, const ObjectiveValue& b) -> ObjectiveValue {
        if (!a.is_finite() || !b.is_finite()) throw InputError("additive objective received an infinite value");
        return ObjectiveValue(a.rational() + b.rational());
      };
      spec.value_domain = [](const ObjectiveValue& v) { return v.is_finite(); };
      spec.declared_isotonic = true;
      break;

    case ObjectiveKind::decay_max:
      // max{a - 1, b} is evaluated over Q; b >= 0 brings the result back into Q>=0.
      fixed_direction(Direction::min);
      spec.neutral = Rational(0);
      spec.combine = [](const ObjectiveValue& a, const ObjectiveValue& b) {
        return detail::value_max(ObjectiveValue(a.rational() - 1), b);
      };
      spec.value_domain = detail::nonneg_rational;
      spec.declared_isotonic = true;
      break;

    case ObjectiveKind::min_combine:
      fixed_direction(Direction::min);
      spec.neutral = ObjectiveValue::plus_infinity();
      spec.combine = detail::value_min;
      spec.value_domain = [](const ObjectiveValue& v) { return !v.is_minus_infinity(); };
      spec.declared_isotonic = true;
      break;

    case ObjectiveKind::category_max:
      fixed_direction(Direction::max);
      spec.neutral = Rational(0);
      spec.combine = [](const ObjectiveValue& a, const ObjectiveValue& b) {
        return (a == ObjectiveValue(0) || a == b) ? b : ObjectiveValue(0);
      };
      spec.value_domain = detail::natural;
      break;

    case ObjectiveKind::last_if_nondecreasing:
      fixed_direction(Direction::min);
      spec.neutral = ObjectiveValue::minus_infinity();
      spec.combine = [](const ObjectiveValue& a, const ObjectiveValue& b) { return a <= b ? b : ObjectiveValue(0); };
      spec.value_domain = [](const ObjectiveValue& v) {
        return v.is_minus_infinity() || (v.is_finite() && v.rational().denominator() == 1);
      };
      break;

    case ObjectiveKind::custom:
      throw ConfigError("builtin() cannot construct a custom objective");
  }

  if (!spec.arc_value) spec.arc_value = detail::lookup_arc_value(spec.name, key, spec.value_domain);
  return spec;
}

/// p-vector of objective values aligned with an ObjectiveSuite.
class Image {
 public:
  Image() = default;
  explicit Image(std::vector<ObjectiveValue> values) : values_(std::move(values)) {}
  Image(std::initializer_list<ObjectiveValue> values) : values_(values) {}

  std::size_t size() const { return values_.size(); }
  const ObjectiveValue& operator[](std::size_t j) const { return values_[j]; }
  std::span<const ObjectiveValue> values() const { return values_; }

  friend bool operator==(const Image&, const Image&) = default;

  std::size_t hash() const {
    std::size_t h = values_.size();
    for (const auto& v : values_) h ^= v.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  std::vector<ObjectiveValue> values_;
};

struct ImageHash {
  std::size_t operator()(const Image& im) const { return im.hash(); }
};

inline std::ostream& operator<<(std::ostream& os, const Image& im) {
  os << '(';
  for (std::size_t j = 0; j < im.size(); ++j) os << (j ? "," : "") << im[j];
  return os << ')';
}

/// Ordered objective list whose first entry is earliest arrival.
class ObjectiveSuite {
 public:
  explicit ObjectiveSuite(std::vector<ObjectiveSpec> objectives) : objectives_(std::move(objectives)) {
    if (objectives_.empty()) throw ConfigError("objective suite needs at least one objective");
    if (objectives_.front().kind != ObjectiveKind::earliest_arrival) {
      throw ConfigError("the first objective must be earliest_arrival");
    }
    for (const auto& o : objectives_) {
      if (!o.combine || !o.arc_value) throw ConfigError("objective '" + o.name + "' lacks combine or arc_value");
    }
  }

  std::size_t size() const { return objectives_.size(); }
  const ObjectiveSpec& operator[](std::size_t j) const { return objectives_[j]; }
  std::span<const ObjectiveSpec> objectives() const { return objectives_; }

  bool all_isotonic() const {
    return std::all_of(objectives_.begin(), objectives_.end(), [](const auto& o) { return o.declared_isotonic; });
  }

  bool all_additive() const {
    return std::all_of(objectives_.begin() + 1, objectives_.end(), [](const auto& o) { return o.rational_additive(); });
  }

  Image neutral_image() const {
    std::vector<ObjectiveValue> out;
    out.reserve(size());
    for (const auto& o : objectives_) out.push_back(o.neutral);
    return Image(std::move(out));
  }

  /// f_j(r) for every arc and objective, domain-checked. Row r belongs to arc r.
  std::vector<Image> arc_values(const TemporalGraph& g) const {
    std::vector<Image> rows;
    rows.reserve(g.arc_count());
    for (const TemporalArc& a : g.arcs()) {
      std::vector<ObjectiveValue> row;
      row.reserve(size());
      for (const auto& o : objectives_) {
        ObjectiveValue v = o.arc_value(a);
        if (!o.value_domain(v)) {
          throw InputError("arc '" + a.id + "' value " + to_string(v) + " is outside the domain of objective '" +
                           o.name + "'");
        }
        row.push_back(std::move(v));
      }
      rows.emplace_back(std::move(row));
    }
    return rows;
  }

  /// Componentwise w_j (+)_j f_j(r).
  Image extend(const Image& w, const Image& arc_row) const {
    std::vector<ObjectiveValue> out;
    out.reserve(size());
    for (std::size_t j = 0; j < size(); ++j) out.push_back(objectives_[j].combine(w[j], arc_row[j]));
    return Image(std::move(out));
  }

  void check_aligned(const Image& a) const {
    if (a.size() != size()) {
      throw InputError("image has " + std::to_string(a.size()) + " components, suite has " + std::to_string(size()));
    }
  }

 private:
  std::vector<ObjectiveSpec> objectives_;
};

/// Left fold of each combine over the path's arc values, starting from the neutral element.
inline Image path_image(const ObjectiveSuite& suite, const TemporalGraph& g, const TemporalPath& p) {
  if (!validate_path(g, p)) throw InputError("path_image: path is not a valid temporal path");
  Image w = suite.neutral_image();
  std::vector<ObjectiveValue> row(suite.size());
  for (ArcIndex r : p.arcs) {
    for (std::size_t j = 0; j < suite.size(); ++j) row[j] = suite[j].arc_value(g.arc(r));
    w = suite.extend(w, Image(row));
  }
  return w;
}

/// a is at least as good as b in every objective.
inline bool weakly_dominates(const ObjectiveSuite& suite, const Image& a, const Image& b) {
  suite.check_aligned(a);
  suite.check_aligned(b);
  for (std::size_t j = 0; j < suite.size(); ++j) {
    if (suite[j].better(b[j], a[j])) return false;
  }
  return true;
}

inline bool dominates(const ObjectiveSuite& suite, const Image& a, const Image& b) {
  return weakly_dominates(suite, a, b) && a != b;
}

/// Lexicographic order with each component compared in its own "better first" direction.
struct BetterFirst {
  const ObjectiveSuite* suite;
  bool operator()(const Image& a, const Image& b) const {
    for (std::size_t j = 0; j < suite->size(); ++j) {
      if (a[j] == b[j]) continue;
      return (*suite)[j].better(a[j], b[j]);
    }
    return false;
  }
};

/// Deduplicated, pairwise-nondominated subset, sorted with BetterFirst.
inline std::vector<Image> nondominated_filter(const ObjectiveSuite& suite, std::vector<Image> images) {
  for (const auto& im : images) suite.check_aligned(im);
  std::sort(images.begin(), images.end(), BetterFirst{&suite});
  images.erase(std::unique(images.begin(), images.end()), images.end());
  std::vector<Image> kept;
  for (auto& candidate : images) {
    bool dominated = std::any_of(images.begin(), images.end(),
                                 [&](const Image& other) { return dominates(suite, other, candidate); });
    if (!dominated) kept.push_back(candidate);
  }
  return kept;
}

enum class Law { left_neutrality, associativity, isotonicity, monotonicity, domain_closure };

inline std::string_view to_string(Law law) {
  switch (law) {
    case Law::left_neutrality: return "left_neutrality";
    case Law::associativity: return "associativity";
    case Law::isotonicity: return "isotonicity";
    case Law::monotonicity: return "monotonicity";
    case Law::domain_closure: return "domain_closure";
  }
  return "?";
}

struct LawViolation {
  Law law;
  /// (b) for neutrality; (a, b, c) for associativity; (a, a', b) for isotonicity;
  /// (a, b) for monotonicity and closure.
  std::vector<ObjectiveValue> witness;
};

/// Outcome of sampling the algebraic laws of one objective.
struct LawReport {
  std::string objective;
  bool declared_isotonic = false;
  bool declared_monotone = false;
  std::vector<LawViolation> violations;

  bool holds(Law law) const {
    return std::none_of(violations.begin(), violations.end(), [&](const auto& v) { return v.law == law; });
  }

  std::optional<LawViolation> first(Law law) const {
    for (const auto& v : violations) {
      if (v.law == law) return v;
    }
    return std::nullopt;
  }

  bool has_violation(Law law, std::span<const ObjectiveValue> witness) const {
    return std::any_of(violations.begin(), violations.end(), [&](const auto& v) {
      return v.law == law && std::equal(v.witness.begin(), v.witness.end(), witness.begin(), witness.end());
    });
  }

  /// Declared-true flags were not refuted and declared-false flags were refuted.
  bool flags_confirmed() const {
    return holds(Law::isotonicity) == declared_isotonic && holds(Law::monotonicity) == declared_monotone;
  }
};

/// Exhaustively checks the laws over all tuples drawn from `samples`.
inline LawReport verify_spec_laws(const ObjectiveSpec& spec, std::span<const ObjectiveValue> samples) {
  LawReport report;
  report.objective = spec.name;
  report.declared_isotonic = spec.declared_isotonic;
  report.declared_monotone = spec.declared_monotone;
  auto add = [&](Law law, std::vector<ObjectiveValue> w) { report.violations.push_back({law, std::move(w)}); };

  for (const auto& b : samples) {
    if (spec.combine(spec.neutral, b) != b) add(Law::left_neutrality, {b});
  }
  for (const auto& a : samples) {
    for (const auto& b : samples) {
      ObjectiveValue ab = spec.combine(a, b);
      if (!spec.value_domain(ab)) add(Law::domain_closure, {a, b});
      // min: a <= a (+) b; max: a >= a (+) b.
      if (spec.better(ab, a)) add(Law::monotonicity, {a, b});
      for (const auto& c : samples) {
        if (spec.combine(ab, c) != spec.combine(a, spec.combine(b, c))) add(Law::associativity, {a, b, c});
      }
    }
  }
  for (const auto& a : samples) {
    for (const auto& a2 : samples) {
      if (!(a <= a2)) continue;
      for (const auto& b : samples) {
        if (!(spec.combine(a, b) <= spec.combine(a2, b))) add(Law::isotonicity, {a, a2, b});
      }
    }
  }
  return report;
}

}  // namespace mtsp

#endif  // MTSP_OBJECTIVES_HPP
