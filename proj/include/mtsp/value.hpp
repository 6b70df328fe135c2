#ifndef MTSP_VALUE_HPP
#define MTSP_VALUE_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "mtsp/rational.hpp"

namespace mtsp {

/// Element of an objective's value set: a rational or one of the two infinities.
///
/// Ordered as -inf < every rational < +inf. Which of the three kinds an
/// objective admits is decided by that objective's domain predicate.
class ObjectiveValue {
 public:
  enum class Kind : std::int8_t { minus_infinity = -1, finite = 0, plus_infinity = 1 };

  constexpr ObjectiveValue() = default;
  ObjectiveValue(Rational q) : kind_(Kind::finite), finite_(q) {}  // NOLINT(implicit)
  ObjectiveValue(std::int64_t n) : kind_(Kind::finite), finite_(n) {}  // NOLINT(implicit)
  ObjectiveValue(int n) : kind_(Kind::finite), finite_(n) {}  // NOLINT(implicit)

  static ObjectiveValue plus_infinity() { return ObjectiveValue(Kind::plus_infinity); }
  static ObjectiveValue minus_infinity() { return ObjectiveValue(Kind::minus_infinity); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  bool is_plus_infinity() const { return kind_ == Kind::plus_infinity; }
  bool is_minus_infinity() const { return kind_ == Kind::minus_infinity; }

  /// Only valid when is_finite().
  const Rational& rational() const { return finite_; }

  friend bool operator==(const ObjectiveValue& a, const ObjectiveValue& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::finite || a.finite_ == b.finite_);
  }

  friend std::strong_ordering operator<=>(const ObjectiveValue& a, const ObjectiveValue& b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    if (a.kind_ != Kind::finite || a.finite_ == b.finite_) return std::strong_ordering::equal;
    return a.finite_ < b.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  std::size_t hash() const {
    if (kind_ != Kind::finite) return static_cast<std::size_t>(static_cast<int>(kind_) + 3) * 0x51ed27ULL;
    return hash_value(finite_);
  }

 private:
  explicit ObjectiveValue(Kind k) : kind_(k) {}

  Kind kind_ = Kind::finite;
  Rational finite_{0};
};

/// "inf", "-inf", or the rational serialization.
inline std::string to_string(const ObjectiveValue& v) {
  switch (v.kind()) {
    case ObjectiveValue::Kind::plus_infinity: return "inf";
    case ObjectiveValue::Kind::minus_infinity: return "-inf";
    case ObjectiveValue::Kind::finite: break;
  }
  return to_string(v.rational());
}

inline ObjectiveValue parse_value(std::string_view text) {
  if (text == "inf" || text == "+inf") return ObjectiveValue::plus_infinity();
  if (text == "-inf") return ObjectiveValue::minus_infinity();
  return ObjectiveValue(parse_rational(text));
}

inline std::ostream& operator<<(std::ostream& os, const ObjectiveValue& v) { return os << to_string(v); }

}  // namespace mtsp

#endif  // MTSP_VALUE_HPP
