#ifndef MTSP_RATIONAL_HPP
#define MTSP_RATIONAL_HPP

#include <charconv>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

#include "mtsp/errors.hpp"

// Boost 1.74's mixed (integer, rational) equality recurses forever under C++20's
// rewritten comparison candidates. Exact non-template overloads win resolution.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<std::int64_t>& a, int b) { return a == static_cast<std::int64_t>(b); }
}  // namespace boost

namespace mtsp {

/// Exact rational number, always kept in lowest terms with a positive denominator.
using Rational = boost::rational<std::int64_t>;

namespace detail {

inline std::int64_t parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) {
    throw InputError("malformed rational '" + std::string(whole) + "'");
  }
  std::int64_t out = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), out);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw InputError("malformed rational '" + std::string(whole) + "'");
  }
  return out;
}

}  // namespace detail

/// Parses "[+-]digits", "[+-]digits/digits" or "[+-]digits.digits".
inline Rational parse_rational(std::string_view text) {
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  Rational value;
  if (auto slash = rest.find('/'); slash != std::string_view::npos) {
    std::int64_t num = detail::parse_digits(rest.substr(0, slash), text);
    std::int64_t den = detail::parse_digits(rest.substr(slash + 1), text);
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    value = Rational(num, den);
  } else if (auto dot = rest.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = rest.substr(0, dot);
    std::string_view frac_part = rest.substr(dot + 1);
    if (frac_part.empty() || frac_part.size() > 18) {
      throw InputError("malformed rational '" + std::string(text) + "'");
    }
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    std::int64_t whole = detail::parse_digits(int_part, text);
    std::int64_t frac = detail::parse_digits(frac_part, text);
    value = Rational(whole) + Rational(frac, scale);
  } else {
    value = Rational(detail::parse_digits(rest, text));
  }
  return negative ? -value : value;
}

/// Lowest-terms "n/d", or just "n" for integers.
inline std::string to_string(const Rational& q) {
  std::string out = std::to_string(q.numerator());
  if (q.denominator() != 1) {
    out += '/';
    out += std::to_string(q.denominator());
  }
  return out;
}

inline std::size_t hash_value(const Rational& q) {
  std::size_t h = std::hash<std::int64_t>{}(q.numerator());
  return h ^ (std::hash<std::int64_t>{}(q.denominator()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace mtsp

#endif  // MTSP_RATIONAL_HPP
