#pragma once

#include <charconv>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "sbvs/error.hpp"

namespace sbvs {

/// Exact positive fraction num/den in lowest terms. Balance bounds are always
/// compared as cleared integers, never as floating point.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den) {
    if (den <= 0 || num < 0) {
      throw precondition_error("rational must have non-negative numerator and positive denominator");
    }
    const auto g = std::gcd(num, den);
    return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
  }

  /// True iff 1/2 < num/den < 1, the admissible range for a balance factor.
  bool in_open_balance_range() const { return 2 * num > den && num < den; }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) { return a.num * b.den < b.num * a.den; }
};

/// Balance factor alpha; throws unless alpha lies strictly between 1/2 and 1.
inline Rational make_alpha(std::int64_t num, std::int64_t den) {
  auto r = Rational::make(num, den);
  if (!r.in_open_balance_range()) {
    throw precondition_error("alpha " + r.str() + " outside the open interval (1/2, 1)");
  }
  return r;
}

/// Parses "p/q". Malformed text is a parse error; an out-of-range value is a
/// precondition error.
inline Rational parse_alpha(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw ParseError(0, "alpha must be written as p/q, got '" + std::string(text) + "'");
  }
  auto parse_part = [&](std::string_view part) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty()) {
      throw ParseError(0, "alpha must be written as p/q, got '" + std::string(text) + "'");
    }
    return value;
  };
  const auto num = parse_part(text.substr(0, slash));
  const auto den = parse_part(text.substr(slash + 1));
  if (den == 0) throw ParseError(0, "alpha denominator is zero");
  return make_alpha(num, den);
}

}  // namespace sbvs
