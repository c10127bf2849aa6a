#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace capgames {

/// Exact rational number. All delays, payoffs, welfare and potential values
/// are held in this type; equilibrium logic never touches floating point.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p", "p/q" or a plain decimal such as "-0.25" (converted exactly
/// as p/10^k). Returns nullopt on malformed input.
std::optional<Rational> parse_rational(const std::string& text);

/// Like parse_rational but throws std::invalid_argument on failure.
Rational parse_rational_or_throw(const std::string& text);

/// Canonical form used in JSON and CSV output: "p" when the denominator is
/// one, "p/q" otherwise.
std::string format_rational(const Rational& value);

/// A delay/payoff value extended with a +infinity sentinel, ordered above
/// every finite Rational. Used where an empty strategy space must be
/// represented (never as an approximate large number).
struct ExtendedValue {
  bool infinite = false;
  Rational value;

  static ExtendedValue infinity() { return ExtendedValue{true, Rational(0)}; }
  static ExtendedValue finite(Rational v) { return ExtendedValue{false, std::move(v)}; }

  friend bool operator==(const ExtendedValue& a, const ExtendedValue& b) {
    if (a.infinite || b.infinite) return a.infinite == b.infinite;
    return a.value == b.value;
  }
  friend bool operator<(const ExtendedValue& a, const ExtendedValue& b) {
    if (a.infinite) return false;
    if (b.infinite) return true;
    return a.value < b.value;
  }
};

std::string format_extended(const ExtendedValue& value);

}  // namespace capgames
