#include "capgames/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace capgames {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
  std::string s = text;
  // trim
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return std::nullopt;
  size_t b = s.find_last_not_of(" \t\r\n");
  s = s.substr(a, b - a + 1);

  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  if (s.empty()) return std::nullopt;

  Rational result;
  size_t slash = s.find('/');
  size_t dot = s.find('.');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    BigInt d(den);
    if (d == 0) return std::nullopt;
    result = Rational(BigInt(num), d);
  } else if (dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (frac.empty()) frac = "0";
    if (!all_digits(whole) || !all_digits(frac)) return std::nullopt;
    BigInt den = 1;
    for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    result = Rational(BigInt(whole) * den + BigInt(frac), den);
  } else {
    if (!all_digits(s)) return std::nullopt;
    result = Rational(BigInt(s));
  }
  if (negative) result = -result;
  return result;
}

Rational parse_rational_or_throw(const std::string& text) {
  auto r = parse_rational(text);
  if (!r) throw std::invalid_argument("malformed rational: '" + text + "'");
  return *r;
}

std::string format_rational(const Rational& value) {
  std::string num = numerator(value).str();
  if (denominator(value) == 1) return num;
  return num + "/" + denominator(value).str();
}

std::string format_extended(const ExtendedValue& value) {
  if (value.infinite) return "inf";
  return format_rational(value.value);
}

}  // namespace capgames
