#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "vest/error.hpp"

namespace vest {

using BigInt = boost::multiprecision::cpp_int;
// cpp_rational keeps gcd(|p|, q) = 1 and q > 0 after every operation.
using Rational = boost::multiprecision::cpp_rational;

enum class Semiring { rational, gf2 };

inline const char* to_string(Semiring s) { return s == Semiring::gf2 ? "gf2" : "q"; }

inline bool is_binary(const Rational& x) { return x == 0 || x == 1; }

// GF(2) arithmetic on values already known to be 0 or 1.
inline Rational semiring_add(Semiring s, const Rational& a, const Rational& b) {
  if (s == Semiring::gf2) return (a == b) ? Rational(0) : Rational(1);
  return a + b;
}

inline Rational semiring_mul(Semiring s, const Rational& a, const Rational& b) {
  if (s == Semiring::gf2) return (a == 1 && b == 1) ? Rational(1) : Rational(0);
  return a * b;
}

/// "p/q", or "p" when q = 1.
inline std::string to_string(const Rational& x) {
  std::string out = boost::multiprecision::numerator(x).str();
  if (boost::multiprecision::denominator(x) != 1) {
    out += '/';
    out += boost::multiprecision::denominator(x).str();
  }
  return out;
}

inline std::string to_string(const BigInt& x) { return x.str(); }

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace detail

/// Accepts "[-]p" or "[-]p/q" with decimal digits; the result is canonical.
inline Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!detail::all_digits(num) || !detail::all_digits(den))
    throw Error(ErrorCode::schema_error, "malformed rational '" + std::string(text) + "'");
  BigInt p{std::string(num)};
  BigInt q{std::string(den)};
  if (q == 0)
    throw Error(ErrorCode::schema_error, "zero denominator in '" + std::string(text) + "'");
  if (negative) p = -p;
  return Rational(p, q);
}

inline BigInt factorial(unsigned k) {
  BigInt out = 1;
  for (unsigned i = 2; i <= k; ++i) out *= i;
  return out;
}

inline BigInt power(std::size_t base, std::size_t exponent) {
  BigInt out = 1;
  for (std::size_t i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace vest
