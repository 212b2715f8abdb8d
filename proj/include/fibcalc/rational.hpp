#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fibcalc {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always in lowest terms with positive
// denominator; the scalar type for all coefficient arithmetic.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(BigInt num, BigInt den) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  return Rational(std::move(num)) / Rational(std::move(den));
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline double to_double(const Rational& r) { return static_cast<double>(r); }

// Canonical text form: "p/q", or just "p" when q == 1.
inline std::string to_string(const Rational& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// Parses "p" or "p/q" (optional leading '-').
inline Rational parse_rational(const std::string& text) {
  const auto bad = [&] {
    return std::invalid_argument("malformed rational: \"" + text + "\"");
  };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (num.empty() || den.empty() || den.find('/') != std::string::npos)
      throw bad();
    BigInt d(den);
    if (d == 0) throw bad();
    return make_rational(BigInt(num), std::move(d));
  } catch (const std::runtime_error&) {
    throw bad();
  }
}

// Exact integer power with negative exponents allowed (base must be nonzero
// for e < 0).
inline Rational pow_rational(const Rational& base, std::int64_t e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("pow: zero base, negative exponent");
    return pow_rational(Rational(1) / base, -e);
  }
  Rational acc(1), b = base;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

}  // namespace fibcalc
