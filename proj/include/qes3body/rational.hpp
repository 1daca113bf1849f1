#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qes3body {

// Exact coefficient ring: arbitrary-precision rationals, always reduced,
// denominator > 0 (both guaranteed by the backend).
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rational_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt rational_den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return rational_den(q) == 1; }

/// Rational from a possibly-negative denominator (the backend constructor
/// insists on a positive one).
inline Rational make_rational(BigInt num, BigInt den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(std::move(num), std::move(den));
}

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

inline std::string to_string(const Rational& q) {
  if (is_integer(q)) return rational_num(q).str();
  return rational_num(q).str() + "/" + rational_den(q).str();
}

/// Parses "n", "n/d" or a plain decimal like "-1.25" into an exact rational.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return make_rational(std::move(num), std::move(den));
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(BigInt(text));
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  std::size_t frac_len = text.size() - dot - 1;
  if (digits.empty() || digits == "-" || digits == "+")
    throw std::invalid_argument("bad rational literal '" + text + "'");
  BigInt num(digits);
  BigInt den = 1;
  for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
  return Rational(num, den);
}

inline Rational rational_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// gcd on rationals: gcd(a/b, c/d) = gcd(a,c)/lcm(b,d); used for content extraction.
inline Rational rational_gcd(const Rational& a, const Rational& b) {
  BigInt num = boost::multiprecision::gcd(rational_num(a), rational_num(b));
  BigInt den = boost::multiprecision::lcm(rational_den(a), rational_den(b));
  return Rational(num, den);
}

inline Rational binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  Rational r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r *= Rational(n - k + i, i);
  return r;
}

/// n(n-1)...(n-k+1)
inline Rational falling_factorial(std::int64_t n, std::int64_t k) {
  Rational r = 1;
  for (std::int64_t i = 0; i < k; ++i) r *= Rational(n - i);
  return r;
}

}  // namespace qes3body
