#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace itl {

// Exact arbitrary-precision rational scalar. All bound arithmetic, Turan
// densities and optimization constants go through this type; no floating
// point is used for any certified value.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt floor_rat(const Rational& r) {
  BigInt q = numerator(r) / denominator(r);
  if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

inline BigInt ceil_rat(const Rational& r) { return -floor_rat(-r); }

inline long long to_ll(const BigInt& v) { return v.convert_to<long long>(); }

inline Rational rat(long long p, long long q = 1) {
  return Rational(BigInt(p), BigInt(q));
}

// "p/q", or just "p" when q == 1.
inline std::string rat_str(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace itl
