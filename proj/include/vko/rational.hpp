#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "vko/errors.hpp"

namespace vko {

// Exact rational arithmetic; no floating point anywhere in the geometry.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Accepts "p" or "p/q" with optional sign on p.
inline Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw input_error("rational with zero denominator: " + text);
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw input_error("malformed rational: " + text);
  }
}

// Always "p/q" form, canonical (q > 0, gcd(p,q)=1).
inline std::string format_rational(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace vko
