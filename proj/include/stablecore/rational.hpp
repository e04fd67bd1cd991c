#pragma once

#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace stablecore {

/// Exact rational scalar used by every polynomial and matrix in the library.
using Rational = boost::multiprecision::mpq_rational;

/// "p/q" with the denominator always present, e.g. "1/2", "-3/1".
inline std::string to_fraction_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

/// Shortest form: "3", "-1/2".
inline std::string to_short_string(const Rational& q) { return q.str(); }

}  // namespace stablecore
