#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace spin7 {

// All invariants, series coefficients and form coefficients are exact.
// No floating point appears anywhere in the library.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

} // namespace spin7
