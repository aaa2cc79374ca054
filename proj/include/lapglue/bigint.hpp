#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace lapglue {

// Exact arithmetic types. Characteristic-polynomial coefficients of glued
// graphs overflow 64-bit integers well below desk scale, so everything
// integer-valued in the exact layer uses Int.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Int& v) { return v.convert_to<double>(); }
inline double to_double(const Rational& v) { return v.convert_to<double>(); }
inline double to_double(double v) { return v; }

} // namespace lapglue
