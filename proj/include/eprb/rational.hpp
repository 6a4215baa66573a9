#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace eprb {

// Exact arithmetic for table statistics. Frequencies, DS bounds and
// contextual stats are rationals; floating point only enters for the
// continuum machinery (densities, quadrature, simulation).
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

inline std::string to_string(const Rational& r) { return r.str(); }

/// Exact dyadic rational equal to the given double. Requires a finite value.
Rational rational_from_double(double x);

}  // namespace eprb
