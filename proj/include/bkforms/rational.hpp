#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace bkforms {

// Exact coefficient type for scalar (circle-free) series computations.
using Rational = boost::multiprecision::cpp_rational;

inline double coeff_distance(const Rational& a, const Rational& b) {
    const Rational d = a - b;
    return d < 0 ? -static_cast<double>(d) : static_cast<double>(d);
}

inline double coeff_abs_bound(const Rational& a) {
    return a < 0 ? -static_cast<double>(a) : static_cast<double>(a);
}

}  // namespace bkforms
