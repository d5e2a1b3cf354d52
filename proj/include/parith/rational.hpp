#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace parith {

// Exact arithmetic everywhere in the default solver mode; doubles are only
// used by the float-mode solver for scale experiments.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

inline std::string to_string(const Rational& q) { return q.str(); }

// Scalar traits used by the templated solver: exact comparison for
// rationals, tolerance-based for doubles.
template <typename T>
struct ScalarTraits {
    static bool is_zero(const T& v) { return v == 0; }
    static bool is_negative(const T& v) { return v < 0; }
    static bool is_positive(const T& v) { return v > 0; }
    static T from(const Rational& q) { return T(q); }
};

template <>
struct ScalarTraits<double> {
    static constexpr double eps = 1e-9;
    static bool is_zero(double v) { return v > -eps && v < eps; }
    static bool is_negative(double v) { return v <= -eps; }
    static bool is_positive(double v) { return v >= eps; }
    static double from(const Rational& q) { return q.convert_to<double>(); }
};

}  // namespace parith
