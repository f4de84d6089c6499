#ifndef CHEEGER_RATIONAL_HPP
#define CHEEGER_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace cheeger {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational, always in lowest terms with positive denominator.
// Backs every Cheeger constant so that minima over ratios are never
// decided by floating-point rounding.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den) {
    return Rational(BigInt(num), BigInt(den));
}

inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline double to_double(const Rational& r) {
    return r.convert_to<double>();
}

} // namespace cheeger

#endif
