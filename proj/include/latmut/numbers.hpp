// Exact arbitrary-precision integer/rational arithmetic helpers.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <tuple>

namespace latmut {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

// Floor/ceil division (cpp_int's operator/ truncates toward zero).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) == (b < 0))) ++q;
    return q;
}

inline Int floor_rat(const Rat& q) { return floor_div(numerator(q), denominator(q)); }
inline Int ceil_rat(const Rat& q) { return ceil_div(numerator(q), denominator(q)); }

// g = x*a + y*b with g = gcd(a,b) >= 0.
inline std::tuple<Int, Int, Int> ext_gcd(Int a, Int b) {
    Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        Int q = a / b;
        Int t = a - q * b; a = b; b = t;
        t = x0 - q * x1; x0 = x1; x1 = t;
        t = y0 - q * y1; y0 = y1; y1 = t;
    }
    if (a < 0) { a = -a; x0 = -x0; y0 = -y0; }
    return {a, x0, y0};
}

inline long long to_ll(const Int& a) {
    return a.convert_to<long long>();
}

inline std::string to_string(const Int& a) { return a.str(); }
inline std::string to_string(const Rat& q) { return q.str(); }

}  // namespace latmut
