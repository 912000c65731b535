// Integer and rational coordinate vectors. Lattice points (N side) and
// linear functionals (M side) both use Vec; the pairing is dot().
#pragma once

#include <algorithm>
#include <ostream>
#include <vector>

#include "latmut/numbers.hpp"

namespace latmut {

using Vec = std::vector<Int>;
using QVec = std::vector<Rat>;

inline Int dot(const Vec& u, const Vec& v) {
    Int s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

inline Rat dot_q(const Vec& u, const QVec& v) {
    Rat s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += Rat(u[i]) * v[i];
    return s;
}

inline Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec scale(const Int& k, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
    return r;
}

inline Vec negate(const Vec& a) { return scale(-1, a); }

inline bool is_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

inline Vec zero_vec(int n) { return Vec(static_cast<std::size_t>(n), Int(0)); }

inline Int content(const Vec& a) {
    Int g = 0;
    for (const Int& x : a) g = gcd(g, x);
    return g;
}

inline bool is_primitive(const Vec& a) { return content(a) == 1; }

// Divides out the gcd. The zero vector is returned unchanged.
inline Vec make_primitive(const Vec& a) {
    Int g = content(a);
    if (g <= 1) return a;
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] / g;
    return r;
}

inline std::ostream& operator<<(std::ostream& os, const Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ' ';
        os << v[i];
    }
    return os;
}

}  // namespace latmut
