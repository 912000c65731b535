// Shared test data and independent oracles. The oracles deliberately avoid
// the library's optimized code paths: point counting by plain box scans,
// volumes by Ehrhart finite differences, constant terms by nested expansion.
#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "latmut/laurent.hpp"
#include "latmut/polytope.hpp"
#include "latmut/rational_polytope.hpp"

namespace latmut::testing {

inline Vec V(std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs) v.push_back(Int(x));
    return v;
}

inline LaurentPolynomial mk(int dim,
                            std::initializer_list<std::pair<std::vector<long>, long>> ts) {
    LaurentPolynomial f(dim);
    for (const auto& [e, c] : ts) {
        Vec v;
        for (long x : e) v.push_back(Int(x));
        f.add_term(v, Rat(c));
    }
    return f;
}

// ----- fixed polytopes -----

inline LatticePolytope p2_triangle() {
    return LatticePolytope::hull({V({1, 0}), V({0, 1}), V({-1, -1})});
}

inline LatticePolytope cube3() {
    std::vector<Vec> pts;
    for (int a = -1; a <= 1; a += 2)
        for (int b = -1; b <= 1; b += 2)
            for (int c = -1; c <= 1; c += 2) pts.push_back(V({a, b, c}));
    return LatticePolytope::hull(pts);
}

inline LatticePolytope simplex_1113() {
    return LatticePolytope::hull({V({1, 0, 0}), V({0, 1, 0}), V({0, 0, 1}), V({-1, -1, -3})});
}

inline LatticePolytope simplex_1146() {
    return LatticePolytope::hull({V({-1, -1, -3}), V({0, 0, 1}), V({0, 1, 0}), V({4, 3, 6})});
}

inline LatticePolytope simplex_p3() {
    return LatticePolytope::hull({V({1, 0, 0}), V({0, 1, 0}), V({0, 0, 1}), V({-1, -1, -1})});
}

inline LatticePolytope simplex_p4() {
    return LatticePolytope::hull({V({1, 0, 0, 0}), V({0, 1, 0, 0}), V({0, 0, 1, 0}),
                                  V({0, 0, 0, 1}), V({-1, -1, -1, -1})});
}

// The 4-dimensional canonical, non-reflexive polytope with quasi-period
// collapse (n = 4 member of the family).
inline LatticePolytope pk4() {
    return LatticePolytope::hull({V({2, 2, 1, 1}), V({2, 1, 2, 1}), V({0, 1, 0, 0}),
                                  V({0, 0, 1, 0}), V({0, 0, 0, 1}), V({-1, -1, -1, -1})});
}

// The 6-vertex reflexive 3-polytope with a pentagonal facet carrying two
// decomposition classes.
inline LatticePolytope pentagon_example_polytope() {
    return LatticePolytope::hull({V({-1, -1, -3}), V({1, 0, 0}), V({0, 1, 0}), V({0, 0, 1}),
                                  V({0, -1, -2}), V({-1, 1, -1})});
}

// ----- fixed Laurent polynomials -----

// f = xyz + x + y + z + 1/x + 1/(xyz)
inline LaurentPolynomial hexahedron_f() {
    return mk(3, {{{1, 1, 1}, 1},
                  {{1, 0, 0}, 1},
                  {{0, 1, 0}, 1},
                  {{0, 0, 1}, 1},
                  {{-1, 0, 0}, 1},
                  {{-1, -1, -1}, 1}});
}

// The 18-term pair with equal periods and equal Newton polytopes, plus the
// 16-term middle polynomial connecting them.
inline LaurentPolynomial pair18_f1() {
    return mk(3, {{{1, 0, 0}, 1},  {{1, -1, 0}, 2},  {{1, -2, 0}, 1},  {{0, 1, 0}, 1},
                  {{0, 0, 1}, 1},  {{0, 0, -1}, 1},  {{0, -1, 1}, 1},  {{0, -1, 0}, 4},
                  {{0, -1, -1}, 1}, {{-1, 1, 1}, 1}, {{-1, 1, 0}, 2},  {{-1, 1, -1}, 1},
                  {{-1, 0, 1}, 2}, {{-1, 0, 0}, 5},  {{-1, 0, -1}, 2}, {{-2, 1, 1}, 1},
                  {{-2, 1, 0}, 2}, {{-2, 1, -1}, 1}});
}

inline LaurentPolynomial pair18_f2() {
    return mk(3, {{{1, 0, 0}, 1},  {{1, -1, 0}, 2},  {{1, -2, 0}, 1},  {{0, 1, 0}, 1},
                  {{0, 0, 1}, 1},  {{0, 0, -1}, 1},  {{0, -1, 1}, 1},  {{0, -1, 0}, 3},
                  {{0, -1, -1}, 1}, {{-1, 1, 1}, 1}, {{-1, 1, 0}, 3},  {{-1, 1, -1}, 1},
                  {{-1, 0, 1}, 2}, {{-1, 0, 0}, 4},  {{-1, 0, -1}, 2}, {{-2, 1, 1}, 1},
                  {{-2, 1, 0}, 2}, {{-2, 1, -1}, 1}});
}

inline LaurentPolynomial pair18_middle() {
    return mk(3, {{{1, 0, 2}, 1},  {{1, 0, 1}, 2},   {{1, 0, 0}, 1},   {{0, 1, 1}, 1},
                  {{0, 1, 0}, 1},  {{0, 0, 1}, 3},   {{0, 0, -1}, 2},  {{0, -1, 1}, 1},
                  {{0, -1, 0}, 1}, {{-1, 1, 0}, 1},  {{-1, 1, -1}, 1}, {{-1, 0, 0}, 2},
                  {{-1, 0, -1}, 2}, {{-1, 0, -2}, 1}, {{-1, -1, 0}, 1}, {{-1, -1, -1}, 1}});
}

// The 4-dimensional pair with equal periods but different dual delta-vectors.
inline LaurentPolynomial sublattice_f1() {
    return mk(4, {{{1, 1, 2, 1}, 1},
                  {{1, 0, 0, 0}, 1},
                  {{0, 1, 0, 0}, 1},
                  {{0, 0, 1, 0}, 1},
                  {{0, -1, -1, 0}, 1},
                  {{-2, -1, -2, -1}, 1}});
}

inline LaurentPolynomial sublattice_f2() {
    return mk(4, {{{1, 1, 2, 3}, 1},
                  {{1, 0, 0, 0}, 1},
                  {{0, 1, 0, 0}, 1},
                  {{0, 0, 1, 0}, 1},
                  {{0, -1, -1, 0}, 1},
                  {{-2, -1, -2, -3}, 1}});
}

// The 10-term polynomial whose Newton polytope mutates with w = (0,0,-1) and
// F = conv{0, e1, e2}, and its printed image.
inline LaurentPolynomial wedge_f() {
    return mk(3, {{{0, -1, 2}, 1},
                  {{0, 0, 2}, 2},
                  {{0, 1, 2}, 1},
                  {{1, -1, 2}, 2},
                  {{1, 0, 2}, 2},
                  {{2, -1, 2}, 1},
                  {{-2, 0, 0}, 1},
                  {{4, -2, 0}, 1},
                  {{0, 2, 0}, 1},
                  {{0, 0, -1}, 1}});
}

inline LaurentPolynomial wedge_f_mutated() {
    return mk(3, {{{0, -1, 2}, 1},
                  {{4, -2, 0}, 1},
                  {{0, 2, 0}, 1},
                  {{-2, 0, 0}, 1},
                  {{1, 0, -1}, 1},
                  {{0, 1, -1}, 1},
                  {{0, 0, -1}, 1}});
}

inline LatticePolytope wedge_polytope() {
    return LatticePolytope::hull({V({0, 1, 2}), V({0, -1, 2}), V({2, -1, 2}), V({0, 2, 0}),
                                  V({4, -2, 0}), V({-2, 0, 0}), V({0, 0, -1})});
}

inline LatticePolytope wedge_mutated_polytope() {
    return LatticePolytope::hull({V({0, -1, 2}), V({4, -2, 0}), V({0, 2, 0}), V({-2, 0, 0}),
                                  V({1, 0, -1}), V({0, 1, -1}), V({0, 0, -1})});
}

// ----- independent oracles -----

// Counts lattice points of m*Q by scanning the full bounding box and testing
// every inequality directly.
inline Int oracle_count(const RationalPolytope& Q, const Int& m) {
    if (m == 0) return 1;
    const int n = Q.dim;
    std::vector<Int> lo(n), hi(n);
    for (int j = 0; j < n; ++j) {
        Rat mn = Q.vertices[0][j], mx = mn;
        for (const auto& v : Q.vertices) {
            mn = std::min(mn, v[j]);
            mx = std::max(mx, v[j]);
        }
        lo[j] = ceil_rat(Rat(m) * mn);
        hi[j] = floor_rat(Rat(m) * mx);
    }
    Int count = 0;
    Vec x(n);
    std::function<void(int)> rec = [&](int j) {
        if (j == n) {
            for (const auto& row : Q.rows)
                if (Rat(dot(row.normal, x)) < Rat(m) * row.level) return;
            ++count;
            return;
        }
        for (Int t = lo[j]; t <= hi[j]; ++t) {
            x[j] = t;
            rec(j + 1);
        }
    };
    rec(0);
    return count;
}

// n! * volume as the n-th finite difference of the Ehrhart counts, a path
// independent of the facet-pyramid recursion.
inline Int oracle_volume(const LatticePolytope& P) {
    const int n = P.ambient_dim();
    std::vector<Int> c;
    for (int m = 0; m <= n; ++m) c.push_back(P.lattice_point_count(Int(m)));
    for (int d = 0; d < n; ++d)
        for (std::size_t i = 0; i + 1 < c.size(); ++i) c[i] = c[i + 1] - c[i];
    return c[0];
}

// Constant term of f^k by direct k-fold expansion.
inline Rat oracle_period_coeff(const LaurentPolynomial& f, int k) {
    if (k == 0) return 1;
    std::vector<std::pair<Vec, Rat>> terms(f.terms().begin(), f.terms().end());
    Rat total = 0;
    std::function<void(int, const Vec&, const Rat&)> rec = [&](int depth, const Vec& e,
                                                               const Rat& c) {
        if (depth == k) {
            if (is_zero(e)) total += c;
            return;
        }
        for (const auto& [te, tc] : terms) rec(depth + 1, add(e, te), c * tc);
    };
    rec(0, zero_vec(f.dim()), Rat(1));
    return total;
}

// Pullback of f along a rational map given by (numerator, denominator)
// coordinate pairs; throws if the result is not a Laurent polynomial.
inline LaurentPolynomial pullback(
    const LaurentPolynomial& f,
    const std::vector<std::pair<LaurentPolynomial, LaurentPolynomial>>& phi) {
    const int n = f.dim();
    std::vector<Int> K(n, Int(0)), L(n, Int(0));
    for (const auto& [e, c] : f.terms())
        for (int i = 0; i < n; ++i) {
            if (e[i] > K[i]) K[i] = e[i];
            if (-e[i] > L[i]) L[i] = -e[i];
        }
    LaurentPolynomial D = LaurentPolynomial::constant(n, 1);
    for (int i = 0; i < n; ++i)
        D = multiply(D, multiply(power(phi[i].first, L[i]), power(phi[i].second, K[i])));
    LaurentPolynomial N(n);
    for (const auto& [e, c] : f.terms()) {
        LaurentPolynomial t = LaurentPolynomial::constant(n, c);
        for (int i = 0; i < n; ++i)
            t = multiply(t, multiply(power(phi[i].first, L[i] + e[i]),
                                     power(phi[i].second, K[i] - e[i])));
        N = add(N, t);
    }
    auto q = divide_exact(N, D);
    if (!q) throw std::runtime_error("pullback: not a Laurent polynomial");
    return *q;
}

}  // namespace latmut::testing
