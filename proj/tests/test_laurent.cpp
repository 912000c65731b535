#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "latmut/laurent.hpp"
#include "latmut/mutation.hpp"

using namespace latmut;
using namespace latmut::testing;

namespace {

UnimodularMap shear_map() {
    SqMat M(3);
    long vals[9] = {1, -1, 1, 0, 1, -1, 0, 0, 1};
    for (int i = 0; i < 9; ++i) M.a[i] = vals[i];
    return UnimodularMap(M);
}

UnimodularMap random_unimodular(std::mt19937& rng, int n) {
    SqMat M = SqMat::identity(n);
    std::uniform_int_distribution<int> pick(0, n - 1), val(-2, 2);
    for (int step = 0; step < 6; ++step) {
        int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        Int c = val(rng);
        for (int k = 0; k < n; ++k) M.at(i, k) += c * M.at(j, k);
    }
    return UnimodularMap(M);
}

}  // namespace

TEST_CASE("multiplication basics") {
    auto f = pair18_f1();
    CHECK(multiply(f, LaurentPolynomial::constant(3, 1)) == f);

    auto g = mk(1, {{{1}, 1}, {{-1}, 1}});  // x + 1/x
    auto g2 = multiply(g, g);
    CHECK(g2 == mk(1, {{{2}, 1}, {{0}, 2}, {{-2}, 1}}));

    auto h = mk(2, {{{1, 0}, 1}, {{0, 1}, 1}, {{-1, -1}, 1}});
    CHECK(power(h, 3).coeff(zero_vec(2)) == 6);
}

TEST_CASE("period sequence of the 18-term polynomial") {
    auto seq = period_coeffs(pair18_f1(), 5);
    std::vector<Rat> expect = {1, 0, 28, 216, 3516, 49680};
    CHECK(seq.coeffs == expect);
    CHECK(period_coeffs(pair18_f2(), 5).coeffs == expect);
}

TEST_CASE("period sequence against the direct expansion oracle") {
    auto f = mk(2, {{{1, 0}, 1}, {{0, 1}, 1}, {{-1, -1}, 1}});
    auto seq = period_coeffs(f, 6);
    for (int k = 0; k <= 4; ++k) CHECK(seq.coeffs[k] == oracle_period_coeff(f, k));
    CHECK(seq.coeffs[3] == 6);
    CHECK(seq.coeffs[6] == 90);
}

TEST_CASE("c_1 is the constant coefficient") {
    auto f = mk(2, {{{1, 0}, 3}, {{0, 0}, 7}, {{-1, -2}, 1}});
    CHECK(period_coeffs(f, 1).coeffs[1] == 7);
}

TEST_CASE("substitution matches the worked transformation") {
    auto f = hexahedron_f();
    CHECK(substitute(f, UnimodularMap::identity(3)) == f);
    auto g = substitute(f, shear_map());
    // (1/z)(y + y/x + 1/x) + z(1 + x + x/y)
    auto expect = mk(3, {{{0, 1, -1}, 1},
                         {{-1, 1, -1}, 1},
                         {{-1, 0, -1}, 1},
                         {{0, 0, 1}, 1},
                         {{1, 0, 1}, 1},
                         {{1, -1, 1}, 1}});
    CHECK(g == expect);
}

TEST_CASE("substitution preserves periods") {
    std::mt19937 rng(23);
    auto f = hexahedron_f();
    for (int t = 0; t < 3; ++t) {
        auto U = random_unimodular(rng, 3);
        CHECK(period_coeffs(substitute(f, U), 6).coeffs == period_coeffs(f, 6).coeffs);
    }
}

TEST_CASE("newton polytope of a substitution is the mapped polytope") {
    auto f = pair18_f1();
    auto U = shear_map();
    CHECK(newton_polytope(substitute(f, U)) == apply_map(newton_polytope(f), U));
}

TEST_CASE("divide_exact basics") {
    auto num = mk(1, {{{1}, 1}, {{0}, 2}, {{-1}, 1}});
    auto den = mk(1, {{{0}, 1}, {{-1}, 1}});
    auto q = divide_exact(num, den);
    REQUIRE(q.has_value());
    CHECK(*q == mk(1, {{{1}, 1}, {{0}, 1}}));

    auto f = pair18_f1();
    auto one = LaurentPolynomial::constant(3, 1);
    CHECK(*divide_exact(f, one) == f);
}

TEST_CASE("divide_exact of random products") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> e(-2, 2), c(1, 4), nterms(2, 4);
    for (int t = 0; t < 20; ++t) {
        LaurentPolynomial g(2), h(2);
        for (int i = 0; i < nterms(rng); ++i) g.add_term(V({e(rng), e(rng)}), c(rng));
        for (int i = 0; i < nterms(rng); ++i) h.add_term(V({e(rng), e(rng)}), c(rng));
        if (g.is_zero() || h.is_zero()) continue;
        auto q = divide_exact(multiply(g, h), g);
        REQUIRE(q.has_value());
        CHECK(*q == h);
    }
}

TEST_CASE("the spoiled wedge polynomial is not divisible") {
    // Adding yz puts a term on the slice that the factor cannot divide.
    auto g = add(wedge_f(), mk(3, {{{0, 1, 1}, 1}}));
    auto slices = coefficient_slices(g);
    auto A = mk(2, {{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}});  // 1 + x + y
    CHECK_FALSE(divide_exact(slices.at(Int(1)), A).has_value());
}

TEST_CASE("algebraic mutation reproduces the printed image") {
    auto f = hexahedron_f();
    auto U = shear_map();
    auto A = mk(2, {{{0, 1}, 1}, {{-1, 1}, 1}, {{-1, 0}, 1}});  // y + y/x + 1/x
    auto g = algebraic_mutate(f, U, A, U.inverse());
    auto expect = mk(3, {{{1, 2, 2}, 1},
                         {{1, 1, 1}, 1},
                         {{0, 1, 2}, 2},
                         {{0, 0, 1}, 2},
                         {{0, 0, -1}, 1},
                         {{0, -1, 0}, 1},
                         {{-1, 0, 2}, 1},
                         {{-1, -1, 1}, 1}});
    CHECK(g == expect);
}

TEST_CASE("algebraic mutation with trivial factor is a change of coordinates only") {
    auto f = pair18_f1();
    auto A = LaurentPolynomial::constant(2, 1);
    CHECK(algebraic_mutate(f, UnimodularMap::identity(3), A, UnimodularMap::identity(3)) == f);
}

TEST_CASE("wedge example: mutation via the z -> 1/z conjugation") {
    SqMat flip = SqMat::identity(3);
    flip.at(2, 2) = -1;
    UnimodularMap Fm(flip);
    auto A = mk(2, {{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}});
    auto g = algebraic_mutate(wedge_f(), Fm, A, Fm);
    CHECK(g == wedge_f_mutated());
}

TEST_CASE("wedge example divisibility failure names height -1") {
    SqMat flip = SqMat::identity(3);
    flip.at(2, 2) = -1;
    UnimodularMap Fm(flip);
    auto A = mk(2, {{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}});
    auto g = add(wedge_f(), mk(3, {{{0, 1, 1}, 1}}));
    try {
        algebraic_mutate(g, Fm, A, Fm);
        FAIL("expected divisibility error");
    } catch (const MutationDivisibilityError& e) {
        REQUIRE(e.heights.size() == 1);
        CHECK(e.heights[0] == -1);
    }
}

TEST_CASE("newton polytope compatibility with the combinatorial mutation") {
    SqMat flip = SqMat::identity(3);
    flip.at(2, 2) = -1;
    UnimodularMap Fm(flip);
    auto A = mk(2, {{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}});
    auto g = algebraic_mutate(wedge_f(), Fm, A, Fm);
    auto F = convex_hull({V({0, 0, 0}), V({1, 0, 0}), V({0, 1, 0})});
    CHECK(newton_polytope(g) == mutate(wedge_polytope(), V({0, 0, -1}), F));
}

TEST_CASE("laurent equivalence under substitution") {
    std::mt19937 rng(31);
    auto f = pair18_f1();
    auto U = random_unimodular(rng, 3);
    auto g = substitute(f, U);
    auto W = laurent_equivalent(f, g);
    REQUIRE(W.has_value());
    CHECK(substitute(f, *W) == g);
}

TEST_CASE("the 18-term pair is not GL-equivalent") {
    CHECK_FALSE(laurent_equivalent(pair18_f1(), pair18_f2()).has_value());
}
