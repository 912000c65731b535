#include <doctest.h>

#include "helpers.hpp"
#include "latmut/mat.hpp"

using namespace latmut;
using namespace latmut::testing;

TEST_CASE("ext_gcd bezout identity") {
    auto [g, x, y] = ext_gcd(Int(12), Int(18));
    CHECK(g == 6);
    CHECK(x * 12 + y * 18 == 6);
    auto [g2, x2, y2] = ext_gcd(Int(-4), Int(7));
    CHECK(g2 == 1);
    CHECK(x2 * -4 + y2 * 7 == 1);
    auto [g3, x3, y3] = ext_gcd(Int(0), Int(-5));
    CHECK(g3 == 5);
    CHECK(y3 * -5 == 5);
}

TEST_CASE("floor and ceil division") {
    CHECK(floor_div(7, 2) == 3);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(ceil_div(7, 2) == 4);
    CHECK(ceil_div(-7, 2) == -3);
    CHECK(floor_rat(Rat(-3) / 2) == -2);
    CHECK(ceil_rat(Rat(-3) / 2) == -1);
}

TEST_CASE("determinant and unimodular inverse") {
    SqMat M(3);
    long vals[9] = {1, -1, 1, 0, 1, -1, 0, 0, 1};
    for (int i = 0; i < 9; ++i) M.a[i] = vals[i];
    CHECK(det(M) == 1);
    SqMat inv = inverse_unimodular(M);
    CHECK(mat_mul(M, inv) == SqMat::identity(3));
    CHECK(mat_mul(inv, M) == SqMat::identity(3));

    SqMat S(2);
    S.at(0, 0) = 2;
    S.at(1, 1) = 3;
    CHECK(det(S) == 6);
    CHECK_THROWS_AS(inverse_unimodular(S), std::invalid_argument);
    CHECK_THROWS_AS(UnimodularMap(S), std::invalid_argument);
}

TEST_CASE("functional action preserves the pairing") {
    SqMat M(3);
    long vals[9] = {1, 2, 0, 0, 1, 3, 0, 0, 1};
    for (int i = 0; i < 9; ++i) M.a[i] = vals[i];
    UnimodularMap U(M);
    Vec v = V({3, -1, 2}), u = V({5, 0, -2});
    CHECK(dot(U.apply_functional(u), U.apply_point(v)) == dot(u, v));
}

TEST_CASE("integer kernel basis is saturated") {
    auto b = integer_kernel_basis({V({2, 4})}, 2);
    REQUIRE(b.size() == 1);
    CHECK(dot(b[0], V({2, 4})) == 0);
    CHECK(is_primitive(b[0]));

    auto b2 = integer_kernel_basis({V({1, 2, 3}), V({0, 1, 1})}, 3);
    REQUIRE(b2.size() == 1);
    CHECK(dot(b2[0], V({1, 2, 3})) == 0);
    CHECK(dot(b2[0], V({0, 1, 1})) == 0);
    CHECK(is_primitive(b2[0]));
}

TEST_CASE("complete_to_unimodular puts w in the last column") {
    for (const Vec& w : {V({0, 0, 1}), V({-1, 2, 0}), V({3, 5, 7}), V({2, -3})}) {
        SqMat U = complete_to_unimodular(w);
        CHECK(det(U) == 1);
        for (std::size_t i = 0; i < w.size(); ++i)
            CHECK(U.at(static_cast<int>(i), U.n - 1) == w[i]);
        Vec v = V({7, -4, 9});
        v.resize(w.size(), Int(0));
        CHECK(row_apply(v, U)[U.n - 1] == dot(w, v));
    }
    CHECK_THROWS_AS(complete_to_unimodular(V({2, 4})), std::invalid_argument);
}

TEST_CASE("rational rank") {
    CHECK(rational_rank({V({1, 2}), V({2, 4})}) == 1);
    CHECK(rational_rank({V({1, 0, 0}), V({0, 1, 0}), V({1, 1, 0})}) == 2);
    CHECK(rational_rank({}) == 0);
}
