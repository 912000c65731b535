#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "latmut/io.hpp"

using namespace latmut;
using namespace latmut::testing;

TEST_CASE("polytope round trip with comments") {
    std::istringstream in(
        "# vertices of the weighted simplex\n"
        "1 0 0\n0 1 0\n\n0 0 1\n-1 -1 -3  # bottom vertex\n");
    auto P = read_polytope(in);
    CHECK(P == simplex_1113());
    std::ostringstream out;
    write_polytope(out, P);
    std::istringstream in2(out.str());
    CHECK(read_polytope(in2) == P);
}

TEST_CASE("polytope input errors") {
    std::istringstream empty("# only a comment\n");
    CHECK_THROWS_AS(read_polytope(empty), std::runtime_error);
    std::istringstream ragged("1 0\n1 2 3\n");
    CHECK_THROWS_AS(read_polytope(ragged), std::runtime_error);
}

TEST_CASE("polynomial round trip") {
    std::ostringstream out;
    write_polynomial(out, pair18_f1());
    std::istringstream in(out.str());
    CHECK(read_polynomial(in) == pair18_f1());
}

TEST_CASE("polynomial parses rational coefficients") {
    std::istringstream in("1/2 : 1 0\n-3 : 0 1\n");
    auto f = read_polynomial(in);
    CHECK(f.coeff(V({1, 0})) == Rat(1) / 2);
    CHECK(f.coeff(V({0, 1})) == -3);
}

TEST_CASE("polynomial input errors") {
    std::istringstream noterm("# nothing\n");
    CHECK_THROWS_AS(read_polynomial(noterm), std::runtime_error);
    std::istringstream nocolon("3 1 0\n");
    CHECK_THROWS_AS(read_polynomial(nocolon), std::runtime_error);
}

TEST_CASE("matrix round trip") {
    std::istringstream in("1 -1 1\n0 1 -1\n0 0 1\n");
    auto M = read_matrix(in);
    CHECK(M.at(0, 1) == -1);
    std::ostringstream out;
    write_matrix(out, M);
    std::istringstream in2(out.str());
    CHECK(read_matrix(in2) == M);
    std::istringstream ragged("1 2\n3\n");
    CHECK_THROWS_AS(read_matrix(ragged), std::runtime_error);
}

TEST_CASE("inline formats") {
    CHECK(format_vec(V({-1, 2, 0})) == "-1,2,0");
    CHECK(parse_vec("-1,2,0") == V({-1, 2, 0}));
    auto F = convex_hull({V({0, 0, 0}), V({2, 1, 3})});
    CHECK(format_polytope_inline(F) == "0,0,0;2,1,3");
}
