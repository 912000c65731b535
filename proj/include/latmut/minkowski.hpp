// Minkowski sums and differences, lattice Minkowski summand enumeration,
// admissible decompositions into length-one segments and A_n triangles, and
// Minkowski polynomials on reflexive 3-polytopes.
#pragma once

#include <optional>
#include <vector>

#include "latmut/laurent.hpp"
#include "latmut/polytope.hpp"

namespace latmut {

// Hull of pairwise vertex sums; A + empty = empty.
LatticePolytope minkowski_sum(const LatticePolytope& A, const LatticePolytope& B);

// All lattice points v with v + B contained in C. B must be nonempty.
std::vector<Vec> minkowski_difference_points(const LatticePolytope& C,
                                             const LatticePolytope& B);

// Lattice Minkowski summand pairs S + G = X up to translation (both anchored
// with the lexicographically least vertex at the origin). Includes the
// trivial pairs (point, X) and (X, point). X must have dimension 1, 2 or 3.
struct SummandPair {
    LatticePolytope summand;
    LatticePolytope complement;
};
std::vector<SummandPair> summand_pairs(const LatticePolytope& X);

enum class PieceKind { Segment, AnTriangle };

struct Summand {
    PieceKind kind;
    LatticePolytope polygon;  // the piece itself, in ambient coordinates
    int an_n = 0;             // for AnTriangle: the n
    Vec apex;                 // for AnTriangle
    Vec base_from, base_to;   // for AnTriangle: endpoints of the base edge
};

// Classifies a polytope as an admissible puzzle piece, or nullopt.
std::optional<Summand> classify_piece(const LatticePolytope& S);

struct LatticeDecomposition {
    std::vector<Summand> summands;  // translation classes
};

// All equivalence classes of admissible lattice Minkowski decompositions of
// a lattice polygon (2-dimensional, possibly embedded in a larger ambient).
std::vector<LatticeDecomposition> admissible_decompositions(const LatticePolytope& Q);

// Segment: x^v + x^w. A_n triangle: x^apex + sum_k C(n,k) x^{v_k}.
LaurentPolynomial piece_polynomial(const Summand& S);

// All Minkowski polynomials supported on a reflexive 3-polytope, one per
// choice of an admissible decomposition class on each facet; empty if some
// facet has no admissible decomposition.
std::vector<LaurentPolynomial> minkowski_polynomials(const LatticePolytope& P);

}  // namespace latmut
