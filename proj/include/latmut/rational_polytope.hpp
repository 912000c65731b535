// Rational polytopes (duals of Fano polytopes in particular) with exact
// half-space descriptions and vertex lists.
#pragma once

#include <vector>

#include "latmut/polytope.hpp"

namespace latmut {

// <normal, x> >= level with integral primitive normal and rational level.
struct QHalfSpace {
    Vec normal;
    Rat level;
};

struct RationalPolytope {
    int dim = 0;  // ambient == affine dimension (always full-dimensional here)
    std::vector<QHalfSpace> rows;
    std::vector<QVec> vertices;
    Int r = 1;  // smallest positive integer with r*Q integral

    std::string key() const;
};

// P^v = { u : <u,v> >= -1 for all v in P }. Requires the origin strictly
// interior to P (otherwise the dual is unbounded).
RationalPolytope dual(const LatticePolytope& P);

// View a lattice polytope as a rational one (r = 1).
RationalPolytope as_rational(const LatticePolytope& P);

// k*Q as a lattice polytope; k must clear all vertex denominators.
LatticePolytope scaled_to_lattice(const RationalPolytope& Q, const Int& k);

// Number of lattice points in m*Q.
Int dilated_point_count(const RationalPolytope& Q, const Int& m);

// Lattice points of m*Q, and the subset lying on the boundary.
std::vector<Vec> dilated_points(const RationalPolytope& Q, const Int& m);
std::vector<Vec> dilated_boundary_points(const RationalPolytope& Q, const Int& m);

}  // namespace latmut
