// Ehrhart counts, delta-vectors, quasi-period detection.
#pragma once

#include <vector>

#include "latmut/rational_polytope.hpp"

namespace latmut {

struct DeltaVector {
    Int r;                   // denominator of the polytope
    int n = 0;               // dimension
    std::vector<Int> deltas;  // length r*(n+1), trailing zeros retained

    bool operator==(const DeltaVector& o) const {
        return r == o.r && n == o.n && deltas == o.deltas;
    }
};

// Exact counts L_Q(0), ..., L_Q(m_max). Cached per polytope.
std::vector<Int> ehrhart_counts(const RationalPolytope& Q, const Int& m_max);

// Numerator of Ehr(Q) over (1 - t^r)^{n+1}. Verifies that coefficients
// beyond index r(n+1)-1 vanish up to 2r(n+1); a non-vanishing coefficient
// signals a counting bug and raises.
DeltaVector delta_vector(const RationalPolytope& Q);

// Palindromic over the nonzero support (trailing zeros ignored).
bool is_palindromic(const DeltaVector& d);

// Smallest divisor p of r such that the counts are fitted exactly by a
// degree-n polynomial on every residue class mod p, checked for m <= 2r(n+1).
Int quasi_period(const RationalPolytope& Q);

}  // namespace latmut
