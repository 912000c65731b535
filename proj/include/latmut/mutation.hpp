// Combinatorial mutations of lattice polytopes: construction, validation,
// inversion, exhaustive enumeration, and the piecewise-linear dual map.
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "latmut/minkowski.hpp"
#include "latmut/polytope.hpp"

namespace latmut {

// One combinatorial mutation: width vector w, factor F at height 0, and the
// chosen polytopes G_h for the negative heights (nullopt encodes the empty
// polytope).
struct MutationSpec {
    Vec w;
    LatticePolytope F;
    std::map<Int, std::optional<LatticePolytope>> gh;  // keys h_min <= h < 0
    Int h_min, h_max;
};

// Canonical G_h choice: empty where P has no vertices at height h, otherwise
// the hull of the exact Minkowski difference. Nullopt result means w,F is not
// a valid mutation of P; the message names the failing height.
std::optional<MutationSpec> try_compute_gh(const LatticePolytope& P, const Vec& w,
                                           const LatticePolytope& F,
                                           std::string* error = nullptr);

// As above but throws std::domain_error on failure.
MutationSpec compute_gh(const LatticePolytope& P, const Vec& w, const LatticePolytope& F);

// conv( union of G_h (h<0) and w_h(P) + hF (h>=0) ).
LatticePolytope mutate_with(const LatticePolytope& P, const MutationSpec& spec);
LatticePolytope mutate(const LatticePolytope& P, const Vec& w, const LatticePolytope& F);

// The inverse mutation data: mutate(Q, -w, F) recovers P exactly.
MutationSpec invert(const LatticePolytope& P, const Vec& w, const LatticePolytope& F);

struct MutationRecord {
    Vec w;
    LatticePolytope F;  // anchored at its lexicographically least vertex
    LatticePolytope Q;
    Int width;
};

struct EnumerateOptions {
    Int max_width = 3;
    bool strict_bound = false;  // replace max_width by the summand bound l_P
};

// All combinatorial mutations of a Fano polytope with width up to the bound,
// one representative (w, F, Q) per GL-equivalence class of Q.
std::vector<MutationRecord> enumerate_mutations(const LatticePolytope& P,
                                                const EnumerateOptions& opts = {});

// The largest l such that some face of P decomposes as l*A + B with A a
// positive-dimensional lattice polytope (the width bound of strict mode).
Int summand_width_bound(const LatticePolytope& P);

// u -> u - u_min(u) * w with u_min(u) = min <u, V(F)>.
Vec dual_map(const MutationSpec& spec, const Vec& u);

struct PiecewiseLinearMap {
    Vec w;
    std::vector<Vec> factor_vertices;
    // Per maximal normal-fan cone of F: the vertex attaining the minimum on
    // -sigma, and the matrix with u*M = dual_map(u) there.
    std::vector<std::pair<Vec, SqMat>> pieces;

    const SqMat& matrix_for(const Vec& u) const;
};

PiecewiseLinearMap cone_matrices(const MutationSpec& spec);

}  // namespace latmut
