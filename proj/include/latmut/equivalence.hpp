// GL(n,Z)-equivalence testing for lattice polytopes: cheap invariant
// fingerprints first, then exhaustive matching of vertex tuples.
#pragma once

#include <optional>
#include <string>

#include "latmut/polytope.hpp"

namespace latmut {

// Invariants preserved by unimodular maps; equal fingerprints are necessary
// but not sufficient for equivalence.
std::string gl_fingerprint(const LatticePolytope& P);

// A map M with apply_map(P, M) == Q, if one exists.
std::optional<UnimodularMap> gl_equivalent(const LatticePolytope& P,
                                           const LatticePolytope& Q);

}  // namespace latmut
