// Bucketing Laurent polynomials by truncated period sequences and searching
// the mutation graph for connecting paths.
#pragma once

#include <istream>
#include <string>
#include <vector>

#include "latmut/ehrhart.hpp"
#include "latmut/laurent.hpp"
#include "latmut/mutation.hpp"

namespace latmut {

struct PolyRecord {
    std::string name;
    LaurentPolynomial poly;
};

struct Bucket {
    std::vector<Rat> key;  // first key_len period coefficients
    std::vector<PolyRecord> members;
};

// Groups by exact equality of the first key_len period coefficients
// (c_0..c_{key_len-1}); the paper's choice is eight.
std::vector<Bucket> bucket(const std::vector<PolyRecord>& polys, int key_len = 8,
                           int workers = 1);

struct MutationEdge {
    std::string source, target;
    Vec w;
    LatticePolytope F;    // factor, anchored at its lex-least vertex
    LaurentPolynomial A;  // factor polynomial, supported on F
    Int width;
    // Final change of coordinates landing exactly on the stored target
    // polynomial (identity for freshly discovered nodes).
    std::optional<UnimodularMap> post;
};

// Replays an edge: the algebraic mutation of f by (w, A), then the edge's
// closing coordinate change. Deterministic in the edge data alone.
LaurentPolynomial replay_edge(const LaurentPolynomial& f, const MutationEdge& e);

enum class PolytopeClass { Minkowski, Reflexive, Canonical, Any };

struct ConnectConfig {
    Int max_width = 2;
    PolytopeClass polytope_class = PolytopeClass::Reflexive;
    int max_depth = 2;
    int node_budget = 500;
    int workers = 1;
};

struct ConnectResult {
    bool connected = false;
    bool fingerprint_separated = false;  // delta-vector pre-filter fired
    bool budget_exhausted = false;
    std::vector<MutationEdge> edges;  // replayable witness edges
    std::vector<std::vector<std::string>> components;  // member names
    // Discovered intermediate polynomials, keyed by generated node names.
    std::vector<PolyRecord> intermediates;
};

ConnectResult connect(const Bucket& b, const ConnectConfig& cfg);

// Vertex-list records separated by blank lines; '#' comments ignored.
// With expect_reflexive, every record is validated and offenders reported.
std::vector<LatticePolytope> ingest_classification(std::istream& in, bool expect_reflexive);

// Whether f is a Minkowski polynomial of its own Newton polytope.
bool is_minkowski_polynomial(const LaurentPolynomial& f);

// Delta-vector of the dual Newton polytope, as a printable fingerprint.
std::string ehrhart_fingerprint(const LaurentPolynomial& f);

}  // namespace latmut
