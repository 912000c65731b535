// Lattice polytopes with exact integer arithmetic: convex hulls, facet
// descriptions, lattice point enumeration, widths, slices and volumes.
// Ambient dimension up to 4. Lower-dimensional polytopes carry an affine
// frame onto a full-dimensional embedded copy.
#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "latmut/mat.hpp"
#include "latmut/vec.hpp"

namespace latmut {

// <normal, x> >= level, with primitive inward normal.
struct HalfSpace {
    Vec normal;
    Int level;
    bool operator==(const HalfSpace& o) const { return normal == o.normal && level == o.level; }
};

// Saturated affine lattice basis for a lower-dimensional polytope's plane:
// ambient point = origin + sum t_i * basis[i].
struct AffineFrame {
    Vec origin;
    std::vector<Vec> basis;

    Vec unembed(const Vec& t) const;
    // Embedded coordinates of an ambient lattice point in the affine hull.
    Vec embed(const Vec& p) const;
};

class LatticePolytope {
public:
    LatticePolytope() = default;  // empty polytope

    static LatticePolytope hull(const std::vector<Vec>& points);
    static LatticePolytope empty(int ambient) {
        LatticePolytope p;
        p.ambient_ = ambient;
        return p;
    }

    bool is_empty() const { return dim_ < 0; }
    int ambient_dim() const { return ambient_; }
    int dim() const { return dim_; }
    const std::vector<Vec>& vertices() const { return vertices_; }
    // Facets of a full-dimensional polytope (inward halfspaces).
    const std::vector<HalfSpace>& facets() const;
    // Affine hull equations <u,x> = level; empty for full-dimensional.
    const std::vector<HalfSpace>& hull_equations() const { return hull_eqs_; }
    const AffineFrame& frame() const;
    const LatticePolytope& embedded() const;

    bool contains(const Vec& p) const;
    bool strictly_contains(const Vec& p) const;  // full-dimensional interior

    std::vector<Vec> lattice_points(const Int& dilation = 1) const;
    Int lattice_point_count(const Int& dilation = 1) const;
    std::vector<Vec> interior_lattice_points() const;

    bool operator==(const LatticePolytope& o) const {
        return ambient_ == o.ambient_ && vertices_ == o.vertices_;
    }
    bool operator!=(const LatticePolytope& o) const { return !(*this == o); }

    // Sorted-vertex string, used as a deterministic dictionary key.
    std::string key() const;

private:
    int ambient_ = 0;
    int dim_ = -1;
    std::vector<Vec> vertices_;  // lex sorted
    std::vector<HalfSpace> facets_;    // full-dim only
    std::vector<HalfSpace> hull_eqs_;  // lower-dim only
    std::shared_ptr<const AffineFrame> frame_;          // lower-dim only
    std::shared_ptr<const LatticePolytope> embedded_;   // lower-dim only

    friend LatticePolytope apply_map(const LatticePolytope&, const UnimodularMap&);
};

LatticePolytope convex_hull(const std::vector<Vec>& points);

struct Face {
    std::vector<int> vertex_indices;  // into P.vertices()
    int dim = 0;
};

// All proper faces of a full-dimensional polytope, dimensions 0..n-1,
// sorted by (dim, vertex indices).
std::vector<Face> proper_faces(const LatticePolytope& P);

LatticePolytope face_polytope(const LatticePolytope& P, const Face& f);

Int pairing_min(const Vec& w, const LatticePolytope& P);   // h_min
Int pairing_max(const Vec& w, const LatticePolytope& P);   // h_max
Int width(const LatticePolytope& P, const Vec& w);         // h_max - h_min

// conv{ x in P cap Z^n : <w,x> = h }. May be empty.
LatticePolytope slice(const LatticePolytope& P, const Vec& w, const Int& h);

// n! times the Euclidean volume; requires a full-dimensional polytope.
Int normalized_volume(const LatticePolytope& P);

LatticePolytope apply_map(const LatticePolytope& P, const UnimodularMap& M);

bool is_fano(const LatticePolytope& P);
bool is_reflexive(const LatticePolytope& P);
bool is_canonical(const LatticePolytope& P);

LatticePolytope translate(const LatticePolytope& P, const Vec& v);
LatticePolytope dilate(const LatticePolytope& P, const Int& k);

// Boundary vertices of a full-dimensional 2-d polytope in counterclockwise
// order.
std::vector<Vec> ccw_ring(const LatticePolytope& P);

// Exact lattice point scan over an integer inequality system a*x >= b
// restricted to a coordinate box. Rows are (a, b) pairs.
struct ScanRow {
    Vec a;
    Int b;
};
Int scan_count(const std::vector<ScanRow>& rows, const std::vector<Int>& lo,
               const std::vector<Int>& hi);
void scan_points(const std::vector<ScanRow>& rows, const std::vector<Int>& lo,
                 const std::vector<Int>& hi, const std::function<void(const Vec&)>& emit);

}  // namespace latmut
