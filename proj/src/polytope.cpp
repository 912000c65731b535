#include "latmut/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace latmut {

namespace {

// Primitive normal of the hyperplane spanned by d-1 difference vectors in
// dimension d (d = 2, 3, 4). Zero vector if the diffs are dependent.
Vec hyperplane_normal(const std::vector<Vec>& diffs, int d) {
    Vec u(d, Int(0));
    if (d == 2) {
        u[0] = -diffs[0][1];
        u[1] = diffs[0][0];
    } else if (d == 3) {
        const Vec& a = diffs[0];
        const Vec& b = diffs[1];
        u[0] = a[1] * b[2] - a[2] * b[1];
        u[1] = a[2] * b[0] - a[0] * b[2];
        u[2] = a[0] * b[1] - a[1] * b[0];
    } else {
        // Cofactor expansion of det([e; a; b; c]) along the first row.
        const Vec& a = diffs[0];
        const Vec& b = diffs[1];
        const Vec& c = diffs[2];
        auto det3 = [](const Int& a0, const Int& a1, const Int& a2, const Int& b0,
                       const Int& b1, const Int& b2, const Int& c0, const Int& c1,
                       const Int& c2) {
            return a0 * (b1 * c2 - b2 * c1) - a1 * (b0 * c2 - b2 * c0) +
                   a2 * (b0 * c1 - b1 * c0);
        };
        u[0] = det3(a[1], a[2], a[3], b[1], b[2], b[3], c[1], c[2], c[3]);
        u[1] = -det3(a[0], a[2], a[3], b[0], b[2], b[3], c[0], c[2], c[3]);
        u[2] = det3(a[0], a[1], a[3], b[0], b[1], b[3], c[0], c[1], c[3]);
        u[3] = -det3(a[0], a[1], a[2], b[0], b[1], b[2], c[0], c[1], c[2]);
    }
    return make_primitive(u);
}

// Beneath-beyond hull with simplicial facets; exact, deterministic.
struct BBFacet {
    std::vector<int> verts;  // d indices, sorted
    Vec u;
    Int c;
    bool alive = true;
};

std::vector<HalfSpace> full_dim_facets(const std::vector<Vec>& pts, int d,
                                       std::vector<int>* out_vertex_ids);

// 2-d convex hull, counterclockwise vertex order.
std::vector<Vec> hull2_ccw(std::vector<Vec> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    auto cross = [](const Vec& o, const Vec& a, const Vec& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    const int n = static_cast<int>(pts.size());
    std::vector<Vec> h(2 * n);
    int k = 0;
    for (int i = 0; i < n; ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    int lower = k + 1;
    for (int i = n - 2; i >= 0; --i) {
        while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

std::vector<HalfSpace> full_dim_facets(const std::vector<Vec>& pts, int d,
                                       std::vector<int>* out_vertex_ids) {
    std::vector<HalfSpace> facets;
    if (d == 1) {
        Int mn = pts[0][0], mx = pts[0][0];
        for (const auto& p : pts) {
            mn = std::min(mn, p[0]);
            mx = std::max(mx, p[0]);
        }
        facets.push_back({Vec{Int(1)}, mn});
        facets.push_back({Vec{Int(-1)}, -mx});
    } else if (d == 2) {
        std::vector<Vec> ring = hull2_ccw(pts);
        for (std::size_t i = 0; i < ring.size(); ++i) {
            const Vec& a = ring[i];
            const Vec& b = ring[(i + 1) % ring.size()];
            Vec u{-(b[1] - a[1]), b[0] - a[0]};  // inward for ccw
            u = make_primitive(u);
            facets.push_back({u, dot(u, a)});
        }
    } else {
        // Initial simplex: greedily extend an affinely independent set.
        std::vector<int> simplex{0};
        std::vector<Vec> diffs;
        for (int i = 1; i < static_cast<int>(pts.size()) &&
                        static_cast<int>(simplex.size()) < d + 1;
             ++i) {
            std::vector<Vec> trial = diffs;
            trial.push_back(sub(pts[i], pts[0]));
            if (rational_rank(trial) == static_cast<int>(trial.size())) {
                diffs = trial;
                simplex.push_back(i);
            }
        }
        Vec ref = zero_vec(d);  // (d+1) * centroid of the simplex
        for (int id : simplex) ref = add(ref, pts[id]);
        Int refscale = d + 1;

        auto make_facet = [&](std::vector<int> vs) {
            std::sort(vs.begin(), vs.end());
            std::vector<Vec> dd;
            for (std::size_t i = 1; i < vs.size(); ++i)
                dd.push_back(sub(pts[vs[i]], pts[vs[0]]));
            Vec u = hyperplane_normal(dd, d);
            Int c = dot(u, pts[vs[0]]);
            if (dot(u, ref) < c * refscale) {
                u = negate(u);
                c = -c;
            }
            return BBFacet{std::move(vs), std::move(u), std::move(c), true};
        };

        std::vector<BBFacet> ff;
        for (int skip = 0; skip <= d; ++skip) {
            std::vector<int> vs;
            for (int i = 0; i <= d; ++i)
                if (i != skip) vs.push_back(simplex[i]);
            ff.push_back(make_facet(vs));
        }

        std::set<int> in_simplex(simplex.begin(), simplex.end());
        for (int p = 0; p < static_cast<int>(pts.size()); ++p) {
            if (in_simplex.count(p)) continue;
            std::vector<int> visible;
            for (int f = 0; f < static_cast<int>(ff.size()); ++f)
                if (ff[f].alive && dot(ff[f].u, pts[p]) < ff[f].c) visible.push_back(f);
            if (visible.empty()) continue;
            std::map<std::vector<int>, int> ridge_count;
            for (int f : visible) {
                for (int skip = 0; skip < d; ++skip) {
                    std::vector<int> ridge;
                    for (int i = 0; i < d; ++i)
                        if (i != skip) ridge.push_back(ff[f].verts[i]);
                    ridge_count[ridge]++;
                }
                ff[f].alive = false;
            }
            for (const auto& [ridge, cnt] : ridge_count) {
                if (cnt != 1) continue;
                std::vector<int> vs = ridge;
                vs.push_back(p);
                ff.push_back(make_facet(std::move(vs)));
            }
        }

        std::map<std::pair<Vec, Int>, bool> planes;
        for (const auto& f : ff)
            if (f.alive) planes[{f.u, f.c}] = true;
        for (const auto& [plane, unused] : planes) {
            (void)unused;
            facets.push_back({plane.first, plane.second});
            for (const auto& p : pts)
                if (dot(plane.first, p) < plane.second)
                    throw std::logic_error("hull: facet check failed");
        }
    }

    std::sort(facets.begin(), facets.end(), [](const HalfSpace& a, const HalfSpace& b) {
        return a.normal != b.normal ? a.normal < b.normal : a.level < b.level;
    });
    if (out_vertex_ids) {
        out_vertex_ids->clear();
        for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
            std::vector<Vec> tight;
            for (const auto& f : facets)
                if (dot(f.normal, pts[i]) == f.level) tight.push_back(f.normal);
            if (rational_rank(tight) == d) out_vertex_ids->push_back(i);
        }
    }
    return facets;
}

}  // namespace

Vec AffineFrame::unembed(const Vec& t) const {
    Vec p = origin;
    for (std::size_t i = 0; i < basis.size(); ++i) p = add(p, scale(t[i], basis[i]));
    return p;
}

Vec AffineFrame::embed(const Vec& p) const {
    const int n = static_cast<int>(origin.size());
    const int d = static_cast<int>(basis.size());
    Vec rhs = sub(p, origin);
    // Solve sum t_i basis[i] = rhs by rational elimination on an n x (d+1) system.
    std::vector<QVec> m(n, QVec(d + 1, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < d; ++j) m[i][j] = Rat(basis[j][i]);
        m[i][d] = Rat(rhs[i]);
    }
    int row = 0;
    std::vector<int> pivot_col(d, -1);
    for (int c = 0; c < d; ++c) {
        int p2 = -1;
        for (int r = row; r < n; ++r)
            if (m[r][c] != 0) { p2 = r; break; }
        if (p2 < 0) continue;
        std::swap(m[row], m[p2]);
        Rat inv = Rat(1) / m[row][c];
        for (int j = c; j <= d; ++j) m[row][j] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == row || m[r][c] == 0) continue;
            Rat f = m[r][c];
            for (int j = c; j <= d; ++j) m[r][j] -= f * m[row][j];
        }
        pivot_col[c] = row;
        ++row;
    }
    Vec t(d, Int(0));
    for (int c = 0; c < d; ++c) {
        if (pivot_col[c] < 0) throw std::logic_error("frame: degenerate basis");
        const Rat& val = m[pivot_col[c]][d];
        if (denominator(val) != 1)
            throw std::logic_error("frame: point not in the affine lattice");
        t[c] = numerator(val);
    }
    if (unembed(t) != p) throw std::logic_error("frame: point not in the affine hull");
    return t;
}

LatticePolytope LatticePolytope::hull(const std::vector<Vec>& points) {
    if (points.empty()) return LatticePolytope();
    const int n = static_cast<int>(points[0].size());
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != n)
            throw std::invalid_argument("hull: dimension mismatch");

    std::vector<Vec> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    LatticePolytope P;
    P.ambient_ = n;
    if (pts.size() == 1) {
        P.dim_ = 0;
        P.vertices_ = pts;
        std::vector<Vec> nrows;
        for (int i = 0; i < n; ++i) {
            Vec e = zero_vec(n);
            e[i] = 1;
            P.hull_eqs_.push_back({e, pts[0][i]});
        }
        return P;
    }

    std::vector<Vec> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
    const int d = rational_rank(diffs);
    P.dim_ = d;

    if (d == n) {
        std::vector<int> vertex_ids;
        P.facets_ = full_dim_facets(pts, n, &vertex_ids);
        for (int id : vertex_ids) P.vertices_.push_back(pts[id]);
        std::sort(P.vertices_.begin(), P.vertices_.end());
        return P;
    }

    // Lower-dimensional: saturated frame, then a full-dimensional hull inside.
    std::vector<Vec> normals = integer_kernel_basis(diffs, n);
    auto frame = std::make_shared<AffineFrame>();
    frame->origin = pts[0];
    frame->basis = integer_kernel_basis(normals, n);
    for (const auto& u : normals) P.hull_eqs_.push_back({u, dot(u, pts[0])});

    std::vector<Vec> emb;
    emb.reserve(pts.size());
    for (const auto& p : pts) emb.push_back(frame->embed(p));
    auto inner = std::make_shared<LatticePolytope>(LatticePolytope::hull(emb));
    for (const auto& t : inner->vertices_) P.vertices_.push_back(frame->unembed(t));
    std::sort(P.vertices_.begin(), P.vertices_.end());
    P.frame_ = frame;
    P.embedded_ = inner;
    return P;
}

LatticePolytope convex_hull(const std::vector<Vec>& points) {
    if (points.empty()) throw std::invalid_argument("hull: empty point list");
    return LatticePolytope::hull(points);
}

const std::vector<HalfSpace>& LatticePolytope::facets() const {
    if (dim_ != ambient_)
        throw std::logic_error("facets: polytope is not full-dimensional");
    return facets_;
}

const AffineFrame& LatticePolytope::frame() const {
    if (!frame_) throw std::logic_error("frame: polytope is full-dimensional or empty");
    return *frame_;
}

const LatticePolytope& LatticePolytope::embedded() const {
    if (!embedded_) throw std::logic_error("embedded: polytope is full-dimensional");
    return *embedded_;
}

bool LatticePolytope::contains(const Vec& p) const {
    if (is_empty()) return false;
    if (dim_ == 0) return p == vertices_[0];
    for (const auto& eq : hull_eqs_)
        if (dot(eq.normal, p) != eq.level) return false;
    if (dim_ == ambient_) {
        for (const auto& f : facets_)
            if (dot(f.normal, p) < f.level) return false;
        return true;
    }
    Vec t;
    try {
        t = frame_->embed(p);
    } catch (const std::logic_error&) {
        return false;
    }
    return embedded_->contains(t);
}

bool LatticePolytope::strictly_contains(const Vec& p) const {
    if (dim_ != ambient_) return false;
    for (const auto& f : facets_)
        if (dot(f.normal, p) <= f.level) return false;
    return true;
}

namespace {

struct Scanner {
    int n;
    std::vector<ScanRow> rows;
    std::vector<Int> lo, hi;
    // sufmax[i][j]: largest possible contribution of coordinates j..n-1 to row i.
    std::vector<std::vector<Int>> sufmax;
    Int count = 0;
    const std::function<void(const Vec&)>* emit = nullptr;
    Vec point;

    void prepare() {
        const int m = static_cast<int>(rows.size());
        sufmax.assign(m, std::vector<Int>(n + 1, Int(0)));
        for (int i = 0; i < m; ++i)
            for (int j = n - 1; j >= 0; --j) {
                Int c1 = rows[i].a[j] * lo[j], c2 = rows[i].a[j] * hi[j];
                sufmax[i][j] = sufmax[i][j + 1] + (c1 > c2 ? c1 : c2);
            }
    }

    void run() {
        for (int j = 0; j < n; ++j)
            if (lo[j] > hi[j]) return;
        std::vector<Int> residual(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) residual[i] = rows[i].b;
        point = Vec(n, Int(0));
        rec(0, residual);
    }

    void rec(int j, const std::vector<Int>& residual) {
        Int l = lo[j], h = hi[j];
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Int& aij = rows[i].a[j];
            Int need = residual[i] - sufmax[i][j + 1];
            if (aij == 0) {
                if (need > 0) return;
            } else if (aij > 0) {
                Int b = ceil_div(need, aij);
                if (b > l) l = b;
            } else {
                Int b = floor_div(need, aij);
                if (b < h) h = b;
            }
            if (l > h) return;
        }
        if (j == n - 1) {
            if (!emit) {
                count += h - l + 1;
            } else {
                for (Int x = l; x <= h; ++x) {
                    point[j] = x;
                    (*emit)(point);
                }
            }
            return;
        }
        std::vector<Int> res2(residual.size());
        for (Int x = l; x <= h; ++x) {
            for (std::size_t i = 0; i < rows.size(); ++i)
                res2[i] = residual[i] - rows[i].a[j] * x;
            point[j] = x;
            rec(j + 1, res2);
        }
    }
};

}  // namespace

Int scan_count(const std::vector<ScanRow>& rows, const std::vector<Int>& lo,
               const std::vector<Int>& hi) {
    Scanner s;
    s.n = static_cast<int>(lo.size());
    s.rows = rows;
    s.lo = lo;
    s.hi = hi;
    s.prepare();
    s.run();
    return s.count;
}

void scan_points(const std::vector<ScanRow>& rows, const std::vector<Int>& lo,
                 const std::vector<Int>& hi, const std::function<void(const Vec&)>& emit) {
    Scanner s;
    s.n = static_cast<int>(lo.size());
    s.rows = rows;
    s.lo = lo;
    s.hi = hi;
    s.emit = &emit;
    s.prepare();
    s.run();
}

namespace {

void full_dim_box(const LatticePolytope& P, const Int& m, std::vector<Int>& lo,
                  std::vector<Int>& hi) {
    const int n = P.ambient_dim();
    lo.assign(n, Int(0));
    hi.assign(n, Int(0));
    for (int j = 0; j < n; ++j) {
        Int mn = P.vertices()[0][j], mx = mn;
        for (const auto& v : P.vertices()) {
            mn = std::min(mn, v[j]);
            mx = std::max(mx, v[j]);
        }
        lo[j] = m * mn;
        hi[j] = m * mx;
        if (lo[j] > hi[j]) std::swap(lo[j], hi[j]);
    }
}

std::vector<ScanRow> full_dim_rows(const LatticePolytope& P, const Int& m,
                                   const Int& shift) {
    std::vector<ScanRow> rows;
    for (const auto& f : P.facets()) rows.push_back({f.normal, m * f.level + shift});
    return rows;
}

}  // namespace

std::vector<Vec> LatticePolytope::lattice_points(const Int& dilation) const {
    std::vector<Vec> out;
    if (is_empty()) return out;
    if (dilation == 0) {
        out.push_back(zero_vec(ambient_));
        return out;
    }
    if (dim_ == 0) {
        out.push_back(scale(dilation, vertices_[0]));
        return out;
    }
    if (dim_ == ambient_) {
        std::vector<Int> lo, hi;
        full_dim_box(*this, dilation, lo, hi);
        scan_points(full_dim_rows(*this, dilation, 0), lo, hi,
                    [&](const Vec& p) { out.push_back(p); });
        return out;
    }
    std::vector<Vec> inner = embedded_->lattice_points(dilation);
    Vec o = scale(dilation, frame_->origin);
    for (const auto& t : inner) {
        Vec p = o;
        for (std::size_t i = 0; i < frame_->basis.size(); ++i)
            p = add(p, scale(t[i], frame_->basis[i]));
        out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Int LatticePolytope::lattice_point_count(const Int& dilation) const {
    if (is_empty()) return 0;
    if (dilation == 0 || dim_ == 0) return 1;
    if (dim_ == ambient_) {
        std::vector<Int> lo, hi;
        full_dim_box(*this, dilation, lo, hi);
        return scan_count(full_dim_rows(*this, dilation, 0), lo, hi);
    }
    return embedded_->lattice_point_count(dilation);
}

std::vector<Vec> LatticePolytope::interior_lattice_points() const {
    if (dim_ != ambient_)
        throw std::logic_error("interior points: polytope is not full-dimensional");
    std::vector<Int> lo, hi;
    full_dim_box(*this, 1, lo, hi);
    std::vector<Vec> out;
    scan_points(full_dim_rows(*this, 1, 1), lo, hi,
                [&](const Vec& p) { out.push_back(p); });
    return out;
}

std::string LatticePolytope::key() const {
    std::ostringstream os;
    os << ambient_ << '|';
    for (const auto& v : vertices_) os << v << ';';
    return os.str();
}

std::vector<Face> proper_faces(const LatticePolytope& P) {
    if (P.dim() != P.ambient_dim())
        throw std::logic_error("faces: polytope is not full-dimensional");
    const auto& verts = P.vertices();
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue;
    for (const auto& f : P.facets()) {
        std::vector<int> tight;
        for (int i = 0; i < static_cast<int>(verts.size()); ++i)
            if (dot(f.normal, verts[i]) == f.level) tight.push_back(i);
        if (seen.insert(tight).second) queue.push_back(tight);
    }
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            std::vector<int> inter;
            std::set_intersection(queue[i].begin(), queue[i].end(), queue[j].begin(),
                                  queue[j].end(), std::back_inserter(inter));
            if (inter.empty()) continue;
            if (seen.insert(inter).second) queue.push_back(inter);
        }
    std::vector<Face> faces;
    for (const auto& vs : queue) {
        std::vector<Vec> diffs;
        for (std::size_t i = 1; i < vs.size(); ++i)
            diffs.push_back(sub(verts[vs[i]], verts[vs[0]]));
        faces.push_back({vs, rational_rank(diffs)});
    }
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
        return a.dim != b.dim ? a.dim < b.dim : a.vertex_indices < b.vertex_indices;
    });
    return faces;
}

LatticePolytope face_polytope(const LatticePolytope& P, const Face& f) {
    std::vector<Vec> pts;
    for (int i : f.vertex_indices) pts.push_back(P.vertices()[i]);
    return LatticePolytope::hull(pts);
}

std::vector<Vec> ccw_ring(const LatticePolytope& P) {
    if (P.dim() != 2 || P.ambient_dim() != 2)
        throw std::logic_error("ccw_ring: expected a full-dimensional 2-d polytope");
    return hull2_ccw(P.vertices());
}

Int pairing_min(const Vec& w, const LatticePolytope& P) {
    Int h = dot(w, P.vertices()[0]);
    for (const auto& v : P.vertices()) h = std::min(h, dot(w, v));
    return h;
}

Int pairing_max(const Vec& w, const LatticePolytope& P) {
    Int h = dot(w, P.vertices()[0]);
    for (const auto& v : P.vertices()) h = std::max(h, dot(w, v));
    return h;
}

Int width(const LatticePolytope& P, const Vec& w) {
    if (!is_primitive(w)) throw std::invalid_argument("width: w is not primitive");
    return pairing_max(w, P) - pairing_min(w, P);
}

LatticePolytope slice(const LatticePolytope& P, const Vec& w, const Int& h) {
    std::vector<Vec> pts;
    for (const auto& p : P.lattice_points())
        if (dot(w, p) == h) pts.push_back(p);
    if (pts.empty()) return LatticePolytope::empty(P.ambient_dim());
    return LatticePolytope::hull(pts);
}

Int normalized_volume(const LatticePolytope& P) {
    if (P.is_empty() || P.dim() != P.ambient_dim())
        throw std::invalid_argument("volume: polytope is not full-dimensional");
    const int n = P.ambient_dim();
    if (n == 1) {
        return P.vertices().back()[0] - P.vertices().front()[0];
    }
    const Vec& v0 = P.vertices()[0];
    Int total = 0;
    for (const auto& f : P.facets()) {
        Int height = dot(f.normal, v0) - f.level;
        if (height == 0) continue;
        std::vector<Vec> tight;
        for (const auto& v : P.vertices())
            if (dot(f.normal, v) == f.level) tight.push_back(v);
        LatticePolytope F = LatticePolytope::hull(tight);
        Int base = F.dim() == 0 ? Int(1) : normalized_volume(F.embedded());
        total += height * base;
    }
    return total;
}

LatticePolytope apply_map(const LatticePolytope& P, const UnimodularMap& M) {
    if (P.is_empty()) return P;
    LatticePolytope Q;
    Q.ambient_ = P.ambient_;
    Q.dim_ = P.dim_;
    for (const auto& v : P.vertices_) Q.vertices_.push_back(M.apply_point(v));
    std::sort(Q.vertices_.begin(), Q.vertices_.end());
    for (const auto& f : P.facets_) Q.facets_.push_back({M.apply_functional(f.normal), f.level});
    std::sort(Q.facets_.begin(), Q.facets_.end(), [](const HalfSpace& a, const HalfSpace& b) {
        return a.normal != b.normal ? a.normal < b.normal : a.level < b.level;
    });
    for (const auto& e : P.hull_eqs_) Q.hull_eqs_.push_back({M.apply_functional(e.normal), e.level});
    if (P.frame_) {
        auto fr = std::make_shared<AffineFrame>();
        fr->origin = M.apply_point(P.frame_->origin);
        for (const auto& b : P.frame_->basis) fr->basis.push_back(M.apply_point(b));
        Q.frame_ = fr;
        Q.embedded_ = P.embedded_;
    }
    return Q;
}

bool is_fano(const LatticePolytope& P) {
    if (P.is_empty() || P.dim() != P.ambient_dim()) return false;
    if (!P.strictly_contains(zero_vec(P.ambient_dim()))) return false;
    for (const auto& v : P.vertices())
        if (!is_primitive(v)) return false;
    return true;
}

bool is_canonical(const LatticePolytope& P) {
    if (!is_fano(P)) return false;
    return P.interior_lattice_points().size() == 1;
}

LatticePolytope translate(const LatticePolytope& P, const Vec& v) {
    if (P.is_empty()) return P;
    std::vector<Vec> pts;
    for (const auto& p : P.vertices()) pts.push_back(add(p, v));
    return LatticePolytope::hull(pts);
}

LatticePolytope dilate(const LatticePolytope& P, const Int& k) {
    if (P.is_empty()) return P;
    if (k == 0) return LatticePolytope::hull({zero_vec(P.ambient_dim())});
    std::vector<Vec> pts;
    for (const auto& p : P.vertices()) pts.push_back(scale(k, p));
    return LatticePolytope::hull(pts);
}

}  // namespace latmut
