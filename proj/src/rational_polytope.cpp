#include "latmut/rational_polytope.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace latmut {

namespace {

// Solve A*u^T = b for the square system given by the chosen rows; nullopt if
// singular. Cramer-free: rational Gaussian elimination.
std::optional<QVec> solve_square(const std::vector<Vec>& rows, const Rat& rhs) {
    const int n = static_cast<int>(rows.size());
    std::vector<QVec> m(n, QVec(n + 1, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = Rat(rows[i][j]);
        m[i][n] = rhs;
    }
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (m[r][c] != 0) { p = r; break; }
        if (p < 0) return std::nullopt;
        std::swap(m[c], m[p]);
        Rat inv = Rat(1) / m[c][c];
        for (int j = c; j <= n; ++j) m[c][j] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Rat f = m[r][c];
            for (int j = c; j <= n; ++j) m[r][j] -= f * m[c][j];
        }
    }
    QVec u(n);
    for (int i = 0; i < n; ++i) u[i] = m[i][n];
    return u;
}

void vertex_enumerate(RationalPolytope& Q) {
    const int n = Q.dim;
    const int m = static_cast<int>(Q.rows.size());
    std::vector<int> idx(n);
    std::vector<QVec> found;
    std::function<void(int, int)> rec = [&](int start, int k) {
        if (k == n) {
            std::vector<Vec> sys(n);
            QVec rhs(n);
            for (int i = 0; i < n; ++i) sys[i] = Q.rows[idx[i]].normal;
            // General levels: solve row-wise via augmented elimination.
            std::vector<QVec> mm(n, QVec(n + 1, Rat(0)));
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) mm[i][j] = Rat(sys[i][j]);
                mm[i][n] = Q.rows[idx[i]].level;
            }
            for (int c = 0; c < n; ++c) {
                int p = -1;
                for (int r = c; r < n; ++r)
                    if (mm[r][c] != 0) { p = r; break; }
                if (p < 0) return;
                std::swap(mm[c], mm[p]);
                Rat inv = Rat(1) / mm[c][c];
                for (int j = c; j <= n; ++j) mm[c][j] *= inv;
                for (int r = 0; r < n; ++r) {
                    if (r == c || mm[r][c] == 0) continue;
                    Rat f = mm[r][c];
                    for (int j = c; j <= n; ++j) mm[r][j] -= f * mm[c][j];
                }
            }
            QVec u(n);
            for (int i = 0; i < n; ++i) u[i] = mm[i][n];
            for (const auto& row : Q.rows)
                if (dot_q(row.normal, u) < row.level) return;
            found.push_back(u);
            return;
        }
        for (int i = start; i <= m - (n - k); ++i) {
            idx[k] = i;
            rec(i + 1, k + 1);
        }
    };
    rec(0, 0);
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    Q.vertices = found;
    Q.r = 1;
    for (const auto& v : Q.vertices)
        for (const auto& c : v) Q.r = lcm(Q.r, denominator(c));
}

}  // namespace

std::string RationalPolytope::key() const {
    std::ostringstream os;
    os << dim << '|';
    for (const auto& v : vertices) {
        for (const auto& c : v) os << c << ' ';
        os << ';';
    }
    return os.str();
}

RationalPolytope dual(const LatticePolytope& P) {
    if (P.is_empty() || P.dim() != P.ambient_dim())
        throw std::invalid_argument("dual: polytope is not full-dimensional");
    if (!P.strictly_contains(zero_vec(P.ambient_dim())))
        throw std::invalid_argument("dual: origin is not strictly interior");
    RationalPolytope Q;
    Q.dim = P.ambient_dim();
    for (const auto& v : P.vertices()) Q.rows.push_back({v, Rat(-1)});
    vertex_enumerate(Q);
    return Q;
}

RationalPolytope as_rational(const LatticePolytope& P) {
    if (P.is_empty() || P.dim() != P.ambient_dim())
        throw std::invalid_argument("as_rational: polytope is not full-dimensional");
    RationalPolytope Q;
    Q.dim = P.ambient_dim();
    for (const auto& f : P.facets()) Q.rows.push_back({f.normal, Rat(f.level)});
    for (const auto& v : P.vertices()) {
        QVec q(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) q[i] = Rat(v[i]);
        Q.vertices.push_back(q);
    }
    std::sort(Q.vertices.begin(), Q.vertices.end());
    Q.r = 1;
    return Q;
}

LatticePolytope scaled_to_lattice(const RationalPolytope& Q, const Int& k) {
    std::vector<Vec> pts;
    for (const auto& v : Q.vertices) {
        Vec p(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            Rat c = Rat(k) * v[i];
            if (denominator(c) != 1)
                throw std::invalid_argument("scaled_to_lattice: dilation does not clear denominators");
            p[i] = numerator(c);
        }
        pts.push_back(p);
    }
    return LatticePolytope::hull(pts);
}

namespace {

void dilated_system(const RationalPolytope& Q, const Int& m, std::vector<ScanRow>& rows,
                    std::vector<Int>& lo, std::vector<Int>& hi) {
    const int n = Q.dim;
    rows.clear();
    for (const auto& row : Q.rows) rows.push_back({row.normal, ceil_rat(Rat(m) * row.level)});
    lo.assign(n, Int(0));
    hi.assign(n, Int(0));
    for (int j = 0; j < n; ++j) {
        Rat mn = Q.vertices[0][j], mx = mn;
        for (const auto& v : Q.vertices) {
            mn = std::min(mn, v[j]);
            mx = std::max(mx, v[j]);
        }
        lo[j] = ceil_rat(Rat(m) * mn);
        hi[j] = floor_rat(Rat(m) * mx);
    }
}

}  // namespace

Int dilated_point_count(const RationalPolytope& Q, const Int& m) {
    if (m == 0) return 1;
    std::vector<ScanRow> rows;
    std::vector<Int> lo, hi;
    dilated_system(Q, m, rows, lo, hi);
    return scan_count(rows, lo, hi);
}

std::vector<Vec> dilated_points(const RationalPolytope& Q, const Int& m) {
    std::vector<Vec> out;
    if (m == 0) {
        out.push_back(zero_vec(Q.dim));
        return out;
    }
    std::vector<ScanRow> rows;
    std::vector<Int> lo, hi;
    dilated_system(Q, m, rows, lo, hi);
    scan_points(rows, lo, hi, [&](const Vec& p) { out.push_back(p); });
    return out;
}

std::vector<Vec> dilated_boundary_points(const RationalPolytope& Q, const Int& m) {
    std::vector<Vec> out;
    for (const auto& p : dilated_points(Q, m)) {
        for (const auto& row : Q.rows) {
            if (Rat(dot(row.normal, p)) == Rat(m) * row.level) {
                out.push_back(p);
                break;
            }
        }
    }
    return out;
}

bool is_reflexive(const LatticePolytope& P) {
    if (!is_fano(P)) return false;
    return dual(P).r == 1;
}

}  // namespace latmut
