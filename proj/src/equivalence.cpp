#include "latmut/equivalence.hpp"

#include <algorithm>
#include <sstream>

namespace latmut {

std::string gl_fingerprint(const LatticePolytope& P) {
    std::ostringstream os;
    os << P.ambient_dim() << ':' << P.dim() << ':' << P.vertices().size();
    if (P.dim() == P.ambient_dim()) {
        os << ':' << normalized_volume(P);
        os << ':' << P.lattice_point_count(1) << ':' << P.lattice_point_count(2);
        std::vector<Int> widths;
        for (const auto& f : P.facets()) widths.push_back(width(P, f.normal));
        std::sort(widths.begin(), widths.end());
        os << ':';
        for (const auto& w : widths) os << w << ',';
    }
    return os.str();
}

namespace {

// First spanning tuple of n linearly independent vertices, by lex order.
std::optional<std::vector<int>> spanning_tuple(const std::vector<Vec>& verts, int n) {
    std::vector<int> idx;
    std::vector<Vec> rows;
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
        std::vector<Vec> trial = rows;
        trial.push_back(verts[i]);
        if (rational_rank(trial) == static_cast<int>(trial.size())) {
            rows = trial;
            idx.push_back(i);
            if (static_cast<int>(idx.size()) == n) return idx;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<UnimodularMap> gl_equivalent(const LatticePolytope& P,
                                           const LatticePolytope& Q) {
    if (P.ambient_dim() != Q.ambient_dim()) return std::nullopt;
    if (P.is_empty() && Q.is_empty()) return UnimodularMap::identity(P.ambient_dim());
    if (P.is_empty() || Q.is_empty()) return std::nullopt;
    if (gl_fingerprint(P) != gl_fingerprint(Q)) return std::nullopt;

    const int n = P.ambient_dim();
    if (P.dim() != n || Q.dim() != n) {
        // Only full-dimensional polytopes are searched; lower-dimensional
        // inputs are compared through their full-dimensional embeddings by
        // the callers that need it.
        return P == Q ? std::optional<UnimodularMap>(UnimodularMap::identity(n))
                      : std::nullopt;
    }

    auto base = spanning_tuple(P.vertices(), n);
    if (!base) return std::nullopt;
    SqMat A(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A.at(i, j) = P.vertices()[(*base)[i]][j];

    const auto& qv = Q.vertices();
    const int m = static_cast<int>(qv.size());
    std::vector<int> pick(n, -1);
    std::vector<bool> used(m, false);

    std::optional<UnimodularMap> result;
    std::function<void(int)> rec = [&](int k) {
        if (result) return;
        if (k == n) {
            // Solve A * M = B over Q, require integral unimodular M.
            SqMat B(n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) B.at(i, j) = qv[pick[i]][j];
            SqMat M(n);
            for (int col = 0; col < n; ++col) {
                QVec rhs(n);
                for (int i = 0; i < n; ++i) rhs[i] = Rat(B.at(i, col));
                // Solve A * x = rhs (columns of M).
                std::vector<QVec> mm(n, QVec(n + 1, Rat(0)));
                for (int i = 0; i < n; ++i) {
                    for (int j = 0; j < n; ++j) mm[i][j] = Rat(A.at(i, j));
                    mm[i][n] = rhs[i];
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
                for (int i = 0; i < n; ++i) {
                    if (denominator(mm[i][n]) != 1) return;
                    M.at(i, col) = numerator(mm[i][n]);
                }
            }
            Int d = det(M);
            if (d != 1 && d != -1) return;
            UnimodularMap U(M);
            if (apply_map(P, U) == Q) result = U;
            return;
        }
        for (int i = 0; i < m; ++i) {
            if (used[i]) continue;
            used[i] = true;
            pick[k] = i;
            rec(k + 1);
            used[i] = false;
            if (result) return;
        }
    };
    rec(0);
    return result;
}

}  // namespace latmut
