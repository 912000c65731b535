#include "latmut/mat.hpp"

#include <stdexcept>

namespace latmut {

SqMat mat_mul(const SqMat& A, const SqMat& B) {
    SqMat C(A.n);
    for (int i = 0; i < A.n; ++i)
        for (int k = 0; k < A.n; ++k) {
            const Int& aik = A.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < A.n; ++j) C.at(i, j) += aik * B.at(k, j);
        }
    return C;
}

SqMat transpose(const SqMat& A) {
    SqMat T(A.n);
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j) T.at(j, i) = A.at(i, j);
    return T;
}

Int det(const SqMat& A) {
    // Bareiss fraction-free elimination.
    SqMat m = A;
    int n = m.n;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

Vec row_apply(const Vec& v, const SqMat& M) {
    Vec r(M.n, Int(0));
    for (int i = 0; i < M.n; ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < M.n; ++j) r[j] += v[i] * M.at(i, j);
    }
    return r;
}

namespace {

// Cofactor minor determinant with row i and column j removed.
Int minor_det(const SqMat& A, int i, int j) {
    SqMat m(A.n - 1);
    int r = 0;
    for (int p = 0; p < A.n; ++p) {
        if (p == i) continue;
        int c = 0;
        for (int q = 0; q < A.n; ++q) {
            if (q == j) continue;
            m.at(r, c) = A.at(p, q);
            ++c;
        }
        ++r;
    }
    return det(m);
}

}  // namespace

SqMat inverse_unimodular(const SqMat& M) {
    Int d = det(M);
    if (d != 1 && d != -1) throw std::invalid_argument("matrix is not unimodular");
    SqMat inv(M.n);
    if (M.n == 1) {
        inv.at(0, 0) = d;  // 1/d == d for d = +-1
        return inv;
    }
    for (int i = 0; i < M.n; ++i)
        for (int j = 0; j < M.n; ++j) {
            Int c = minor_det(M, j, i);
            if ((i + j) % 2) c = -c;
            inv.at(i, j) = c / d;
        }
    return inv;
}

UnimodularMap::UnimodularMap(SqMat m) : mat_(std::move(m)) {
    Int d = det(mat_);
    if (d != 1 && d != -1) throw std::invalid_argument("matrix is not unimodular");
    cofunc_ = transpose(inverse_unimodular(mat_));
}

std::vector<Vec> integer_kernel_basis(const std::vector<Vec>& rows, int n) {
    // Column reduction A -> A*U with U unimodular; kernel = trailing columns.
    std::vector<Vec> A = rows;
    SqMat U = SqMat::identity(n);
    auto col_swap = [&](int c1, int c2) {
        for (auto& r : A) std::swap(r[c1], r[c2]);
        for (int i = 0; i < n; ++i) std::swap(U.at(i, c1), U.at(i, c2));
    };
    // col_c1' = x*col_c1 + y*col_c2 ; col_c2' = -v*col_c1 + u*col_c2 (det 1).
    auto col_combine = [&](int c1, int c2, const Int& x, const Int& y, const Int& u,
                           const Int& v) {
        for (auto& r : A) {
            Int a = r[c1], b = r[c2];
            r[c1] = x * a + y * b;
            r[c2] = -v * a + u * b;
        }
        for (int i = 0; i < n; ++i) {
            Int a = U.at(i, c1), b = U.at(i, c2);
            U.at(i, c1) = x * a + y * b;
            U.at(i, c2) = -v * a + u * b;
        }
    };
    int col = 0;
    for (std::size_t r = 0; r < A.size() && col < n; ++r) {
        int pivot = -1;
        for (int c = col; c < n; ++c)
            if (A[r][c] != 0) { pivot = c; break; }
        if (pivot < 0) continue;
        if (pivot != col) col_swap(pivot, col);
        for (int c = col + 1; c < n; ++c) {
            if (A[r][c] == 0) continue;
            auto [g, x, y] = ext_gcd(A[r][col], A[r][c]);
            col_combine(col, c, x, y, A[r][col] / g, A[r][c] / g);
        }
        ++col;
    }
    std::vector<Vec> basis;
    for (int c = col; c < n; ++c) basis.push_back(U.col(c));
    return basis;
}

SqMat complete_to_unimodular(const Vec& w) {
    int n = static_cast<int>(w.size());
    if (!is_primitive(w)) throw std::invalid_argument("vector is not primitive");
    // Find y with <y,w> = 1, then a basis of ker(y); columns [ker | w].
    Vec y(n, Int(0));
    Int g = 0;
    for (int i = 0; i < n; ++i) {
        auto [g2, x, z] = ext_gcd(g, w[i]);
        for (int j = 0; j < i; ++j) y[j] *= x;
        y[i] = z;
        g = g2;
    }
    std::vector<Vec> ker = integer_kernel_basis({y}, n);
    SqMat U(n);
    for (int c = 0; c < n - 1; ++c)
        for (int i = 0; i < n; ++i) U.at(i, c) = ker[c][i];
    for (int i = 0; i < n; ++i) U.at(i, n - 1) = w[i];
    if (det(U) < 0)
        for (int i = 0; i < n; ++i) U.at(i, 0) = -U.at(i, 0);
    return U;
}

int rational_rank(std::vector<Vec> rows) {
    if (rows.empty()) return 0;
    int n = static_cast<int>(rows[0].size());
    int rank = 0;
    for (int c = 0; c < n && rank < static_cast<int>(rows.size()); ++c) {
        int p = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][c] != 0) { p = r; break; }
        if (p < 0) continue;
        std::swap(rows[rank], rows[p]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            Int f1 = rows[rank][c], f2 = rows[r][c];
            for (int j = 0; j < n; ++j) rows[r][j] = rows[r][j] * f1 - rows[rank][j] * f2;
        }
        ++rank;
    }
    return rank;
}

std::optional<QVec> solve_left(const SqMat& A, const QVec& b) {
    // Solve x*A = b, i.e. A^T x^T = b^T, by rational Gaussian elimination.
    int n = A.n;
    std::vector<QVec> m(n, QVec(n + 1, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = Rat(A.at(j, i));
        m[i][n] = b[i];
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
    QVec x(n);
    for (int i = 0; i < n; ++i) x[i] = m[i][n];
    return x;
}

}  // namespace latmut
