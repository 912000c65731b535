// Square integer matrices, unimodular maps, and integer kernel/basis tools.
//
// Convention: lattice points transform as row vectors, v -> v*M. Functionals
// transform contragrediently, u -> u*(M^{-1})^T, so that <u',v'> = <u,v>.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latmut/vec.hpp"

namespace latmut {

struct SqMat {
    int n = 0;
    std::vector<Int> a;  // row-major, n*n

    SqMat() = default;
    explicit SqMat(int n_) : n(n_), a(static_cast<std::size_t>(n_) * n_, Int(0)) {}

    static SqMat identity(int n_) {
        SqMat m(n_);
        for (int i = 0; i < n_; ++i) m.at(i, i) = 1;
        return m;
    }

    Int& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const Int& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

    bool operator==(const SqMat& o) const { return n == o.n && a == o.a; }

    Vec row(int i) const {
        Vec r(n);
        for (int j = 0; j < n; ++j) r[j] = at(i, j);
        return r;
    }
    Vec col(int j) const {
        Vec c(n);
        for (int i = 0; i < n; ++i) c[i] = at(i, j);
        return c;
    }
};

SqMat mat_mul(const SqMat& A, const SqMat& B);
SqMat transpose(const SqMat& A);
Int det(const SqMat& A);

// v*M for a row vector v.
Vec row_apply(const Vec& v, const SqMat& M);

// Exact inverse of a matrix with det = +-1.
SqMat inverse_unimodular(const SqMat& M);

// A map in GL(n,Z). Points map by v -> v*M, functionals by u -> u*(M^{-1})^T.
class UnimodularMap {
public:
    explicit UnimodularMap(SqMat m);
    static UnimodularMap identity(int n) { return UnimodularMap(SqMat::identity(n)); }

    int dim() const { return mat_.n; }
    const SqMat& matrix() const { return mat_; }
    UnimodularMap inverse() const { return UnimodularMap(inverse_unimodular(mat_)); }
    UnimodularMap compose(const UnimodularMap& then) const {
        return UnimodularMap(mat_mul(mat_, then.mat_));
    }

    Vec apply_point(const Vec& v) const { return row_apply(v, mat_); }
    Vec apply_functional(const Vec& u) const { return row_apply(u, cofunc_); }

    bool operator==(const UnimodularMap& o) const { return mat_ == o.mat_; }

private:
    SqMat mat_;
    SqMat cofunc_;  // (M^{-1})^T
};

// Basis of {x in Z^n : A*x = 0} for the integer matrix with the given rows.
// The basis generates the full (saturated) kernel lattice.
std::vector<Vec> integer_kernel_basis(const std::vector<Vec>& rows, int n);

// For primitive w, a matrix U with det +1 whose last column is w. Then
// (v*U)[n-1] = <w,v> for every row vector v.
SqMat complete_to_unimodular(const Vec& w);

// Rank of the rows over Q.
int rational_rank(std::vector<Vec> rows);

// Solves x*A = b over Q for a row vector x; nullopt if singular/unsolvable.
std::optional<QVec> solve_left(const SqMat& A, const QVec& b);

}  // namespace latmut
