// Sparse exact Laurent polynomials: arithmetic, monomial substitutions,
// exact division, algebraic mutations, Newton polytopes, period sequences.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latmut/mat.hpp"
#include "latmut/polytope.hpp"

namespace latmut {

class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    explicit LaurentPolynomial(int dim) : dim_(dim) {}

    static LaurentPolynomial constant(int dim, const Rat& c) {
        LaurentPolynomial f(dim);
        f.add_term(zero_vec(dim), c);
        return f;
    }
    static LaurentPolynomial monomial(const Vec& e, const Rat& c = 1) {
        LaurentPolynomial f(static_cast<int>(e.size()));
        f.add_term(e, c);
        return f;
    }

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Vec, Rat>& terms() const { return terms_; }

    Rat coeff(const Vec& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rat(0) : it->second;
    }
    Rat constant_term() const { return coeff(zero_vec(dim_)); }

    void add_term(const Vec& e, const Rat& c);

    bool operator==(const LaurentPolynomial& o) const {
        return dim_ == o.dim_ && terms_ == o.terms_;
    }
    bool operator!=(const LaurentPolynomial& o) const { return !(*this == o); }

private:
    int dim_ = 0;
    std::map<Vec, Rat> terms_;  // no zero coefficients stored
};

LaurentPolynomial add(const LaurentPolynomial& f, const LaurentPolynomial& g);
LaurentPolynomial sub(const LaurentPolynomial& f, const LaurentPolynomial& g);
LaurentPolynomial multiply(const LaurentPolynomial& f, const LaurentPolynomial& g);
LaurentPolynomial power(const LaurentPolynomial& f, const Int& k);
LaurentPolynomial scale(const Rat& c, const LaurentPolynomial& f);

// conv of the exponent vectors.
LatticePolytope newton_polytope(const LaurentPolynomial& f);

// Variables transform by x -> x^M; exponent vectors then map by v -> v*M.
LaurentPolynomial substitute(const LaurentPolynomial& f, const UnimodularMap& M);

// h with g*h = f, if it exists. Graded-lex division after shifting supports
// to the nonnegative orthant.
std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& f,
                                              const LaurentPolynomial& g);

struct PeriodSequence {
    std::vector<Rat> coeffs;  // c_0 .. c_k; c_k = constant term of f^k
    bool operator==(const PeriodSequence& o) const { return coeffs == o.coeffs; }
};

PeriodSequence period_coeffs(const LaurentPolynomial& f, int k_max);

// Raised when some height slice fails the divisibility requirement of an
// algebraic mutation.
struct MutationDivisibilityError : std::runtime_error {
    std::vector<Int> heights;
    explicit MutationDivisibilityError(std::vector<Int> hs);
};

// Pullback along (pre GL-map) . (x_n -> A(x_1..x_{n-1}) x_n) . (post GL-map).
// A has one fewer variable than f. For heights h < 0 in the middle step the
// slice C_h must be divisible by A^{-h}.
LaurentPolynomial algebraic_mutate(const LaurentPolynomial& f, const UnimodularMap& pre,
                                   const LaurentPolynomial& A, const UnimodularMap& post);

// Slices of f by the last coordinate: f = sum_h C_h(x_1..x_{n-1}) x_n^h.
std::map<Int, LaurentPolynomial> coefficient_slices(const LaurentPolynomial& f);

// Polynomial equality under GL(n,Z)-substitution; returns a witness map.
std::optional<UnimodularMap> laurent_equivalent(const LaurentPolynomial& f,
                                                const LaurentPolynomial& g);

std::string laurent_fingerprint(const LaurentPolynomial& f);

}  // namespace latmut
