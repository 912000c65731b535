#include "latmut/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "latmut/equivalence.hpp"

namespace latmut {

void LaurentPolynomial::add_term(const Vec& e, const Rat& c) {
    if (static_cast<int>(e.size()) != dim_)
        throw std::invalid_argument("laurent: exponent dimension mismatch");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPolynomial add(const LaurentPolynomial& f, const LaurentPolynomial& g) {
    LaurentPolynomial h = f;
    for (const auto& [e, c] : g.terms()) h.add_term(e, c);
    return h;
}

LaurentPolynomial sub(const LaurentPolynomial& f, const LaurentPolynomial& g) {
    LaurentPolynomial h = f;
    for (const auto& [e, c] : g.terms()) h.add_term(e, -c);
    return h;
}

LaurentPolynomial multiply(const LaurentPolynomial& f, const LaurentPolynomial& g) {
    if (f.dim() != g.dim()) throw std::invalid_argument("laurent: dimension mismatch");
    LaurentPolynomial h(f.dim());
    for (const auto& [ef, cf] : f.terms())
        for (const auto& [eg, cg] : g.terms()) h.add_term(add(ef, eg), cf * cg);
    return h;
}

LaurentPolynomial power(const LaurentPolynomial& f, const Int& k) {
    if (k < 0) throw std::invalid_argument("laurent: negative power");
    LaurentPolynomial h = LaurentPolynomial::constant(f.dim(), 1);
    for (Int i = 0; i < k; ++i) h = multiply(h, f);
    return h;
}

LaurentPolynomial scale(const Rat& c, const LaurentPolynomial& f) {
    LaurentPolynomial h(f.dim());
    for (const auto& [e, cf] : f.terms()) h.add_term(e, c * cf);
    return h;
}

LatticePolytope newton_polytope(const LaurentPolynomial& f) {
    if (f.is_zero()) return LatticePolytope::empty(f.dim());
    std::vector<Vec> pts;
    for (const auto& [e, c] : f.terms()) pts.push_back(e);
    return LatticePolytope::hull(pts);
}

LaurentPolynomial substitute(const LaurentPolynomial& f, const UnimodularMap& M) {
    if (M.dim() != f.dim()) throw std::invalid_argument("substitute: dimension mismatch");
    LaurentPolynomial h(f.dim());
    for (const auto& [e, c] : f.terms()) h.add_term(M.apply_point(e), c);
    return h;
}

namespace {

// Graded-lex order on nonnegative exponent vectors.
bool grlex_less(const Vec& a, const Vec& b) {
    Int sa = 0, sb = 0;
    for (const auto& x : a) sa += x;
    for (const auto& x : b) sb += x;
    if (sa != sb) return sa < sb;
    return a < b;
}

Vec min_exponents(const LaurentPolynomial& f) {
    Vec mn = f.terms().begin()->first;
    for (const auto& [e, c] : f.terms())
        for (std::size_t i = 0; i < e.size(); ++i) mn[i] = std::min(mn[i], e[i]);
    return mn;
}

LaurentPolynomial shift(const LaurentPolynomial& f, const Vec& by) {
    LaurentPolynomial h(f.dim());
    for (const auto& [e, c] : f.terms()) h.add_term(add(e, by), c);
    return h;
}

}  // namespace

std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& f,
                                              const LaurentPolynomial& g) {
    if (g.is_zero()) throw std::invalid_argument("divide: zero divisor");
    if (f.dim() != g.dim()) throw std::invalid_argument("divide: dimension mismatch");
    if (f.is_zero()) return LaurentPolynomial(f.dim());

    // Shift supports to the nonnegative orthant. If g | f in the Laurent
    // ring, the shifted quotient is an honest polynomial.
    Vec mf = min_exponents(f), mg = min_exponents(g);
    LaurentPolynomial fs = shift(f, negate(mf));
    LaurentPolynomial gs = shift(g, negate(mg));

    auto leading = [](const LaurentPolynomial& p) {
        auto best = p.terms().begin();
        for (auto it = p.terms().begin(); it != p.terms().end(); ++it)
            if (grlex_less(best->first, it->first)) best = it;
        return best;
    };

    auto lg = leading(gs);
    LaurentPolynomial q(f.dim());
    LaurentPolynomial rem = fs;
    while (!rem.is_zero()) {
        auto lf = leading(rem);
        Vec e = sub(lf->first, lg->first);
        for (const auto& x : e)
            if (x < 0) return std::nullopt;
        Rat c = lf->second / lg->second;
        q.add_term(e, c);
        LaurentPolynomial t(f.dim());
        t.add_term(e, c);
        rem = sub(rem, multiply(t, gs));
    }
    return shift(q, sub(mf, mg));
}

PeriodSequence period_coeffs(const LaurentPolynomial& f, int k_max) {
    if (k_max < 0) throw std::invalid_argument("period: negative k_max");
    PeriodSequence seq;
    seq.coeffs.push_back(Rat(1));
    LaurentPolynomial p = LaurentPolynomial::constant(f.dim(), 1);
    for (int k = 1; k <= k_max; ++k) {
        p = multiply(p, f);
        seq.coeffs.push_back(p.constant_term());
    }
    return seq;
}

MutationDivisibilityError::MutationDivisibilityError(std::vector<Int> hs)
    : std::runtime_error([&hs] {
          std::ostringstream os;
          os << "algebraic mutation: divisibility fails at height";
          if (hs.size() > 1) os << 's';
          for (const auto& h : hs) os << ' ' << h;
          return os.str();
      }()),
      heights(std::move(hs)) {}

std::map<Int, LaurentPolynomial> coefficient_slices(const LaurentPolynomial& f) {
    const int n = f.dim();
    std::map<Int, LaurentPolynomial> slices;
    for (const auto& [e, c] : f.terms()) {
        Vec head(e.begin(), e.end() - 1);
        auto [it, fresh] = slices.try_emplace(e[n - 1], LaurentPolynomial(n - 1));
        it->second.add_term(head, c);
    }
    return slices;
}

LaurentPolynomial algebraic_mutate(const LaurentPolynomial& f, const UnimodularMap& pre,
                                   const LaurentPolynomial& A, const UnimodularMap& post) {
    const int n = f.dim();
    if (A.dim() != n - 1)
        throw std::invalid_argument("algebraic mutation: factor must have one fewer variable");
    if (A.is_zero()) throw std::invalid_argument("algebraic mutation: zero factor");

    LaurentPolynomial g = substitute(f, pre);
    auto slices = coefficient_slices(g);

    // Pullback along x_n -> A*x_n sends sum C_h x_n^h to sum C_h A^h x_n^h.
    std::map<Int, LaurentPolynomial> out;
    std::vector<Int> bad;
    for (const auto& [h, C] : slices) {
        if (h >= 0) {
            out.emplace(h, multiply(C, power(A, h)));
        } else {
            auto q = divide_exact(C, power(A, -h));
            if (!q)
                bad.push_back(h);
            else
                out.emplace(h, *q);
        }
    }
    if (!bad.empty()) throw MutationDivisibilityError(std::move(bad));

    LaurentPolynomial res(n);
    for (const auto& [h, C] : out)
        for (const auto& [e, c] : C.terms()) {
            Vec full = e;
            full.push_back(h);
            res.add_term(full, c);
        }
    return substitute(res, post);
}

std::string laurent_fingerprint(const LaurentPolynomial& f) {
    std::ostringstream os;
    std::vector<Rat> coeffs;
    for (const auto& [e, c] : f.terms()) coeffs.push_back(c);
    std::sort(coeffs.begin(), coeffs.end());
    for (const auto& c : coeffs) os << c << ',';
    os << '|' << gl_fingerprint(newton_polytope(f));
    return os.str();
}

std::optional<UnimodularMap> laurent_equivalent(const LaurentPolynomial& f,
                                                const LaurentPolynomial& g) {
    if (f.dim() != g.dim()) return std::nullopt;
    if (f.is_zero() || g.is_zero()) return std::nullopt;
    if (laurent_fingerprint(f) != laurent_fingerprint(g)) return std::nullopt;

    // Enumerate polytope equivalences Newt(f) -> Newt(g) by tuple search and
    // test the full substitution. gl_equivalent returns only one witness, so
    // redo the search here keeping all candidates.
    LatticePolytope P = newton_polytope(f), Q = newton_polytope(g);
    const int n = f.dim();
    if (P.dim() != n) {
        // Degenerate supports: compare directly.
        return f == g ? std::optional<UnimodularMap>(UnimodularMap::identity(n))
                      : std::nullopt;
    }

    std::vector<int> base;
    std::vector<Vec> rows;
    for (int i = 0; i < static_cast<int>(P.vertices().size()); ++i) {
        std::vector<Vec> trial = rows;
        trial.push_back(P.vertices()[i]);
        if (rational_rank(trial) == static_cast<int>(trial.size())) {
            rows = trial;
            base.push_back(i);
            if (static_cast<int>(base.size()) == n) break;
        }
    }
    if (static_cast<int>(base.size()) != n) return std::nullopt;

    const auto& qv = Q.vertices();
    const int m = static_cast<int>(qv.size());
    std::vector<int> pick(n);
    std::vector<bool> used(m, false);
    std::optional<UnimodularMap> result;

    std::function<void(int)> rec = [&](int k) {
        if (result) return;
        if (k == n) {
            std::vector<QVec> mm(n, QVec(n, Rat(0)));
            SqMat M(n);
            for (int col = 0; col < n; ++col) {
                std::vector<QVec> aug(n, QVec(n + 1, Rat(0)));
                for (int i = 0; i < n; ++i) {
                    for (int j = 0; j < n; ++j) aug[i][j] = Rat(P.vertices()[base[i]][j]);
                    aug[i][n] = Rat(qv[pick[i]][col]);
                }
                for (int c = 0; c < n; ++c) {
                    int p = -1;
                    for (int r = c; r < n; ++r)
                        if (aug[r][c] != 0) { p = r; break; }
                    if (p < 0) return;
                    std::swap(aug[c], aug[p]);
                    Rat inv = Rat(1) / aug[c][c];
                    for (int j = c; j <= n; ++j) aug[c][j] *= inv;
                    for (int r = 0; r < n; ++r) {
                        if (r == c || aug[r][c] == 0) continue;
                        Rat fct = aug[r][c];
                        for (int j = c; j <= n; ++j) aug[r][j] -= fct * aug[c][j];
                    }
                }
                for (int i = 0; i < n; ++i) {
                    if (denominator(aug[i][n]) != 1) return;
                    M.at(i, col) = numerator(aug[i][n]);
                }
            }
            Int d = det(M);
            if (d != 1 && d != -1) return;
            UnimodularMap U(M);
            if (substitute(f, U) == g) result = U;
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
