#include "latmut/minkowski.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace latmut {

LatticePolytope minkowski_sum(const LatticePolytope& A, const LatticePolytope& B) {
    if (A.is_empty() || B.is_empty())
        return LatticePolytope::empty(std::max(A.ambient_dim(), B.ambient_dim()));
    if (A.ambient_dim() != B.ambient_dim())
        throw std::invalid_argument("minkowski_sum: dimension mismatch");
    std::vector<Vec> pts;
    for (const auto& a : A.vertices())
        for (const auto& b : B.vertices()) pts.push_back(add(a, b));
    return LatticePolytope::hull(pts);
}

std::vector<Vec> minkowski_difference_points(const LatticePolytope& C,
                                             const LatticePolytope& B) {
    if (B.is_empty()) throw std::invalid_argument("minkowski difference: empty B");
    std::vector<Vec> out;
    if (C.is_empty()) return out;
    const Vec& b0 = B.vertices()[0];
    for (const auto& p : C.lattice_points()) {
        Vec v = sub(p, b0);
        bool ok = true;
        for (const auto& b : B.vertices())
            if (!C.contains(add(v, b))) { ok = false; break; }
        if (ok) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

LatticePolytope normal_form(const LatticePolytope& S) {
    if (S.is_empty() || S.dim() < 0) return S;
    return translate(S, negate(S.vertices()[0]));
}

struct EdgeInfo {
    int va, vb;  // vertex indices, va < vb
    Vec dir;     // primitive, (vb - va) = len * dir
    Int len;
};

// Summand enumeration by scaling edge lengths subject to 2-face closure.
std::vector<SummandPair> summand_pairs_full(const LatticePolytope& E) {
    const int d = E.ambient_dim();
    std::vector<SummandPair> out;
    const auto& verts = E.vertices();

    if (d == 1) {
        Int g = verts.back()[0] - verts.front()[0];
        for (Int k = 0; k <= g; ++k) {
            out.push_back({LatticePolytope::hull({Vec{Int(0)}, Vec{k}}),
                           LatticePolytope::hull({Vec{Int(0)}, Vec{g - k}})});
        }
        return out;
    }

    auto faces = proper_faces(E);
    std::vector<EdgeInfo> edges;
    std::map<std::pair<int, int>, int> edge_id;
    for (const auto& f : faces) {
        if (f.dim != 1) continue;
        int a = f.vertex_indices[0], b = f.vertex_indices[1];
        Vec diff = sub(verts[b], verts[a]);
        EdgeInfo e{a, b, make_primitive(diff), content(diff)};
        edge_id[{a, b}] = static_cast<int>(edges.size());
        edges.push_back(std::move(e));
    }

    // Oriented boundary cycles of the 2-faces, as (edge id, sign) lists.
    std::vector<std::vector<std::pair<int, int>>> cycles;
    auto add_cycle = [&](const std::vector<int>& ring) {
        std::vector<std::pair<int, int>> cyc;
        for (std::size_t i = 0; i < ring.size(); ++i) {
            int a = ring[i], b = ring[(i + 1) % ring.size()];
            int sign = 1;
            if (a > b) { std::swap(a, b); sign = -1; }
            auto it = edge_id.find({a, b});
            if (it == edge_id.end()) throw std::logic_error("summands: ring edge missing");
            cyc.push_back({it->second, sign});
        }
        cycles.push_back(std::move(cyc));
    };
    auto vertex_index = [&](const Vec& p) {
        auto it = std::lower_bound(verts.begin(), verts.end(), p);
        if (it == verts.end() || *it != p) throw std::logic_error("summands: vertex lookup");
        return static_cast<int>(it - verts.begin());
    };
    if (d == 2) {
        std::vector<int> ring;
        for (const auto& p : ccw_ring(E)) ring.push_back(vertex_index(p));
        add_cycle(ring);
    } else {
        for (const auto& f : faces) {
            if (f.dim != 2) continue;
            LatticePolytope fp = face_polytope(E, f);
            std::vector<int> ring;
            for (const auto& t : ccw_ring(fp.embedded()))
                ring.push_back(vertex_index(fp.frame().unembed(t)));
            add_cycle(ring);
        }
    }

    const int ne = static_cast<int>(edges.size());
    std::vector<Int> k(ne, Int(0));
    // For pruning: which cycles are complete once edge j is assigned.
    std::vector<std::vector<int>> cycle_done_at(ne);
    for (int c = 0; c < static_cast<int>(cycles.size()); ++c) {
        int last = 0;
        for (const auto& [e, s] : cycles[c]) last = std::max(last, e);
        cycle_done_at[last].push_back(c);
    }

    std::set<std::pair<std::string, std::string>> seen;
    auto emit = [&]() {
        // Reconstruct both summands by walking the edge graph.
        auto build = [&](bool complement) {
            std::vector<Vec> pos(verts.size());
            std::vector<bool> have(verts.size(), false);
            pos[0] = zero_vec(d);
            have[0] = true;
            bool progress = true;
            while (progress) {
                progress = false;
                for (int e = 0; e < ne; ++e) {
                    const auto& ei = edges[e];
                    Int kk = complement ? ei.len - k[e] : k[e];
                    if (have[ei.va] && !have[ei.vb]) {
                        pos[ei.vb] = add(pos[ei.va], scale(kk, ei.dir));
                        have[ei.vb] = true;
                        progress = true;
                    } else if (have[ei.vb] && !have[ei.va]) {
                        pos[ei.va] = sub(pos[ei.vb], scale(kk, ei.dir));
                        have[ei.va] = true;
                        progress = true;
                    } else if (have[ei.va] && have[ei.vb]) {
                        if (pos[ei.vb] != add(pos[ei.va], scale(kk, ei.dir)))
                            throw std::logic_error("summands: inconsistent edge scaling");
                    }
                }
            }
            return normal_form(LatticePolytope::hull(pos));
        };
        LatticePolytope S = build(false), G = build(true);
        if (normal_form(minkowski_sum(S, G)) != normal_form(E))
            throw std::logic_error("summands: reconstruction failed");
        if (seen.insert({S.key(), G.key()}).second) out.push_back({S, G});
    };

    std::function<void(int)> rec = [&](int j) {
        if (j == ne) {
            emit();
            return;
        }
        for (Int kk = 0; kk <= edges[j].len; ++kk) {
            k[j] = kk;
            bool ok = true;
            for (int c : cycle_done_at[j]) {
                Vec sum = zero_vec(d);
                for (const auto& [e, s] : cycles[c]) {
                    Vec contrib = scale(k[e], edges[e].dir);
                    sum = s > 0 ? add(sum, contrib) : sub(sum, contrib);
                }
                if (!is_zero(sum)) { ok = false; break; }
            }
            if (ok) rec(j + 1);
        }
    };
    rec(0);
    return out;
}

}  // namespace

std::vector<SummandPair> summand_pairs(const LatticePolytope& X) {
    if (X.is_empty()) throw std::invalid_argument("summands: empty polytope");
    if (X.dim() == 0) {
        LatticePolytope pt = LatticePolytope::hull({zero_vec(X.ambient_dim())});
        return {{pt, pt}};
    }
    if (X.dim() > 3) throw std::invalid_argument("summands: dimension > 3 not supported");

    std::vector<SummandPair> inner;
    if (X.dim() == X.ambient_dim()) {
        inner = summand_pairs_full(X);
        std::vector<SummandPair> out;
        for (auto& p : inner)
            out.push_back({normal_form(p.summand), normal_form(p.complement)});
        return out;
    }
    inner = summand_pairs_full(X.embedded());
    const auto& basis = X.frame().basis;
    auto back = [&](const LatticePolytope& S) {
        std::vector<Vec> pts;
        for (const auto& t : S.vertices()) {
            Vec p = zero_vec(X.ambient_dim());
            for (std::size_t i = 0; i < basis.size(); ++i) p = add(p, scale(t[i], basis[i]));
            pts.push_back(p);
        }
        return normal_form(LatticePolytope::hull(pts));
    };
    std::vector<SummandPair> out;
    for (const auto& p : inner) out.push_back({back(p.summand), back(p.complement)});
    return out;
}

std::optional<Summand> classify_piece(const LatticePolytope& S) {
    if (S.is_empty()) return std::nullopt;
    if (S.dim() == 1) {
        auto pts = S.lattice_points();
        if (pts.size() != 2) return std::nullopt;
        Summand s;
        s.kind = PieceKind::Segment;
        s.polygon = S;
        return s;
    }
    if (S.dim() != 2 || S.vertices().size() != 3) return std::nullopt;
    const auto& v = S.vertices();
    Int g01 = content(sub(v[1], v[0]));
    Int g02 = content(sub(v[2], v[0]));
    Int g12 = content(sub(v[2], v[1]));
    int apex;
    Int n;
    if (g01 >= g02 && g01 >= g12) { apex = 2; n = g01; }
    else if (g02 >= g01 && g02 >= g12) { apex = 1; n = g02; }
    else { apex = 0; n = g12; }
    Int ones = 0;
    for (const Int& g : {g01, g02, g12}) ones += (g == 1 ? 1 : 0);
    if (n == 1) {
        if (ones != 3) return std::nullopt;
        apex = 0;
    } else if (ones != 2) {
        return std::nullopt;
    }
    if (S.lattice_point_count() != n + 2) return std::nullopt;
    Summand s;
    s.kind = PieceKind::AnTriangle;
    s.polygon = S;
    s.an_n = static_cast<int>(to_ll(n));
    s.apex = v[apex];
    std::vector<Vec> base;
    for (int i = 0; i < 3; ++i)
        if (i != apex) base.push_back(v[i]);
    s.base_from = base[0];
    s.base_to = base[1];
    return s;
}

LaurentPolynomial piece_polynomial(const Summand& S) {
    if (S.kind == PieceKind::Segment) {
        auto pts = S.polygon.lattice_points();
        LaurentPolynomial f(S.polygon.ambient_dim());
        f.add_term(pts[0], 1);
        f.add_term(pts[1], 1);
        return f;
    }
    LaurentPolynomial f(S.polygon.ambient_dim());
    f.add_term(S.apex, 1);
    Vec step = make_primitive(sub(S.base_to, S.base_from));
    Rat c = 1;
    Vec p = S.base_from;
    for (int kk = 0; kk <= S.an_n; ++kk) {
        f.add_term(p, c);
        c = c * (S.an_n - kk) / (kk + 1);
        p = add(p, step);
    }
    return f;
}

namespace {

std::vector<Vec> hermite_rows(std::vector<Vec> rows, int n) {
    int r = 0;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (rows[i][c] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(rows[r], rows[p]);
        for (int i = r + 1; i < static_cast<int>(rows.size()); ++i) {
            while (rows[i][c] != 0) {
                auto [g, x, y] = ext_gcd(rows[r][c], rows[i][c]);
                Vec nr(n), ni(n);
                Int ur = rows[r][c] / g, ui = rows[i][c] / g;
                for (int j = 0; j < n; ++j) {
                    nr[j] = x * rows[r][j] + y * rows[i][j];
                    ni[j] = -ui * rows[r][j] + ur * rows[i][j];
                }
                rows[r] = nr;
                rows[i] = ni;
            }
        }
        if (rows[r][c] < 0) rows[r] = negate(rows[r]);
        for (int i = 0; i < r; ++i) {
            Int q = floor_div(rows[i][c], rows[r][c]);
            if (q != 0)
                for (int j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

std::vector<Vec> direction_generators(const std::vector<Vec>& pts) {
    std::vector<Vec> gens;
    for (std::size_t i = 1; i < pts.size(); ++i) gens.push_back(sub(pts[i], pts[0]));
    return gens;
}

bool lattice_condition(const LatticePolytope& Q, const std::vector<LatticePolytope>& pieces) {
    const int n = Q.ambient_dim();
    std::vector<Vec> whole = hermite_rows(direction_generators(Q.lattice_points()), n);
    std::vector<Vec> gens;
    for (const auto& p : pieces) {
        auto g = direction_generators(p.lattice_points());
        gens.insert(gens.end(), g.begin(), g.end());
    }
    return hermite_rows(gens, n) == whole;
}

std::string multiset_key(std::vector<std::string> keys) {
    std::sort(keys.begin(), keys.end());
    std::ostringstream os;
    for (const auto& k : keys) os << k << '#';
    return os.str();
}

std::mutex decompose_mutex;
std::map<std::string, std::vector<std::vector<LatticePolytope>>> decompose_memo;

// All multisets of admissible pieces (as translation-class normal forms)
// whose Minkowski sum is X, regardless of the lattice condition.
std::vector<std::vector<LatticePolytope>> decompose_polygon(const LatticePolytope& X) {
    const std::string memo_key = normal_form(X).key();
    {
        std::lock_guard<std::mutex> lk(decompose_mutex);
        auto it = decompose_memo.find(memo_key);
        if (it != decompose_memo.end()) return it->second;
    }
    std::map<std::string, std::vector<LatticePolytope>> results;
    LatticePolytope Xn = normal_form(X);
    if (classify_piece(Xn)) results[multiset_key({Xn.key()})] = {Xn};
    for (const auto& [S, G] : summand_pairs(Xn)) {
        if (S.dim() < 1 || G.dim() < 1) continue;
        if (!classify_piece(S)) continue;
        for (const auto& rest : decompose_polygon(G)) {
            std::vector<LatticePolytope> dec = rest;
            dec.push_back(S);
            std::vector<std::string> keys;
            for (const auto& p : dec) keys.push_back(p.key());
            results.emplace(multiset_key(std::move(keys)), std::move(dec));
        }
    }
    std::vector<std::vector<LatticePolytope>> out;
    for (auto& [k, dec] : results) {
        std::sort(dec.begin(), dec.end(),
                  [](const LatticePolytope& a, const LatticePolytope& b) {
                      return a.vertices() < b.vertices();
                  });
        out.push_back(dec);
    }
    {
        std::lock_guard<std::mutex> lk(decompose_mutex);
        decompose_memo[memo_key] = out;
    }
    return out;
}

}  // namespace

std::vector<LatticeDecomposition> admissible_decompositions(const LatticePolytope& Q) {
    if (Q.dim() != 2) throw std::invalid_argument("decompositions: expected a lattice polygon");
    std::vector<LatticeDecomposition> out;
    for (const auto& pieces : decompose_polygon(Q)) {
        if (!lattice_condition(normal_form(Q), pieces)) continue;
        LatticeDecomposition dec;
        for (const auto& p : pieces) {
            auto s = classify_piece(p);
            if (!s) throw std::logic_error("decompositions: unclassifiable piece");
            dec.summands.push_back(*s);
        }
        out.push_back(std::move(dec));
    }
    return out;
}

std::vector<LaurentPolynomial> minkowski_polynomials(const LatticePolytope& P) {
    if (P.ambient_dim() != 3 || !is_reflexive(P))
        throw std::invalid_argument("minkowski polynomials: expected a reflexive 3-polytope");

    struct FacetData {
        LatticePolytope polygon;
        std::vector<LaurentPolynomial> polys;  // one per decomposition class
    };
    std::vector<FacetData> facets;
    for (const auto& hs : P.facets()) {
        std::vector<Vec> tight;
        for (const auto& v : P.vertices())
            if (dot(hs.normal, v) == hs.level) tight.push_back(v);
        FacetData fd;
        fd.polygon = LatticePolytope::hull(tight);
        for (const auto& dec : admissible_decompositions(fd.polygon)) {
            LaurentPolynomial prod = LaurentPolynomial::constant(3, 1);
            for (const auto& s : dec.summands) prod = multiply(prod, piece_polynomial(s));
            // Pieces are translation classes; shift the product back onto the
            // facet plane.
            LatticePolytope supp = newton_polytope(prod);
            Vec shift_by = sub(fd.polygon.vertices()[0], supp.vertices()[0]);
            LaurentPolynomial shifted(3);
            for (const auto& [e, c] : prod.terms()) shifted.add_term(add(e, shift_by), c);
            if (newton_polytope(shifted) != fd.polygon)
                throw std::logic_error("minkowski polynomials: facet support mismatch");
            fd.polys.push_back(std::move(shifted));
        }
        if (fd.polys.empty()) return {};
        facets.push_back(std::move(fd));
    }

    // One polynomial per choice of a class on every facet.
    std::vector<LaurentPolynomial> out;
    std::set<std::string> seen;
    std::vector<std::size_t> choice(facets.size(), 0);
    while (true) {
        std::map<Vec, Rat> coeffs;
        for (std::size_t i = 0; i < facets.size(); ++i) {
            const LaurentPolynomial& fp = facets[i].polys[choice[i]];
            for (const auto& pt : facets[i].polygon.lattice_points()) {
                Rat c = fp.coeff(pt);
                auto it = coeffs.find(pt);
                if (it == coeffs.end())
                    coeffs.emplace(pt, c);
                else if (it->second != c) {
                    throw std::logic_error("minkowski polynomials: facet coefficient conflict");
                }
            }
        }
        LaurentPolynomial f(3);
        for (const auto& [e, c] : coeffs) f.add_term(e, c);
        std::ostringstream os;
        for (const auto& [e, c] : f.terms()) os << e << ':' << c << ';';
        if (seen.insert(os.str()).second) out.push_back(std::move(f));

        std::size_t j = 0;
        while (j < facets.size() && ++choice[j] == facets[j].polys.size()) {
            choice[j] = 0;
            ++j;
        }
        if (j == facets.size()) break;
    }
    return out;
}

}  // namespace latmut
