#include "latmut/mutation.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "latmut/equivalence.hpp"
#include "latmut/rational_polytope.hpp"

namespace latmut {

namespace {

LatticePolytope slice_of_points(const std::vector<Vec>& pts, const Vec& w, const Int& h,
                                int ambient) {
    std::vector<Vec> sel;
    for (const auto& p : pts)
        if (dot(w, p) == h) sel.push_back(p);
    if (sel.empty()) return LatticePolytope::empty(ambient);
    return LatticePolytope::hull(sel);
}

}  // namespace

std::optional<MutationSpec> try_compute_gh(const LatticePolytope& P, const Vec& w,
                                           const LatticePolytope& F, std::string* error) {
    if (!is_primitive(w)) throw std::invalid_argument("mutation: w is not primitive");
    if (F.is_empty()) throw std::invalid_argument("mutation: empty factor");
    for (const auto& v : F.vertices())
        if (dot(w, v) != 0) throw std::invalid_argument("mutation: factor not at height 0");

    MutationSpec spec;
    spec.w = w;
    spec.F = F;
    spec.h_min = pairing_min(w, P);
    spec.h_max = pairing_max(w, P);

    std::vector<Vec> pts = P.lattice_points();
    for (Int h = spec.h_min; h < 0; ++h) {
        bool has_vertex = false;
        for (const auto& v : P.vertices())
            if (dot(w, v) == h) { has_vertex = true; break; }
        if (!has_vertex) {
            spec.gh.emplace(h, std::nullopt);
            continue;
        }
        LatticePolytope sl = slice_of_points(pts, w, h, P.ambient_dim());
        LatticePolytope hF = dilate(F, -h);
        std::vector<Vec> diff = sl.is_empty() ? std::vector<Vec>{}
                                              : minkowski_difference_points(sl, hF);
        if (diff.empty()) {
            if (error) {
                std::ostringstream os;
                os << "no factorization at height " << h;
                *error = os.str();
            }
            return std::nullopt;
        }
        LatticePolytope G = LatticePolytope::hull(diff);
        LatticePolytope cover = minkowski_sum(G, hF);
        for (const auto& v : P.vertices()) {
            if (dot(w, v) != h) continue;
            if (!cover.contains(v)) {
                if (error) {
                    std::ostringstream os;
                    os << "no factorization at height " << h;
                    *error = os.str();
                }
                return std::nullopt;
            }
        }
        spec.gh.emplace(h, std::move(G));
    }
    return spec;
}

MutationSpec compute_gh(const LatticePolytope& P, const Vec& w, const LatticePolytope& F) {
    std::string err;
    auto spec = try_compute_gh(P, w, F, &err);
    if (!spec) throw std::domain_error(err);
    return *spec;
}

LatticePolytope mutate_with(const LatticePolytope& P, const MutationSpec& spec) {
    std::vector<Vec> pts;
    for (const auto& [h, G] : spec.gh) {
        if (!G || G->is_empty()) continue;
        for (const auto& v : G->vertices()) pts.push_back(v);
    }
    std::vector<Vec> lat = P.lattice_points();
    for (Int h = 0; h <= spec.h_max; ++h) {
        LatticePolytope sl = slice_of_points(lat, spec.w, h, P.ambient_dim());
        if (sl.is_empty()) continue;
        for (const auto& s : sl.vertices())
            for (const auto& f : spec.F.vertices()) pts.push_back(add(s, scale(h, f)));
    }
    return LatticePolytope::hull(pts);
}

LatticePolytope mutate(const LatticePolytope& P, const Vec& w, const LatticePolytope& F) {
    return mutate_with(P, compute_gh(P, w, F));
}

MutationSpec invert(const LatticePolytope& P, const Vec& w, const LatticePolytope& F) {
    LatticePolytope Q = mutate(P, w, F);
    return compute_gh(Q, negate(w), F);
}

Int summand_width_bound(const LatticePolytope& P) {
    Int best = 1;
    for (const auto& face : proper_faces(P)) {
        if (face.dim < 1 || face.dim > 3) continue;
        LatticePolytope X = face_polytope(P, face);
        for (const auto& [S, G] : summand_pairs(X)) {
            if (S.dim() < 1) continue;
            // The largest l with S = l*A for a lattice polytope A is the gcd
            // of all vertex differences; then X = l*A + (G + rest of S).
            Int g = 0;
            for (const auto& v : S.vertices()) g = gcd(g, content(sub(v, S.vertices()[0])));
            if (g > best) best = g;
        }
    }
    return best;
}

namespace {

// Primitive width vectors with width(P, w) <= k: the primitive lattice
// points of k * (P - P)^v.
std::vector<Vec> width_vectors(const LatticePolytope& P, const Int& k) {
    LatticePolytope D = minkowski_sum(P, dilate(P, -1));
    RationalPolytope Dv = dual(D);
    std::vector<Vec> out;
    for (const auto& u : dilated_points(Dv, k)) {
        if (is_zero(u)) continue;
        if (!is_primitive(u)) continue;
        out.push_back(u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Strict mode: a factor forces -h_min <= l_F for the minimal face, so every
// mutation has w among the primitive points of l_P * P^v.
std::vector<Vec> strict_vectors(const LatticePolytope& P) {
    Int lp = summand_width_bound(P);
    RationalPolytope Pv = dual(P);
    std::vector<Vec> out;
    for (const auto& u : dilated_points(Pv, lp)) {
        if (is_zero(u)) continue;
        if (!is_primitive(u)) continue;
        out.push_back(u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<MutationRecord> enumerate_mutations(const LatticePolytope& P,
                                                const EnumerateOptions& opts) {
    if (!is_fano(P)) throw std::invalid_argument("enumerate: polytope is not Fano");
    std::vector<Vec> candidates =
        opts.strict_bound ? strict_vectors(P) : width_vectors(P, opts.max_width);

    std::vector<MutationRecord> found;
    for (const auto& w : candidates) {
        Int h_min = pairing_min(w, P);
        LatticePolytope face = slice(P, w, h_min);
        if (face.dim() < 1) continue;  // mutations leave P unchanged
        if (face.dim() > 3) continue;
        Int scale_needed = -h_min;
        for (const auto& [S, G] : summand_pairs(face)) {
            if (S.dim() < 1) continue;
            // S must be (-h_min) * F for a lattice polytope F.
            bool divisible = true;
            std::vector<Vec> fverts;
            for (const auto& v : S.vertices()) {
                Vec f(v.size());
                for (std::size_t i = 0; i < v.size(); ++i) {
                    if (v[i] % scale_needed != 0) { divisible = false; break; }
                    f[i] = v[i] / scale_needed;
                }
                if (!divisible) break;
                fverts.push_back(f);
            }
            if (!divisible) continue;
            LatticePolytope F = LatticePolytope::hull(fverts);
            F = translate(F, negate(F.vertices()[0]));
            auto spec = try_compute_gh(P, w, F);
            if (!spec) continue;
            LatticePolytope Q = mutate_with(P, *spec);
            found.push_back({w, F, Q, width(P, w)});
        }
    }

    // Deterministic order, then one representative per GL-class of Q.
    std::sort(found.begin(), found.end(), [](const MutationRecord& a, const MutationRecord& b) {
        if (a.width != b.width) return a.width < b.width;
        if (a.w != b.w) return a.w < b.w;
        return a.F.vertices() < b.F.vertices();
    });
    std::vector<MutationRecord> kept;
    for (auto& rec : found) {
        bool dup = false;
        for (const auto& k : kept)
            if (gl_equivalent(k.Q, rec.Q)) { dup = true; break; }
        if (!dup) kept.push_back(std::move(rec));
    }
    return kept;
}

Vec dual_map(const MutationSpec& spec, const Vec& u) {
    Int umin = dot(u, spec.F.vertices()[0]);
    for (const auto& v : spec.F.vertices()) umin = std::min(umin, dot(u, v));
    return sub(u, scale(umin, spec.w));
}

const SqMat& PiecewiseLinearMap::matrix_for(const Vec& u) const {
    const Vec* best = nullptr;
    Int bestval = 0;
    std::size_t besti = 0;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        Int val = dot(u, pieces[i].first);
        if (!best || val < bestval) {
            best = &pieces[i].first;
            bestval = val;
            besti = i;
        }
    }
    return pieces[besti].second;
}

PiecewiseLinearMap cone_matrices(const MutationSpec& spec) {
    PiecewiseLinearMap pl;
    pl.w = spec.w;
    pl.factor_vertices = spec.F.vertices();
    const int n = static_cast<int>(spec.w.size());
    for (const auto& v : pl.factor_vertices) {
        // u*M = u - <u,v>*w, i.e. M = I - v^T w (valid on the cone where v
        // attains the minimum); unimodular because <w,v> = 0.
        SqMat M = SqMat::identity(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) M.at(i, j) -= v[i] * spec.w[j];
        pl.pieces.push_back({v, std::move(M)});
    }
    return pl;
}

}  // namespace latmut
