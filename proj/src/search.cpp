#include "latmut/search.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>
#include <sstream>

#include "latmut/equivalence.hpp"
#include "latmut/minkowski.hpp"
#include "latmut/rational_polytope.hpp"

namespace latmut {

namespace {

template <class In, class Out>
std::vector<Out> parallel_map(const std::vector<In>& in, int workers,
                              const std::function<Out(const In&)>& fn) {
    std::vector<Out> out(in.size());
    if (workers <= 1 || in.size() <= 1) {
        for (std::size_t i = 0; i < in.size(); ++i) out[i] = fn(in[i]);
        return out;
    }
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= in.size()) return;
            out[i] = fn(in[i]);
        }
    };
    std::vector<std::future<void>> futs;
    for (int t = 0; t < workers; ++t) futs.push_back(std::async(std::launch::async, work));
    for (auto& f : futs) f.get();
    return out;
}

}  // namespace

std::vector<Bucket> bucket(const std::vector<PolyRecord>& polys, int key_len, int workers) {
    std::function<std::vector<Rat>(const PolyRecord&)> keyfn =
        [&](const PolyRecord& rec) { return period_coeffs(rec.poly, key_len - 1).coeffs; };
    std::vector<std::vector<Rat>> keys = parallel_map(polys, workers, keyfn);
    std::map<std::vector<Rat>, Bucket> grouped;
    for (std::size_t i = 0; i < polys.size(); ++i) {
        auto& b = grouped[keys[i]];
        b.key = keys[i];
        b.members.push_back(polys[i]);
    }
    std::vector<Bucket> out;
    for (auto& [k, b] : grouped) out.push_back(std::move(b));
    return out;
}

std::string ehrhart_fingerprint(const LaurentPolynomial& f) {
    DeltaVector d = delta_vector(dual(newton_polytope(f)));
    std::ostringstream os;
    os << d.r << ':';
    for (const auto& x : d.deltas) os << x << ',';
    return os.str();
}

bool is_minkowski_polynomial(const LaurentPolynomial& f) {
    LatticePolytope P = newton_polytope(f);
    if (P.ambient_dim() != 3 || !is_reflexive(P)) return false;
    for (const auto& g : minkowski_polynomials(P))
        if (g == f) return true;
    return false;
}

LaurentPolynomial replay_edge(const LaurentPolynomial& f, const MutationEdge& e) {
    const int n = f.dim();
    SqMat U = complete_to_unimodular(e.w);
    UnimodularMap pre(U);
    UnimodularMap post = pre.inverse();
    LaurentPolynomial At = substitute(e.A, pre);
    LaurentPolynomial A(n - 1);
    for (const auto& [ex, c] : At.terms()) {
        if (ex[n - 1] != 0)
            throw std::logic_error("replay: factor polynomial not at height 0");
        A.add_term(Vec(ex.begin(), ex.end() - 1), c);
    }
    LaurentPolynomial g = algebraic_mutate(f, pre, A, post);
    if (e.post) g = substitute(g, *e.post);
    return g;
}

namespace {

struct Node {
    std::string name;
    LaurentPolynomial poly;
    LatticePolytope newt;
    std::string fp;
    int depth = 0;
    bool is_member = false;
};

bool class_allows(PolytopeClass cls, const LaurentPolynomial& g, const LatticePolytope& Q) {
    switch (cls) {
        case PolytopeClass::Any: return true;
        case PolytopeClass::Canonical: return is_canonical(Q);
        case PolytopeClass::Reflexive: return is_reflexive(Q);
        case PolytopeClass::Minkowski: return is_minkowski_polynomial(g);
    }
    return false;
}

struct DSU {
    std::vector<int> parent;
    explicit DSU(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

ConnectResult connect(const Bucket& b, const ConnectConfig& cfg) {
    ConnectResult res;
    const int m = static_cast<int>(b.members.size());
    DSU dsu(m);

    // Ehrhart pre-filter: distinct delta-fingerprints cannot be connected by
    // combinatorial mutations, so they are separated without any search.
    std::vector<std::string> fps(m);
    for (int i = 0; i < m; ++i) fps[i] = ehrhart_fingerprint(b.members[i].poly);
    std::set<std::string> distinct(fps.begin(), fps.end());
    res.fingerprint_separated = distinct.size() > 1;

    std::vector<Node> nodes;
    std::map<std::string, std::vector<int>> by_lfp;  // laurent fingerprint -> node ids
    std::vector<int> member_node(m);
    std::vector<int> node_root;  // member index owning each node's component

    auto find_equivalent = [&](const LaurentPolynomial& g) -> int {
        auto it = by_lfp.find(laurent_fingerprint(g));
        if (it == by_lfp.end()) return -1;
        for (int id : it->second)
            if (laurent_equivalent(nodes[id].poly, g)) return id;
        return -1;
    };

    for (int i = 0; i < m; ++i) {
        int existing = find_equivalent(b.members[i].poly);
        if (existing >= 0) {
            // GL-equivalent members are already connected with zero edges.
            dsu.unite(i, node_root[existing]);
            member_node[i] = existing;
            continue;
        }
        Node nd{b.members[i].name, b.members[i].poly, newton_polytope(b.members[i].poly),
                fps[i], 0, true};
        nodes.push_back(std::move(nd));
        by_lfp[laurent_fingerprint(b.members[i].poly)].push_back(
            static_cast<int>(nodes.size()) - 1);
        node_root.push_back(i);
        member_node[i] = static_cast<int>(nodes.size()) - 1;
    }

    struct Expansion {
        MutationRecord rec;
        LaurentPolynomial g;
    };

    int fresh = 0;
    std::vector<int> frontier;
    for (int id = 0; id < static_cast<int>(nodes.size()); ++id) frontier.push_back(id);

    auto expand_node = [&](int id) {
        std::vector<Expansion> out;
        EnumerateOptions opts;
        opts.max_width = cfg.max_width;
        std::vector<MutationRecord> recs;
        try {
            recs = enumerate_mutations(nodes[id].newt, opts);
        } catch (const std::invalid_argument&) {
            return out;  // non-Fano Newton polytope: no combinatorial moves
        }
        for (const auto& rec : recs) {
            auto piece = classify_piece(rec.F);
            if (!piece) continue;  // no canonical factor polynomial on F
            MutationEdge e{nodes[id].name, "", rec.w, rec.F, piece_polynomial(*piece),
                           rec.width};
            LaurentPolynomial g;
            try {
                g = replay_edge(nodes[id].poly, e);
            } catch (const MutationDivisibilityError&) {
                continue;
            }
            out.push_back({rec, std::move(g)});
        }
        return out;
    };

    while (!frontier.empty() && !res.budget_exhausted) {
        std::function<std::vector<Expansion>(const int&)> fn = expand_node;
        std::vector<std::vector<Expansion>> expansions =
            parallel_map(frontier, cfg.workers, fn);

        std::vector<int> next;
        for (std::size_t fi = 0; fi < frontier.size(); ++fi) {
            int id = frontier[fi];
            if (nodes[id].depth >= cfg.max_depth) continue;
            for (auto& ex : expansions[fi]) {
                LatticePolytope Q = newton_polytope(ex.g);
                if (!class_allows(cfg.polytope_class, ex.g, Q)) continue;
                int dst = find_equivalent(ex.g);
                if (dst >= 0) {
                    if (dsu.find(node_root[id]) != dsu.find(node_root[dst])) {
                        dsu.unite(node_root[id], node_root[dst]);
                        auto piece = classify_piece(ex.rec.F);
                        auto land = laurent_equivalent(ex.g, nodes[dst].poly);
                        if (!land) throw std::logic_error("connect: lost equivalence witness");
                        res.edges.push_back({nodes[id].name, nodes[dst].name, ex.rec.w,
                                             ex.rec.F, piece_polynomial(*piece),
                                             ex.rec.width, land});
                    }
                    continue;
                }
                if (static_cast<int>(nodes.size()) >= cfg.node_budget) {
                    res.budget_exhausted = true;
                    break;
                }
                std::ostringstream nm;
                nm << 'm' << ++fresh;
                Node nd{nm.str(), ex.g, Q, ehrhart_fingerprint(ex.g), nodes[id].depth + 1,
                        false};
                nodes.push_back(nd);
                node_root.push_back(node_root[id]);
                by_lfp[laurent_fingerprint(ex.g)].push_back(static_cast<int>(nodes.size()) - 1);
                res.intermediates.push_back({nm.str(), ex.g});
                auto piece = classify_piece(ex.rec.F);
                res.edges.push_back({nodes[id].name, nm.str(), ex.rec.w, ex.rec.F,
                                     piece_polynomial(*piece), ex.rec.width, std::nullopt});
                next.push_back(static_cast<int>(nodes.size()) - 1);
            }
            if (res.budget_exhausted) break;
        }
        // Stop early once every member is in one component.
        bool all_united = true;
        for (int i = 1; i < m; ++i)
            if (dsu.find(i) != dsu.find(0)) { all_united = false; break; }
        if (all_united) break;
        frontier = std::move(next);
    }

    std::map<int, std::vector<std::string>> comps;
    for (int i = 0; i < m; ++i) comps[dsu.find(i)].push_back(b.members[i].name);
    for (auto& [root, names] : comps) res.components.push_back(names);
    res.connected = res.components.size() == 1;
    return res;
}

std::vector<LatticePolytope> ingest_classification(std::istream& in, bool expect_reflexive) {
    std::vector<LatticePolytope> out;
    std::vector<Vec> current;
    std::string line;
    int lineno = 0;
    int record_start = 1;
    auto flush = [&]() {
        if (current.empty()) return;
        LatticePolytope P = LatticePolytope::hull(current);
        if (expect_reflexive && !is_reflexive(P)) {
            std::ostringstream os;
            os << "record starting at line " << record_start << " is not reflexive";
            throw std::runtime_error(os.str());
        }
        out.push_back(std::move(P));
        current.clear();
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        Vec v;
        std::string tok;
        while (ls >> tok) {
            try {
                v.push_back(Int(tok));
            } catch (const std::exception&) {
                std::ostringstream os;
                os << "line " << lineno << ": bad integer '" << tok << "'";
                throw std::runtime_error(os.str());
            }
        }
        if (v.empty()) {
            flush();
            record_start = lineno + 1;
            continue;
        }
        if (!current.empty() && current[0].size() != v.size()) {
            std::ostringstream os;
            os << "line " << lineno << ": inconsistent vertex dimension";
            throw std::runtime_error(os.str());
        }
        current.push_back(std::move(v));
    }
    flush();
    return out;
}

}  // namespace latmut
