// latmut: lattice polytope mutations, Ehrhart data, Minkowski polynomials,
// Laurent polynomial periods, and period-bucket connectivity search.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "latmut/ehrhart.hpp"
#include "latmut/equivalence.hpp"
#include "latmut/io.hpp"
#include "latmut/laurent.hpp"
#include "latmut/minkowski.hpp"
#include "latmut/mutation.hpp"
#include "latmut/rational_polytope.hpp"
#include "latmut/search.hpp"

using namespace latmut;

namespace {

std::string yesno(bool b) { return b ? "yes" : "no"; }

void print_rational_polytope(const RationalPolytope& Q) {
    std::cout << "r: " << Q.r << '\n';
    for (const auto& v : Q.vertices) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) std::cout << ' ';
            std::cout << v[i];
        }
        std::cout << '\n';
    }
}

std::vector<PolyRecord> load_poly_records(const std::vector<std::string>& files,
                                          const std::string& combined) {
    std::vector<PolyRecord> recs;
    for (const auto& f : files) recs.push_back({f, read_polynomial_file(f)});
    if (!combined.empty()) {
        std::ifstream in(combined);
        if (!in) throw std::runtime_error("cannot open file: " + combined);
        std::string line;
        std::ostringstream chunk;
        int idx = 0;
        auto flush = [&]() {
            std::istringstream cs(chunk.str());
            std::string probe;
            bool has = false;
            {
                std::istringstream p2(chunk.str());
                std::string l2;
                while (std::getline(p2, l2)) {
                    auto h = l2.find('#');
                    if (h != std::string::npos) l2.erase(h);
                    std::istringstream t(l2);
                    std::string tok;
                    if (t >> tok) { has = true; break; }
                }
            }
            if (has) {
                std::ostringstream nm;
                nm << 'p' << idx++;
                recs.push_back({nm.str(), read_polynomial(cs)});
            }
            chunk.str("");
            chunk.clear();
        };
        while (std::getline(in, line)) {
            std::string stripped = line;
            auto h = stripped.find('#');
            if (h != std::string::npos) stripped.erase(h);
            std::istringstream t(stripped);
            std::string tok;
            if (!(t >> tok))
                flush();
            else
                chunk << line << '\n';
        }
        flush();
    }
    return recs;
}

LaurentPolynomial parse_inline_polynomial(const std::string& s) {
    std::istringstream in(s);
    std::string term;
    LaurentPolynomial f;
    bool first = true;
    while (std::getline(in, term, ';')) {
        auto colon = term.find(':');
        if (colon == std::string::npos) throw std::runtime_error("bad inline polynomial");
        Rat c(term.substr(0, colon));
        Vec e = parse_vec(term.substr(colon + 1));
        if (first) {
            f = LaurentPolynomial(static_cast<int>(e.size()));
            first = false;
        }
        f.add_term(e, c);
    }
    if (first) throw std::runtime_error("bad inline polynomial");
    return f;
}

void write_bucket_manifest(std::ostream& os, const std::vector<Bucket>& buckets) {
    os << "# buckets: " << buckets.size() << '\n';
    for (std::size_t i = 0; i < buckets.size(); ++i) {
        os << "bucket " << i << '\n';
        os << "key";
        for (const auto& c : buckets[i].key) os << ' ' << c;
        os << '\n';
        for (const auto& m : buckets[i].members)
            os << "member " << m.name << ' ' << format_polynomial_inline(m.poly) << '\n';
        os << '\n';
    }
}

std::vector<Bucket> read_bucket_manifest(std::istream& in) {
    std::vector<Bucket> buckets;
    std::string line;
    while (std::getline(in, line)) {
        auto h = line.find('#');
        if (h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "bucket") {
            buckets.emplace_back();
        } else if (kw == "key") {
            if (buckets.empty()) throw std::runtime_error("manifest: key before bucket");
            std::string tok;
            while (ls >> tok) buckets.back().key.push_back(Rat(tok));
        } else if (kw == "member") {
            if (buckets.empty()) throw std::runtime_error("manifest: member before bucket");
            std::string name, poly;
            if (!(ls >> name >> poly)) throw std::runtime_error("manifest: bad member line");
            buckets.back().members.push_back({name, parse_inline_polynomial(poly)});
        } else {
            throw std::runtime_error("manifest: unknown keyword '" + kw + "'");
        }
    }
    return buckets;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lattice polytope mutations and Laurent polynomial periods"};
    app.require_subcommand(1);

    std::string path, path2, w_str, pre_path, post_path, a_path, combined, expect;
    long mmax = -1, kmax = 5, max_width = 3, key_len = 8, max_depth = 2, budget = 500,
         workers = 1, bucket_index = -1;
    bool use_dual = false, strict = false;
    std::string class_str = "reflexive";
    std::vector<std::string> files;

    auto* hull = app.add_subcommand("hull", "vertex-irredundant hull of a point list");
    hull->add_option("points", path, "points file")->required();

    auto* dualc = app.add_subcommand("dual", "dual polytope (origin must be interior)");
    dualc->add_option("polytope", path, "polytope file")->required();

    auto* fano = app.add_subcommand("fano", "Fano / reflexive / canonical flags");
    fano->add_option("polytope", path, "polytope file")->required();

    auto* volume = app.add_subcommand("volume", "normalized volume (n! times Euclidean)");
    volume->add_option("polytope", path, "polytope file")->required();

    auto* widthc = app.add_subcommand("width", "width of P with respect to w");
    widthc->add_option("polytope", path, "polytope file")->required();
    widthc->add_option("--w", w_str, "width vector a,b,...")->required();

    auto* mutatec = app.add_subcommand("mutate", "combinatorial mutation mut_w(P,F)");
    mutatec->add_option("polytope", path, "polytope file")->required();
    mutatec->add_option("factor", path2, "factor polytope file")->required();
    mutatec->add_option("--w", w_str, "width vector a,b,...")->required();

    auto* enumc = app.add_subcommand("enumerate", "all mutations up to GL-equivalence");
    enumc->add_option("polytope", path, "polytope file")->required();
    enumc->add_option("--max-width", max_width, "width bound (default 3)");
    enumc->add_flag("--strict", strict, "use the summand width bound l_P instead");

    auto* ehrc = app.add_subcommand("ehrhart", "Ehrhart counts, delta vector, quasi-period");
    ehrc->add_option("polytope", path, "polytope file")->required();
    ehrc->add_flag("--dual", use_dual, "compute for the dual polytope");
    ehrc->add_option("--mmax", mmax, "largest dilation to print (default 2r(n+1))");

    auto* minkc = app.add_subcommand("minkpoly", "Minkowski polynomials of a reflexive 3-polytope");
    minkc->add_option("polytope", path, "polytope file");
    minkc->add_option("--classification", combined, "run over a classification file");
    minkc->add_option("--workers", workers, "worker threads");

    auto* periodc = app.add_subcommand("period", "period sequence c_0..c_k");
    periodc->add_option("polynomial", path, "polynomial file")->required();
    periodc->add_option("--kmax", kmax, "largest power (default 5)");

    auto* amutc = app.add_subcommand("amutate", "algebraic mutation (pre, A, post)");
    amutc->add_option("polynomial", path, "polynomial file")->required();
    amutc->add_option("--pre", pre_path, "pre GL-map matrix file");
    amutc->add_option("--A", a_path, "factor polynomial file (one fewer variable)")->required();
    amutc->add_option("--post", post_path, "post GL-map matrix file");

    auto* bucketc = app.add_subcommand("bucket", "group polynomials by period prefix");
    bucketc->add_option("polynomials", files, "polynomial files");
    bucketc->add_option("--combined", combined, "combined file, records blank-line separated");
    bucketc->add_option("--kterms", key_len, "period prefix length (default 8)");
    bucketc->add_option("--workers", workers, "worker threads");

    auto* connectc = app.add_subcommand("connect", "mutation connectivity within buckets");
    connectc->add_option("manifest", path, "bucket manifest file")->required();
    connectc->add_option("--bucket", bucket_index, "only this bucket index");
    connectc->add_option("--max-width", max_width, "mutation width bound (default 2)");
    connectc->add_option("--class", class_str, "minkowski|reflexive|canonical|any");
    connectc->add_option("--max-depth", max_depth, "search depth (default 2)");
    connectc->add_option("--budget", budget, "node budget (default 500)");
    connectc->add_option("--workers", workers, "worker threads");

    auto* ingestc = app.add_subcommand("ingest", "parse and validate a classification file");
    ingestc->add_option("file", path, "classification file")->required();
    ingestc->add_option("--expect", expect, "validate records (reflexive)");

    auto* equivc = app.add_subcommand("equiv", "GL(n,Z)-equivalence of two polytopes");
    equivc->add_option("polytope", path, "first polytope file")->required();
    equivc->add_option("other", path2, "second polytope file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*hull) {
            write_polytope(std::cout, read_polytope_file(path));
        } else if (*dualc) {
            print_rational_polytope(dual(read_polytope_file(path)));
        } else if (*fano) {
            LatticePolytope P = read_polytope_file(path);
            std::cout << "fano: " << yesno(is_fano(P)) << '\n';
            std::cout << "reflexive: " << yesno(is_fano(P) && is_reflexive(P)) << '\n';
            std::cout << "canonical: " << yesno(is_fano(P) && is_canonical(P)) << '\n';
        } else if (*volume) {
            std::cout << normalized_volume(read_polytope_file(path)) << '\n';
        } else if (*widthc) {
            LatticePolytope P = read_polytope_file(path);
            Vec w = parse_vec(w_str);
            std::cout << "width: " << width(P, w) << '\n';
            std::cout << "hmin: " << pairing_min(w, P) << '\n';
            std::cout << "hmax: " << pairing_max(w, P) << '\n';
        } else if (*mutatec) {
            LatticePolytope P = read_polytope_file(path);
            LatticePolytope F = read_polytope_file(path2);
            write_polytope(std::cout, mutate(P, parse_vec(w_str), F));
        } else if (*enumc) {
            EnumerateOptions opts;
            opts.max_width = max_width;
            opts.strict_bound = strict;
            for (const auto& rec : enumerate_mutations(read_polytope_file(path), opts)) {
                std::cout << "w=(" << format_vec(rec.w) << ") F=["
                          << format_polytope_inline(rec.F) << "] width=" << rec.width
                          << " Q=[" << format_polytope_inline(rec.Q) << "]\n";
            }
        } else if (*ehrc) {
            LatticePolytope P = read_polytope_file(path);
            RationalPolytope Q = use_dual ? dual(P) : as_rational(P);
            DeltaVector d = delta_vector(Q);
            Int print_to = mmax >= 0 ? Int(mmax) : 2 * Q.r * (Q.dim + 1);
            auto counts = ehrhart_counts(Q, print_to);
            std::cout << "r: " << Q.r << '\n';
            std::cout << "counts:";
            for (const auto& c : counts) std::cout << ' ' << c;
            std::cout << '\n';
            std::cout << "delta:";
            for (const auto& c : d.deltas) std::cout << ' ' << c;
            std::cout << '\n';
            std::cout << "quasi-period: " << quasi_period(Q) << '\n';
            std::cout << "palindromic: " << yesno(is_palindromic(d)) << '\n';
        } else if (*minkc) {
            if (!combined.empty()) {
                std::ifstream in(combined);
                if (!in) throw std::runtime_error("cannot open file: " + combined);
                auto polytopes = ingest_classification(in, false);
                long supporting = 0;
                std::vector<PolyRecord> all;
                std::function<std::vector<LaurentPolynomial>(const LatticePolytope&)> job =
                    [](const LatticePolytope& P) { return minkowski_polynomials(P); };
                // Deduplicate globally up to GL-equivalence.
                std::map<std::string, std::vector<LaurentPolynomial>> classes;
                long total_distinct = 0;
                for (std::size_t i = 0; i < polytopes.size(); ++i) {
                    auto polys = minkowski_polynomials(polytopes[i]);
                    if (!polys.empty()) ++supporting;
                    for (const auto& f : polys) {
                        auto& reps = classes[laurent_fingerprint(f)];
                        bool dup = false;
                        for (const auto& r : reps)
                            if (laurent_equivalent(r, f)) { dup = true; break; }
                        if (!dup) {
                            reps.push_back(f);
                            ++total_distinct;
                            std::ostringstream nm;
                            nm << 'p' << total_distinct - 1;
                            all.push_back({nm.str(), f});
                        }
                    }
                }
                std::cout << "# polytopes: " << polytopes.size() << '\n';
                std::cout << "# supporting: " << supporting << '\n';
                std::cout << "# polynomials: " << total_distinct << '\n';
                for (const auto& rec : all) {
                    write_polynomial(std::cout, rec.poly);
                    std::cout << '\n';
                }
            } else {
                if (path.empty()) throw std::runtime_error("minkpoly: missing polytope file");
                auto polys = minkowski_polynomials(read_polytope_file(path));
                std::cout << "# polynomials: " << polys.size() << '\n';
                for (const auto& f : polys) {
                    write_polynomial(std::cout, f);
                    std::cout << '\n';
                }
            }
        } else if (*periodc) {
            auto seq = period_coeffs(read_polynomial_file(path), static_cast<int>(kmax));
            for (std::size_t i = 0; i < seq.coeffs.size(); ++i) {
                if (i) std::cout << ' ';
                std::cout << seq.coeffs[i];
            }
            std::cout << '\n';
        } else if (*amutc) {
            LaurentPolynomial f = read_polynomial_file(path);
            LaurentPolynomial A = read_polynomial_file(a_path);
            UnimodularMap pre = pre_path.empty() ? UnimodularMap::identity(f.dim())
                                                 : UnimodularMap(read_matrix_file(pre_path));
            UnimodularMap post = post_path.empty() ? UnimodularMap::identity(f.dim())
                                                   : UnimodularMap(read_matrix_file(post_path));
            write_polynomial(std::cout, algebraic_mutate(f, pre, A, post));
        } else if (*bucketc) {
            auto recs = load_poly_records(files, combined);
            if (recs.empty()) throw std::runtime_error("bucket: no polynomials given");
            auto buckets = bucket(recs, static_cast<int>(key_len), static_cast<int>(workers));
            write_bucket_manifest(std::cout, buckets);
        } else if (*connectc) {
            std::ifstream in(path);
            if (!in) throw std::runtime_error("cannot open file: " + path);
            auto buckets = read_bucket_manifest(in);
            ConnectConfig cfg;
            cfg.max_width = max_width;
            cfg.max_depth = static_cast<int>(max_depth);
            cfg.node_budget = static_cast<int>(budget);
            cfg.workers = static_cast<int>(workers);
            if (class_str == "minkowski") cfg.polytope_class = PolytopeClass::Minkowski;
            else if (class_str == "reflexive") cfg.polytope_class = PolytopeClass::Reflexive;
            else if (class_str == "canonical") cfg.polytope_class = PolytopeClass::Canonical;
            else if (class_str == "any") cfg.polytope_class = PolytopeClass::Any;
            else throw std::runtime_error("connect: unknown class '" + class_str + "'");
            for (std::size_t i = 0; i < buckets.size(); ++i) {
                if (bucket_index >= 0 && static_cast<long>(i) != bucket_index) continue;
                ConnectResult r = connect(buckets[i], cfg);
                std::cout << "bucket " << i << '\n';
                std::cout << "connected: " << yesno(r.connected) << '\n';
                std::cout << "fingerprint-separated: " << yesno(r.fingerprint_separated)
                          << '\n';
                if (r.budget_exhausted) std::cout << "budget-exhausted: yes\n";
                for (const auto& e : r.edges) {
                    std::cout << "edge " << e.source << " -> " << e.target << " : width="
                              << e.width << " w=(" << format_vec(e.w) << ") F=["
                              << format_polytope_inline(e.F) << "] A=["
                              << format_polynomial_inline(e.A) << "]";
                    if (e.post) {
                        std::cout << " post=[";
                        const SqMat& M = e.post->matrix();
                        for (int i = 0; i < M.n; ++i) {
                            if (i) std::cout << ';';
                            std::cout << format_vec(M.row(i));
                        }
                        std::cout << "]";
                    }
                    std::cout << '\n';
                }
                for (const auto& comp : r.components) {
                    std::cout << "component:";
                    for (const auto& nm : comp) std::cout << ' ' << nm;
                    std::cout << '\n';
                }
                std::cout << '\n';
            }
        } else if (*ingestc) {
            if (!expect.empty() && expect != "reflexive")
                throw std::runtime_error("ingest: unknown --expect value '" + expect + "'");
            std::ifstream in(path);
            if (!in) throw std::runtime_error("cannot open file: " + path);
            auto polytopes = ingest_classification(in, expect == "reflexive");
            std::cout << "records: " << polytopes.size() << '\n';
        } else if (*equivc) {
            auto M = gl_equivalent(read_polytope_file(path), read_polytope_file(path2));
            if (!M) {
                std::cout << "not equivalent\n";
            } else {
                std::cout << "equivalent\n";
                write_matrix(std::cout, M->matrix());
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
