#include "latmut/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace latmut {

namespace {

std::string strip_comment(std::string line) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    return line;
}

std::vector<std::string> content_lines(std::istream& in) {
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        line = strip_comment(line);
        std::istringstream probe(line);
        std::string tok;
        if (probe >> tok) out.push_back(line);
    }
    return out;
}

Int parse_int(const std::string& tok, const char* what) {
    try {
        return Int(tok);
    } catch (const std::exception&) {
        throw std::runtime_error(std::string("bad integer in ") + what + ": '" + tok + "'");
    }
}

std::ifstream open_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return in;
}

}  // namespace

LatticePolytope read_polytope(std::istream& in) {
    std::vector<Vec> pts;
    for (const auto& line : content_lines(in)) {
        std::istringstream ls(line);
        Vec v;
        std::string tok;
        while (ls >> tok) v.push_back(parse_int(tok, "polytope"));
        if (!pts.empty() && pts[0].size() != v.size())
            throw std::runtime_error("polytope: inconsistent vertex dimension");
        pts.push_back(std::move(v));
    }
    if (pts.empty()) throw std::runtime_error("polytope: no vertices");
    return LatticePolytope::hull(pts);
}

LatticePolytope read_polytope_file(const std::string& path) {
    auto in = open_file(path);
    return read_polytope(in);
}

void write_polytope(std::ostream& os, const LatticePolytope& P) {
    for (const auto& v : P.vertices()) os << v << '\n';
}

LaurentPolynomial read_polynomial(std::istream& in) {
    LaurentPolynomial f;
    bool first = true;
    for (const auto& line : content_lines(in)) {
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw std::runtime_error("polynomial: expected 'coefficient : exponents'");
        std::istringstream cs(line.substr(0, colon));
        std::string ctok;
        if (!(cs >> ctok)) throw std::runtime_error("polynomial: missing coefficient");
        Rat c;
        try {
            c = Rat(ctok);
        } catch (const std::exception&) {
            throw std::runtime_error("polynomial: bad coefficient '" + ctok + "'");
        }
        std::istringstream es(line.substr(colon + 1));
        Vec e;
        std::string tok;
        while (es >> tok) e.push_back(parse_int(tok, "polynomial exponent"));
        if (first) {
            f = LaurentPolynomial(static_cast<int>(e.size()));
            first = false;
        }
        f.add_term(e, c);
    }
    if (first) throw std::runtime_error("polynomial: no terms");
    return f;
}

LaurentPolynomial read_polynomial_file(const std::string& path) {
    auto in = open_file(path);
    return read_polynomial(in);
}

void write_polynomial(std::ostream& os, const LaurentPolynomial& f) {
    for (const auto& [e, c] : f.terms()) os << c << " : " << e << '\n';
}

SqMat read_matrix(std::istream& in) {
    auto lines = content_lines(in);
    if (lines.empty()) throw std::runtime_error("matrix: empty");
    std::vector<std::vector<Int>> rows;
    for (const auto& line : lines) {
        std::istringstream ls(line);
        std::vector<Int> row;
        std::string tok;
        while (ls >> tok) row.push_back(parse_int(tok, "matrix"));
        rows.push_back(std::move(row));
    }
    const int n = static_cast<int>(rows.size());
    SqMat M(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw std::runtime_error("matrix: expected n rows of n integers");
        for (int j = 0; j < n; ++j) M.at(i, j) = rows[i][j];
    }
    return M;
}

SqMat read_matrix_file(const std::string& path) {
    auto in = open_file(path);
    return read_matrix(in);
}

void write_matrix(std::ostream& os, const SqMat& M) {
    for (int i = 0; i < M.n; ++i) {
        for (int j = 0; j < M.n; ++j) {
            if (j) os << ' ';
            os << M.at(i, j);
        }
        os << '\n';
    }
}

std::string format_vec(const Vec& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os.str();
}

std::string format_polytope_inline(const LatticePolytope& P) {
    std::ostringstream os;
    const auto& vs = P.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) os << ';';
        os << format_vec(vs[i]);
    }
    return os.str();
}

std::string format_polynomial_inline(const LaurentPolynomial& f) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        if (!first) os << ';';
        first = false;
        os << c << ':' << format_vec(e);
    }
    return os.str();
}

Vec parse_vec(const std::string& s) {
    Vec v;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, ',')) v.push_back(parse_int(cur, "vector"));
    if (v.empty()) throw std::runtime_error("vector: empty");
    return v;
}

}  // namespace latmut
