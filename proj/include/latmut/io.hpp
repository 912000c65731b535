// Text formats: polytopes (one vertex per line), Laurent polynomials
// (one term per line, "coefficient : e1 e2 ... en"), square integer
// matrices (n rows of n integers). '#' comments and blank lines ignored.
#pragma once

#include <istream>
#include <ostream>
#include <string>

#include "latmut/laurent.hpp"
#include "latmut/mat.hpp"
#include "latmut/polytope.hpp"

namespace latmut {

LatticePolytope read_polytope(std::istream& in);
LatticePolytope read_polytope_file(const std::string& path);
void write_polytope(std::ostream& os, const LatticePolytope& P);

LaurentPolynomial read_polynomial(std::istream& in);
LaurentPolynomial read_polynomial_file(const std::string& path);
void write_polynomial(std::ostream& os, const LaurentPolynomial& f);

SqMat read_matrix(std::istream& in);
SqMat read_matrix_file(const std::string& path);
void write_matrix(std::ostream& os, const SqMat& M);

// Inline forms used in mutation records and edge lists.
std::string format_vec(const Vec& v);                  // "a,b,c"
std::string format_polytope_inline(const LatticePolytope& P);  // "v1;v2;..."
std::string format_polynomial_inline(const LaurentPolynomial& f);
Vec parse_vec(const std::string& s);

}  // namespace latmut
