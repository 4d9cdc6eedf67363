#pragma once

#include <string>
#include <vector>

#include "bqmass/arith.hpp"

namespace bqm {

// Integral quadratic form held by its Hessian (symmetric, even diagonal).
struct QuadForm {
  int n = 2;
  std::vector<Int> hessian;  // row-major n*n

  static QuadForm binary(Int a, Int b, Int c);
  static QuadForm from_hessian(int n, std::vector<Int> h);

  Int h(int i, int j) const { return hessian[static_cast<size_t>(i * n + j)]; }
  Int a() const { return hessian[0] / 2; }
  Int b() const { return hessian[1]; }
  Int c() const { return hessian[3] / 2; }
  Int eval(Int x, Int y) const { return a() * x * x + b() * x * y + c() * y * y; }

  bool operator==(const QuadForm& o) const = default;
  std::string to_string() const;
};

struct Signature {
  int plus = 0;
  int minus = 0;
};

Int det_hessian(const QuadForm& f);
Rational det_gram(const QuadForm& f);
bool is_primitive(const QuadForm& f);
bool is_positive_definite(const QuadForm& f);
Signature signature(const QuadForm& f);
int epsilon_inf(const Signature& s);

// f(M x) for the 2x2 integer matrix M = [[m11, m12], [m21, m22]].
QuadForm transform(const QuadForm& f, Int m11, Int m12, Int m21, Int m22);
QuadForm negate(const QuadForm& f);

QuadForm reduce_binary(const QuadForm& f);

struct AutCounts {
  Int full = 0;    // determinant +-1
  Int proper = 0;  // determinant +1
};
AutCounts automorphisms(const QuadForm& f);
Int automorphism_count(const QuadForm& f);
Int proper_automorphism_count(const QuadForm& f);
// Properly equivalent to its image under an improper change of variables.
bool is_ambiguous(const QuadForm& f);

// Reduced positive-definite binary forms with det_H = S, one per proper class,
// sorted by (a, |b|, b descending). Imprimitive forms are included.
std::vector<QuadForm> enumerate_classes(Int S);
std::vector<QuadForm> enumerate_primitive_classes(Int S);

// Diagonal entries d_i with f ~ sum d_i X_i^2 over Q.
std::vector<Rational> diagonalize(const QuadForm& f);
int hasse_of_diagonal(const std::vector<Rational>& d, Int place);
int hasse_invariant(const QuadForm& f, Int place);
int scale_hasse(const Rational& u, const QuadForm& f, Int place);

}  // namespace bqm
