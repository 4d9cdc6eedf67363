#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bqmass/arith.hpp"
#include "bqmass/localgenus.hpp"

namespace bqm {

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, int degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational eval(const Rational& x) const;
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rational& s) const;
  bool operator==(const Polynomial& o) const { return c_ == o.c_; }

  static void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r);
  static Polynomial gcd(Polynomial a, Polynomial b);

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// num / den in X, reduced, with den(0) = 1 whenever den(0) != 0.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Polynomial::constant(1)) {}
  RationalFunction(Polynomial num, Polynomial den);
  static RationalFunction constant(const Rational& c);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

  Rational eval(const Rational& x) const;
  // First n power-series coefficients at X = 0.
  std::vector<Rational> series(int n) const;
  std::string to_string() const;

 private:
  void normalize();
  Polynomial num_, den_;
};

enum class Which { A, B };
enum class ClosedFormVariant { Compact, Summed, Enumeration };
std::string variant_name(ClosedFormVariant v);

Rational normalized_mass_sum(Int p, const LocalSquareClass& Sp, int eps);
Rational a_coeff(Int p, Int unit, int nu);
Rational b_coeff(Int p, Int unit, int nu);
Rational euler_coeff(Int p, Int unit, int nu, Which which);
std::vector<Rational> euler_coeffs(Int p, Int unit, Which which, int terms);

// Odd p: the same rational function for every variant.
RationalFunction closed_form(Int p, Int unit, Which which, ClosedFormVariant variant = ClosedFormVariant::Compact);

struct DecompositionReport {
  Int S = 0;
  std::map<Int, int> constraints;
  size_t genera = 0;      // global genera counted on the left
  Rational lhs, rhs;
  Rational K = 1;         // product of constrained normalized mass sums
  int C = 1;              // eps_inf * prod of constrained signs
  bool equal = false;
};
DecompositionReport decomposition_check(Int S, const std::map<Int, int>& constraints = {});

// Sum over sign tuples with product c of prod (X_i + e_i Y_i) == N^{t-1} (prod X + c prod Y),
// checked on `trials` random rational substitutions.
bool sign_tuple_identity(int t, int N, int c, std::uint64_t seed, int trials = 100);

}  // namespace bqm
