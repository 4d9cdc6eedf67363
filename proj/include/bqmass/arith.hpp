#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace bqm {

using Int = std::int64_t;
using Rational = mpq_class;

// Place index for the real place in Hilbert-symbol calls.
inline constexpr Int kInfinity = 0;

// Largest determinant accepted by factorization (trial division by primes < 10^6).
inline constexpr Int kMaxFactorable = 1000000000000LL;

int valuation(Int m, Int p);
int valuation(const mpz_class& m, Int p);
int valuation(const Rational& r, Int p);

bool is_prime(Int n);
std::vector<std::pair<Int, int>> factorize(Int n);
Int least_nonresidue(Int p);
Int ipow(Int base, int exp);

int legendre(Int a, Int p);
int kronecker(Int a, Int m);

// Standard Hilbert symbol (a,b)_v; v = kInfinity for the real place.
int hilbert_symbol(const Rational& a, const Rational& b, Int place);

// chi_u(p) = kronecker(-u, p), u a p-adic unit.
int chi(Int u, Int p);
// gamma_p(u) = 1 - chi_u(p)/p.
Rational gamma_factor(Int u, Int p);

std::string to_string(const Rational& r);

// Squareclass of Q_p^x, stored as valuation plus canonical unit tag:
// odd p -> +1 (QR) or -1 (NQR); p = 2 -> unit residue mod 8.
struct LocalSquareClass {
  Int p = 2;
  int val = 0;
  int unit = 1;

  static LocalSquareClass of(Int m, Int p);
  static LocalSquareClass of(const Rational& r, Int p);
  static LocalSquareClass make(Int p, int val, Int unit_rep);

  LocalSquareClass operator*(const LocalSquareClass& o) const;
  bool operator==(const LocalSquareClass& o) const = default;
  // An integer unit carrying this tag.
  Int unit_rep() const;
  std::string to_string() const;
};

int unit_tag(Int u, Int p);

struct GlobalDeterminant {
  Int value = 1;
  std::vector<std::pair<Int, int>> factorization;

  explicit GlobalDeterminant(Int S);
  LocalSquareClass at(Int p) const;
  Int ideal() const { return value; }
  // {2} together with the primes dividing S, ascending.
  std::vector<Int> bad_primes() const;
  bool ideal_is_square() const;
};

}  // namespace bqm
