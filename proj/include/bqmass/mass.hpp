#pragma once

#include <string>
#include <vector>

#include "bqmass/arith.hpp"
#include "bqmass/forms.hpp"
#include "bqmass/localgenus.hpp"

namespace bqm {

// coeff * p^(k/2)
struct HalfPower {
  Rational coeff = 1;
  Int p = 2;
  int k = 0;

  HalfPower operator*(const HalfPower& o) const;
  HalfPower operator/(const HalfPower& o) const;
  bool is_rational() const { return k % 2 == 0; }
  Rational to_rational() const;
  double to_double() const;
  std::string to_string() const;
};

// coeff * pi^(half_exp/2)
struct PiPower {
  Rational coeff = 1;
  int half_exp = 0;

  PiPower operator*(const PiPower& o) const;
  double to_double() const;
  std::string to_string() const;
};

HalfPower p_mass(const LocalGenusSymbol& g);
Rational local_density_inverse(const LocalGenusSymbol& g);
Rational generic_density_inverse(Int p, Int unit);
// beta_gen / beta_G for a genus with normalized unit class u.
Rational normalized_density(const LocalGenusSymbol& g);

Int count_SO_mod_p(const QuadForm& f, Int p);

PiPower archimedean_V(int r);
// Archimedean constant of a binary real signature.
PiPower archimedean_constant(const Signature& s);

// prod_p beta_G^-1 / beta_G2^-1 over the primes the two symbol lists cover.
Rational genus_mass_ratio(const std::vector<LocalGenusSymbol>& G, const std::vector<LocalGenusSymbol>& G2);

}  // namespace bqm
