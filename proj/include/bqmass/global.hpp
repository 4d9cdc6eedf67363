#pragma once

#include <string>
#include <vector>

#include "bqmass/arith.hpp"
#include "bqmass/forms.hpp"
#include "bqmass/localgenus.hpp"

namespace bqm {

struct GenusEntry {
  std::vector<LocalGenusSymbol> symbols;
  std::vector<size_t> classes;  // indices into GenusReport::classes
  Rational mass;
};

// Census of primitive positive-definite binary forms of one determinant.
// Classes are proper classes; a class f carries weight 1/(2|Aut+(f)|), so a
// genus mass equals the sum of 1/|Aut| over its GL2(Z)-classes.
struct GenusReport {
  Int det = 0;
  std::vector<QuadForm> classes;
  std::vector<Int> aut;         // full automorphism group orders
  std::vector<Int> aut_proper;  // determinant +1 part
  std::vector<QuadForm> imprimitive;
  std::vector<GenusEntry> genera;
  Rational total_mass = 0;
};

Rational class_weight(Int aut_proper);
GenusReport genus_census(Int S);

int kappa(Int S);

// L(1, chi_D) for the Kronecker character of a discriminant D < 0.
struct LTruncation {
  Int bound = 0;           // number of character-sum terms / Euler product prime bound
  double value = 0;        // averaged partial character sum
  double error_estimate = 0;
  double euler_product = 0;  // raw product over primes <= bound
};
LTruncation l_value(Int D, Int bound);

struct MassNumeric {
  Int S = 0;
  Rational census;
  int kappa = 1;
  double rhs = 0;
  double rel_err = 0;
  LTruncation L;
};
MassNumeric total_mass_numeric(Int S, Int bound);

bool is_fundamental(Int D);
int units_count(Int D);
Int class_number(Int D);

struct DirichletReport {
  Int D = 0;
  Int h = 0;
  int w = 2;
  double predicted = 0;
  double rel_err = 0;
  LTruncation L;
};
DirichletReport dirichlet_check(Int D, Int bound);

struct KneserReport {
  Int D = 0;
  Int h = 0;
  Int group_order = 0;  // classes over both definite signatures
  int mu = 2;
  std::vector<Int> aut, aut_proper;
  size_t flagged = 0;   // positive-definite classes with |Aut| != 2|mu_K|
  bool proper_aut_is_mu = false;
  bool proper_weighting_ok = false;  // h == (|mu|/2) sum_{G} 1/|Aut+|
  bool full_weighting_ok = false;    // h == 2|mu| sum_{GL2-classes} 1/|Aut|
};
KneserReport kneser_counts(Int D);

}  // namespace bqm
