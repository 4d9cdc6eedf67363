#pragma once

// Brute-force reference implementations. Nothing here calls the library's
// number theory; only QuadForm is shared as a container.

#include <array>
#include <cstdint>
#include <vector>

#include "bqmass/arith.hpp"
#include "bqmass/forms.hpp"

namespace oracle {

using bqm::Int;
using bqm::QuadForm;
using bqm::Rational;

Int mod(Int a, Int m);
Int powmod(Int b, Int e, Int m);

// a^((p-1)/2) mod p, as -1/0/+1.
int legendre(Int a, Int p);

// (a,b)_p by searching for a primitive solution of z^2 = a x^2 + b y^2
// modulo a sufficiently high power of p. p = 0 is the real place.
int hilbert(Int a, Int b, Int p);
int hilbert(const Rational& a, const Rational& b, Int p);

// Reduced form properly equivalent to f, found by searching SL2(Z)
// matrices with entries bounded by `bound`.
QuadForm reduce(const QuadForm& f, Int bound = 8);
bool is_reduced(const QuadForm& f);

struct Aut {
  Int full = 0;
  Int proper = 0;
};
Aut automorphisms(const QuadForm& f, Int bound = 6);

// All reduced forms with 4ac - b^2 = S found by scanning every (a, b, c)
// with 0 < a <= c, |b| <= a and reducing.
std::vector<QuadForm> classes(Int S, bool primitive_only);

// Sum over proper classes of 1/(2|Aut+|), with brute-force automorphisms.
Rational total_mass(Int S);

// Same genus iff the forms take the same values in (Z/SZ)^x.
bool same_genus(const QuadForm& f, const QuadForm& g);

// All M mod p^k with f(Mx) = g(x) coefficientwise mod p^k and det M a unit,
// grown level by level from mod p.
std::vector<std::array<Int, 4>> isometries_mod(const QuadForm& f, const QuadForm& g, Int p, int k);
bool locally_equivalent(const QuadForm& f, const QuadForm& g, Int p, int k);

// #{M mod p^k : f(Mx) = f(x) mod p^k} / p^k.
Rational alpha(const QuadForm& f, Int p, int k);

// Binary forms primitive at p with small coefficients whose det_H has
// p-valuation nu and unit part in the class of u (mod 8 at 2, Legendre
// symbol at odd p).
std::vector<QuadForm> local_pool(Int p, int nu, Int u, Int span);

// c_p of a x^2 + b xy + c y^2 ~ <a, a S> over Q (a != 0).
int hasse(const QuadForm& f, Int p);

// Local genera of the pool, clustered by isometry mod p^(nu+3) at 2 and
// p^(nu+1) otherwise; one representative per cluster.
std::vector<QuadForm> local_genera(Int p, int nu, Int u, Int span);

// |SO(f)(F_p)| by enumerating 2x2 matrices over F_p.
Int so_order(const QuadForm& f, Int p);

}  // namespace oracle
