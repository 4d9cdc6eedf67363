#include "bqmass/arith.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bqm {

namespace {

const std::vector<Int>& small_primes() {
  static const std::vector<Int> primes = [] {
    const Int limit = 1000000;
    std::vector<bool> composite(limit + 1, false);
    std::vector<Int> out;
    for (Int i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (Int j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// Unit part of an mpz at p, as residue mod p (odd) or mod 8.
Int unit_residue(const mpz_class& m, Int p) {
  mpz_class u = m;
  mpz_class pp = p;
  mpz_remove(u.get_mpz_t(), u.get_mpz_t(), pp.get_mpz_t());
  Int mod = (p == 2) ? 8 : p;
  mpz_class r = u % mod;
  if (r < 0) r += mod;
  return r.get_si();
}

}  // namespace

int valuation(Int m, Int p) {
  if (m == 0) throw std::invalid_argument("valuation of zero");
  if (p < 2) throw std::invalid_argument("valuation needs a prime");
  int k = 0;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  return k;
}

int valuation(const mpz_class& m, Int p) {
  if (m == 0) throw std::invalid_argument("valuation of zero");
  mpz_class tmp;
  mpz_class pp = p;
  return static_cast<int>(mpz_remove(tmp.get_mpz_t(), m.get_mpz_t(), pp.get_mpz_t()));
}

int valuation(const Rational& r, Int p) {
  return valuation(mpz_class(r.get_num()), p) - valuation(mpz_class(r.get_den()), p);
}

bool is_prime(Int n) {
  if (n < 2) return false;
  mpz_class z = n;
  return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

std::vector<std::pair<Int, int>> factorize(Int n) {
  if (n <= 0) throw std::invalid_argument("factorize needs a positive integer");
  if (n > kMaxFactorable) throw std::out_of_range("integer too large for trial division");
  std::vector<std::pair<Int, int>> out;
  for (Int p : small_primes()) {
    if (p * p > n) break;
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

Int least_nonresidue(Int p) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("least_nonresidue needs an odd prime");
  for (Int a = 2;; ++a)
    if (legendre(a, p) == -1) return a;
}

Int ipow(Int base, int exp) {
  Int r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

int legendre(Int a, Int p) {
  mpz_class A = a, P = p;
  return mpz_legendre(A.get_mpz_t(), P.get_mpz_t());
}

int kronecker(Int a, Int m) {
  if (m == 0) throw std::invalid_argument("kronecker symbol with m = 0");
  mpz_class A = a, M = m;
  return mpz_kronecker(A.get_mpz_t(), M.get_mpz_t());
}

int hilbert_symbol(const Rational& a, const Rational& b, Int place) {
  if (a == 0 || b == 0) throw std::invalid_argument("Hilbert symbol of zero");
  if (place == kInfinity) return (a < 0 && b < 0) ? -1 : 1;
  const Int p = place;
  const mpz_class an = a.get_num(), ad = a.get_den(), bn = b.get_num(), bd = b.get_den();
  const int alpha = valuation(an, p) - valuation(ad, p);
  const int beta = valuation(bn, p) - valuation(bd, p);
  if (p != 2) {
    // Unit parts u, v; (a,b)_p = (-1)^{alpha beta eps(p)} (u/p)^beta (v/p)^alpha.
    const Int u = (unit_residue(an, p) * unit_residue(ad, p)) % p;
    const Int v = (unit_residue(bn, p) * unit_residue(bd, p)) % p;
    int s = 1;
    if ((alpha & 1) && (beta & 1) && (p % 4 == 3)) s = -s;
    if (beta & 1) s *= legendre(u, p);
    if (alpha & 1) s *= legendre(v, p);
    return s;
  }
  // Odd denominators are their own inverses mod 8.
  const Int u = (unit_residue(an, 2) * unit_residue(ad, 2)) % 8;
  const Int v = (unit_residue(bn, 2) * unit_residue(bd, 2)) % 8;
  auto eps = [](Int w) { return ((w - 1) / 2) & 1; };
  auto omega = [](Int w) { return ((w * w - 1) / 8) & 1; };
  Int e = eps(u) * eps(v);
  if (alpha & 1) e += omega(v);
  if (beta & 1) e += omega(u);
  return (e & 1) ? -1 : 1;
}

int chi(Int u, Int p) { return kronecker(-u, p); }

Rational gamma_factor(Int u, Int p) {
  Rational g = 1 - Rational(chi(u, p), p);
  g.canonicalize();
  return g;
}

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str() + "/1";
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

int unit_tag(Int u, Int p) {
  if (p == 2) {
    Int r = ((u % 8) + 8) % 8;
    if (r % 2 == 0) throw std::invalid_argument("not a 2-adic unit");
    return static_cast<int>(r);
  }
  int l = legendre(u, p);
  if (l == 0) throw std::invalid_argument("not a p-adic unit");
  return l;
}

LocalSquareClass LocalSquareClass::of(Int m, Int p) { return of(Rational(m), p); }

LocalSquareClass LocalSquareClass::of(const Rational& r, Int p) {
  if (r == 0) throw std::invalid_argument("squareclass of zero");
  if (!is_prime(p)) throw std::invalid_argument("squareclass needs a prime");
  LocalSquareClass s;
  s.p = p;
  const mpz_class n = r.get_num(), d = r.get_den();
  s.val = valuation(n, p) - valuation(d, p);
  const Int mod = (p == 2) ? 8 : p;
  Int u = (unit_residue(n, p) * unit_residue(d, p)) % mod;
  s.unit = unit_tag(u, p);
  return s;
}

LocalSquareClass LocalSquareClass::make(Int p, int val, Int unit_rep) {
  LocalSquareClass s;
  s.p = p;
  s.val = val;
  s.unit = unit_tag(unit_rep, p);
  return s;
}

LocalSquareClass LocalSquareClass::operator*(const LocalSquareClass& o) const {
  if (p != o.p) throw std::invalid_argument("squareclasses at different primes");
  LocalSquareClass s;
  s.p = p;
  s.val = val + o.val;
  s.unit = (p == 2) ? static_cast<int>((unit * o.unit) % 8) : unit * o.unit;
  return s;
}

Int LocalSquareClass::unit_rep() const {
  if (p == 2) return unit;
  return unit == 1 ? 1 : least_nonresidue(p);
}

std::string LocalSquareClass::to_string() const {
  std::string tag;
  if (p == 2)
    tag = std::to_string(unit) + " mod 8";
  else
    tag = unit == 1 ? "QR" : "NQR";
  return "(p=" + std::to_string(p) + ", nu=" + std::to_string(val) + ", " + tag + ")";
}

GlobalDeterminant::GlobalDeterminant(Int S) : value(S) {
  if (S <= 0) throw std::invalid_argument("determinant must be positive");
  factorization = factorize(S);
}

LocalSquareClass GlobalDeterminant::at(Int p) const { return LocalSquareClass::of(value, p); }

std::vector<Int> GlobalDeterminant::bad_primes() const {
  std::vector<Int> out{2};
  for (auto& [p, e] : factorization)
    if (p != 2) out.push_back(p);
  return out;
}

bool GlobalDeterminant::ideal_is_square() const {
  return std::all_of(factorization.begin(), factorization.end(),
                     [](const auto& pe) { return pe.second % 2 == 0; });
}

}  // namespace bqm
