#include "bqmass/mass.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bqm {

namespace {

Rational rpow(Int p, int e) {
  Rational r = 1;
  const Rational base = (e >= 0) ? Rational(p) : Rational(1, p);
  for (int i = 0; i < std::abs(e); ++i) r *= base;
  r.canonicalize();
  return r;
}

}  // namespace

HalfPower HalfPower::operator*(const HalfPower& o) const {
  if (p != o.p) throw std::invalid_argument("half powers of different primes");
  return {coeff * o.coeff, p, k + o.k};
}

HalfPower HalfPower::operator/(const HalfPower& o) const {
  if (p != o.p) throw std::invalid_argument("half powers of different primes");
  return {coeff / o.coeff, p, k - o.k};
}

Rational HalfPower::to_rational() const {
  if (!is_rational()) throw std::logic_error("half power has an odd exponent");
  Rational r = coeff * rpow(p, k / 2);
  r.canonicalize();
  return r;
}

double HalfPower::to_double() const { return coeff.get_d() * std::pow(static_cast<double>(p), k / 2.0); }

std::string HalfPower::to_string() const {
  return bqm::to_string(coeff) + "*" + std::to_string(p) + "^(" + std::to_string(k) + "/2)";
}

PiPower PiPower::operator*(const PiPower& o) const { return {coeff * o.coeff, half_exp + o.half_exp}; }

double PiPower::to_double() const { return coeff.get_d() * std::pow(std::numbers::pi, half_exp / 2.0); }

std::string PiPower::to_string() const {
  return bqm::to_string(coeff) + "*pi^(" + std::to_string(half_exp) + "/2)";
}

HalfPower p_mass(const LocalGenusSymbol& g) {
  const Int p = g.p;
  const int nu = g.nu;
  if (p != 2) {
    if (nu == 0) return {Rational(1, 2) / gamma_factor(g.det_unit == 1 ? 1 : least_nonresidue(p), p), p, 0};
    return {Rational(1, 4), p, nu};
  }
  const Int u = g.det_unit;
  switch (nu) {
    case 0:
      if (u % 4 != 3) throw std::invalid_argument("no 2-adic genus with nu = 0 and u = 1 mod 4");
      return {Rational(1, 4) / gamma_factor(u, 2), 2, 0};
    case 1: throw std::invalid_argument("no 2-adic genus with nu = 1");
    case 2: return {u % 4 == 1 ? Rational(1, 8) : Rational(1, 4), 2, 0};
    case 3: return {1, 2, -5};
    case 4: return {Rational(1, 4), 2, 0};
    default: return {1, 2, nu - 10};
  }
}

Rational local_density_inverse(const LocalGenusSymbol& g) {
  const HalfPower m = p_mass(g);
  HalfPower conv{2, g.p, -3 * g.nu + (g.p == 2 ? 6 : 0)};
  HalfPower beta_inv = m * conv;
  // The tabulated 2-mass of the even unimodular row is the doubled mass.
  if (g.p == 2 && g.nu == 0) beta_inv.coeff /= 2;
  if (!beta_inv.is_rational()) throw std::logic_error("live half exponent in local density " + g.to_string());
  return beta_inv.to_rational();
}

Rational generic_density_inverse(Int p, Int unit) {
  Rational r = 1 / gamma_factor(unit, p);
  if (p == 2) r *= 2;
  r.canonicalize();
  return r;
}

Rational normalized_density(const LocalGenusSymbol& g) {
  const Int u = (g.p == 2) ? g.det_unit : (g.det_unit == 1 ? 1 : least_nonresidue(g.p));
  Rational r = local_density_inverse(g) / generic_density_inverse(g.p, u);
  r.canonicalize();
  return r;
}

Int count_SO_mod_p(const QuadForm& f, Int p) {
  if (f.n != 2) throw std::invalid_argument("binary form expected");
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("odd prime expected");
  if (det_hessian(f) % p == 0) throw std::invalid_argument("bad reduction at p");
  auto md = [p](Int v) { return ((v % p) + p) % p; };
  const Int a = md(f.a()), b = md(f.b()), c = md(f.c());
  Int count = 0;
  for (Int m11 = 0; m11 < p; ++m11)
    for (Int m12 = 0; m12 < p; ++m12)
      for (Int m21 = 0; m21 < p; ++m21)
        for (Int m22 = 0; m22 < p; ++m22) {
          if (md(m11 * m22 - m12 * m21) != 1) continue;
          const QuadForm t = transform(QuadForm::binary(a, b, c), m11, m12, m21, m22);
          if (md(t.a()) == a && md(t.b()) == b && md(t.c()) == c) ++count;
        }
  return count;
}

PiPower archimedean_V(int r) {
  if (r < 0) throw std::invalid_argument("V(r) needs r >= 0");
  // V(r) = 1/2 pi^{r(r+1)/4} / prod_{i<=r} Gamma(i/2).
  PiPower v{Rational(1, 2), r * (r + 1) / 2};
  for (int i = 1; i <= r; ++i) {
    if (i % 2 == 0) {
      // Gamma(m) = (m-1)!
      Rational fact = 1;
      for (int j = 2; j < i / 2; ++j) fact *= j;
      v.coeff /= fact;
    } else {
      // Gamma(m + 1/2) = sqrt(pi) (2m)! / (4^m m!)
      const int m = (i - 1) / 2;
      mpz_class num = 1, den = 1;
      for (int j = 1; j <= 2 * m; ++j) num *= j;
      for (int j = 1; j <= m; ++j) den *= 4 * j;
      v.coeff *= Rational(den, num);
      v.half_exp -= 1;
    }
  }
  v.coeff.canonicalize();
  return v;
}

PiPower archimedean_constant(const Signature& s) {
  if (s.plus + s.minus != 2) throw std::invalid_argument("binary signature expected");
  const int mn = std::min(s.plus, s.minus);
  PiPower c = archimedean_V(s.plus) * archimedean_V(s.minus);
  c.coeff *= 2;
  c.coeff /= rpow(2, mn);
  c.coeff.canonicalize();
  return c;
}

Rational genus_mass_ratio(const std::vector<LocalGenusSymbol>& G, const std::vector<LocalGenusSymbol>& G2) {
  if (G.size() != G2.size()) throw std::invalid_argument("genera over different prime sets");
  Rational r = 1;
  for (size_t i = 0; i < G.size(); ++i) {
    if (G[i].p != G2[i].p || G[i].nu != G2[i].nu || G[i].det_unit != G2[i].det_unit)
      throw std::invalid_argument("genera of different determinants");
    r *= local_density_inverse(G[i]) / local_density_inverse(G2[i]);
  }
  r.canonicalize();
  return r;
}

}  // namespace bqm
