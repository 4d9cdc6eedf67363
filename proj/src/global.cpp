#include "bqmass/global.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bqmass/mass.hpp"

namespace bqm {

Rational class_weight(Int aut_proper) {
  Rational r(1, 2 * aut_proper);
  r.canonicalize();
  return r;
}

GenusReport genus_census(Int S) {
  if (S <= 0) throw std::invalid_argument("determinant must be positive");
  GenusReport rep;
  rep.det = S;
  for (const auto& f : enumerate_classes(S)) {
    if (is_primitive(f)) rep.classes.push_back(f);
    else rep.imprimitive.push_back(f);
  }
  for (const auto& f : rep.classes) {
    const auto a = automorphisms(f);
    rep.aut.push_back(a.full);
    rep.aut_proper.push_back(a.proper);
  }
  for (const auto& part : partition_genera(S, rep.classes)) {
    GenusEntry g;
    g.symbols = part.symbols;
    g.classes = part.members;
    g.mass = 0;
    for (size_t i : part.members) g.mass += class_weight(rep.aut_proper[i]);
    g.mass.canonicalize();
    rep.total_mass += g.mass;
    rep.genera.push_back(std::move(g));
  }
  rep.total_mass.canonicalize();
  return rep;
}

int kappa(Int S) {
  const GlobalDeterminant det(S);
  if (!det.ideal_is_square()) return 1;
  const auto s2 = det.at(2);
  if (s2.unit % 4 != 3) return 1;
  const int tau = (S % 2 != 0) ? 1 : 0;
  return tau % 2 == 0 ? 2 : 0;
}

LTruncation l_value(Int D, Int bound) {
  if (D >= 0) throw std::invalid_argument("negative discriminant expected");
  if (bound < 100) throw std::invalid_argument("bound must be at least 100");
  const Int q = -D;
  LTruncation L;
  L.bound = bound;
  std::vector<int> chi_tab(static_cast<size_t>(q));
  for (Int r = 0; r < q; ++r) chi_tab[static_cast<size_t>(r)] = (r == 0) ? 0 : kronecker(D, r);
  // Partial sums over complete periods, then the mean of the next period's
  // partial sums, which cancels the leading term of the Abel tail.
  const Int periods = std::max<Int>(1, bound / q);
  const Int N = periods * q;
  long double s = 0;
  for (Int n = 1; n <= N; ++n) s += chi_tab[static_cast<size_t>(n % q)] / static_cast<long double>(n);
  long double mean = 0, run = s;
  long double peak = 0, walk = 0;
  for (Int j = 1; j <= q; ++j) {
    const Int n = N + j;
    run += chi_tab[static_cast<size_t>(n % q)] / static_cast<long double>(n);
    mean += run;
    walk += chi_tab[static_cast<size_t>(j % q)];
    peak = std::max(peak, std::fabs(walk));
  }
  mean /= static_cast<long double>(q);
  L.value = static_cast<double>(mean);
  L.error_estimate = static_cast<double>(4 * peak * q / (static_cast<long double>(N) * N)) + 1e-15;

  std::vector<bool> composite(static_cast<size_t>(bound + 1), false);
  long double prod = 1;
  for (Int p = 2; p <= bound; ++p) {
    if (composite[static_cast<size_t>(p)]) continue;
    for (Int m = p * p; m <= bound; m += p) composite[static_cast<size_t>(m)] = true;
    const int c = kronecker(D, p);
    prod /= (1.0L - static_cast<long double>(c) / p);
  }
  L.euler_product = static_cast<double>(prod);
  return L;
}

MassNumeric total_mass_numeric(Int S, Int bound) {
  MassNumeric m;
  m.S = S;
  m.census = genus_census(S).total_mass;
  m.kappa = kappa(S);
  // prod_{p not dividing S} gamma_p(S)^-1 is L(1, chi_{-S}).
  m.L = l_value(-S, bound);
  m.rhs = m.kappa * std::sqrt(static_cast<double>(S)) / (4 * std::numbers::pi) * m.L.value;
  const double exact = m.census.get_d();
  m.rel_err = exact != 0 ? std::fabs(m.rhs - exact) / exact : std::fabs(m.rhs);
  return m;
}

bool is_fundamental(Int D) {
  if (D >= 0) return false;
  auto squarefree = [](Int m) {
    for (auto& [p, e] : factorize(m))
      if (e > 1) return false;
    return true;
  };
  const Int m = -D;
  if (((D % 4) + 4) % 4 == 1) return squarefree(m);
  if (m % 4 != 0) return false;
  const Int k = D / 4;
  const Int r = ((k % 4) + 4) % 4;
  return (r == 2 || r == 3) && squarefree(-k);
}

int units_count(Int D) {
  if (D == -3) return 6;
  if (D == -4) return 4;
  return 2;
}

Int class_number(Int D) {
  if (!is_fundamental(D)) throw std::invalid_argument("negative fundamental discriminant expected");
  return static_cast<Int>(enumerate_primitive_classes(-D).size());
}

DirichletReport dirichlet_check(Int D, Int bound) {
  DirichletReport r;
  r.D = D;
  r.h = class_number(D);
  r.w = units_count(D);
  r.L = l_value(D, bound);
  r.predicted = r.w * std::sqrt(static_cast<double>(-D)) / (2 * std::numbers::pi) * r.L.value;
  r.rel_err = std::fabs(r.predicted - static_cast<double>(r.h)) / static_cast<double>(r.h);
  return r;
}

KneserReport kneser_counts(Int D) {
  KneserReport k;
  k.D = D;
  k.h = class_number(D);
  k.mu = units_count(D);
  const auto classes = enumerate_primitive_classes(-D);
  // Negation is a bijection onto the negative-definite classes.
  k.group_order = 2 * static_cast<Int>(classes.size());
  Rational sum_proper = 0, sum_full_gl = 0;
  k.proper_aut_is_mu = true;
  std::vector<QuadForm> gl_seen;
  for (const auto& f : classes) {
    const auto a = automorphisms(f);
    k.aut.push_back(a.full);
    k.aut_proper.push_back(a.proper);
    if (a.full != 2 * k.mu) ++k.flagged;
    if (a.proper != k.mu) k.proper_aut_is_mu = false;
    sum_proper += Rational(2, a.proper);  // both signatures
    const QuadForm mirror = reduce_binary(QuadForm::binary(f.a(), -f.b(), f.c()));
    if (std::find(gl_seen.begin(), gl_seen.end(), mirror) == gl_seen.end()) {
      gl_seen.push_back(f);
      sum_full_gl += Rational(1, a.full);
    }
  }
  const Rational h = k.h;
  k.proper_weighting_ok = (Rational(k.mu, 2) * sum_proper == h);
  k.full_weighting_ok = (Rational(2 * k.mu) * sum_full_gl == h);
  return k;
}

}  // namespace bqm
