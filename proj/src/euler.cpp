#include "bqmass/euler.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "bqmass/forms.hpp"
#include "bqmass/mass.hpp"

namespace bqm {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& v : c_) v.canonicalize();
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<size_t>(degree + 1), Rational(0));
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<size_t>(i)];
}

Rational Polynomial::eval(const Rational& x) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  r.canonicalize();
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o.scaled(-1); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::scaled(const Rational& s) const {
  std::vector<Rational> v = c_;
  for (auto& x : v) x *= s;
  return Polynomial(std::move(v));
}

void Polynomial::divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.c_, quo;
  const int db = b.degree();
  if (a.degree() >= db) quo.assign(static_cast<size_t>(a.degree() - db + 1), Rational(0));
  for (int i = a.degree(); i >= db; --i) {
    const Rational f = rem[static_cast<size_t>(i)] / b.leading();
    quo[static_cast<size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(i - db + j)] -= f * b.c_[static_cast<size_t>(j)];
  }
  q = Polynomial(std::move(quo));
  r = Polynomial(std::move(rem));
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(1 / a.leading());
}

std::string Polynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += "(" + c_[i].get_str() + ")";
    if (i >= 1) s += "*X";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  normalize();
}

RationalFunction RationalFunction::constant(const Rational& c) {
  return RationalFunction(Polynomial::constant(c), Polynomial::constant(1));
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(1);
    return;
  }
  const Polynomial g = Polynomial::gcd(num_, den_);
  Polynomial q, r;
  Polynomial::divmod(num_, g, q, r);
  num_ = q;
  Polynomial::divmod(den_, g, q, r);
  den_ = q;
  const Rational s = den_.coeff(0) != 0 ? den_.coeff(0) : den_.leading();
  num_ = num_.scaled(1 / s);
  den_ = den_.scaled(1 / s);
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero rational function");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

Rational RationalFunction::eval(const Rational& x) const {
  const Rational d = den_.eval(x);
  if (d == 0) throw std::domain_error("pole");
  Rational r = num_.eval(x) / d;
  r.canonicalize();
  return r;
}

std::vector<Rational> RationalFunction::series(int n) const {
  const Rational d0 = den_.coeff(0);
  if (d0 == 0) throw std::domain_error("no power series at X = 0");
  std::vector<Rational> s(static_cast<size_t>(std::max(n, 0)), Rational(0));
  for (int k = 0; k < n; ++k) {
    Rational acc = num_.coeff(k);
    for (int j = 1; j <= std::min(k, den_.degree()); ++j) acc -= den_.coeff(j) * s[static_cast<size_t>(k - j)];
    acc /= d0;
    acc.canonicalize();
    s[static_cast<size_t>(k)] = acc;
  }
  return s;
}

std::string RationalFunction::to_string() const { return "[" + num_.to_string() + "] / [" + den_.to_string() + "]"; }

std::string variant_name(ClosedFormVariant v) {
  switch (v) {
    case ClosedFormVariant::Compact: return "compact";
    case ClosedFormVariant::Summed: return "summed";
    case ClosedFormVariant::Enumeration: return "enumeration";
  }
  return "?";
}

Rational normalized_mass_sum(Int p, const LocalSquareClass& Sp, int eps) {
  Rational total = 0;
  for (const auto& g : enumerate_local_genera(p, Sp))
    if (g.symbol.hasse == eps) total += normalized_density(g.symbol);
  total.canonicalize();
  return total;
}

Rational a_coeff(Int p, Int unit, int nu) {
  const auto sq = LocalSquareClass::make(p, nu, unit);
  Rational r = normalized_mass_sum(p, sq, 1) + normalized_mass_sum(p, sq, -1);
  r.canonicalize();
  return r;
}

Rational b_coeff(Int p, Int unit, int nu) {
  const auto sq = LocalSquareClass::make(p, nu, unit);
  Rational r = normalized_mass_sum(p, sq, 1) - normalized_mass_sum(p, sq, -1);
  r.canonicalize();
  return r;
}

Rational euler_coeff(Int p, Int unit, int nu, Which which) {
  return which == Which::A ? a_coeff(p, unit, nu) : b_coeff(p, unit, nu);
}

std::vector<Rational> euler_coeffs(Int p, Int unit, Which which, int terms) {
  std::vector<Rational> out;
  for (int nu = 0; nu < terms; ++nu) out.push_back(euler_coeff(p, unit, nu, which));
  return out;
}

RationalFunction closed_form(Int p, Int unit, Which which, ClosedFormVariant variant) {
  if (!is_prime(p)) throw std::invalid_argument("closed_form needs a prime");
  unit_tag(unit, p);
  const Rational q = p;
  const Rational ch = chi(unit, p);
  const Rational gam = gamma_factor(unit, p);
  auto poly = [](std::vector<Rational> c) { return Polynomial(std::move(c)); };
  const Rational zero = 0, one = 1;
  if (p != 2) {
    if (which == Which::A) return RationalFunction(poly({one, -ch / (q * q)}), poly({one, -1 / q}));
    return RationalFunction(poly({one, zero, -ch / (q * q * q)}), poly({one, zero, -1 / (q * q)}));
  }
  const bool three = (unit_tag(unit, 2) % 4 == 3);
  const RationalFunction tail(poly({zero, zero, gam / 4}), poly({one, Rational(-1, 2)}));
  if (which == Which::A) {
    switch (variant) {
      case ClosedFormVariant::Compact: return RationalFunction(poly({one, -ch / 8}), poly({one, Rational(-1, 2)}));
      case ClosedFormVariant::Summed: return RationalFunction::constant(1) + tail;
      case ClosedFormVariant::Enumeration: return RationalFunction::constant(three ? 1 : 0) + tail;
    }
  }
  if (!three) return RationalFunction::constant(0);
  const Polynomial compact_num = poly({Rational(-1), zero, Rational(1, 2) - ch / 8});
  switch (variant) {
    case ClosedFormVariant::Compact: return RationalFunction(compact_num, poly({one, zero, Rational(-1, 8)}));
    case ClosedFormVariant::Summed: return RationalFunction(compact_num, poly({one, zero, Rational(-1, 4)}));
    case ClosedFormVariant::Enumeration:
      return RationalFunction(poly({one, zero, -ch / 8}), poly({one, zero, Rational(-1, 4)}));
  }
  return {};
}

DecompositionReport decomposition_check(Int S, const std::map<Int, int>& constraints) {
  DecompositionReport rep;
  rep.S = S;
  rep.constraints = constraints;
  const GlobalDeterminant det(S);
  std::vector<Int> T = det.bad_primes();
  for (auto& [p, c] : constraints) {
    if (!is_prime(p)) throw std::invalid_argument("constraint at a non-prime");
    if (c != 1 && c != -1) throw std::invalid_argument("constraint sign must be +-1");
    if (std::find(T.begin(), T.end(), p) == T.end()) T.push_back(p);
  }
  std::sort(T.begin(), T.end());

  // Left side from the global census.
  const auto classes = enumerate_primitive_classes(S);
  rep.lhs = 0;
  for (const auto& part : partition_genera(S, classes)) {
    const QuadForm& f = classes[part.members.front()];
    bool keep = true;
    Rational term = 1;
    for (Int p : T) {
      const auto sym = local_symbol(f, p);
      auto it = constraints.find(p);
      if (it != constraints.end() && sym.hasse != it->second) keep = false;
      term *= normalized_density(sym);
    }
    if (!keep) continue;
    ++rep.genera;
    rep.lhs += term;
  }
  rep.lhs.canonicalize();

  // Right side from local data only.
  Rational prodA = 1, prodB = 1;
  rep.K = 1;
  rep.C = 1;  // eps_inf = +1 for positive-definite binary forms
  for (Int p : T) {
    const auto sq = det.at(p);
    auto it = constraints.find(p);
    if (it != constraints.end()) {
      rep.K *= normalized_mass_sum(p, sq, it->second);
      rep.C *= it->second;
    } else {
      prodA *= a_coeff(p, sq.unit_rep(), sq.val);
      prodB *= b_coeff(p, sq.unit_rep(), sq.val);
    }
  }
  rep.rhs = rep.K * Rational(1, 2) * (prodA + rep.C * prodB);
  rep.rhs.canonicalize();
  rep.K.canonicalize();
  rep.equal = (rep.lhs == rep.rhs);
  return rep;
}

bool sign_tuple_identity(int t, int N, int c, std::uint64_t seed, int trials) {
  if (t < 1 || t > 4) throw std::invalid_argument("tuple size must be 1..4");
  if (N != 2) throw std::invalid_argument("only the two-sign case is defined");
  if (c != 1 && c != -1) throw std::invalid_argument("c must be +-1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 20);
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<Rational> X(static_cast<size_t>(t)), Y(static_cast<size_t>(t));
    for (int i = 0; i < t; ++i) {
      X[i] = Rational(num(rng), den(rng));
      Y[i] = Rational(num(rng), den(rng));
      X[i].canonicalize();
      Y[i].canonicalize();
    }
    Rational lhs = 0;
    for (unsigned mask = 0; mask < (1u << t); ++mask) {
      int prod = 1;
      Rational term = 1;
      for (int i = 0; i < t; ++i) {
        const int e = (mask >> i & 1u) ? -1 : 1;
        prod *= e;
        term *= X[i] + e * Y[i];
      }
      if (prod == c) lhs += term;
    }
    Rational px = 1, py = 1;
    for (int i = 0; i < t; ++i) {
      px *= X[i];
      py *= Y[i];
    }
    Rational rhs = Rational(1 << (t - 1)) * (px + c * py);
    lhs.canonicalize();
    rhs.canonicalize();
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace bqm
