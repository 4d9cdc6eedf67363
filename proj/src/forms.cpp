#include "bqmass/forms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace bqm {

namespace {

Int isqrt_floor(Int v) {
  if (v <= 0) return 0;
  Int r = static_cast<Int>(std::sqrt(static_cast<long double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

void require_binary(const QuadForm& f) {
  if (f.n != 2) throw std::invalid_argument("binary form expected");
}

void require_pd(const QuadForm& f) {
  require_binary(f);
  if (!is_positive_definite(f)) throw std::invalid_argument("positive-definite binary form expected");
}

}  // namespace

QuadForm QuadForm::binary(Int a, Int b, Int c) { return QuadForm{2, {2 * a, b, b, 2 * c}}; }

QuadForm QuadForm::from_hessian(int n, std::vector<Int> h) {
  if (n < 1 || h.size() != static_cast<size_t>(n * n)) throw std::invalid_argument("bad Hessian shape");
  for (int i = 0; i < n; ++i) {
    if (h[i * n + i] % 2 != 0) throw std::invalid_argument("Hessian diagonal must be even");
    for (int j = 0; j < n; ++j)
      if (h[i * n + j] != h[j * n + i]) throw std::invalid_argument("Hessian must be symmetric");
  }
  return QuadForm{n, std::move(h)};
}

std::string QuadForm::to_string() const {
  if (n != 2) {
    std::string s = "H[";
    for (size_t i = 0; i < hessian.size(); ++i) s += (i ? "," : "") + std::to_string(hessian[i]);
    return s + "]";
  }
  return "[" + std::to_string(a()) + "," + std::to_string(b()) + "," + std::to_string(c()) + "]";
}

Int det_hessian(const QuadForm& f) {
  if (f.n == 2) return f.h(0, 0) * f.h(1, 1) - f.h(0, 1) * f.h(1, 0);
  // Bareiss elimination, exact over Z.
  const int n = f.n;
  std::vector<mpz_class> m(f.hessian.begin(), f.hessian.end());
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k * n + k] == 0) {
      int r = k + 1;
      while (r < n && m[r * n + k] == 0) ++r;
      if (r == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(m[k * n + j], m[r * n + j]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i * n + j] = (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
    prev = m[k * n + k];
  }
  return sign * m[n * n - 1].get_si();
}

Rational det_gram(const QuadForm& f) {
  Rational d(det_hessian(f), mpz_class(1) << f.n);
  d.canonicalize();
  return d;
}

bool is_primitive(const QuadForm& f) {
  Int g = 0;
  for (int i = 0; i < f.n; ++i) {
    g = std::gcd(g, f.h(i, i) / 2);
    for (int j = i + 1; j < f.n; ++j) g = std::gcd(g, f.h(i, j));
  }
  return g == 1;
}

bool is_positive_definite(const QuadForm& f) {
  auto s = signature(f);
  return s.plus == f.n;
}

Signature signature(const QuadForm& f) {
  Signature s;
  for (const auto& d : diagonalize(f)) {
    if (d > 0) ++s.plus;
    else if (d < 0) ++s.minus;
  }
  if (s.plus + s.minus != f.n) throw std::invalid_argument("degenerate form");
  return s;
}

int epsilon_inf(const Signature& s) {
  // c_inf = (-1,-1)^{m(m-1)/2} for m negative entries.
  Int m = s.minus;
  return ((m * (m - 1) / 2) % 2 == 0) ? 1 : -1;
}

QuadForm transform(const QuadForm& f, Int m11, Int m12, Int m21, Int m22) {
  require_binary(f);
  const Int a = f.a(), b = f.b(), c = f.c();
  const Int na = a * m11 * m11 + b * m11 * m21 + c * m21 * m21;
  const Int nc = a * m12 * m12 + b * m12 * m22 + c * m22 * m22;
  const Int nb = 2 * a * m11 * m12 + b * (m11 * m22 + m12 * m21) + 2 * c * m21 * m22;
  return QuadForm::binary(na, nb, nc);
}

QuadForm negate(const QuadForm& f) {
  QuadForm g = f;
  for (auto& v : g.hessian) v = -v;
  return g;
}

QuadForm reduce_binary(const QuadForm& f) {
  require_pd(f);
  Int a = f.a(), b = f.b(), c = f.c();
  for (;;) {
    if (c < a) {
      // (x, y) -> (-y, x)
      std::swap(a, c);
      b = -b;
      continue;
    }
    if (b > a || b <= -a) {
      // (x, y) -> (x + k y, y) with b + 2ak in (-a, a]
      Int k = (a - b) / (2 * a);
      if ((a - b) % (2 * a) < 0) --k;
      Int nb = b + 2 * a * k;
      if (nb <= -a) {
        ++k;
        nb += 2 * a;
      }
      c = a * k * k + b * k + c;
      b = nb;
      continue;
    }
    if (a == c && b < 0) b = -b;
    break;
  }
  return QuadForm::binary(a, b, c);
}

AutCounts automorphisms(const QuadForm& f) {
  require_pd(f);
  const Int a = f.a(), b = f.b(), c = f.c();
  const Int S = det_hessian(f);
  // f(x,y) >= S x^2 / (4c) and >= S y^2 / (4a).
  auto solutions = [&](Int m) {
    std::vector<std::pair<Int, Int>> out;
    const Int bx = isqrt_floor(4 * c * m / S), by = isqrt_floor(4 * a * m / S);
    for (Int x = -bx; x <= bx; ++x)
      for (Int y = -by; y <= by; ++y)
        if (f.eval(x, y) == m) out.emplace_back(x, y);
    return out;
  };
  const auto first = solutions(a);
  const auto second = solutions(c);
  AutCounts out;
  for (auto [x1, y1] : first)
    for (auto [x2, y2] : second) {
      const Int det = x1 * y2 - x2 * y1;
      if (det != 1 && det != -1) continue;
      const Int cross = 2 * a * x1 * x2 + b * (x1 * y2 + x2 * y1) + 2 * c * y1 * y2;
      if (cross != b) continue;
      ++out.full;
      if (det == 1) ++out.proper;
    }
  return out;
}

Int automorphism_count(const QuadForm& f) { return automorphisms(f).full; }
Int proper_automorphism_count(const QuadForm& f) { return automorphisms(f).proper; }

bool is_ambiguous(const QuadForm& f) {
  const auto aut = automorphisms(f);
  return aut.full > aut.proper;
}

std::vector<QuadForm> enumerate_classes(Int S) {
  if (S <= 0) throw std::invalid_argument("determinant must be positive");
  std::vector<QuadForm> out;
  const Int amax = isqrt_floor(S / 3);
  for (Int a = 1; a <= amax; ++a) {
    for (Int b = -a; b <= a; ++b) {
      const Int num = S + b * b;
      if (num % (4 * a) != 0) continue;
      const Int c = num / (4 * a);
      if (c < a) continue;
      if (b < 0 && (a == c || -b == a)) continue;
      out.push_back(QuadForm::binary(a, b, c));
    }
  }
  for (const auto& f : out)
    if (3 * f.a() * f.a() > S) throw std::logic_error("reduced form violates a <= sqrt(S/3)");
  std::sort(out.begin(), out.end(), [](const QuadForm& x, const QuadForm& y) {
    if (x.a() != y.a()) return x.a() < y.a();
    if (std::llabs(x.b()) != std::llabs(y.b())) return std::llabs(x.b()) < std::llabs(y.b());
    return x.b() > y.b();
  });
  return out;
}

std::vector<QuadForm> enumerate_primitive_classes(Int S) {
  auto all = enumerate_classes(S);
  std::vector<QuadForm> out;
  std::copy_if(all.begin(), all.end(), std::back_inserter(out), [](const QuadForm& f) { return is_primitive(f); });
  return out;
}

std::vector<Rational> diagonalize(const QuadForm& f) {
  const int n = f.n;
  std::vector<Rational> g(static_cast<size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g[i * n + j] = Rational(f.h(i, j), 2);
  for (auto& v : g) v.canonicalize();
  auto at = [&](int i, int j) -> Rational& { return g[static_cast<size_t>(i * n + j)]; };
  std::vector<Rational> d;
  for (int k = 0; k < n; ++k) {
    if (at(k, k) == 0) {
      int r = -1;
      for (int i = k + 1; i < n && r < 0; ++i)
        if (at(i, i) != 0) r = i;
      if (r >= 0) {
        for (int j = 0; j < n; ++j) std::swap(at(k, j), at(r, j));
        for (int i = 0; i < n; ++i) std::swap(at(i, k), at(i, r));
      } else {
        int s = -1;
        for (int i = k + 1; i < n && s < 0; ++i)
          if (at(k, i) != 0) s = i;
        if (s < 0) throw std::invalid_argument("degenerate form");
        // x_k -> x_k + x_s makes the pivot 2 g_ks.
        for (int j = 0; j < n; ++j) at(k, j) += at(s, j);
        for (int i = 0; i < n; ++i) at(i, k) += at(i, s);
      }
    }
    const Rational piv = at(k, k);
    d.push_back(piv);
    for (int i = k + 1; i < n; ++i) {
      const Rational fac = at(i, k) / piv;
      for (int j = k; j < n; ++j) at(i, j) -= fac * at(k, j);
    }
    for (int j = k + 1; j < n; ++j) at(k, j) = 0;
  }
  return d;
}

int hasse_of_diagonal(const std::vector<Rational>& d, Int place) {
  int c = 1;
  for (size_t i = 0; i < d.size(); ++i)
    for (size_t j = i + 1; j < d.size(); ++j) c *= hilbert_symbol(d[i], d[j], place);
  return c;
}

int hasse_invariant(const QuadForm& f, Int place) {
  if (place != kInfinity && !is_prime(place)) throw std::invalid_argument("place must be prime or infinity");
  return hasse_of_diagonal(diagonalize(f), place);
}

int scale_hasse(const Rational& u, const QuadForm& f, Int place) {
  if (u == 0) throw std::invalid_argument("scaling by zero");
  const Int n = f.n;
  const Rational dg = det_gram(f);
  if (dg == 0) throw std::invalid_argument("degenerate form");
  int r = hasse_invariant(f, place);
  if ((n * (n - 1) / 2) % 2 == 1) r *= hilbert_symbol(u, u, place);
  if ((n - 1) % 2 == 1) r *= hilbert_symbol(u, dg, place);
  return r;
}

}  // namespace bqm
