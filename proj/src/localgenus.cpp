#include "bqmass/localgenus.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace bqm {

namespace {

unsigned odd_value_residues(const QuadForm& f) {
  unsigned mask = 0;
  for (Int x = 0; x < 8; ++x)
    for (Int y = 0; y < 8; ++y) {
      const Int v = ((f.eval(x, y) % 8) + 8) % 8;
      if (v % 2 == 1) mask |= 1u << v;
    }
  return mask;
}

auto sort_key(const LocalGenusSymbol& s) {
  std::vector<int> blocks;
  for (const auto& b : s.blocks) {
    blocks.push_back(b.scale);
    blocks.push_back(b.dim);
    blocks.push_back(b.unit);
  }
  return std::make_tuple(-s.hasse, s.nu, s.det_unit, static_cast<int>(s.shape), s.odd_residues, blocks);
}

}  // namespace

std::string shape_name(Shape2 s) {
  switch (s) {
    case Shape2::None: return "-";
    case Shape2::TypeII: return "(2bar)";
    case Shape2::I2: return "(2)";
    case Shape2::OneOne: return "(1,1)";
    case Shape2::OneSemiOne: return "(1;1)";
    case Shape2::OneFarOne: return "(1::1)";
  }
  return "?";
}

Shape2 shape_for_nu(int nu) {
  switch (nu) {
    case 0: return Shape2::TypeII;
    case 1: return Shape2::None;
    case 2: return Shape2::I2;
    case 3: return Shape2::OneOne;
    case 4: return Shape2::OneSemiOne;
    default: return nu >= 5 ? Shape2::OneFarOne : Shape2::None;
  }
}

bool LocalGenusSymbol::operator==(const LocalGenusSymbol& o) const {
  return p == o.p && nu == o.nu && det_unit == o.det_unit && blocks == o.blocks && shape == o.shape &&
         odd_residues == o.odd_residues && hasse == o.hasse;
}

std::string LocalGenusSymbol::to_string() const {
  std::string s = "p=" + std::to_string(p) + " nu=" + std::to_string(nu);
  if (p == 2) {
    s += " " + shape_name(shape) + " u=" + std::to_string(det_unit);
    if (nu >= 2) {
      s += " R={";
      bool first = true;
      for (int r = 1; r < 8; r += 2)
        if (odd_residues & (1u << r)) {
          s += (first ? "" : ",") + std::to_string(r);
          first = false;
        }
      s += "}";
    }
  } else {
    for (const auto& b : blocks)
      s += " [" + std::to_string(b.scale) + "," + std::to_string(b.dim) + "," + (b.unit == 1 ? "QR" : "NQR") + "]";
  }
  return s + " c=" + (hasse == 1 ? "+1" : "-1");
}

LocalGenusSymbol jordan_split_odd(const QuadForm& f, Int p) {
  if (f.n != 2) throw std::invalid_argument("binary form expected");
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("odd prime expected");
  const Int S = det_hessian(f);
  if (S == 0) throw std::invalid_argument("degenerate form");
  LocalGenusSymbol g;
  g.p = p;
  g.nu = valuation(S, p);
  const auto sq = LocalSquareClass::of(S, p);
  g.det_unit = sq.unit;
  g.hasse = hasse_invariant(f, p);
  if (g.nu == 0) {
    g.blocks.push_back({0, 2, g.det_unit});
    return g;
  }
  // Scale of the first block is the p-content of the form.
  int k = 0;
  Int a = f.a(), b = f.b(), c = f.c();
  while (a % p == 0 && b % p == 0 && c % p == 0) {
    a /= p;
    b /= p;
    c /= p;
    ++k;
  }
  const QuadForm h = QuadForm::binary(a, b, c);
  Int u1 = 0;
  if (a % p != 0) u1 = a;
  else if (c % p != 0) u1 = c;
  else u1 = a + b + c;
  // h ~ u1 X^2 + (det_G / u1) Y^2.
  const Rational rest = det_gram(h) / Rational(u1);
  const auto rest_sq = LocalSquareClass::of(rest, p);
  if (rest_sq.val == 0) {
    g.blocks.push_back({k, 2, g.det_unit});
    return g;
  }
  g.blocks.push_back({k, 1, legendre(u1, p)});
  g.blocks.push_back({k + rest_sq.val, 1, rest_sq.unit});
  return g;
}

LocalGenusSymbol genus_symbol_2(const QuadForm& f) {
  if (f.n != 2) throw std::invalid_argument("binary form expected");
  if (f.a() % 2 == 0 && f.b() % 2 == 0 && f.c() % 2 == 0)
    throw std::invalid_argument("form with odd content expected at 2");
  const Int S = det_hessian(f);
  if (S == 0) throw std::invalid_argument("degenerate form");
  LocalGenusSymbol g;
  g.p = 2;
  g.nu = valuation(S, 2);
  if (g.nu == 1) throw std::logic_error("primitive binary form with ord_2(det_H) = 1");
  g.det_unit = LocalSquareClass::of(S, 2).unit;
  g.shape = shape_for_nu(g.nu);
  g.hasse = hasse_invariant(f, 2);
  if (g.nu >= 2) g.odd_residues = odd_value_residues(f);
  return g;
}

LocalGenusSymbol local_symbol(const QuadForm& f, Int p) { return p == 2 ? genus_symbol_2(f) : jordan_split_odd(f, p); }

bool same_genus(const QuadForm& f, const QuadForm& g) {
  const Int S = det_hessian(f);
  if (S != det_hessian(g)) throw std::invalid_argument("same_genus needs equal determinants");
  if (S <= 0) throw std::invalid_argument("positive-definite forms expected");
  if (signature(f).plus != signature(g).plus) return false;
  for (Int p : GlobalDeterminant(S).bad_primes())
    if (!(local_symbol(f, p) == local_symbol(g, p))) return false;
  return true;
}

std::vector<LocalGenus> enumerate_local_genera(Int p, const LocalSquareClass& Sp) {
  if (Sp.p != p) throw std::invalid_argument("squareclass taken at a different prime");
  if (Sp.val < 0) throw std::invalid_argument("negative valuation");
  std::vector<QuadForm> reps;
  const int nu = Sp.val;
  Int scale = 1;
  for (int i = 0; i < nu; ++i) {
    if (scale > kMaxLocalScale / p) throw std::out_of_range("p^nu too large for local genus representatives");
    scale *= p;
  }
  if (p == 2) {
    if (nu == 0) {
      if (Sp.unit == 3) reps.push_back(QuadForm::binary(1, 1, 1));
      if (Sp.unit == 7) reps.push_back(QuadForm::binary(1, 1, 2));
    } else if (nu >= 2) {
      const Int scale = ipow(2, nu - 2);
      for (Int u1 : {1, 3, 5, 7}) {
        const Int u2 = (u1 * Sp.unit) % 8;
        reps.push_back(QuadForm::binary(u1, 0, scale * u2));
      }
    }
  } else {
    const Int n = least_nonresidue(p);
    const Int pnu = ipow(p, nu);
    for (Int u1 : {Int{1}, n}) {
      const Int u2 = (legendre(u1, p) * Sp.unit == 1) ? 1 : n;
      reps.push_back(QuadForm::binary(u1, 0, pnu * u2));
    }
  }
  std::vector<LocalGenus> out;
  for (const auto& r : reps) {
    auto sym = local_symbol(r, p);
    bool seen = std::any_of(out.begin(), out.end(), [&](const LocalGenus& g) { return g.symbol == sym; });
    if (!seen) out.push_back({sym, r});
  }
  std::sort(out.begin(), out.end(),
            [](const LocalGenus& x, const LocalGenus& y) { return sort_key(x.symbol) < sort_key(y.symbol); });
  return out;
}

std::vector<GenusPart> partition_genera(Int S, const std::vector<QuadForm>& classes) {
  const auto primes = GlobalDeterminant(S).bad_primes();
  std::vector<GenusPart> parts;
  for (size_t i = 0; i < classes.size(); ++i) {
    std::vector<LocalGenusSymbol> syms;
    for (Int p : primes) syms.push_back(local_symbol(classes[i], p));
    auto it = std::find_if(parts.begin(), parts.end(), [&](const GenusPart& g) { return g.symbols == syms; });
    if (it == parts.end())
      parts.push_back({syms, {i}});
    else
      it->members.push_back(i);
  }
  return parts;
}

}  // namespace bqm
