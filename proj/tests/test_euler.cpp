#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bqmass/euler.hpp"
#include "bqmass/mass.hpp"
#include "oracles.hpp"

using namespace bqm;

namespace {

Polynomial poly(std::vector<Rational> c) { return Polynomial(std::move(c)); }

std::vector<Rational> R(std::initializer_list<Rational> v) { return std::vector<Rational>(v); }

std::vector<Int> units_at(Int p) { return p == 2 ? std::vector<Int>{1, 3, 5, 7} : std::vector<Int>{1, least_nonresidue(p)}; }

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const auto a = poly(R({1, 1}));
  const auto b = poly(R({1, -1}));
  CHECK((a * b) == poly(R({1, 0, -1})));
  CHECK((a + b) == poly(R({2})));
  CHECK((a - a).is_zero());
  CHECK((a - a).degree() == -1);
  CHECK(a.scaled(Rational(1, 2)) == poly(R({Rational(1, 2), Rational(1, 2)})));
  CHECK(a.eval(Rational(1, 3)) == Rational(4, 3));

  Polynomial q, r;
  Polynomial::divmod(poly(R({5, 0, 0, 1})), poly(R({1, 1})), q, r);
  CHECK(q == poly(R({1, -1, 1})));
  CHECK(r == poly(R({4})));
  CHECK_THROWS(Polynomial::divmod(a, Polynomial(), q, r));

  const auto g = Polynomial::gcd(poly(R({2, -3, 1})), poly(R({-3, 2, 1})));  // (x-1)(x-2), (x-1)(x+3)
  CHECK(g.degree() == 1);
  CHECK(g.eval(1) == 0);
  CHECK(Polynomial::monomial(3, 2) == poly(R({0, 0, 3})));
}

TEST_CASE("rational functions") {
  const RationalFunction f(poly(R({-1, 0, 1})), poly(R({-1, 1})));
  CHECK(f.num() == poly(R({1, 1})));
  CHECK(f.den() == poly(R({1})));
  const RationalFunction geo(poly(R({1})), poly(R({1, Rational(-1, 2)})));
  const auto s = geo.series(6);
  for (int i = 0; i < 6; ++i) CHECK(s[i] == Rational(1, 1 << i));
  CHECK(geo.eval(1) == 2);
  CHECK((geo * RationalFunction(poly(R({1, Rational(-1, 2)})), poly(R({1})))) == RationalFunction::constant(1));
  CHECK((geo - geo).is_zero());
  CHECK((geo / geo) == RationalFunction::constant(1));
  // Denominator normalized to constant term 1.
  const RationalFunction h(poly(R({2})), poly(R({4, -2})));
  CHECK(h.den().coeff(0) == 1);
  CHECK(h.series(3) == R({Rational(1, 2), Rational(1, 4), Rational(1, 8)}));
  const auto sum = geo + RationalFunction::constant(1);
  CHECK(sum.series(2) == R({2, Rational(1, 2)}));
}

TEST_CASE("coefficient pipeline against brute-force local genera") {
  // A = sum over genera of beta_G^-1 / beta_gen^-1, B the same weighted by c_p,
  // with genera, densities and Hasse invariants all from the oracles.
  for (Int p : {2, 3, 5})
    for (int nu = 0; nu <= (p == 2 ? 4 : 2); ++nu)
      for (Int u : units_at(p)) {
        const Rational gen = (p == 2 ? Rational(2) : Rational(1)) / gamma_factor(u, p);
        Rational A = 0, B = 0;
        for (const auto& f : oracle::local_genera(p, nu, u, 9)) {
          const int k = p == 2 ? nu + 3 : nu + 1;
          const Rational beta_inv = (p == 2 ? Rational(4) : Rational(2)) / oracle::alpha(f, p, k);
          A += beta_inv / gen;
          B += oracle::hasse(f, p) * beta_inv / gen;
        }
        A.canonicalize();
        B.canonicalize();
        CHECK_MESSAGE(a_coeff(p, u, nu) == A, "A p=" << p << " nu=" << nu << " u=" << u);
        CHECK_MESSAGE(b_coeff(p, u, nu) == B, "B p=" << p << " nu=" << nu << " u=" << u);
      }
}

TEST_CASE("frozen coefficients") {
  CHECK(euler_coeffs(5, 1, Which::B, 6) == R({1, 0, Rational(4, 125), 0, Rational(4, 3125), 0}));
  CHECK(euler_coeffs(2, 3, Which::B, 4) == R({1, 0, Rational(3, 8), 0}));
  CHECK(euler_coeffs(2, 3, Which::A, 4) == R({1, 0, Rational(3, 8), Rational(3, 16)}));
  CHECK(euler_coeffs(2, 1, Which::A, 3) == R({0, 0, Rational(1, 8)}));
  CHECK(euler_coeffs(3, 2, Which::A, 3) == R({1, Rational(2, 9), Rational(2, 27)}));
  CHECK(euler_coeff(3, 1, 2, Which::B) == b_coeff(3, 1, 2));
  CHECK(normalized_mass_sum(3, LocalSquareClass::make(3, 1, 1), 1) + normalized_mass_sum(3, LocalSquareClass::make(3, 1, 1), -1) ==
        a_coeff(3, 1, 1));
}

TEST_CASE("closed forms reproduce the coefficient series") {
  for (Int p : {3, 5, 7, 11, 13, 17})
    for (Int u : units_at(p))
      for (Which w : {Which::A, Which::B})
        for (auto v : {ClosedFormVariant::Compact, ClosedFormVariant::Summed, ClosedFormVariant::Enumeration})
          CHECK(closed_form(p, u, w, v).series(12) == euler_coeffs(p, u, w, 12));
  for (Int u : {1, 3, 5, 7})
    for (Which w : {Which::A, Which::B})
      CHECK(closed_form(2, u, w, ClosedFormVariant::Enumeration).series(30) == euler_coeffs(2, u, w, 30));
  CHECK(closed_form(3, 1, Which::A).series(32) == euler_coeffs(3, 1, Which::A, 32));
  CHECK(closed_form(2, 7, Which::B, ClosedFormVariant::Enumeration).series(51) == euler_coeffs(2, 7, Which::B, 51));
  CHECK_THROWS_AS(euler_coeffs(2, 7, Which::B, 52), std::out_of_range);
  CHECK_THROWS_AS(euler_coeffs(17, 1, Which::A, 14), std::out_of_range);
  // The compact and summed forms at 2 do not.
  CHECK(closed_form(2, 3, Which::A, ClosedFormVariant::Compact).series(2) == R({1, Rational(5, 8)}));
  CHECK(closed_form(2, 3, Which::B, ClosedFormVariant::Compact).series(1) == R({-1}));
  CHECK(closed_form(2, 1, Which::A, ClosedFormVariant::Summed).series(1) == R({1}));
  CHECK(closed_form(2, 1, Which::B, ClosedFormVariant::Compact).is_zero());
  CHECK(variant_name(ClosedFormVariant::Summed) == "summed");
}

TEST_CASE("B-coefficients vanish outside square ideals") {
  for (Int p : {2, 3, 5, 7, 11})
    for (Int u : units_at(p))
      for (int nu = 0; nu <= 12; ++nu) {
        const bool live = nu % 2 == 0 && (p != 2 || u % 4 == 3);
        CHECK_MESSAGE((b_coeff(p, u, nu) != 0) == live, "p=" << p << " u=" << u << " nu=" << nu);
      }
  for (Int S = 1; S <= 2000; ++S) {
    const GlobalDeterminant det(S);
    Rational prod = 1;
    bool square_ideal = true;
    for (Int p : det.bad_primes()) {
      const auto sq = det.at(p);
      prod *= b_coeff(p, sq.unit_rep(), sq.val);
      square_ideal = square_ideal && sq.val % 2 == 0;
    }
    if (prod != 0) CHECK((square_ideal && det.at(2).unit % 4 == 3));
    CHECK(prod == 0);
  }
}

TEST_CASE("decomposition identity") {
  for (Int S = 1; S <= 400; ++S) {
    const auto rep = decomposition_check(S);
    REQUIRE_MESSAGE(rep.equal, "S=" << S << " " << to_string(rep.lhs) << " vs " << to_string(rep.rhs));
    if (S % 4 == 1 || S % 4 == 2) CHECK(rep.lhs == 0);
  }
  for (Int S : {Int{3}, Int{15}, Int{84}, Int{231}, Int{420}})
    for (int c3 : {1, -1})
      for (int c5 : {1, -1}) {
        const auto rep = decomposition_check(S, {{3, c3}, {5, c5}});
        CHECK_MESSAGE(rep.equal, "S=" << S << " c3=" << c3 << " c5=" << c5);
        CHECK(rep.C == c3 * c5);
      }
  // Constraining every bad prime leaves only K and the sign.
  const auto full = decomposition_check(15, {{2, 1}, {3, 1}, {5, 1}});
  CHECK(full.equal);
  CHECK(full.rhs == full.K);
  CHECK_THROWS(decomposition_check(15, {{4, 1}}));
  CHECK_THROWS(decomposition_check(15, {{3, 0}}));
}

TEST_CASE("sign-tuple identity") {
  for (int t = 1; t <= 4; ++t)
    for (int c : {1, -1}) CHECK(sign_tuple_identity(t, 2, c, 1000 + t, 50));
  CHECK_THROWS(sign_tuple_identity(5, 2, 1, 1));
}
