#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bqmass/arith.hpp"
#include "oracles.hpp"

using namespace bqm;

namespace {

std::vector<Int> sieve(Int n) {
  std::vector<char> comp(n + 1, 0);
  std::vector<Int> ps;
  for (Int i = 2; i <= n; ++i) {
    if (comp[i]) continue;
    ps.push_back(i);
    for (Int j = i * i; j <= n; j += i) comp[j] = 1;
  }
  return ps;
}

}  // namespace

TEST_CASE("primality and factorization") {
  const auto ps = sieve(2000);
  for (Int n = -5; n <= 2000; ++n) {
    const bool expect = std::binary_search(ps.begin(), ps.end(), n);
    CHECK_MESSAGE(is_prime(n) == expect, n);
  }
  CHECK(is_prime(1000000007));
  CHECK_FALSE(is_prime(1000000007LL * 3));
  for (Int n : {Int{1}, Int{2}, Int{360}, Int{9973}, Int{1024}, Int{999999999989}, Int{600851475143}}) {
    Int prod = 1;
    for (auto [p, e] : factorize(n)) {
      CHECK(is_prime(p));
      prod *= ipow(p, e);
    }
    CHECK(prod == n);
  }
  CHECK_THROWS(factorize(0));
}

TEST_CASE("valuations") {
  CHECK(valuation(Int{48}, 2) == 4);
  CHECK(valuation(Int{-81}, 3) == 4);
  CHECK(valuation(Int{7}, 5) == 0);
  CHECK(valuation(Rational(9, 40), 2) == -3);
  CHECK(valuation(Rational(9, 40), 3) == 2);
  CHECK(valuation(mpz_class("340282366920938463463374607431768211456"), 2) == 128);
}

TEST_CASE("legendre agrees with Euler's criterion") {
  for (Int p : sieve(100)) {
    if (p == 2) continue;
    for (Int a = -2 * p; a <= 2 * p; ++a) CHECK(legendre(a, p) == oracle::legendre(a, p));
  }
}

TEST_CASE("kronecker symbol") {
  // Multiplicative in the top argument, and periodic mod |D| for discriminants.
  for (Int D : {Int{-3}, Int{-4}, Int{-7}, Int{-8}, Int{-15}, Int{-20}, Int{-23}, Int{-24}}) {
    for (Int n = 1; n < 200; ++n) CHECK(kronecker(D, n) == kronecker(D, n - D));
    for (Int m = 1; m < 30; ++m)
      for (Int n = 1; n < 30; ++n) CHECK(kronecker(D, m * n) == kronecker(D, m) * kronecker(D, n));
  }
  CHECK(kronecker(-4, 3) == -1);
  CHECK(kronecker(-3, 2) == -1);
  CHECK(kronecker(-7, 2) == 1);
  CHECK(kronecker(5, 2) == -1);
  CHECK(kronecker(-23, 2) == 1);
}

TEST_CASE("least nonresidue") {
  for (Int p : sieve(200)) {
    if (p == 2) continue;
    const Int n = least_nonresidue(p);
    CHECK(oracle::legendre(n, p) == -1);
    for (Int a = 2; a < n; ++a) CHECK(oracle::legendre(a, p) == 1);
  }
}

TEST_CASE("hilbert symbol agrees with solvability search") {
  for (Int p : {Int{2}, Int{3}, Int{5}, Int{7}}) {
    for (Int a = -20; a <= 20; ++a)
      for (Int b = -20; b <= 20; ++b) {
        if (a == 0 || b == 0) continue;
        const int got = hilbert_symbol(Rational(a), Rational(b), p);
        REQUIRE_MESSAGE(got == oracle::hilbert(a, b, p), "(" << a << "," << b << ")_" << p);
      }
  }
  CHECK(hilbert_symbol(-1, -1, kInfinity) == -1);
  CHECK(hilbert_symbol(-1, 3, kInfinity) == 1);
  CHECK(hilbert_symbol(Rational(2, 9), Rational(-7, 5), 2) == oracle::hilbert(Rational(2, 9), Rational(-7, 5), 2));
}

TEST_CASE("hilbert product formula") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Int> pick(-400, 400);
  for (int trial = 0; trial < 300; ++trial) {
    Int a = 0, b = 0;
    while (a == 0) a = pick(rng);
    while (b == 0) b = pick(rng);
    int prod = hilbert_symbol(a, b, kInfinity);
    std::vector<Int> places{2};
    for (Int m : {a, b})
      for (auto [p, e] : factorize(std::abs(m)))
        if (std::find(places.begin(), places.end(), p) == places.end()) places.push_back(p);
    for (Int p : places) prod *= hilbert_symbol(a, b, p);
    CHECK_MESSAGE(prod == 1, a << " " << b);
  }
}

TEST_CASE("squareclasses") {
  const auto s = LocalSquareClass::of(Int{-12}, 2);
  CHECK(s.val == 2);
  CHECK(s.unit == 5);
  const auto t = LocalSquareClass::of(Rational(10, 3), 5);
  CHECK(t.val == 1);
  CHECK(t.unit == oracle::legendre(6, 5));
  CHECK((LocalSquareClass::of(Int{6}, 3) * LocalSquareClass::of(Int{15}, 3)) == LocalSquareClass::of(Int{90}, 3));
  CHECK((LocalSquareClass::of(Int{3}, 2) * LocalSquareClass::of(Int{7}, 2)) == LocalSquareClass::of(Int{21}, 2));
  CHECK(LocalSquareClass::make(7, 0, 3).unit_rep() == 3);
  CHECK(LocalSquareClass::make(2, 3, 13).unit == 5);

  const GlobalDeterminant d(720);
  CHECK(d.bad_primes() == std::vector<Int>{2, 3, 5});
  CHECK(d.at(2).val == 4);
  CHECK(d.at(2).unit == 45 % 8);
  CHECK(d.at(7).val == 0);
  CHECK(GlobalDeterminant(36).ideal_is_square());
  CHECK_FALSE(GlobalDeterminant(12).ideal_is_square());
  CHECK(GlobalDeterminant(23).bad_primes() == std::vector<Int>{2, 23});
}

TEST_CASE("chi and gamma") {
  CHECK(chi(3, 2) == -1);
  CHECK(chi(1, 2) == 1);
  CHECK(chi(5, 2) == -1);
  CHECK(chi(7, 2) == 1);
  CHECK(chi(1, 5) == 1);
  CHECK(chi(2, 5) == -1);
  CHECK(gamma_factor(3, 2) == Rational(3, 2));
  CHECK(gamma_factor(1, 3) == Rational(4, 3));
  CHECK(gamma_factor(2, 5) == Rational(6, 5));
}

TEST_CASE("rational formatting") {
  CHECK(to_string(Rational(3)) == "3/1");
  CHECK(to_string(Rational(0)) == "0/1");
  CHECK(to_string(Rational(6, -4)) == "-3/2");
  CHECK(ipow(3, 4) == 81);
}
