#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "bqmass/forms.hpp"
#include "oracles.hpp"

using namespace bqm;

namespace {

std::array<Int, 4> random_sl2(std::mt19937_64& rng, int steps) {
  // Product of elementary matrices S and T^{+-k}.
  std::array<Int, 4> m{1, 0, 0, 1};
  std::uniform_int_distribution<int> k(-2, 2), coin(0, 1);
  for (int i = 0; i < steps; ++i) {
    std::array<Int, 4> e = coin(rng) ? std::array<Int, 4>{0, -1, 1, 0} : std::array<Int, 4>{1, k(rng), 0, 1};
    m = {m[0] * e[0] + m[1] * e[2], m[0] * e[1] + m[1] * e[3], m[2] * e[0] + m[3] * e[2], m[2] * e[1] + m[3] * e[3]};
  }
  return m;
}

}  // namespace

TEST_CASE("basic invariants") {
  const auto f = QuadForm::binary(2, 1, 3);
  CHECK(det_hessian(f) == 23);
  CHECK(det_gram(f) == Rational(23, 4));
  CHECK(f.to_string() == "[2,1,3]");
  CHECK(f.eval(1, -1) == 4);
  CHECK(is_primitive(f));
  CHECK_FALSE(is_primitive(QuadForm::binary(2, 2, 2)));
  CHECK(is_positive_definite(f));
  CHECK_FALSE(is_positive_definite(QuadForm::binary(1, 3, 1)));
  CHECK(signature(negate(f)).minus == 2);
  CHECK(epsilon_inf(signature(f)) == 1);
  const auto g = QuadForm::from_hessian(3, {2, 1, 0, 1, 2, 1, 0, 1, 2});
  CHECK(det_hessian(g) == 4);
  CHECK_THROWS(QuadForm::from_hessian(2, {1, 0, 0, 2}));
}

TEST_CASE("transform composes as f(Mx)") {
  const auto f = QuadForm::binary(3, -2, 5);
  const auto g = transform(f, 2, 1, 1, 1);
  for (Int x = -3; x <= 3; ++x)
    for (Int y = -3; y <= 3; ++y) CHECK(g.eval(x, y) == f.eval(2 * x + y, x + y));
}

TEST_CASE("reduction recovers the reduced form from random SL2 images") {
  std::mt19937_64 rng(11);
  for (Int S = 3; S <= 150; ++S)
    for (const auto& g : oracle::classes(S, false)) {
      for (int t = 0; t < 4; ++t) {
        const auto m = random_sl2(rng, 6);
        const auto f = transform(g, m[0], m[1], m[2], m[3]);
        REQUIRE_MESSAGE(reduce_binary(f) == g, f.to_string() << " from " << g.to_string());
      }
      // The matrix search finds the same representative.
      const auto f = transform(g, 1, 1, 0, 1);
      CHECK(oracle::reduce(f) == g);
    }
}

TEST_CASE("class enumeration matches the scanning oracle") {
  for (Int S = 1; S <= 400; ++S) {
    auto mine = enumerate_classes(S);
    auto ref = oracle::classes(S, false);
    auto key = [](const QuadForm& f) { return std::array<Int, 3>{f.a(), f.b(), f.c()}; };
    std::set<std::array<Int, 3>> a, b;
    for (const auto& f : mine) a.insert(key(f));
    for (const auto& f : ref) b.insert(key(f));
    REQUIRE_MESSAGE(a == b, "S=" << S);
    CHECK(a.size() == mine.size());
    for (size_t i = 1; i < mine.size(); ++i) {
      const auto &x = mine[i - 1], &y = mine[i];
      const bool ordered = x.a() < y.a() || (x.a() == y.a() && (std::abs(x.b()) < std::abs(y.b()) ||
                                                                (std::abs(x.b()) == std::abs(y.b()) && x.b() > y.b())));
      CHECK(ordered);
    }
    for (const auto& f : enumerate_primitive_classes(S)) CHECK(is_primitive(f));
    CHECK(enumerate_primitive_classes(S).size() == oracle::classes(S, true).size());
  }
  // Small class numbers of -S.
  CHECK(enumerate_primitive_classes(3).size() == 1);
  CHECK(enumerate_primitive_classes(23).size() == 3);
  CHECK(enumerate_primitive_classes(56).size() == 4);
  CHECK(enumerate_primitive_classes(163).size() == 1);
  CHECK(enumerate_classes(12).size() == 2);
}

TEST_CASE("automorphism groups match matrix search") {
  for (Int S = 3; S <= 300; ++S)
    for (const auto& f : enumerate_classes(S)) {
      const auto ref = oracle::automorphisms(f);
      const auto got = automorphisms(f);
      REQUIRE_MESSAGE(got.full == ref.full, f.to_string());
      REQUIRE_MESSAGE(got.proper == ref.proper, f.to_string());
      CHECK(is_ambiguous(f) == (got.full == 2 * got.proper));
    }
  CHECK(automorphism_count(QuadForm::binary(1, 1, 1)) == 12);
  CHECK(proper_automorphism_count(QuadForm::binary(1, 1, 1)) == 6);
  CHECK(automorphism_count(QuadForm::binary(1, 0, 1)) == 8);
  CHECK(automorphism_count(QuadForm::binary(1, 1, 6)) == 4);
  CHECK(automorphism_count(QuadForm::binary(2, 1, 3)) == 2);
  CHECK_FALSE(is_ambiguous(QuadForm::binary(2, 1, 3)));
  // Non-reduced input.
  CHECK(automorphism_count(transform(QuadForm::binary(1, 1, 1), 3, 1, 2, 1)) == 12);
}

TEST_CASE("diagonalization preserves the determinant") {
  for (Int S = 3; S <= 200; ++S)
    for (const auto& f : enumerate_classes(S)) {
      const auto d = diagonalize(f);
      REQUIRE(d.size() == 2);
      CHECK(d[0] * d[1] == det_gram(f));
      CHECK(d[0] == f.a());
    }
  const auto g = QuadForm::from_hessian(3, {0, 1, 0, 1, 0, 0, 0, 0, 2});
  const auto d = diagonalize(g);
  Rational prod = 1;
  for (const auto& x : d) prod *= x;
  CHECK(prod == det_gram(g));
}

TEST_CASE("hasse invariants satisfy the product formula") {
  for (Int S = 3; S <= 400; ++S)
    for (const auto& f : enumerate_classes(S)) {
      int prod = hasse_invariant(f, kInfinity);
      for (Int p : GlobalDeterminant(S).bad_primes()) prod *= hasse_invariant(f, p);
      CHECK_MESSAGE(prod == 1, f.to_string());
      // Good odd primes carry c = +1.
      for (Int p : {Int{3}, Int{5}, Int{7}, Int{11}})
        if (S % p) CHECK(hasse_invariant(f, p) == 1);
    }
  // Against Hilbert symbols of the diagonal entries, computed independently.
  for (Int S = 3; S <= 120; ++S)
    for (const auto& f : enumerate_classes(S)) {
      const auto d = diagonalize(f);
      for (Int p : {Int{2}, Int{3}, Int{5}, Int{7}}) CHECK(hasse_invariant(f, p) == oracle::hilbert(d[0], d[1], p));
    }
  CHECK(hasse_invariant(QuadForm::binary(1, 1, 1), 2) == 1);
  CHECK(hasse_invariant(QuadForm::binary(1, 1, 2), 2) == 1);
  CHECK(hasse_invariant(QuadForm::binary(1, 0, 1), 2) == 1);
  CHECK(hasse_invariant(QuadForm::binary(3, 0, 3), 2) == -1);
  CHECK(hasse_invariant(QuadForm::binary(1, 0, 1), kInfinity) == 1);
  CHECK(hasse_invariant(negate(QuadForm::binary(1, 0, 1)), kInfinity) == -1);
}

TEST_CASE("hasse scaling law agrees with direct recomputation") {
  for (Int S = 3; S <= 150; ++S)
    for (const auto& f : enumerate_classes(S))
      for (Int u : {Int{-3}, Int{-1}, Int{2}, Int{3}, Int{5}, Int{6}, Int{7}, Int{10}})
        for (Int p : {Int{2}, Int{3}, Int{5}, Int{7}, kInfinity}) {
          const auto g = QuadForm::binary(u * f.a(), u * f.b(), u * f.c());
          REQUIRE_MESSAGE(scale_hasse(u, f, p) == hasse_invariant(g, p), f.to_string() << " u=" << u << " p=" << p);
        }
  // Ternary check of the general law.
  const auto t = QuadForm::from_hessian(3, {2, 1, 0, 1, 4, 1, 0, 1, 6});
  for (Int u : {Int{-1}, Int{2}, Int{3}, Int{5}})
    for (Int p : {Int{2}, Int{3}, Int{5}}) {
      std::vector<Int> h = t.hessian;
      for (auto& x : h) x *= u;
      CHECK(scale_hasse(u, t, p) == hasse_invariant(QuadForm::from_hessian(3, h), p));
    }
}
