#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <iostream>
#include <map>
#include <random>

#include "quintic/f5linalg.hpp"
#include "quintic/localization.hpp"

using namespace quintic;

namespace {

Cyclo rand_nonzero(std::mt19937& rng, int span = 15) {
  std::uniform_int_distribution<int> d(-span, span);
  for (;;) {
    Cyclo a(d(rng), d(rng), d(rng), d(rng));
    if (!a.is_zero()) return a;
  }
}

std::vector<uint8_t> dig(const Pi5Expansion& e) { return e.digits; }

F5Vec exps(const UnitClass& c) { return c.exponents; }

UnitClass cls5(long n) { return class_at_5(Cyclo(n)); }

uint8_t addm(int a, int b) { return (uint8_t)(((a + b) % 5 + 5) % 5); }

F5Vec vsum(const F5Vec& a, const F5Vec& b) {
  F5Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = addm(a[i], b[i]);
  return r;
}

}  // namespace

TEST_CASE("expansions of 5, sqrt5, uF match the fixed conventions") {
  auto e5 = pi5_expand(Cyclo(5), 11);
  CHECK(e5.valuation == 4);
  CHECK(dig(e5) == std::vector<uint8_t>{4, 3, 3, 4, 1, 3, 4});

  auto es = pi5_expand(Cyclo::sqrt5(), 7);
  CHECK(es.valuation == 2);
  CHECK(dig(es) == std::vector<uint8_t>{2, 2, 1, 0, 0});

  auto eu = pi5_expand(Cyclo::unit_F(), 6);
  CHECK(eu.valuation == 0);
  CHECK(dig(eu) == std::vector<uint8_t>{2, 0, 4, 4, 0, 1});

  auto epi = pi5_expand(Cyclo(1) - Cyclo::zeta(), 8);
  CHECK(epi.valuation == 1);
  CHECK(dig(epi) == std::vector<uint8_t>{1, 0, 0, 0, 0, 0, 0});
  CHECK_THROWS_AS(pi5_expand(Cyclo(0), 8), domain_error);
}

TEST_CASE("teichmueller expansions of zeta4 and zeta4^3") {
  Local5 R(8);
  auto z4 = R.teichmueller(R.from_int(2));
  CHECK(R.digits(z4, 6) == std::vector<uint8_t>{2, 0, 0, 0, 4, 3});
  auto z43 = R.pow(z4, 3);
  CHECK(R.digits(z43, 6) == std::vector<uint8_t>{3, 0, 0, 0, 2, 4});
}

TEST_CASE("residue table mod 25 for rational integers") {
  auto row = [](int e, int h) {
    return unit_class_v5({0, 0, 0, 0, (uint8_t)e, (uint8_t)h});
  };
  std::map<int, UnitClass> want;
  for (int n : {1, 7, 18, 24}) want[n] = row(0, 0);
  for (int n : {3, 4, 21, 22}) want[n] = row(1, 2);
  for (int n : {9, 12, 13, 16}) want[n] = row(2, 4);
  for (int n : {2, 11, 14, 23}) want[n] = row(3, 1);
  for (int n : {6, 8, 17, 19}) want[n] = row(4, 3);
  for (auto& [n, w] : want) {
    CHECK(cls5(n) == w);
    CHECK(cls5(n + 25) == w);
    CHECK(cls5(n - 50) == w);
  }
}

TEST_CASE("class_at_5 of the K(S,5) unit generators") {
  // canonical-frame values; the acceptance suite compares these with the
  // printed fixture and documents the one slot that disagrees
  CHECK(exps(class_at_5(Cyclo::zeta())) == F5Vec{0, 4, 4, 0, 4, 0});
  CHECK(exps(class_at_5(Cyclo(1) + Cyclo::zeta())) == F5Vec{0, 2, 4, 2, 4, 0});
  CHECK(exps(class_at_5(Cyclo(2))) == F5Vec{0, 0, 0, 0, 3, 1});
  CHECK(exps(class_at_5(Cyclo(1) - Cyclo::zeta())) == F5Vec{1, 0, 0, 0, 0, 0});
  // u_F = zeta^2 (1 + zeta) as classes
  CHECK(exps(class_at_5(Cyclo::unit_F())) == F5Vec{0, 0, 2, 2, 2, 0});
}

TEST_CASE("homomorphism, fifth powers and U^(6) triviality at 5") {
  std::mt19937 rng(23);
  for (int i = 0; i < 30; ++i) {
    Cyclo a = rand_nonzero(rng), b = rand_nonzero(rng);
    CHECK(exps(class_at_5(a * b)) == vsum(exps(class_at_5(a)), exps(class_at_5(b))));
    CHECK(exps(class_at_5(a.pow(5))) == F5Vec{0, 0, 0, 0, 0, 0});
  }
  Cyclo pi6 = (Cyclo(1) - Cyclo::zeta()).pow(6);
  for (int i = 0; i < 10; ++i) {
    Cyclo u = rand_nonzero(rng, 8);
    CHECK(exps(class_at_5(Cyclo(1) + pi6 * u)) == F5Vec{0, 0, 0, 0, 0, 0});
  }
}

TEST_CASE("galois action on classes at 5") {
  auto M = galois_matrix_at_5();
  CHECK(M[1] == std::array<uint8_t, 6>{0, 2, 3, 4, 1, 1});
  CHECK(M[2] == std::array<uint8_t, 6>{0, 0, 4, 1, 0, 1});
  CHECK(M[3] == std::array<uint8_t, 6>{0, 0, 0, 3, 3, 1});
  CHECK(M[4] == std::array<uint8_t, 6>{0, 0, 0, 0, 1, 3});
  CHECK(M[5] == std::array<uint8_t, 6>{0, 0, 0, 0, 0, 2});
  std::mt19937 rng(41);
  for (int i = 0; i < 25; ++i) {
    Cyclo a = rand_nonzero(rng);
    F5Vec lhs = exps(class_at_5(a.galois(2)));
    F5Vec v = exps(class_at_5(a));
    F5Vec rhs(6, 0);
    for (int r = 0; r < 6; ++r)
      for (int c = 0; c < 6; ++c) rhs[c] = addm(rhs[c], v[r] * M[r][c]);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("sigma eigenvectors") {
  auto M = galois_matrix_at_5();
  auto apply = [&](const F5Vec& v) {
    F5Vec r(6, 0);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) r[j] = addm(r[j], v[i] * M[i][j]);
    return r;
  };
  auto scaled = [](const F5Vec& v, int k) {
    F5Vec r(6, 0);
    for (int i = 0; i < 6; ++i) r[i] = addm(0, v[i] * k);
    return r;
  };
  F5Vec eh2 = {0, 0, 0, 0, 1, 2};    // eps eta^2: eigenvalue 1
  F5Vec gde = {0, 0, 1, 1, 1, 0};    // gamma delta eps: eigenvalue 4
  F5Vec eta = {0, 0, 0, 0, 0, 1};    // eigenvalue 2
  F5Vec bge = {0, 1, 1, 0, 1, 0};    // beta gamma eps: eigenvalue 2
  F5Vec de4h3 = {0, 0, 0, 1, 4, 3};  // delta eps^4 eta^3: eigenvalue 3
  CHECK(apply(eh2) == eh2);
  CHECK(apply(gde) == scaled(gde, 4));
  CHECK(apply(eta) == scaled(eta, 2));
  CHECK(apply(bge) == scaled(bge, 2));
  CHECK(apply(de4h3) == scaled(de4h3, 3));
}

TEST_CASE("split-two generator table at 5") {
  // image of a + b sqrt5 over p = 4 (mod 5): gamma^cb delta^cb eps^{cb+s}
  // eta^t with c = c(a mod 5) and (s, t) a function of p mod 25.  Two
  // printed cells break the column pattern; the generic computation follows
  // the pattern, so the pattern is asserted and the printed cells logged.
  auto cmap = [](int ar) { return ar == 2 ? 1 : ar == 4 ? 3 : ar == 3 ? 4 : 2; };
  auto st = [](long pr) -> std::pair<int, int> {
    switch (pr) {
      case 4: return {3, 1};
      case 9: return {1, 2};
      case 14: return {4, 3};
      case 19: return {2, 4};
      default: return {0, 0};  // 24
    }
  };
  auto res5 = [](const mpq_class& q) {
    mpz_class n = q.get_num() % 5, d = q.get_den() % 5;
    long nn = n.get_si(), dd = d.get_si();
    if (nn < 0) nn += 5;
    if (dd < 0) dd += 5;
    static const int inv[5] = {0, 1, 3, 2, 4};
    return (int)(nn * inv[dd] % 5);
  };
  int logged = 0;
  for (long p : {19L, 29L, 59L, 79L, 149L}) {
    auto prim = factor_rational_prime(p);
    Cyclo g = prim[0].generator;
    Cyclo uF = Cyclo::unit_F();
    for (int k = 0; k < 4; ++k) {
      auto [a, b] = sqrt5_form(g);
      int ar = res5(a), br = res5(b);
      int c = cmap(ar);
      auto [s, t] = st(p % 25);
      F5Vec want = {0,
                    0,
                    (uint8_t)(c * br % 5),
                    (uint8_t)(c * br % 5),
                    (uint8_t)((c * br + s) % 5),
                    (uint8_t)t};
      F5Vec got = class_at_5(g).exponents;
      CHECK(got == want);
      if (p % 25 == 19 && (ar == 3 || ar == 1)) {
        int printed_eps = ar == 3 ? (4 * br + 4) % 5 : (2 * br + 1) % 5;
        if (printed_eps != (c * br + s) % 5) {
          ++logged;
          std::cout << "note: table cell (a=" << ar << ", p=19 col) printed eps^"
                    << printed_eps << ", computed eps^" << (c * br + s) % 5 << "\n";
        }
      }
      g = g * uF;
    }
  }
  CHECK(logged >= 2);
}

TEST_CASE("hensel square roots") {
  auto e4 = pi5_expand(Cyclo(4), 10);
  auto r = hensel_sqrt(e4, 10);
  REQUIRE(r.has_value());
  CHECK(r->valuation == 0);
  CHECK(r->digits[0] == 2);  // branch with leading digit in {1, 2}

  Cyclo pi = Cyclo(1) - Cyclo::zeta();
  auto x = pi5_expand(Cyclo(1) + pi.pow(3), 12);
  auto y = hensel_sqrt(x, 12);
  REQUIRE(y.has_value());
  {
    Local5 R(12);
    auto ye = R.from_digits(y->digits);
    auto sq = R.mul(ye, ye);
    auto want = R.from_digits(x.digits);
    CHECK(R.digits(sq, 6) == R.digits(want, 6));
  }
  auto odd = pi5_expand(pi * Cyclo(2), 10);
  CHECK(!hensel_sqrt(odd, 10).has_value());
  auto ns = pi5_expand(Cyclo(2), 10);  // Teichmueller part is zeta4
  CHECK(!hensel_sqrt(ns, 10).has_value());
}

TEST_CASE("classes at the prime over 2") {
  auto P2 = factor_rational_prime(2)[0];
  CHECK(exps(class_at_unramified(Cyclo::zeta(), P2)) == F5Vec{0, 1});
  CHECK(exps(class_at_unramified(Cyclo(1) + Cyclo::zeta(), P2)) == F5Vec{0, 3});
  CHECK(exps(class_at_unramified(Cyclo(1) - Cyclo::zeta(), P2)) == F5Vec{0, 3});
  CHECK(exps(class_at_unramified(Cyclo(2), P2)) == F5Vec{1, 0});
  CHECK(exps(class_at_unramified(Cyclo(7), P2)) == F5Vec{0, 0});
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> d(-30, 30);
  for (int i = 0; i < 20; ++i) {
    int n = 2 * d(rng) + 1;
    CHECK(exps(class_at_unramified(Cyclo(n), P2)) == F5Vec{0, 0});
    Cyclo e = Cyclo(d(rng)) + Cyclo(d(rng)) * Cyclo::unit_F();
    if (!e.is_zero() && valuation_at(e, P2) == 0)
      CHECK(exps(class_at_unramified(e, P2)) == F5Vec{0, 0});
  }
}

TEST_CASE("triviality statements at unramified primes") {
  for (long p : {3L, 7L, 13L, 17L, 23L, 37L, 43L, 463L}) {
    auto P = factor_rational_prime(p)[0];
    for (long n : {2L, 3L, 7L, 11L, 101L}) {
      if (n % p == 0) continue;
      CHECK(exps(class_at_unramified(Cyclo(n), P)) == F5Vec{0, 0});
    }
    auto W = factor_rational_prime(19);
    CHECK(exps(class_at_unramified(W[0].generator, P)) == F5Vec{0, 0});
  }
  for (long p : {19L, 29L, 149L, 479L}) {
    auto W = factor_rational_prime(p);
    for (long n : {2L, 3L, 7L}) {
      CHECK(exps(class_at_unramified(Cyclo(n), W[0])) == F5Vec{0, 0});
    }
    CHECK(exps(class_at_unramified(W[1].generator, W[0])) == F5Vec{0, 0});
    CHECK(class_at_unramified(W[0].generator, W[0]).exponents[0] == 1);
  }
}

TEST_CASE("classes at primes over 101 against the fixture generators") {
  Cyclo pi1(1, -1, 3, 1), pi2(2, 2, 4, 3);
  auto f101 = factor_rational_prime(101);
  const PrimeIdealK* P1 = nullptr;
  for (auto& P : f101)
    if (valuation_at(pi1, P) == 1) P1 = &P;
  REQUIRE(P1 != nullptr);
  CHECK(P1->root == 95);  // zeta5 reduces to 95 at this prime
  auto c2 = class_at_unramified(Cyclo(2), *P1);
  auto cpi2 = class_at_unramified(pi2, *P1);
  CHECK(cpi2.exponents[0] == 0);
  CHECK((int)cpi2.exponents[1] == (3 * c2.exponents[1]) % 5);
  // zeta5 is a local fifth power at 101 (25 | q - 1)
  CHECK(exps(class_at_unramified(Cyclo::zeta(), *P1)) == F5Vec{0, 0});
}

TEST_CASE("homomorphism at unramified primes, negative valuations included") {
  std::mt19937 rng(77);
  auto P2 = factor_rational_prime(2)[0];
  auto P19 = factor_rational_prime(19)[0];
  auto P11 = factor_rational_prime(11)[0];
  for (const auto& P : {P2, P19, P11}) {
    for (int i = 0; i < 15; ++i) {
      Cyclo a = rand_nonzero(rng), b = rand_nonzero(rng);
      auto ab = class_at_unramified(a * b, P);
      auto ea = class_at_unramified(a, P), eb = class_at_unramified(b, P);
      CHECK(ab.exponents == vsum(ea.exponents, eb.exponents));
      auto inv = class_at_unramified(Cyclo(1) / a, P);
      CHECK(vsum(inv.exponents, ea.exponents) == F5Vec{0, 0});
      CHECK(exps(class_at_unramified(a.pow(5), P)) == F5Vec{0, 0});
    }
  }
}

TEST_CASE("precision guards") {
  Pi5Expansion shallow;
  shallow.valuation = 0;
  shallow.digits = {1, 2, 3};
  shallow.precision = 3;
  CHECK_THROWS_AS(class_at_5(shallow), precision_error);
  CHECK_THROWS_AS(pi5_expand(Cyclo(1), 2000), precision_error);
}
