#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quintic/rootnumber.hpp"

using namespace quintic;

TEST_CASE("decomposition data") {
  auto in = root_number_input(mpz_class(144));  // 2^4 * 9
  CHECK(in.e == 4);
  CHECK(in.B == 9);
  CHECK(in.f2 == 1);
  CHECK(in.vA == 6);
  CHECK(in.q5 == (mpz_class(144) * 144 * 144 * 144 - 1) / 5);
  auto in8 = root_number_input(mpz_class(256));  // e = 8, B = 1
  CHECK(in8.f2 == 0);
  auto in3 = root_number_input(mpz_class(3));  // B = 3 = -1 mod 4, e even
  CHECK(in3.f2 == 2);
  auto in2 = root_number_input(mpz_class(2));  // e odd
  CHECK(in2.f2 == 3);
}

TEST_CASE("formula walk-throughs") {
  CHECK(root_number_general(mpz_class(1)) == 1);
  CHECK(root_number_general(mpz_class(9)) == -1);   // m = 3
  CHECK(root_number_general(mpz_class(144)) == 1);  // m = 12
  // A = 4: e = 2, B = 1, f2 = 1, v = 2, q5 = 51 not divisible by 5, so
  // w = -(2*51*2/5) = -(4/5) = -1.  (The odd-m residue table does not apply
  // to even m; the sign is confirmed numerically by the FE suite.)
  CHECK(root_number_general(mpz_class(4)) == -1);
  CHECK_THROWS_AS(root_number_general(mpz_class(25)), domain_error);
  CHECK_THROWS_AS(root_number_general(mpz_class(0)), domain_error);
  CHECK_THROWS_AS(root_number_general(mpz_class(1024 * 3)), domain_error);  // 2^10
}

TEST_CASE("residue table mod 25") {
  static const int plus[] = {1, 2, 4, 6, 12, 13, 19, 21, 23, 24};
  static const int minus[] = {3, 7, 8, 9, 11, 14, 16, 17, 18, 22};
  for (int r : plus) {
    long m = r;
    while (m % 2 == 0 || !is_squarefree(m)) m += 25;
    CHECK(root_number_m2(m) == 1);
  }
  for (int r : minus) {
    long m = r;
    while (m % 2 == 0 || !is_squarefree(m)) m += 25;
    CHECK(root_number_m2(m) == -1);
  }
  CHECK(root_number_m2(101) == 1);
  CHECK(root_number_m2(22 + 25) == -1);  // 47 = 22 mod 25
  CHECK_THROWS_AS(root_number_m2(4), domain_error);
  CHECK_THROWS_AS(root_number_m2(15), domain_error);
}

TEST_CASE("table equals the general formula for all odd square-free m <= 9999") {
  for (long m = 1; m <= 9999; m += 2) {
    if (m % 5 == 0 || !is_squarefree(m)) continue;
    mpz_class A = mpz_class(m) * m;
    int w1 = root_number_m2(m);
    int w2 = root_number_general(A);
    REQUIRE(w1 == w2);
    REQUIRE((w1 == 1 || w1 == -1));
  }
}
