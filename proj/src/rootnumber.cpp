#include "quintic/rootnumber.hpp"

namespace quintic {

namespace {

// Legendre symbol mod 5 of an exact integer
int sym5(const mpz_class& x) {
  long r = mpz_class(x % 5).get_si();
  if (r < 0) r += 5;
  switch (r) {
    case 1:
    case 4: return 1;
    case 2:
    case 3: return -1;
    default: return 0;
  }
}

bool tenth_power_free(mpz_class A) {
  A = abs(A);
  // a 10th-power factor p^10 <= |A| forces p <= |A|^(1/10)
  for (mpz_class p = 2;; ++p) {
    mpz_class p10;
    mpz_pow_ui(p10.get_mpz_t(), p.get_mpz_t(), 10);
    if (p10 > A) break;
    if (A % p == 0) {
      int e = 0;
      mpz_class t = A;
      while (t % p == 0) t /= p, ++e;
      if (e >= 10) return false;
    }
  }
  return true;
}

}  // namespace

RootNumberInput root_number_input(const mpz_class& A) {
  if (A == 0) throw domain_error("root number: A must be nonzero");
  if (A % 5 == 0) throw domain_error("root number: A must not be divisible by 5");
  if (!tenth_power_free(A)) throw domain_error("root number: A must be 10th-power free");
  RootNumberInput in;
  in.A = A;
  in.e = 0;
  in.B = A;
  while (in.B % 2 == 0) in.B /= 2, ++in.e;
  mpz_class A4 = A * A * A * A;
  in.q5 = (A4 - 1) / 5;
  long bmod4 = mpz_class(in.B % 4).get_si();
  if (bmod4 < 0) bmod4 += 4;
  bool b1 = (bmod4 == 1);
  if (in.e % 2 == 1)
    in.f2 = 3;
  else if (!b1)
    in.f2 = 2;
  else if (in.e == 8)
    in.f2 = 0;
  else
    in.f2 = 1;
  in.vA = 1;
  for (int i = 0; i < in.f2; ++i) in.vA *= 2;
  mpz_class rest = abs(in.B);
  for (long p = 3; p * p <= rest; p += 2) {
    if (rest % p == 0) {
      in.vA *= p;
      while (rest % p == 0) rest /= p;
    }
  }
  if (rest > 1) in.vA *= rest;
  return in;
}

int root_number_general(const mpz_class& A) {
  RootNumberInput in = root_number_input(A);
  if (in.q5 % 5 == 0) return sym5(2 * in.A * in.vA);
  return -sym5(2 * in.q5 * in.vA);
}

int root_number_m2(long m) {
  if (m <= 0 || m % 2 == 0) throw domain_error("root_number_m2: m must be odd positive");
  if (m % 5 == 0) throw domain_error("root_number_m2: m divisible by 5");
  if (!is_squarefree(m)) throw domain_error("root_number_m2: m must be square-free");
  static const int plus[] = {1, 2, 4, 6, 12, 13, 19, 21, 23, 24};
  long r = m % 25;
  for (int v : plus)
    if (r == v) return 1;
  return -1;
}

}  // namespace quintic
