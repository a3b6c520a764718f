#pragma once

#include <gmpxx.h>

#include "quintic/numtheory.hpp"

namespace quintic {

// Decomposition data entering the root-number formula for y^2 = x^5 + A.
struct RootNumberInput {
  mpz_class A;
  long e;          // A = 2^e B, B odd
  mpz_class B;
  mpz_class q5;    // (A^4 - 1)/5
  int f2;
  mpz_class vA;    // 2^f2 * prod of odd primes dividing A
};

RootNumberInput root_number_input(const mpz_class& A);

// Root number of y^2 = x^5 + A over Q; A must be 10th-power free and
// coprime to 5.
int root_number_general(const mpz_class& A);

// Specialization to A = m^2 for odd square-free m: residue table mod 25.
int root_number_m2(long m);

}  // namespace quintic
