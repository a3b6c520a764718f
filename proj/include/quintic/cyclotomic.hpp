#pragma once

#include <gmpxx.h>

#include <array>
#include <string>
#include <vector>

#include "quintic/numtheory.hpp"

namespace quintic {

// Exact element of Q(zeta_5), stored as four rational coordinates over the
// power basis 1, z, z^2, z^3 with z^4 = -1 - z - z^2 - z^3.  All operations
// are exact; equality of values is equality of coordinates.
class Cyclo {
 public:
  std::array<mpq_class, 4> c;

  Cyclo() : c{0, 0, 0, 0} {}
  Cyclo(long n) : c{n, 0, 0, 0} {}
  Cyclo(const mpz_class& n) : c{mpq_class(n), 0, 0, 0} {}
  Cyclo(const mpq_class& q) : c{q, 0, 0, 0} {}
  Cyclo(mpq_class c0, mpq_class c1, mpq_class c2, mpq_class c3);

  static Cyclo zeta(int k = 1);  // z^k
  static Cyclo sqrt5();          // 2(z + z^4) + 1; pinned so sqrt5 = 2 pi5^2 + O(pi5^3)
  static Cyclo unit_F();         // u_F = -(1+sqrt5)/2 = z^2 + z^3

  Cyclo operator+(const Cyclo& o) const;
  Cyclo operator-(const Cyclo& o) const;
  Cyclo operator-() const;
  Cyclo operator*(const Cyclo& o) const;
  Cyclo operator/(const Cyclo& o) const;  // throws domain_error if o == 0
  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
  Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
  bool operator==(const Cyclo& o) const { return c == o.c; }
  bool operator!=(const Cyclo& o) const { return !(*this == o); }

  Cyclo inverse() const;
  Cyclo galois(int r) const;  // z -> z^r, r in {1,2,3,4}
  Cyclo pow(long e) const;
  mpq_class norm() const;   // product of the four conjugates
  mpq_class trace() const;  // 4 c0 - c1 - c2 - c3

  bool is_zero() const;
  bool is_rational() const;
  bool is_integral() const;  // all coordinates in Z
  bool is_unit() const;      // integral with |norm| = 1
  mpz_class denominator_lcm() const;

  std::string str() const;
};

enum class SplitType { inert, split_two, split_completely, ramified };

std::string split_type_name(SplitType t);

// A prime of Z[zeta_5] with its normalized generator and the data needed to
// reduce into the residue field: a root r of Phi_5 mod p (degree 1), or a
// monic quadratic factor t^2 + q1 t + q0 of Phi_5 mod p (degree 2).
struct PrimeIdealK {
  long p = 0;
  SplitType split_type = SplitType::inert;
  Cyclo generator;
  int residue_degree = 0;
  mpz_class norm;
  long root = -1;
  std::array<long, 2> quad = {0, 0};  // {q0, q1}

  std::string label() const;
};

SplitType splitting_type(long p);  // throws domain_error on non-prime input

// All primes above p, with deterministic canonical generators.  bound_scale
// enlarges the generator search box; exhaustion raises bound_error.
std::vector<PrimeIdealK> factor_rational_prime(long p, double bound_scale = 1.0);

// Canonical a + b sqrt(5) representative (a = 2 mod 5, |b| minimal) of a
// generator of a prime over p = 4 mod 5.  Output is a unit-invariant of the
// ideal.  Throws domain_error unless g is of the required shape.
struct SplitTwoForm {
  mpq_class a, b;
  Cyclo generator;
};
SplitTwoForm normalize_generator_split_two(const Cyclo& g);

// Read (a, b) with g = a + b sqrt(5); throws domain_error if g is not in F.
std::pair<mpq_class, mpq_class> sqrt5_form(const Cyclo& g);
Cyclo from_sqrt5_form(const mpq_class& a, const mpq_class& b);

// Write a unit as +-zeta^a (1+zeta)^b; returns {sign, a, b}.
struct UnitDecomposition {
  int sign;
  int zeta_exp;
  long fund_exp;
};
UnitDecomposition decompose_unit(const Cyclo& u);

// 5-adic valuation of a nonzero rational.
int val5(const mpq_class& q);

}  // namespace quintic
