#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "quintic/cyclotomic.hpp"

namespace quintic {

// Truncated pi5-adic expansion: value = sum digits[i] * pi5^(valuation+i),
// known modulo pi5^precision.  pi5 = 1 - zeta5; the embedding K -> K_5 sends
// zeta5 to the root 1 - pi5 (this choice reproduces the expansions of 5,
// sqrt5, zeta4 and u_F used throughout; see tests).
struct Pi5Expansion {
  int valuation = 0;
  std::vector<uint8_t> digits;  // leading digit nonzero unless zero-to-precision
  int precision = 0;            // digits cover [valuation, precision)

  bool is_zero_to_precision() const { return digits.empty(); }
  std::string str() const;
};

// Class of a nonzero local element in K_p^x / (K_p^x)^5, as an exponent
// vector over a labeled basis: at v5 the basis is (alpha..eta) =
// (pi5, 1+pi5, ..., 1+pi5^5); at an unramified prime it is (alpha_p, beta_p).
struct UnitClass {
  std::string basis_label;
  std::vector<uint8_t> exponents;

  bool operator==(const UnitClass& o) const = default;
  std::string str() const;  // multiplicative rendering
};

UnitClass unit_class_v5(std::array<uint8_t, 6> e);

inline constexpr int kDefaultPi5Precision = 12;
inline constexpr int kMaxPi5Precision = 96;

// Working ring O_{K_5} / pi5^digits: elements are integer coordinate vectors
// over 1, pi, pi^2, pi^3 reduced mod 5^K, 4K >= digits + 8.  int64 with
// 128-bit products; digits is capped at kMaxPi5Precision.
class Local5 {
 public:
  using Elt = std::array<long long, 4>;

  explicit Local5(int digit_precision);

  int precision() const { return prec_; }

  Elt from_int(long long n) const;
  Elt from_integral_cyclo(const Cyclo& a) const;  // needs 5-free denominators? no: integral coords
  Elt zero() const { return {0, 0, 0, 0}; }
  Elt one() const { return from_int(1); }

  Elt add(const Elt& a, const Elt& b) const;
  Elt sub(const Elt& a, const Elt& b) const;
  Elt mul(const Elt& a, const Elt& b) const;
  Elt pow(Elt a, long e) const;
  Elt inv_unit(const Elt& a) const;  // a must be a unit
  Elt teichmueller(const Elt& unit) const;
  Elt div_pi(const Elt& a) const;  // exact division by pi (digit 0 must vanish)

  // first n digits of a (n <= precision)
  std::vector<uint8_t> digits(const Elt& a, int n) const;
  Elt from_digits(const std::vector<uint8_t>& d) const;
  // index of first nonzero digit within [0, limit), or -1
  int valuation_bounded(const Elt& a, int limit) const;

  // exponents over (beta..eta) of a 1-unit, consuming digits 1..5
  std::array<uint8_t, 5> one_unit_class(Elt u) const;
  // full 6-vector (alpha..eta) for pi^val * unit
  std::array<uint8_t, 6> unit_class(const Elt& unit, long val) const;

  Elt one_plus_pi_pow(int i) const;  // 1 + pi^i

 private:
  int prec_;
  long long mod_;  // 5^K
  Elt inv2_;
};

// Expansion of a nonzero element of K to the requested precision.
Pi5Expansion pi5_expand(const Cyclo& a, int precision = kDefaultPi5Precision);

// pi5-adic valuation (exact, via the norm).
int pi5_valuation(const Cyclo& a);

// Classes in K_5^x / (K_5^x)^5 over (alpha, beta, gamma, delta, epsilon, eta).
UnitClass class_at_5(const Cyclo& a);
UnitClass class_at_5(const Pi5Expansion& a);  // needs >= 6 valid unit digits

// Square root in K_5 to the stated precision, or nullopt when the input is
// not a square (odd valuation, or Teichmueller part not +-1).  The branch is
// fixed by leading digit in {1, 2}.
std::optional<Pi5Expansion> hensel_sqrt(const Pi5Expansion& x, int precision);

// Square root in the residue field F_p (k=1) or F_{p^2} (k=2, element given
// as a0 + a1*t against the stored quadratic); nullopt for non-squares.
std::optional<long long> sqrt_in_fp(long long a, long p);

// Class in K_p^x / (K_p^x)^5 at an unramified prime, as exponents over
// (alpha_p, beta_p): alpha-exponent = v_p(a) mod 5, beta-exponent w.r.t. the
// canonical zeta_{5^n} generator pinned by zeta_{5^n}^{5^{n-1}} = image of
// zeta5.  a may be any nonzero element of K.
UnitClass class_at_unramified(const Cyclo& a, const PrimeIdealK& P);

// Exact valuation of a nonzero a at an unramified prime.
int valuation_at(const Cyclo& a, const PrimeIdealK& P);

// Galois action matrix on the 6-dim class space at 5 for z -> z^2 (rows =
// images of alpha..eta), computable and tested against the class maps.
std::array<std::array<uint8_t, 6>, 6> galois_matrix_at_5();

}  // namespace quintic
