#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <vector>

#include "quintic/numtheory.hpp"

namespace quintic {

using cdouble = std::complex<double>;

// Local L-polynomial data at a good prime: 1 + c1 T + c2 T^2 + p c1 T^3 +
// p^2 T^4 (the degree-3/4 coefficients follow from the functional-equation
// symmetry).  At bad primes the polynomial is 1.
struct EulerFactor {
  long p = 0;
  bool bad = false;
  long long c1 = 0;
  long long c2 = 0;
  bool c2_known = false;
};

bool is_good_prime(const mpz_class& A, long p);

// #C_A(F_q) including the single point at infinity; q = p (k=1) or p^2 (k=2).
// k=2 enumerates F_{p^2} directly and is intended for small p.
long long count_points(const mpz_class& A, long p, int k);

// Exact a_p and c2 for p = 1 (mod 5) from Jacobi sums over F_p (an O(p)
// evaluation through Z[zeta5] arithmetic; Davenport-Hasse lifts the count to
// F_{p^2}).  Returns {c1, c2}.
std::pair<long long, long long> jacobi_sum_factor(const mpz_class& A, long p);

struct LSeriesOptions {
  double cutoff_factor = 150.0;  // terms up to ~ factor * sqrt(N)/(2pi)^2
  double delta = 1.0;            // AFE shift parameter
  long explicit_cutoff = 0;      // override the automatic cutoff
  int threads = 0;               // 0 = auto
  std::string cache_dir;         // empty = caching disabled
  bool use_hecke_fast_path = false;
};

EulerFactor euler_factor(const mpz_class& A, long p, bool need_c2,
                         const LSeriesOptions& opt = {});

// Conductor model: N = 125 * 5^{n_lambda} * 16 * rad_odd(A)^4 with
// n_lambda = 1 if 5 | (A^4-1)/5 else 2.  A must be a positive perfect
// square not divisible by 5 (the family this library evaluates).
mpz_class conductor(const mpz_class& A);

std::vector<long long> dirichlet_coefficients(const mpz_class& A, long cutoff,
                                              const LSeriesOptions& opt = {});

// complex log-gamma (Lanczos) and the incomplete Mellin kernel
// H_s(x) = int_x^infty 2 K_0(2 sqrt t) t^{s-1} dt, exposed for testing
cdouble lgamma_complex(cdouble z);
cdouble hs_kernel(cdouble s, double x);

// Smoothed approximate-functional-equation evaluator for
// Lambda(s) = N^{s/2} (2pi)^{-2s} Gamma(s)^2 L(s), center s = 1, sign w:
//   Lambda(s) = T_delta(s) + w T_{1/delta}(2-s),
//   T_d(s) = sum a_n (Q/n)^s H_s(n/(Q d)),  Q = sqrt(N)/(2pi)^2.
class LSeries {
 public:
  explicit LSeries(const mpz_class& A, const LSeriesOptions& opt = {});

  const mpz_class& conductor_value() const { return N_; }
  int sign() const { return w_; }
  double q_parameter() const { return Q_; }
  long cutoff() const { return M_; }
  const std::vector<long long>& coefficients() const { return an_; }

  cdouble sum_T(cdouble s, double delta) const;
  cdouble lambda(cdouble s, double delta) const;
  cdouble lambda(cdouble s) const { return lambda(s, opt_.delta); }
  cdouble gamma_factor(cdouble s) const;

  struct Value {
    cdouble value;
    double trunc_error;
  };
  Value l_value(cdouble s) const;

  double truncation_error(double sigma, double delta) const;

 private:
  mpz_class A_, N_;
  int w_;
  double Q_;
  long M_;
  LSeriesOptions opt_;
  std::vector<long long> an_;
};

// Numeric sign from delta-shifted AFE symmetry; decisive residual required.
int fe_sign_estimate(const mpz_class& A, const LSeriesOptions& opt = {});

struct CriterionCheck {
  std::string verdict;  // "holds", "fails", "out-of-scope"
  bool root_number_plus_one = false;
  bool factors_one_mod_5 = false;
  bool q5_divisible = false;  // 25 | A^4 - 1
  std::vector<std::string> reasons;
};

// Non-vanishing criterion for L(1, J_A): root number +1, every prime factor
// of A congruent to 1 mod 5, and 25 | A^4 - 1.
CriterionCheck nonvanishing_criterion(const mpz_class& A);

struct BsdVerdict {
  long m = 0;
  bool verified = false;
  int selmer_dimension = 0;
  int root_number = 0;
  std::string criterion_verdict;
  bool numeric_l_checked = false;
  double numeric_l_value = 0.0;
  double numeric_l_error = 0.0;
  std::vector<std::string> evidence;
  std::string statement;
};

// Rank part of BSD for J_{m^2}: algebraic rank 0 from a dimension-1 Selmer
// group, analytic rank 0 from the exact criterion (plus a numeric L(1)
// anchor when the conductor is small enough to evaluate cheaply).
BsdVerdict bsd_rank_check(long m, const LSeriesOptions& opt = {});

}  // namespace quintic
