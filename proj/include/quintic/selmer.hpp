#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quintic/cyclotomic.hpp"
#include "quintic/f5linalg.hpp"
#include "quintic/localization.hpp"

namespace quintic {

// Descent data for J = Jac(y^2 = x^5 + m^2), m odd square-free positive,
// 5 does not divide m.  K(S,5) is generated by zeta5, 1+zeta5, 2, 1-zeta5
// and the normalized generators of the primes dividing m; the bad set S
// consists of the primes above 10m.
struct DescentContext {
  long m = 0;
  std::vector<long> m_prime_factors;
  PrimeIdealK two;
  PrimeIdealK v5;
  std::vector<PrimeIdealK> m_primes;   // all primes above the factors of m
  std::vector<Cyclo> ks5_elements;     // K(S,5) basis, spec order
  AmbientPtr ks5;                      // labeled ambient for Selmer vectors
  AmbientPtr local5;                   // (alpha..eta)
};

DescentContext build_context(long m);

struct EnumOptions {
  int start_depth = 7;      // x runs over O / pi5^start_depth
  int max_depth = 16;       // disc refinement limit
  int quad_start_depth = 2; // conjugate-pair stage disc depth
  int quad_max_depth = 6;
  bool early_stop = true;   // stop once the image reaches dimension 3
};

// Image F_5(J(K_5)/phi J(K_5)) inside the 6-dim class space at v5; computed
// by probing y^2 = x^5 + m^2 over residue discs and accumulating classes of
// y -+ m.  When single rational points do not fill the 3-dimensional image
// (some residues of m mod 25), a second stage probes conjugate point pairs
// over the unramified quadratic extension and accumulates norm classes.
// Raises bound_error if dimension 3 is not reached.
F5Subspace local_image_at_5(const DescentContext& ctx, const EnumOptions& opt = {});

// Image at a bad prime away from 5: the span of the class of 2m.
F5Subspace local_image_away_5(const DescentContext& ctx, const PrimeIdealK& P);

struct SelmerResult {
  int dimension = 0;
  F5Subspace basis;
  std::vector<std::string> basis_rendered;
  int rank_upper = 0;
  F5Vec torsion_class;   // class of 2m in K(S,5) coordinates
  std::string rank_statement;
};

SelmerResult selmer_compute(const DescentContext& ctx, const EnumOptions& opt = {});

struct RankReport {
  long m;
  int selmer_dimension;
  int rank_upper;
  int root_number;
  bool parity_assumed;
  bool rank_proven_zero;       // dimension 1
  bool conditional_rank_one;   // dimension 2, w = -1, parity assumed
  std::string statement;
};

RankReport rank_report(const DescentContext& ctx, const SelmerResult& sel,
                       bool parity_assumed);

// K(S,5) exponent vector of the class of 2m (the image of the phi-torsion
// point (0, m) - infinity).
F5Vec class_vector_2m(const DescentContext& ctx);

// i_p matrix rows (one per K(S,5) generator) at the given bad prime.
F5Matrix isotropy_matrix_at(const DescentContext& ctx, const PrimeIdealK& P);
F5Matrix isotropy_matrix_at_5(const DescentContext& ctx);

}  // namespace quintic
