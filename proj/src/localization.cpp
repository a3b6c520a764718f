#include "quintic/localization.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace quintic {

std::string Pi5Expansion::str() const {
  std::ostringstream os;
  if (is_zero_to_precision()) {
    os << "O(pi5^" << precision << ")";
    return os.str();
  }
  bool first = true;
  for (size_t i = 0; i < digits.size(); ++i) {
    if (!digits[i]) continue;
    if (!first) os << " + ";
    int e = valuation + (int)i;
    os << (int)digits[i];
    if (e != 0) os << "*pi5^" << e;
    first = false;
  }
  if (first) os << "0";
  os << " + O(pi5^" << precision << ")";
  return os.str();
}

static const char* kV5Names[6] = {"alpha", "beta", "gamma", "delta", "epsilon", "eta"};

std::string UnitClass::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < exponents.size(); ++i) {
    if (!exponents[i]) continue;
    if (!first) os << "*";
    if (basis_label == "v5") {
      os << kV5Names[i];
    } else {
      os << (i == 0 ? "alpha" : "beta");
    }
    if (exponents[i] != 1) os << "^" << (int)exponents[i];
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

UnitClass unit_class_v5(std::array<uint8_t, 6> e) {
  UnitClass c;
  c.basis_label = "v5";
  c.exponents.assign(e.begin(), e.end());
  return c;
}

// ---------------------------------------------------------------------------
// Local5 ring

Local5::Local5(int digit_precision) : prec_(digit_precision) {
  if (digit_precision < 1 || digit_precision > kMaxPi5Precision)
    throw precision_error("pi5 precision out of range [1, 96]");
  int K = (digit_precision + 8 + 3) / 4;
  if (K > 26) K = 26;
  mod_ = 1;
  for (int i = 0; i < K; ++i) mod_ *= 5;
  long long h = (mod_ + 1) / 2;  // inverse of 2 mod 5^K
  inv2_ = {h, 0, 0, 0};
}

Local5::Elt Local5::from_int(long long n) const {
  long long v = n % mod_;
  if (v < 0) v += mod_;
  return {v, 0, 0, 0};
}

Local5::Elt Local5::from_integral_cyclo(const Cyclo& a) const {
  if (!a.is_integral()) throw domain_error("Local5: element has denominators");
  // zeta5 = 1 - pi: substitute powers of (1 - x)
  Elt z = {1, mod_ - 1, 0, 0};
  Elt acc = zero(), zp = one();
  for (int i = 0; i < 4; ++i) {
    mpz_class r = a.c[i].get_num() % mpz_class((long)mod_);
    if (r < 0) r += mpz_class((long)mod_);
    Elt ci = {r.get_si(), 0, 0, 0};
    acc = add(acc, mul(ci, zp));
    zp = mul(zp, z);
  }
  return acc;
}

Local5::Elt Local5::add(const Elt& a, const Elt& b) const {
  Elt r;
  for (int i = 0; i < 4; ++i) {
    r[i] = a[i] + b[i];
    if (r[i] >= mod_) r[i] -= mod_;
  }
  return r;
}

Local5::Elt Local5::sub(const Elt& a, const Elt& b) const {
  Elt r;
  for (int i = 0; i < 4; ++i) {
    r[i] = a[i] - b[i];
    if (r[i] < 0) r[i] += mod_;
  }
  return r;
}

Local5::Elt Local5::mul(const Elt& a, const Elt& b) const {
  __int128 t[7] = {0, 0, 0, 0, 0, 0, 0};
  for (int i = 0; i < 4; ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < 4; ++j) t[i + j] += (__int128)a[i] * b[j];
  }
  // x^4 = 5x^3 - 10x^2 + 10x - 5
  for (int d = 6; d >= 4; --d) {
    long long v = (long long)(t[d] % mod_);
    if (v < 0) v += mod_;
    if (!v) continue;
    t[d - 1] += (__int128)5 * v;
    t[d - 2] -= (__int128)10 * v;
    t[d - 3] += (__int128)10 * v;
    t[d - 4] -= (__int128)5 * v;
  }
  Elt r;
  for (int i = 0; i < 4; ++i) {
    long long v = (long long)(t[i] % mod_);
    if (v < 0) v += mod_;
    r[i] = v;
  }
  return r;
}

Local5::Elt Local5::pow(Elt a, long e) const {
  Elt r = one();
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Local5::Elt Local5::div_pi(const Elt& a) const {
  // (a - a0) / x with a0 = 5k: uses 5/x = 10 - 10x + 5x^2 - x^3
  if (a[0] % 5 != 0) throw std::logic_error("div_pi: element not divisible by pi");
  long long k = a[0] / 5;
  __int128 t[4] = {(__int128)10 * k + a[1], -(__int128)10 * k + a[2],
                   (__int128)5 * k + a[3], -(__int128)k};
  Elt r;
  for (int i = 0; i < 4; ++i) {
    long long v = (long long)(t[i] % mod_);
    if (v < 0) v += mod_;
    r[i] = v;
  }
  return r;
}

std::vector<uint8_t> Local5::digits(const Elt& a, int n) const {
  Elt c = a;
  std::vector<uint8_t> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    int d = (int)(c[0] % 5);
    out.push_back((uint8_t)d);
    if (d) c[0] -= d;
    c = div_pi(c);
  }
  return out;
}

Local5::Elt Local5::from_digits(const std::vector<uint8_t>& d) const {
  Elt x = {0, 1, 0, 0};  // pi
  Elt acc = zero(), p = one();
  for (uint8_t di : d) {
    if (di) acc = add(acc, mul(from_int(di), p));
    p = mul(p, x);
  }
  return acc;
}

int Local5::valuation_bounded(const Elt& a, int limit) const {
  auto d = digits(a, limit);
  for (int i = 0; i < limit; ++i)
    if (d[i]) return i;
  return -1;
}

Local5::Elt Local5::inv_unit(const Elt& a) const {
  int d0 = (int)(a[0] % 5);
  if (!d0) throw domain_error("inv_unit: not a unit");
  static const int inv5[5] = {0, 1, 3, 2, 4};
  Elt w = from_int(inv5[d0]);
  for (int i = 0; i < 9; ++i) w = mul(w, sub(from_int(2), mul(a, w)));
  return w;
}

Local5::Elt Local5::teichmueller(const Elt& unit) const {
  Elt t = from_int((long long)(unit[0] % 5));
  int iters = prec_ / 4 + 3;
  for (int i = 0; i < iters; ++i) t = pow(t, 5);
  return t;
}

Local5::Elt Local5::one_plus_pi_pow(int i) const {
  std::vector<uint8_t> d(i + 1, 0);
  d[0] = 1;
  d[i] = 1;
  return from_digits(d);
}

std::array<uint8_t, 5> Local5::one_unit_class(Elt u) const {
  std::array<uint8_t, 5> e{};
  for (int i = 1; i <= 5; ++i) {
    int d = digits(u, i + 1)[i];
    e[i - 1] = (uint8_t)d;
    if (d) u = mul(u, pow(inv_unit(one_plus_pi_pow(i)), d));
  }
  auto check = digits(u, 6);
  if (check[0] != 1 || check[1] || check[2] || check[3] || check[4] || check[5])
    throw std::logic_error("one_unit_class: residual not in U^(6)");
  return e;
}

std::array<uint8_t, 6> Local5::unit_class(const Elt& unit, long val) const {
  Elt t = teichmueller(unit);
  Elt u1 = mul(unit, inv_unit(t));
  auto tail = one_unit_class(u1);
  std::array<uint8_t, 6> e{};
  e[0] = (uint8_t)(((val % 5) + 5) % 5);
  for (int i = 0; i < 5; ++i) e[i + 1] = tail[i];
  return e;
}

// ---------------------------------------------------------------------------
// expansions of exact elements

int pi5_valuation(const Cyclo& a) {
  if (a.is_zero()) throw domain_error("pi5_valuation of zero");
  return val5(a.norm());
}

Pi5Expansion pi5_expand(const Cyclo& a, int precision) {
  if (a.is_zero()) throw domain_error("pi5_expand of zero");
  if (precision < 1 || precision > kMaxPi5Precision)
    throw precision_error("pi5_expand: precision out of range");
  int v = pi5_valuation(a);
  if (v >= precision) return Pi5Expansion{precision, {}, precision};

  mpz_class den = a.denominator_lcm();
  Cyclo b = a * Cyclo(mpq_class(den));
  int e5 = 0;
  mpz_class d1 = den;
  while (mpz_divisible_ui_p(d1.get_mpz_t(), 5)) d1 /= 5, ++e5;
  int vb = v + 4 * e5;

  int need = precision - v;  // unit digits wanted
  int ring_prec = std::min(kMaxPi5Precision, need + vb + 6);
  if (need + vb > kMaxPi5Precision - 2)
    throw precision_error("pi5_expand: valuation+precision exceeds engine range");
  Local5 R(ring_prec);

  Local5::Elt U = R.from_integral_cyclo(b);
  for (int i = 0; i < vb; ++i) {
    if (U[0] % 5 != 0) throw std::logic_error("pi5_expand: valuation mismatch");
    U = R.div_pi(U);
  }
  if (d1 != 1) {
    U = R.mul(U, R.inv_unit(R.from_integral_cyclo(Cyclo(mpq_class(d1)))));
  }
  if (e5 > 0) {
    Local5::Elt u5 = R.from_int(5);
    for (int i = 0; i < 4; ++i) u5 = R.div_pi(u5);
    U = R.mul(U, R.pow(R.inv_unit(u5), e5));
  }
  Pi5Expansion out;
  out.valuation = v;
  out.precision = precision;
  out.digits = R.digits(U, need);
  if (out.digits.empty() || out.digits[0] == 0)
    throw std::logic_error("pi5_expand: leading digit vanished");
  return out;
}

UnitClass class_at_5(const Pi5Expansion& a) {
  if (a.is_zero_to_precision())
    throw precision_error("class_at_5: element is zero to tracked precision");
  int have = a.precision - a.valuation;
  if (have < 6)
    throw precision_error("class_at_5: need at least 6 valid unit digits");
  int use = std::min(have, 10);
  Local5 R(use + 2);
  auto u = R.from_digits(std::vector<uint8_t>(a.digits.begin(), a.digits.begin() + use));
  return unit_class_v5(R.unit_class(u, a.valuation));
}

UnitClass class_at_5(const Cyclo& a) {
  if (a.is_zero()) throw domain_error("class_at_5 of zero");
  int v = pi5_valuation(a);
  return class_at_5(pi5_expand(a, v + 10));
}

std::optional<Pi5Expansion> hensel_sqrt(const Pi5Expansion& x, int precision) {
  if (x.is_zero_to_precision())
    throw precision_error("hensel_sqrt: zero to tracked precision");
  if (x.valuation % 2 != 0) return std::nullopt;  // odd valuation
  int d0 = x.digits[0];
  if (d0 != 1 && d0 != 4) return std::nullopt;  // Teichmueller part not +-1
  int n = x.precision - x.valuation;
  int out_prec = std::min(precision, x.valuation / 2 + n);
  int m = out_prec - x.valuation / 2;  // digits of the unit sqrt we can state
  if (m < 1) throw precision_error("hensel_sqrt: no representable digits");

  Local5 R(n + 4);
  auto u = R.from_digits(x.digits);
  Local5::Elt w = R.from_int(d0 == 1 ? 1 : 2);
  Local5::Elt half = R.inv_unit(R.from_int(2));
  for (int i = 0; i < 10; ++i)  // w <- (w + u/w)/2
    w = R.mul(R.add(w, R.mul(u, R.inv_unit(w))), half);
  int lead = (int)(w[0] % 5);
  if (lead != 1 && lead != 2) w = R.sub(R.zero(), w);
  Pi5Expansion y;
  y.valuation = x.valuation / 2;
  y.precision = out_prec;
  y.digits = R.digits(w, m);
  return y;
}

std::optional<long long> sqrt_in_fp(long long a, long p) {
  long long r = sqrt_mod(a, p);
  if (r < 0) return std::nullopt;
  return r;
}

// ---------------------------------------------------------------------------
// unramified classes

namespace {

// residue field F_{p^f} as polynomials mod (p, m(t)); f in {1, 2, 4}
struct Fq {
  long p;
  int f;
  std::array<long, 2> quad;  // for f == 2: t^2 + quad[1] t + quad[0]
  long root;                 // for f == 1

  using E = std::array<long long, 4>;

  E zero() const { return {0, 0, 0, 0}; }
  E one() const { return {1, 0, 0, 0}; }

  E mul(const E& a, const E& b) const {
    if (f == 1) return {mulmod(a[0], b[0], p), 0, 0, 0};
    if (f == 2) {
      // (a0 + a1 t)(b0 + b1 t) mod t^2 = -q1 t - q0
      long long c0 = mulmod(a[0], b[0], p);
      long long c1 = (mulmod(a[0], b[1], p) + mulmod(a[1], b[0], p)) % p;
      long long c2 = mulmod(a[1], b[1], p);
      c1 = (c1 + mulmod(c2, (p - quad[1] % p) % p, p)) % p;
      c0 = (c0 + mulmod(c2, (p - quad[0] % p) % p, p)) % p;
      return {c0, c1, 0, 0};
    }
    long long t[7] = {0, 0, 0, 0, 0, 0, 0};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) t[i + j] = (t[i + j] + mulmod(a[i], b[j], p)) % p;
    for (int d = 6; d >= 4; --d) {
      long long v = t[d];
      if (!v) continue;
      t[d] = 0;
      for (int k = 0; k < 4; ++k) t[d - 4 + k] = (t[d - 4 + k] + p - v % p) % p;
    }
    return {t[0], t[1], t[2], t[3]};
  }

  E pow(E a, const mpz_class& e) const {
    E r = one();
    for (long i = (long)mpz_sizeinbase(e.get_mpz_t(), 2) - 1; i >= 0; --i) {
      r = mul(r, r);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, a);
    }
    return r;
  }

  bool is_zero(const E& a) const { return !a[0] && !a[1] && !a[2] && !a[3]; }
  bool eq(const E& a, const E& b) const { return a == b; }

  long long coord_mod_p(const mpq_class& q) const {
    mpz_class num = q.get_num() % p, den = q.get_den() % p;
    long long n = num.get_si(), d = den.get_si();
    if (n < 0) n += p;
    if (d < 0) d += p;
    if (d == 0) throw domain_error("reduction: denominator divisible by p");
    return mulmod(n, powmod(d, p - 2, p), p);
  }

  E reduce(const Cyclo& a) const {
    E zr = zeta();
    E acc = zero(), zp = one();
    for (int i = 0; i < 4; ++i) {
      E ci = {coord_mod_p(a.c[i]), 0, 0, 0};
      acc = add(acc, mul(ci, zp));
      zp = mul(zp, zr);
    }
    return acc;
  }

  E add(const E& a, const E& b) const {
    E r;
    for (int i = 0; i < 4; ++i) r[i] = (a[i] + b[i]) % p;
    return r;
  }

  E zeta() const {
    if (f == 1) return {root % p, 0, 0, 0};
    return {0, 1, 0, 0};
  }
};

Fq make_fq(const PrimeIdealK& P) {
  Fq F;
  F.p = P.p;
  F.f = P.residue_degree;
  F.quad = P.quad;
  F.root = P.root;
  return F;
}

int valuation_at_integral(const Cyclo& a, const PrimeIdealK& P, Cyclo* unit_out) {
  Fq F = make_fq(P);
  Cyclo u = a;
  int v = 0;
  while (F.is_zero(F.reduce(u))) {
    u = u / P.generator;
    if (!u.is_integral()) throw std::logic_error("valuation_at: inexact division");
    ++v;
    if (v > 4096) throw std::logic_error("valuation_at: runaway valuation");
  }
  if (unit_out) *unit_out = u;
  return v;
}

}  // namespace

int valuation_at(const Cyclo& a, const PrimeIdealK& P) {
  if (a.is_zero()) throw domain_error("valuation_at of zero");
  if (P.split_type == SplitType::ramified) return pi5_valuation(a);
  mpz_class den = a.denominator_lcm();
  Cyclo num = a * Cyclo(mpq_class(den));
  int vn = valuation_at_integral(num, P, nullptr);
  int vd = valuation_at_integral(Cyclo(mpq_class(den)), P, nullptr);
  return vn - vd;
}

namespace {

// exponent pair at an unramified prime for an integral element
std::array<int, 2> class_pair_integral(const Cyclo& a, const PrimeIdealK& P) {
  Fq F = make_fq(P);
  Cyclo u;
  int v = valuation_at_integral(a, P, &u);
  mpz_class q = 1;
  for (int i = 0; i < P.residue_degree; ++i) q *= P.p;
  mpz_class qm1 = q - 1;
  if (qm1 % 5 != 0) return {v, 0};  // quotient generated by the uniformizer alone
  int n = 0;
  mpz_class t = qm1;
  while (t % 5 == 0) t /= 5, ++n;
  Fq::E y = F.pow(F.reduce(u), qm1 / 5);
  Fq::E z = F.pow(F.zeta(), t);
  Fq::E zk = F.one();
  for (int k = 0; k < 5; ++k) {
    if (F.eq(y, zk)) return {v, k};
    zk = F.mul(zk, z);
  }
  throw std::logic_error("class_at_unramified: fifth root mismatch");
}

}  // namespace

UnitClass class_at_unramified(const Cyclo& a, const PrimeIdealK& P) {
  if (a.is_zero()) throw domain_error("class_at_unramified of zero");
  if (P.split_type == SplitType::ramified)
    throw domain_error("class_at_unramified: use class_at_5 at the ramified prime");
  mpz_class den = a.denominator_lcm();
  Cyclo num = a * Cyclo(mpq_class(den));
  auto cn = class_pair_integral(num, P);
  auto cd = class_pair_integral(Cyclo(mpq_class(den)), P);
  UnitClass c;
  c.basis_label = P.label();
  c.exponents = {(uint8_t)(((cn[0] - cd[0]) % 5 + 5) % 5),
                 (uint8_t)(((cn[1] - cd[1]) % 5 + 5) % 5)};
  return c;
}

std::array<std::array<uint8_t, 6>, 6> galois_matrix_at_5() {
  std::array<std::array<uint8_t, 6>, 6> M{};
  Cyclo pi = Cyclo(1) - Cyclo::zeta();
  std::array<Cyclo, 6> basis = {pi,
                                Cyclo(1) + pi,
                                Cyclo(1) + pi.pow(2),
                                Cyclo(1) + pi.pow(3),
                                Cyclo(1) + pi.pow(4),
                                Cyclo(1) + pi.pow(5)};
  for (int i = 0; i < 6; ++i) {
    UnitClass c = class_at_5(basis[i].galois(2));
    for (int j = 0; j < 6; ++j) M[i][j] = c.exponents[j];
  }
  return M;
}

}  // namespace quintic
