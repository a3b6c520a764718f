#include "quintic/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

namespace quintic {

Cyclo::Cyclo(mpq_class c0, mpq_class c1, mpq_class c2, mpq_class c3) {
  c = {std::move(c0), std::move(c1), std::move(c2), std::move(c3)};
  for (auto& x : c) x.canonicalize();
}

Cyclo Cyclo::zeta(int k) {
  k %= 5;
  if (k < 0) k += 5;
  Cyclo r;
  if (k == 4) {
    r.c = {-1, -1, -1, -1};
  } else {
    r.c[k] = 1;
  }
  return r;
}

Cyclo Cyclo::sqrt5() { return Cyclo(-1, 0, -2, -2); }

Cyclo Cyclo::unit_F() { return Cyclo(0, 0, 1, 1); }

Cyclo Cyclo::operator+(const Cyclo& o) const {
  Cyclo r;
  for (int i = 0; i < 4; ++i) r.c[i] = c[i] + o.c[i];
  return r;
}

Cyclo Cyclo::operator-(const Cyclo& o) const {
  Cyclo r;
  for (int i = 0; i < 4; ++i) r.c[i] = c[i] - o.c[i];
  return r;
}

Cyclo Cyclo::operator-() const {
  Cyclo r;
  for (int i = 0; i < 4; ++i) r.c[i] = -c[i];
  return r;
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
  std::array<mpq_class, 7> t{};
  for (int i = 0; i < 4; ++i) {
    if (c[i] == 0) continue;
    for (int j = 0; j < 4; ++j) t[i + j] += c[i] * o.c[j];
  }
  // z^k for k >= 4 via z^4 = -1 - z - z^2 - z^3 (applied high to low)
  for (int d = 6; d >= 4; --d) {
    if (t[d] == 0) continue;
    mpq_class v = t[d];
    t[d] = 0;
    for (int j = 0; j < 4; ++j) t[d - 4 + j] -= v;
  }
  Cyclo r;
  for (int i = 0; i < 4; ++i) r.c[i] = t[i];
  return r;
}

Cyclo Cyclo::galois(int r) const {
  if (r < 1 || r > 4) throw domain_error("galois: exponent must be in {1,2,3,4}");
  std::array<mpq_class, 5> t{};
  t[0] = c[0];
  for (int i = 1; i < 4; ++i) t[(i * r) % 5] += c[i];
  Cyclo out;
  for (int i = 0; i < 4; ++i) out.c[i] = t[i];
  if (t[4] != 0)
    for (int i = 0; i < 4; ++i) out.c[i] -= t[4];
  return out;
}

mpq_class Cyclo::norm() const {
  Cyclo n = *this * galois(2) * galois(3) * galois(4);
  // the product of all conjugates is rational
  if (n.c[1] != 0 || n.c[2] != 0 || n.c[3] != 0)
    throw std::logic_error("norm: conjugate product not rational");
  return n.c[0];
}

mpq_class Cyclo::trace() const { return 4 * c[0] - c[1] - c[2] - c[3]; }

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw domain_error("division by zero in Q(zeta5)");
  Cyclo conj = galois(2) * galois(3) * galois(4);
  mpq_class n = norm();
  Cyclo r;
  for (int i = 0; i < 4; ++i) {
    r.c[i] = conj.c[i] / n;
    r.c[i].canonicalize();
  }
  return r;
}

Cyclo Cyclo::operator/(const Cyclo& o) const { return *this * o.inverse(); }

Cyclo Cyclo::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclo r(1), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

bool Cyclo::is_zero() const {
  return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0;
}

bool Cyclo::is_rational() const { return c[1] == 0 && c[2] == 0 && c[3] == 0; }

bool Cyclo::is_integral() const {
  for (const auto& x : c)
    if (x.get_den() != 1) return false;
  return true;
}

bool Cyclo::is_unit() const {
  if (!is_integral()) return false;
  mpq_class n = norm();
  return n == 1 || n == -1;
}

mpz_class Cyclo::denominator_lcm() const {
  mpz_class d = 1;
  for (const auto& x : c) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den().get_mpz_t());
  return d;
}

std::string Cyclo::str() const {
  static const char* bas[4] = {"", "z5", "z5^2", "z5^3"};
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < 4; ++i) {
    if (c[i] == 0) continue;
    mpq_class v = c[i];
    if (!first) {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    } else if (v < 0 && i > 0) {
      os << "-";
      v = -v;
    }
    if (i == 0 || v != 1) {
      os << v.get_str();
      if (i > 0) os << "*";
    } else if (first && c[i] < 0) {
      // sign already emitted
    }
    if (i > 0) os << bas[i];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string split_type_name(SplitType t) {
  switch (t) {
    case SplitType::inert: return "inert";
    case SplitType::split_two: return "split-two";
    case SplitType::split_completely: return "split-completely";
    case SplitType::ramified: return "ramified";
  }
  return "?";
}

std::string PrimeIdealK::label() const {
  std::ostringstream os;
  os << "p" << p;
  if (split_type == SplitType::split_completely) os << "r" << root;
  if (split_type == SplitType::split_two) os << "q" << quad[1];
  return os.str();
}

SplitType splitting_type(long p) {
  if (!is_prime(p)) throw domain_error("splitting_type: input is not prime");
  if (p == 5) return SplitType::ramified;
  switch (p % 5) {
    case 1: return SplitType::split_completely;
    case 4: return SplitType::split_two;
    default: return SplitType::inert;
  }
}

int val5(const mpq_class& q) {
  if (q == 0) throw domain_error("val5 of zero");
  int v = 0;
  mpz_class n = q.get_num();
  while (mpz_divisible_ui_p(n.get_mpz_t(), 5)) n /= 5, ++v;
  mpz_class d = q.get_den();
  while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) d /= 5, --v;
  return v;
}

namespace {

// int64 cyclotomic product for the generator box search (small coordinates)
using IVec = std::array<long long, 4>;

IVec imul(const IVec& a, const IVec& b) {
  long long t[7] = {0, 0, 0, 0, 0, 0, 0};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t[i + j] += a[i] * b[j];
  for (int d = 6; d >= 4; --d) {
    long long v = t[d];
    if (!v) continue;
    t[d] = 0;
    for (int j = 0; j < 4; ++j) t[d - 4 + j] -= v;
  }
  return {t[0], t[1], t[2], t[3]};
}

IVec igal(const IVec& a, int r) {
  long long t[5] = {a[0], 0, 0, 0, 0};
  for (int i = 1; i < 4; ++i) t[(i * r) % 5] += a[i];
  IVec out = {t[0], t[1], t[2], t[3]};
  if (t[4])
    for (auto& x : out) x -= t[4];
  return out;
}

long long inorm(const IVec& a) {
  IVec n = imul(imul(a, igal(a, 2)), imul(igal(a, 3), igal(a, 4)));
  return n[0];
}

Cyclo to_cyclo(const IVec& v) {
  return Cyclo(mpq_class((long)v[0]), mpq_class((long)v[1]), mpq_class((long)v[2]),
               mpq_class((long)v[3]));
}

// Lexicographically least generator of the ideal (p, z - r) within the box
// |c_i| <= B.  A box element with |norm| = p dividing into the ideal is a
// generator, so the first hit in lex order is the canonical one.
Cyclo search_generator_deg1(long p, long r, long B) {
  long long r2 = mulmod(r, r, p), r3 = mulmod(r2, r, p);
  for (long c0 = -B; c0 <= B; ++c0)
    for (long c1 = -B; c1 <= B; ++c1)
      for (long c2 = -B; c2 <= B; ++c2) {
        // c0 + c1 r + c2 r^2 + c3 r^3 = 0 (mod p)
        long long rhs = ((-(c0 + mulmod(c1, r, p) + mulmod(c2, r2, p))) % p + p) % p;
        long long inv = powmod(r3, p - 2, p);
        long long c3base = mulmod(rhs, inv, p);
        // candidates c3base + k p inside [-B, B], ascending
        long long start = c3base - ((c3base + B) / p) * p;
        while (start < -B) start += p;
        for (long long c3 = start; c3 <= B; c3 += p) {
          IVec v = {c0, c1, c2, c3};
          long long n = inorm(v);
          if (n == p || n == -p) return to_cyclo(v);
        }
      }
  throw bound_error("generator search box exhausted (p=" + std::to_string(p) +
                    "); increase bound scale");
}

}  // namespace

std::pair<mpq_class, mpq_class> sqrt5_form(const Cyclo& g) {
  // a + b sqrt5 has coordinates (a - b, 0, -2b, -2b)
  if (g.c[1] != 0 || g.c[2] != g.c[3])
    throw domain_error("element is not of the form a + b*sqrt(5)");
  mpq_class b = -g.c[2] / 2;
  mpq_class a = g.c[0] + b;
  a.canonicalize();
  b.canonicalize();
  return {a, b};
}

Cyclo from_sqrt5_form(const mpq_class& a, const mpq_class& b) {
  return Cyclo(a - b, 0, -2 * b, -2 * b);
}

namespace {

int residue_mod5(const mpq_class& q) {
  // q must have denominator coprime to 5
  mpz_class num = q.get_num() % 5, den = q.get_den() % 5;
  long n = num.get_si(), d = den.get_si();
  if (n < 0) n += 5;
  if (d < 0) d += 5;
  if (d == 0) throw domain_error("residue_mod5: denominator divisible by 5");
  static const int inv[5] = {0, 1, 3, 2, 4};
  return (int)((n * inv[d]) % 5);
}

struct Key {
  mpq_class ab, aa;
  int sb, sa;
  bool operator<(const Key& o) const {
    if (ab != o.ab) return ab < o.ab;
    if (aa != o.aa) return aa < o.aa;
    if (sb != o.sb) return sb < o.sb;
    return sa < o.sa;
  }
};

Key form_key(const mpq_class& a, const mpq_class& b) {
  return Key{abs(b), abs(a), b < 0, a < 0};
}

}  // namespace

SplitTwoForm normalize_generator_split_two(const Cyclo& g) {
  auto [a, b] = sqrt5_form(g);  // throws if not in F
  // must lie in O_F = Z[(1+sqrt5)/2]: 2a, 2b integers of equal parity
  mpq_class a2 = 2 * a, b2 = 2 * b;
  if (a2.get_den() != 1 || b2.get_den() != 1 ||
      (a2.get_num() - b2.get_num()) % 2 != 0)
    throw domain_error("element is not in the ring of integers of Q(sqrt5)");
  mpq_class fn = a * a - 5 * b * b;
  if (fn.get_den() != 1) throw std::logic_error("norm not integral");
  mpz_class nf = abs(fn.get_num());
  if (!nf.fits_slong_p() || !is_prime(nf.get_si()) || nf.get_si() % 5 != 4)
    throw domain_error("element does not generate a prime over p = 4 (mod 5)");

  // step 1: multiply by powers of -u_F until a = 2 (mod 5)
  // -u_F = (1+sqrt5)/2 sends a -> 3a (mod 5); a = 2^k -> need k-1 steps
  mpq_class ca = a, cb = b;
  auto mul_minus_uF = [&](int times) {
    for (int i = 0; i < times; ++i) {
      mpq_class na = (ca + 5 * cb) / 2, nb = (ca + cb) / 2;
      ca = na;
      cb = nb;
    }
  };
  static const int dlog2[5] = {-1, 4, 1, 3, 2};  // a = 2^k mod 5
  int ar = residue_mod5(ca);
  if (ar == 0) throw std::logic_error("split-two generator with a = 0 mod 5");
  int k = dlog2[ar];
  if (k != 1) mul_minus_uF(k - 1);  // 3 = 2^{-1}: each step divides the dlog by 2...
  // (each -u_F multiply sends 2^k to 2^{k-1} mod 5 since 3*2^k = 2^{k-1}*... )
  if (residue_mod5(ca) != 2) {
    // fall back: apply until it lands (at most 3 more steps)
    for (int i = 0; i < 4 && residue_mod5(ca) != 2; ++i) mul_minus_uF(1);
  }
  if (residue_mod5(ca) != 2) throw std::logic_error("a-residue normalization failed");

  // step 2: canonicalize inside the a-residue stabilizer <-u_F^2> by a
  // deterministic |b|-descent
  auto stab = [](mpq_class& x, mpq_class& y, bool fwd) {
    // -u_F^2 = -(3+sqrt5)/2 ;  inverse = -(3-sqrt5)/2
    mpq_class nx, ny;
    if (fwd) {
      nx = -(3 * x + 5 * y) / 2;
      ny = -(x + 3 * y) / 2;
    } else {
      nx = (-3 * x + 5 * y) / 2;
      ny = (x - 3 * y) / 2;
    }
    x = nx;
    y = ny;
  };
  for (bool fwd : {true, false}) {
    for (;;) {
      mpq_class ta = ca, tb = cb;
      stab(ta, tb, fwd);
      if (form_key(ta, tb) < form_key(ca, cb)) {
        ca = ta;
        cb = tb;
      } else {
        break;
      }
    }
  }
  SplitTwoForm out;
  out.a = ca;
  out.b = cb;
  out.generator = from_sqrt5_form(ca, cb);
  return out;
}

std::vector<PrimeIdealK> factor_rational_prime(long p, double bound_scale) {
  SplitType st = splitting_type(p);
  std::vector<PrimeIdealK> out;
  if (st == SplitType::ramified) {
    PrimeIdealK P;
    P.p = 5;
    P.split_type = st;
    P.generator = Cyclo(1) - Cyclo::zeta();
    P.residue_degree = 1;
    P.norm = 5;
    out.push_back(P);
    return out;
  }
  if (st == SplitType::inert) {
    PrimeIdealK P;
    P.p = p;
    P.split_type = st;
    P.generator = Cyclo(p);
    P.residue_degree = 4;
    mpz_class n = p;
    P.norm = n * n * n * n;
    out.push_back(P);
    return out;
  }
  if (st == SplitType::split_two) {
    // solve |a^2 - 5 b^2| = p over half-integers: smallest 2b = t >= 0 with
    // 5 t^2 +- 4p a square of matching parity
    long found_t = -1;
    mpz_class found_s;
    for (long t = 0;; ++t) {
      if ((double)t * t * 5 > 4.0 * p + 5e14) break;
      for (int sgn : {+1, -1}) {
        mpz_class s2 = mpz_class(5) * t * t + sgn * 4 * mpz_class(p);
        if (s2 < 0) continue;
        mpz_class s = sqrt(s2);
        if (s * s == s2 && (s - t) % 2 == 0) {
          found_t = t;
          found_s = s;
          break;
        }
      }
      if (found_t >= 0) break;
    }
    if (found_t < 0) throw bound_error("no a+b*sqrt5 generator found");
    mpq_class a(found_s), b(found_t);
    a /= 2;
    b /= 2;
    auto norm1 = normalize_generator_split_two(from_sqrt5_form(a, b));
    auto norm2 = normalize_generator_split_two(from_sqrt5_form(a, -b));
    // residue data: Phi_5 = (t^2 + u t + 1)(t^2 + v t + 1) mod p with
    // u, v = (1 -+ sqrt(5))/2 mod p
    long long s5 = sqrt_mod(5, p);
    long long inv2 = powmod(2, p - 2, p);
    long long u = mulmod((1 - s5 % p + p) % p, inv2, p);
    long long v = mulmod((1 + s5) % p, inv2, p);
    if (u > v) std::swap(u, v);
    auto attach = [&](const SplitTwoForm& f) {
      PrimeIdealK P;
      P.p = p;
      P.split_type = st;
      P.generator = f.generator;
      P.residue_degree = 2;
      P.norm = mpz_class(p) * p;
      // pick the quadratic factor the generator reduces to zero against
      for (long long w : {u, v}) {
        // reduce generator coords as poly in t modulo t^2 + w t + 1 and p
        std::array<long long, 2> acc = {0, 0};  // a0 + a1 t
        std::array<long long, 2> tp = {1, 0};
        for (int i = 0; i < 4; ++i) {
          mpz_class ci = f.generator.c[i].get_num() % p;
          long long cl = ci.get_si();
          if (cl < 0) cl += p;
          acc[0] = (acc[0] + mulmod(cl, tp[0], p)) % p;
          acc[1] = (acc[1] + mulmod(cl, tp[1], p)) % p;
          // tp *= t mod (t^2 + w t + 1)
          long long n0 = mulmod((p - tp[1]) % p, 1, p);
          long long n1 = (tp[0] + mulmod((p - w) % p, tp[1], p)) % p;
          tp = {n0, n1};
        }
        if (acc[0] == 0 && acc[1] == 0) {
          P.quad = {1, (long)w};
          break;
        }
      }
      if (P.quad[0] == 0) throw std::logic_error("split-two residue pairing failed");
      return P;
    };
    PrimeIdealK P1 = attach(norm1), P2 = attach(norm2);
    if (P1.quad[1] > P2.quad[1]) std::swap(P1, P2);
    out.push_back(P1);
    out.push_back(P2);
    return out;
  }
  // split completely: roots of Phi_5 mod p are g^{(p-1)/5 * j}
  long long g = primitive_root(p);
  long long r0 = powmod(g, (p - 1) / 5, p);
  std::vector<long> roots;
  long long r = r0;
  for (int j = 0; j < 4; ++j) {
    roots.push_back((long)r);
    r = mulmod(r, r0, p);
  }
  std::sort(roots.begin(), roots.end());
  long B = (long)std::ceil(3.0 * std::pow((double)p, 0.25) * bound_scale) + 2;
  for (long rt : roots) {
    PrimeIdealK P;
    P.p = p;
    P.split_type = st;
    P.generator = search_generator_deg1(p, rt, B);
    P.residue_degree = 1;
    P.norm = p;
    P.root = rt;
    out.push_back(P);
  }
  return out;
}

UnitDecomposition decompose_unit(const Cyclo& u) {
  if (!u.is_unit()) throw domain_error("decompose_unit: not a unit of Z[zeta5]");
  // |sigma_1(1+zeta)| = 2 cos(pi/5) = golden ratio
  std::complex<double> z(std::cos(2 * M_PI / 5), std::sin(2 * M_PI / 5));
  auto embed = [&](const Cyclo& x) {
    std::complex<double> acc = 0, zp = 1;
    for (int i = 0; i < 4; ++i) {
      acc += x.c[i].get_d() * zp;
      zp *= z;
    }
    return acc;
  };
  double lu = std::log(std::abs(embed(u)));
  double lf = std::log(std::abs(embed(Cyclo(1) + Cyclo::zeta())));
  long b0 = std::lround(lu / lf);
  Cyclo fund = Cyclo(1) + Cyclo::zeta();
  for (long b : {b0, b0 - 1, b0 + 1}) {
    Cyclo v = u * fund.pow(-b);
    for (int s : {1, -1})
      for (int a = 0; a < 5; ++a) {
        Cyclo w = Cyclo::zeta(a);
        if (s < 0) w = -w;
        if (v == w) return {s, a, b};
      }
  }
  throw std::logic_error("decompose_unit: no root-of-unity match");
}

}  // namespace quintic
