#include "quintic/selmer.hpp"

#include <algorithm>
#include <sstream>

#include "quintic/rootnumber.hpp"

namespace quintic {

DescentContext build_context(long m) {
  if (m <= 0) throw domain_error("descent: m must be positive");
  if (m % 2 == 0) throw domain_error("descent: m must be odd");
  if (m % 5 == 0) throw domain_error("descent: m must not be divisible by 5");
  if (!is_squarefree(m)) throw domain_error("descent: m must be square-free");

  DescentContext ctx;
  ctx.m = m;
  ctx.two = factor_rational_prime(2)[0];
  ctx.v5 = factor_rational_prime(5)[0];
  for (auto& [p, e] : factorize(m)) {
    (void)e;
    ctx.m_prime_factors.push_back((long)p);
    for (auto& P : factor_rational_prime((long)p)) ctx.m_primes.push_back(P);
  }

  auto amb = std::make_shared<Ambient>();
  amb->name = "KS5(m=" + std::to_string(m) + ")";
  amb->labels = {"zeta5", "1+zeta5", "2", "1-zeta5"};
  ctx.ks5_elements = {Cyclo::zeta(), Cyclo(1) + Cyclo::zeta(), Cyclo(2),
                      Cyclo(1) - Cyclo::zeta()};
  for (size_t i = 0; i < ctx.m_primes.size(); ++i) {
    const auto& P = ctx.m_primes[i];
    std::string lab;
    if (P.split_type == SplitType::inert) {
      lab = std::to_string(P.p);
    } else {
      int idx = 1;
      for (size_t j = 0; j < i; ++j)
        if (ctx.m_primes[j].p == P.p) ++idx;
      lab = "pi" + std::to_string(idx) + "(" + std::to_string(P.p) + ")";
    }
    amb->labels.push_back(lab);
    ctx.ks5_elements.push_back(P.generator);
  }
  ctx.ks5 = amb;

  auto l5 = std::make_shared<Ambient>();
  l5->name = "K5";
  l5->labels = {"alpha", "beta", "gamma", "delta", "epsilon", "eta"};
  ctx.local5 = l5;
  return ctx;
}

namespace {

struct ImageAccumulator {
  AmbientPtr amb;
  F5Matrix vectors;
  F5Subspace space;

  explicit ImageAccumulator(AmbientPtr a) : amb(std::move(a)) {
    space = F5Subspace::zero(amb);
  }
  bool add(const F5Vec& v) {
    if (space.contains(v)) return false;
    vectors.push_back(v);
    space = F5Subspace::span(amb, vectors);
    return true;
  }
};

// probe one residue disc x = lift(digits) + O(pi^L); returns the F-class of
// a point on y^2 = x^5 + m^2 over the disc, refining the disc when the
// needed digits are not determined at this depth
void probe_disc(const Local5& R, const std::vector<uint8_t>& xd, long m,
                ImageAccumulator& acc, const EnumOptions& opt, long& skipped) {
  int L = (int)xd.size();
  int valid = L + 4;  // x^5 + m^2 is well defined modulo pi^(L+4) on the disc

  auto recurse = [&]() {
    if (L >= opt.max_depth) {
      ++skipped;
      return;
    }
    for (uint8_t d = 0; d < 5; ++d) {
      auto child = xd;
      child.push_back(d);
      Local5 R2(std::min(kMaxPi5Precision, (int)child.size() + 13));
      probe_disc(R2, child, m, acc, opt, skipped);
      if (opt.early_stop && acc.space.dim() >= 3) return;
    }
  };

  auto x = R.from_digits(xd);
  auto t = R.add(R.pow(x, 5), R.from_int((long long)m * m));
  auto td = R.digits(t, valid);
  int tv = -1;
  for (int i = 0; i < valid; ++i)
    if (td[i]) {
      tv = i;
      break;
    }
  if (tv < 0) {  // t vanishes beyond disc resolution
    recurse();
    return;
  }
  if (tv % 2 == 1) return;                     // odd valuation: not a square
  if (td[tv] != 1 && td[tv] != 4) return;      // Teichmueller part not +-1
  int avail = valid - tv / 2;                  // unit digits of y -+ m we can trust
  if (avail < 6) {
    recurse();
    return;
  }

  // y = pi^(tv/2) * sqrt(unit part of t)
  auto u = t;
  for (int i = 0; i < tv; ++i) u = R.div_pi(u);
  auto w = R.from_int(td[tv] == 1 ? 1 : 2);
  auto half = R.inv_unit(R.from_int(2));
  for (int i = 0; i < 9; ++i) w = R.mul(R.add(w, R.mul(u, R.inv_unit(w))), half);
  std::vector<uint8_t> shift(tv / 2 + 1, 0);
  shift[0] = 0;
  shift[tv / 2] = 1;
  auto y = R.mul(w, R.from_digits(shift));

  auto me = R.from_int(m);
  auto a = R.sub(y, me);  // F-value of (x, y)
  auto b = R.add(y, me);  // (y+m); class(y-m) = -class(y+m)
  int va = R.valuation_bounded(a, std::min(avail, 6));
  std::array<uint8_t, 6> cls;
  if (va == 0) {
    cls = R.unit_class(a, 0);
  } else {
    // y = m to visible precision: use (y-m)(y+m) = x^5, a fifth power
    cls = R.unit_class(b, 0);
    for (auto& e : cls) e = (uint8_t)((5 - e % 5) % 5);
  }
  acc.add(F5Vec(cls.begin(), cls.end()));
}

// conjugate point pairs over E = K5(theta), theta^2 = 2 (a non-square unit):
// for Q = (x, y) with x in E \ K5, the divisor Q + Qbar - 2*infinity is
// K5-rational and its F-value is Norm_{E/K5}(y - m)

struct QuadExt {
  const Local5& R;
  Local5::Elt two;
  using E = std::array<Local5::Elt, 2>;  // a + b theta

  explicit QuadExt(const Local5& r) : R(r), two(r.from_int(2)) {}

  E add(const E& x, const E& y) const { return {R.add(x[0], y[0]), R.add(x[1], y[1])}; }
  E sub(const E& x, const E& y) const { return {R.sub(x[0], y[0]), R.sub(x[1], y[1])}; }
  E mul(const E& x, const E& y) const {
    return {R.add(R.mul(x[0], y[0]), R.mul(two, R.mul(x[1], y[1]))),
            R.add(R.mul(x[0], y[1]), R.mul(x[1], y[0]))};
  }
  E pow(E x, long e) const {
    E r = {R.one(), R.zero()};
    while (e > 0) {
      if (e & 1) r = mul(r, x);
      x = mul(x, x);
      e >>= 1;
    }
    return r;
  }
  E conj(const E& x) const { return {x[0], R.sub(R.zero(), x[1])}; }
  Local5::Elt norm(const E& x) const { return mul(x, conj(x))[0]; }
  E inv_unit(const E& x) const {
    Local5::Elt ni = R.inv_unit(norm(x));
    E c = conj(x);
    return {R.mul(c[0], ni), R.mul(c[1], ni)};
  }
  std::pair<int, int> residue(const E& x) const {
    return {(int)(x[0][0] % 5), (int)(x[1][0] % 5)};
  }
  bool div_pi_both(E& x) const {
    if (x[0][0] % 5 || x[1][0] % 5) return false;
    x = {R.div_pi(x[0]), R.div_pi(x[1])};
    return true;
  }
};

std::pair<int, int> f25_mul(std::pair<int, int> a, std::pair<int, int> b) {
  return {(a.first * b.first + 2 * a.second * b.second) % 5,
          (a.first * b.second + a.second * b.first) % 5};
}

bool f25_is_square(std::pair<int, int> r) {
  // unit square in F_25 <=> r^12 = 1
  std::pair<int, int> acc = {1, 0}, base = r;
  int e = 12;
  while (e) {
    if (e & 1) acc = f25_mul(acc, base);
    base = f25_mul(base, base);
    e >>= 1;
  }
  return acc == std::make_pair(1, 0);
}

void probe_quad_disc(const Local5& R, const std::vector<uint8_t>& ad,
                     const std::vector<uint8_t>& bd, long m, ImageAccumulator& acc,
                     const EnumOptions& opt, long& skipped) {
  int L = (int)ad.size();
  QuadExt Q(R);

  auto recurse = [&]() {
    if (L >= opt.quad_max_depth) {
      ++skipped;
      return;
    }
    for (uint8_t da = 0; da < 5 && !(opt.early_stop && acc.space.dim() >= 3); ++da)
      for (uint8_t db = 0; db < 5; ++db) {
        auto ca = ad, cb = bd;
        ca.push_back(da);
        cb.push_back(db);
        Local5 R2(std::min(kMaxPi5Precision, (int)ca.size() + 15));
        probe_quad_disc(R2, ca, cb, m, acc, opt, skipped);
        if (opt.early_stop && acc.space.dim() >= 3) return;
      }
  };

  QuadExt::E x = {R.from_digits(ad), R.from_digits(bd)};
  QuadExt::E t = Q.add(Q.pow(x, 5), {R.from_int((long long)m * m), R.zero()});
  int valid = L + 4;  // x^5 + m^2 determined mod pi^(L+4) on the disc
  int tv = -1;
  {
    QuadExt::E u = t;
    for (int i = 0; i < valid; ++i) {
      if (Q.residue(u) != std::make_pair(0, 0)) {
        tv = i;
        break;
      }
      if (!Q.div_pi_both(u)) break;
    }
  }
  if (tv < 0) {
    recurse();
    return;
  }
  if (tv % 2 == 1) return;
  QuadExt::E u = t;
  for (int i = 0; i < tv; ++i) Q.div_pi_both(u);
  if (!f25_is_square(Q.residue(u))) return;

  // Newton square root in E from a residue square root
  std::pair<int, int> r = Q.residue(u), w0 = {0, 0};
  for (int i = 0; i < 5 && w0 == std::make_pair(0, 0); ++i)
    for (int j = 0; j < 5; ++j)
      if ((i || j) && f25_mul({i, j}, {i, j}) == r) {
        w0 = {i, j};
        break;
      }
  QuadExt::E w = {R.from_int(w0.first), R.from_int(w0.second)};
  QuadExt::E half = {R.inv_unit(R.from_int(2)), R.zero()};
  for (int i = 0; i < 9; ++i) w = Q.mul(Q.add(w, Q.mul(u, Q.inv_unit(w))), half);
  std::vector<uint8_t> shift(tv / 2 + 1, 0);
  shift[tv / 2] = 1;
  auto sh = R.from_digits(shift);
  QuadExt::E y = {R.mul(w[0], sh), R.mul(w[1], sh)};

  Local5::Elt N = Q.norm(Q.sub(y, {R.from_int(m), R.zero()}));
  // N determined mod pi^(L + 4 - tv/2 + Vn/2); need Vn + 6 digits
  int scan = valid - tv / 2;
  int Vn = R.valuation_bounded(N, std::min(scan, R.precision() - 7));
  if (Vn < 0 || Vn / 2 + 6 > valid - tv / 2) {
    recurse();
    return;
  }
  auto unit = N;
  for (int i = 0; i < Vn; ++i) unit = R.div_pi(unit);
  auto cls = R.unit_class(unit, Vn);
  acc.add(F5Vec(cls.begin(), cls.end()));
}

}  // namespace

F5Subspace local_image_at_5(const DescentContext& ctx, const EnumOptions& opt) {
  ImageAccumulator acc(ctx.local5);
  // torsion point (0, m) - infinity maps to 2m
  UnitClass seed = class_at_5(Cyclo(2 * ctx.m));
  acc.add(F5Vec(seed.exponents.begin(), seed.exponents.end()));

  int L = opt.start_depth;
  Local5 R(std::min(kMaxPi5Precision, L + 13));
  long total = 1;
  for (int i = 0; i < L; ++i) total *= 5;
  long skipped = 0;
  long stall = 0;
  const long stall_limit = 20000;  // hand over to the conjugate-pair stage
  for (long n = 1; n < total; ++n) {
    std::vector<uint8_t> xd(L);
    long v = n;
    for (int i = 0; i < L; ++i) {
      xd[i] = (uint8_t)(v % 5);
      v /= 5;
    }
    int before = acc.space.dim();
    probe_disc(R, xd, ctx.m, acc, opt, skipped);
    if (opt.early_stop && acc.space.dim() >= 3) break;
    stall = (acc.space.dim() > before) ? 0 : stall + 1;
    if (opt.early_stop && stall > stall_limit) break;
  }

  if (acc.space.dim() < 3) {
    // conjugate-pair stage over the unramified quadratic extension
    int L = opt.quad_start_depth;
    Local5 R2(std::min(kMaxPi5Precision, L + 15));
    long side = 1;
    for (int i = 0; i < L; ++i) side *= 5;
    for (long na = 0; na < side && acc.space.dim() < 3; ++na) {
      for (long nb = 1; nb < side; ++nb) {  // nb = 0 is the rational block
        std::vector<uint8_t> ad(L), bd(L);
        long va = na, vb = nb;
        for (int i = 0; i < L; ++i) {
          ad[i] = (uint8_t)(va % 5);
          va /= 5;
          bd[i] = (uint8_t)(vb % 5);
          vb /= 5;
        }
        probe_quad_disc(R2, ad, bd, ctx.m, acc, opt, skipped);
        if (opt.early_stop && acc.space.dim() >= 3) break;
      }
    }
  }

  if (acc.space.dim() != 3)
    throw bound_error("local image at 5 did not reach dimension 3 (m=" +
                      std::to_string(ctx.m) + ", skipped=" + std::to_string(skipped) +
                      " discs)");
  return acc.space;
}

F5Subspace local_image_away_5(const DescentContext& ctx, const PrimeIdealK& P) {
  if (P.split_type == SplitType::ramified)
    throw domain_error("local_image_away_5: prime divides 5");
  auto amb = std::make_shared<Ambient>();
  amb->name = "K_" + P.label();
  amb->labels = {"alpha", "beta"};
  UnitClass c = class_at_unramified(Cyclo(2 * ctx.m), P);
  return F5Subspace::span(amb, {F5Vec(c.exponents.begin(), c.exponents.end())});
}

F5Matrix isotropy_matrix_at_5(const DescentContext& ctx) {
  F5Matrix A;
  for (const auto& g : ctx.ks5_elements) {
    UnitClass c = class_at_5(g);
    A.push_back(F5Vec(c.exponents.begin(), c.exponents.end()));
  }
  return A;
}

F5Matrix isotropy_matrix_at(const DescentContext& ctx, const PrimeIdealK& P) {
  F5Matrix A;
  for (const auto& g : ctx.ks5_elements) {
    UnitClass c = class_at_unramified(g, P);
    A.push_back(F5Vec(c.exponents.begin(), c.exponents.end()));
  }
  return A;
}

F5Vec class_vector_2m(const DescentContext& ctx) {
  F5Vec v(ctx.ks5->dim(), 0);
  v[2] = 1;  // the generator "2"
  Cyclo prod(1);
  for (size_t i = 0; i < ctx.m_primes.size(); ++i) {
    v[4 + i] = 1;
    prod *= ctx.m_primes[i].generator;
  }
  Cyclo u = Cyclo(ctx.m) / prod;
  UnitDecomposition d = decompose_unit(u);
  v[0] = (uint8_t)((v[0] + d.zeta_exp) % 5);
  long b = ((d.fund_exp % 5) + 5) % 5;
  v[1] = (uint8_t)((v[1] + b) % 5);
  return v;
}

SelmerResult selmer_compute(const DescentContext& ctx, const EnumOptions& opt) {
  F5Subspace sel = preimage(ctx.ks5, isotropy_matrix_at_5(ctx), local_image_at_5(ctx, opt));
  std::vector<PrimeIdealK> others;
  others.push_back(ctx.two);
  for (const auto& P : ctx.m_primes) others.push_back(P);
  for (const auto& P : others) {
    F5Subspace V = preimage(ctx.ks5, isotropy_matrix_at(ctx, P), local_image_away_5(ctx, P));
    sel = sel.intersect(V);
  }

  SelmerResult r;
  r.dimension = sel.dim();
  r.basis = sel;
  r.basis_rendered = sel.render_basis();
  r.torsion_class = class_vector_2m(ctx);
  if (!sel.contains(r.torsion_class))
    throw std::logic_error("selmer: torsion class escaped the Selmer group");
  r.rank_upper = r.dimension - 1;
  std::ostringstream os;
  if (r.dimension == 1) {
    os << "J(Q) = Z/5Z; Mordell-Weil rank 0";
  } else {
    os << "Z/5Z <= J(Q) <= Z/5Z x Z^" << r.rank_upper << "; rank <= " << r.rank_upper;
  }
  r.rank_statement = os.str();
  return r;
}

RankReport rank_report(const DescentContext& ctx, const SelmerResult& sel,
                       bool parity_assumed) {
  RankReport rep;
  rep.m = ctx.m;
  rep.selmer_dimension = sel.dimension;
  rep.rank_upper = sel.rank_upper;
  rep.root_number = root_number_m2(ctx.m);
  rep.parity_assumed = parity_assumed;
  rep.rank_proven_zero = (sel.dimension == 1);
  rep.conditional_rank_one =
      (sel.dimension == 2 && rep.root_number == -1 && parity_assumed);
  std::ostringstream os;
  if (rep.rank_proven_zero) {
    os << "J(Q) = Z/5Z, rank 0";
  } else if (rep.conditional_rank_one) {
    os << "J(Q) = Z/5Z (+) Z under the parity conjecture";
  } else {
    os << "Z/5Z <= J(Q) <= Z/5Z x Z^" << sel.rank_upper;
  }
  rep.statement = os.str();
  return rep;
}

}  // namespace quintic
