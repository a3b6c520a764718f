#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace quintic {

// Errors used across the library. The CLI maps domain_error to exit code 2
// and the others to exit code 3.
struct domain_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct precision_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct bound_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline long long mulmod(long long a, long long b, long long m) {
  return static_cast<long long>(static_cast<__int128>(a) * b % m);
}

inline long long powmod(long long a, long long e, long long m) {
  a %= m;
  if (a < 0) a += m;
  long long r = 1 % m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long p : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL, 17LL, 19LL, 23LL, 29LL, 31LL, 37LL}) {
    if (n % p == 0) return n == p;
  }
  long long d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (long long a : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL, 17LL, 19LL, 23LL, 29LL, 31LL, 37LL}) {
    long long x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline std::vector<long> primes_up_to(long n) {
  std::vector<bool> sieve(n + 1, true);
  std::vector<long> out;
  for (long i = 2; i <= n; ++i) {
    if (sieve[i]) {
      out.push_back(i);
      for (long j = 2 * i; j <= n; j += i) sieve[j] = false;
    }
  }
  return out;
}

// Trial-division factorization; fine for the CLI ranges this library targets.
inline std::vector<std::pair<long long, int>> factorize(long long n) {
  if (n <= 0) throw domain_error("factorize: need a positive integer");
  std::vector<std::pair<long long, int>> f;
  for (long long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) n /= p, ++e;
      f.push_back({p, e});
    }
  }
  if (n > 1) f.push_back({n, 1});
  return f;
}

inline bool is_squarefree(long long n) {
  for (auto& [p, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

// Jacobi symbol (a/n) for odd n > 0, by quadratic reciprocity.
inline int jacobi(long long a, long long n) {
  if (n <= 0 || n % 2 == 0) throw domain_error("jacobi: n must be positive odd");
  a %= n;
  if (a < 0) a += n;
  int t = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      long long r = n % 8;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

inline long long primitive_root(long long p) {
  auto fac = factorize(p - 1);
  for (long long g = 2; g < p; ++g) {
    bool ok = true;
    for (auto& [q, e] : fac) {
      (void)e;
      if (powmod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw domain_error("primitive_root: input not prime?");
}

// Tonelli-Shanks square root mod an odd prime; -1 if a is a non-residue.
inline long long sqrt_mod(long long a, long long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  if (powmod(a, (p - 1) / 2, p) != 1) return -1;
  if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
  long long q = p - 1;
  int s = 0;
  while ((q & 1) == 0) q >>= 1, ++s;
  long long z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  long long m = s, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    long long i = 0, tt = t;
    while (tt != 1) tt = mulmod(tt, tt, p), ++i;
    long long b = powmod(c, 1LL << (m - i - 1), p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

}  // namespace quintic
