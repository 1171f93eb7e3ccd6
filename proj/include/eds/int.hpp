#pragma once

// Exact integer / rational kernel on top of GMP, plus the small number
// theoretic routines (valuations, roots, Legendre symbols, factoring by
// trial division and Pollard rho) everything else builds on.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace eds {

using Int = mpz_class;
using Rat = mpq_class;

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline Int int_from(long v) { return Int(v); }

inline Int num(const Rat& x) { return x.get_num(); }
inline Int den(const Rat& x) { return x.get_den(); }

inline int sign(const Int& x) { return mpz_sgn(x.get_mpz_t()); }
inline int sign(const Rat& x) { return mpq_sgn(x.get_mpq_t()); }

inline Int abs_int(const Int& x) {
  Int r;
  mpz_abs(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int pow2(unsigned long e) { return pow_int(Int(2), e); }

inline bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

// ord_p of a nonzero integer.
inline long val_int(const Int& n, const Int& p) {
  if (n == 0) throw Error("val_int: zero argument");
  Int m = abs_int(n);
  long v = 0;
  Int q, r;
  for (;;) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    if (r != 0) break;
    m = q;
    ++v;
  }
  return v;
}

inline Int remove_factor(Int n, const Int& p) {
  Int q, r;
  for (;;) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    if (r != 0) return n;
    n = q;
  }
}

constexpr long kValInfinity = LONG_MAX;

// ord_p(x) for rational x; +infinity (kValInfinity) for x = 0.
inline long padic_val(const Rat& x, const Int& p) {
  if (!is_prime(p)) throw Error("padic_val: p is not prime");
  if (x == 0) return kValInfinity;
  return val_int(num(x), p) - val_int(den(x), p);
}

// Exact k-th root of n >= 0, if it exists.
inline std::optional<Int> integer_nth_root(const Int& n, unsigned long k) {
  if (n < 0 || k == 0) throw Error("integer_nth_root: need n >= 0, k >= 1");
  Int r;
  int exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
  if (exact) return r;
  return std::nullopt;
}

inline std::optional<Int> exact_sqrt(const Int& n) {
  if (n < 0) return std::nullopt;
  return integer_nth_root(n, 2);
}

inline std::optional<Rat> exact_sqrt(const Rat& x) {
  if (sign(x) < 0) return std::nullopt;
  auto sn = exact_sqrt(num(x));
  auto sd = exact_sqrt(den(x));
  if (!sn || !sd) return std::nullopt;
  return Rat(*sn) / Rat(*sd);
}

// Kronecker symbol (a|n).
inline int kronecker(const Int& a, const Int& n) {
  return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

inline int legendre(const Int& a, const Int& p) {
  return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

namespace detail {

inline Int pollard_rho(const Int& n) {
  // Brent's variant; n must be odd composite, not a prime power breaker
  // requirement here: returns a nontrivial factor.
  if (mpz_even_p(n.get_mpz_t())) return Int(2);
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(12345u);
  for (;;) {
    Int y = rng.get_z_range(n - 3) + 2;
    Int c = rng.get_z_range(n - 1) + 1;
    Int x = y, d = 1, q = 1, ys = y;
    long r = 1, m = 128;
    while (d == 1) {
      x = y;
      for (long i = 0; i < r; ++i) y = (y * y + c) % n;
      long k = 0;
      while (k < r && d == 1) {
        ys = y;
        long lim = std::min(m, r - k);
        for (long i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * abs_int(x - y) % n;
        }
        d = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (d == n) {
      d = 1;
      while (d == 1) {
        ys = (ys * ys + c) % n;
        d = gcd(abs_int(x - ys), n);
      }
    }
    if (d != n) return d;
  }
}

}  // namespace detail

// Factorization of |n| as prime -> exponent, n != 0.
inline std::map<Int, long> factor(const Int& n0) {
  if (n0 == 0) throw Error("factor: zero argument");
  std::map<Int, long> out;
  Int n = abs_int(n0);
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L,
                 41L, 43L, 47L, 53L, 59L, 61L, 67L, 71L, 73L, 79L, 83L,
                 89L, 97L}) {
    Int pp(p);
    long v = 0;
    while (mpz_divisible_p(n.get_mpz_t(), pp.get_mpz_t())) {
      n /= pp;
      ++v;
    }
    if (v) out[pp] = v;
    if (n == 1) return out;
  }
  // trial division up to 10^4, then rho
  for (Int p = 101; p * p <= n && p < 10000; p += 2) {
    long v = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++v;
    }
    if (v) out[p] = v;
  }
  std::vector<Int> stack;
  if (n > 1) stack.push_back(n);
  while (!stack.empty()) {
    Int m = stack.back();
    stack.pop_back();
    if (m == 1) continue;
    if (is_prime(m)) {
      long v = 0;
      (void)v;
      out[m] += 1;
      continue;
    }
    Int d = detail::pollard_rho(m);
    stack.push_back(d);
    stack.push_back(m / d);
  }
  return out;
}

// Squarefree decomposition a = s^2 * d with d squarefree (sign kept on d).
inline void squarefree_decomp(const Int& a, Int& s, Int& d) {
  if (a == 0) throw Error("squarefree_decomp: zero");
  s = 1;
  d = sign(a) > 0 ? 1 : -1;
  for (auto& [p, e] : factor(a)) {
    for (long i = 0; i < e / 2; ++i) s *= p;
    if (e % 2) d *= p;
  }
}

// Product of distinct primes dividing n and not dividing any element of S.
inline Int radical_outside(const Int& n, const std::vector<Int>& S) {
  if (n == 0) throw Error("radical_outside: zero argument");
  Int out = 1;
  for (auto& [p, e] : factor(n)) {
    bool skip = false;
    for (auto& s : S)
      if (s != 0 && mpz_divisible_p(s.get_mpz_t(), p.get_mpz_t())) skip = true;
    if (!skip) out *= p;
  }
  return out;
}

inline std::vector<Int> primes_in(long lo, long hi) {
  std::vector<Int> out;
  for (long n = std::max(2L, lo); n <= hi; ++n)
    if (is_prime(Int(n))) out.emplace_back(n);
  return out;
}

inline Rat rat_pow(const Rat& x, long e) {
  if (e == 0) return Rat(1);
  Rat b = e > 0 ? x : Rat(1) / x;
  long n = e > 0 ? e : -e;
  Rat r(1);
  while (n) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

inline std::string to_string(const Int& x) { return x.get_str(); }
inline std::string to_string(const Rat& x) {
  if (den(x) == 1) return num(x).get_str();
  return num(x).get_str() + "/" + den(x).get_str();
}

inline Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw Error("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

}  // namespace eds
