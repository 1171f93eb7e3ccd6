#pragma once

// Dense univariate polynomials over the rationals: the small toolkit used
// for number field arithmetic (reduction, inversion, resultants) and for
// approximate root location when checking archimedean bounds.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "eds/int.hpp"

namespace eds {

// Coefficients low-to-high; normalized so back() != 0 (zero poly is empty).
using Poly = std::vector<Rat>;

inline Poly poly_trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline long poly_deg(const Poly& p) { return (long)p.size() - 1; }

inline Poly poly_from(std::vector<long> cs) {
  Poly p;
  p.reserve(cs.size());
  for (long c : cs) p.emplace_back(c);
  return poly_trim(p);
}

inline Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return poly_trim(r);
}

inline Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return poly_trim(r);
}

inline Poly poly_scale(const Poly& a, const Rat& c) {
  if (c == 0) return {};
  Poly r = a;
  for (auto& x : r) x *= c;
  return r;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return poly_trim(r);
}

// Division with remainder; b != 0.
inline void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.empty()) throw Error("poly_divmod: division by zero polynomial");
  r = a;
  q.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rat(0));
  const Rat lead = b.back();
  while (r.size() >= b.size()) {
    Rat c = r.back() / lead;
    size_t shift = r.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
    r = poly_trim(r);
    if (r.empty()) break;
    if (r.size() >= b.size() && r.back() == 0) r = poly_trim(r);
  }
  q = poly_trim(q);
}

inline Poly poly_mod(const Poly& a, const Poly& b) {
  Poly q, r;
  poly_divmod(a, b, q, r);
  return r;
}

inline Poly poly_monic(const Poly& a) {
  if (a.empty()) return a;
  return poly_scale(a, Rat(1) / a.back());
}

inline Poly poly_gcd(Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? a : poly_monic(a);
}

// Extended gcd: returns g and u with u*a = g (mod m); used for inversion
// of units modulo an irreducible m.
inline void poly_half_xgcd(const Poly& a, const Poly& m, Poly& g, Poly& u) {
  Poly r0 = m, r1 = a;
  Poly s0 = {}, s1 = {Rat(1)};
  while (!r1.empty()) {
    Poly q, r;
    poly_divmod(r0, r1, q, r);
    Poly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  g = r0;
  u = s0;
}

inline Rat poly_eval(const Poly& p, const Rat& x) {
  Rat r(0);
  for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

// Compose then reduce: p(q) mod m.
inline Poly poly_compose_mod(const Poly& p, const Poly& q, const Poly& m) {
  Poly r;
  for (size_t i = p.size(); i-- > 0;) {
    r = poly_mul(r, q);
    if (!r.empty() || p[i] != 0) r = poly_add(r, {p[i]});
    r = poly_mod(r, m);
  }
  return r;
}

inline Poly poly_derivative(const Poly& p) {
  Poly r;
  for (size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * Rat((long)i));
  return poly_trim(r);
}

// Resultant by the Euclidean recursion over Q.
inline Rat resultant(Poly a, Poly b) {
  if (a.empty() || b.empty()) return Rat(0);
  Rat acc(1);
  bool neg = false;
  while (true) {
    long da = poly_deg(a), db = poly_deg(b);
    if (db == 0) {
      acc *= rat_pow(b[0], da);
      break;
    }
    Poly r = poly_mod(a, b);
    long dr = poly_deg(r);
    if (r.empty()) return Rat(0);
    // res(a,b) = (-1)^{da*db} lc(b)^{da-dr} res(b,r)
    if ((da * db) % 2) neg = !neg;
    acc *= rat_pow(b.back(), da - dr);
    a = std::move(b);
    b = std::move(r);
  }
  return neg ? -acc : acc;
}

// All complex roots by Durand-Kerner; good enough for archimedean bound
// checks (the exact logic never depends on these).
inline std::vector<std::complex<double>> poly_roots_approx(const Poly& p0) {
  Poly p = poly_monic(p0);
  long n = poly_deg(p);
  if (n <= 0) return {};
  std::vector<std::complex<double>> c(n + 1);
  for (long i = 0; i <= n; ++i) c[i] = p[i].get_d();
  std::vector<std::complex<double>> z(n);
  std::complex<double> seed(0.4, 0.9);
  std::complex<double> w(1.0, 0.0);
  for (long i = 0; i < n; ++i) {
    w *= seed;
    z[i] = w;
  }
  for (int iter = 0; iter < 500; ++iter) {
    double moved = 0;
    for (long i = 0; i < n; ++i) {
      std::complex<double> v = c[n];
      for (long k = n - 1; k >= 0; --k) v = v * z[i] + c[k];
      std::complex<double> d(1.0, 0.0);
      for (long j = 0; j < n; ++j)
        if (j != i) d *= (z[i] - z[j]);
      std::complex<double> step = v / d;
      z[i] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-13) break;
  }
  return z;
}

}  // namespace eds
