#pragma once

// Prime fields F_p for word-sized p and quadratic extension towers built on
// them (F_p^2, and F_p^4 as a quadratic extension of F_p^2). The modulus of
// a quadratic extension is t^2 - r for the smallest non-residue r, found by
// scanning, which keeps construction deterministic.

#include <cstdint>
#include <vector>

#include "eds/int.hpp"

namespace eds {

struct Fp {
  int64_t p = 0;
  int64_t v = 0;

  Fp() = default;
  Fp(int64_t p_, int64_t v_) : p(p_), v(((v_ % p_) + p_) % p_) {}
  static Fp zero(const Fp& like) { return Fp(like.p, 0); }
  static Fp one(const Fp& like) { return Fp(like.p, 1); }
  bool is_zero() const { return v == 0; }
};

inline bool operator==(const Fp& a, const Fp& b) { return a.p == b.p && a.v == b.v; }
inline bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
inline Fp operator+(const Fp& a, const Fp& b) { return Fp(a.p, (a.v + b.v) % a.p); }
inline Fp operator-(const Fp& a, const Fp& b) { return Fp(a.p, (a.v - b.v + a.p) % a.p); }
inline Fp operator-(const Fp& a) { return Fp(a.p, (a.p - a.v) % a.p); }
inline Fp operator*(const Fp& a, const Fp& b) {
  return Fp(a.p, (int64_t)((__int128)a.v * b.v % a.p));
}

inline Fp fp_pow(Fp a, uint64_t e) {
  Fp r(a.p, 1);
  while (e) {
    if (e & 1) r = r * a;
    a = a * a;
    e >>= 1;
  }
  return r;
}

inline Fp inv(const Fp& a) {
  if (a.v == 0) throw Error("Fp: inverse of zero");
  return fp_pow(a, (uint64_t)(a.p - 2));
}
inline Fp operator/(const Fp& a, const Fp& b) { return a * inv(b); }

// Quadratic character: +1 square, -1 non-square, 0 zero.
inline int quad_char(const Fp& a) {
  if (a.v == 0) return 0;
  if (a.p == 2) return 1;
  Fp c = fp_pow(a, (uint64_t)((a.p - 1) / 2));
  return c.v == 1 ? 1 : -1;
}

inline int64_t least_nonresidue(int64_t p) {
  if (p == 2) throw Error("least_nonresidue: p = 2 has none");
  for (int64_t r = 2; r < p; ++r)
    if (quad_char(Fp(p, r)) == -1) return r;
  throw Error("least_nonresidue: none found");
}

inline std::vector<Fp> fp_all(int64_t p) {
  std::vector<Fp> out;
  out.reserve(p);
  for (int64_t i = 0; i < p; ++i) out.emplace_back(p, i);
  return out;
}

inline Fp fp_sqrt(const Fp& a) {  // p odd, a a square; brute scan (small p)
  for (int64_t x = 0; x < a.p; ++x)
    if ((Fp(a.p, x) * Fp(a.p, x)) == a) return Fp(a.p, x);
  throw Error("fp_sqrt: not a square");
}

// Quadratic extension F[s]/(s^2 - r) of a base field F.
template <class F>
struct QuadExt {
  F re, im;  // re + im*s
  F r;       // non-residue in F

  QuadExt() = default;
  QuadExt(F re_, F im_, F r_) : re(re_), im(im_), r(r_) {}
  static QuadExt zero(const QuadExt& like) {
    return QuadExt(F::zero(like.re), F::zero(like.re), like.r);
  }
  static QuadExt one(const QuadExt& like) {
    return QuadExt(F::one(like.re), F::zero(like.re), like.r);
  }
  static QuadExt embed(const F& x, const F& r) { return QuadExt(x, F::zero(x), r); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

template <class F>
inline bool operator==(const QuadExt<F>& a, const QuadExt<F>& b) {
  return a.re == b.re && a.im == b.im;
}
template <class F>
inline bool operator!=(const QuadExt<F>& a, const QuadExt<F>& b) {
  return !(a == b);
}
template <class F>
inline QuadExt<F> operator+(const QuadExt<F>& a, const QuadExt<F>& b) {
  return QuadExt<F>(a.re + b.re, a.im + b.im, a.r);
}
template <class F>
inline QuadExt<F> operator-(const QuadExt<F>& a, const QuadExt<F>& b) {
  return QuadExt<F>(a.re - b.re, a.im - b.im, a.r);
}
template <class F>
inline QuadExt<F> operator-(const QuadExt<F>& a) {
  return QuadExt<F>(-a.re, -a.im, a.r);
}
template <class F>
inline QuadExt<F> operator*(const QuadExt<F>& a, const QuadExt<F>& b) {
  return QuadExt<F>(a.re * b.re + a.im * b.im * a.r, a.re * b.im + a.im * b.re, a.r);
}
template <class F>
inline QuadExt<F> inv(const QuadExt<F>& a) {
  // (re - im s) / (re^2 - r im^2)
  F n = a.re * a.re - a.r * a.im * a.im;
  F ni = inv(n);
  return QuadExt<F>(a.re * ni, -(a.im * ni), a.r);
}
template <class F>
inline QuadExt<F> operator/(const QuadExt<F>& a, const QuadExt<F>& b) {
  return a * inv(b);
}

template <class F>
inline QuadExt<F> ext_pow(QuadExt<F> a, uint64_t e) {
  QuadExt<F> out = QuadExt<F>::one(a);
  while (e) {
    if (e & 1) out = out * a;
    a = a * a;
    e >>= 1;
  }
  return out;
}

using Fp2 = QuadExt<Fp>;

inline Fp2 fp2_make(int64_t p, int64_t re, int64_t im, int64_t r) {
  return Fp2(Fp(p, re), Fp(p, im), Fp(p, r));
}

inline Fp2 fp2_from(const Fp& x, int64_t r) { return Fp2(x, Fp(x.p, 0), Fp(x.p, r)); }

// Deterministic F_p^2 context: modulus t^2 - r with least non-residue r.
struct Fp2Ctx {
  int64_t p;
  int64_t r;
  explicit Fp2Ctx(int64_t p_) : p(p_), r(least_nonresidue(p_)) {}
  Fp2 make(int64_t re, int64_t im) const { return fp2_make(p, re, im, r); }
  Fp2 embed(const Fp& x) const { return fp2_from(x, r); }
  uint64_t q() const { return (uint64_t)p * (uint64_t)p; }
};

template <class F>
inline int quad_char_ext(const QuadExt<F>& a, uint64_t q /* size of the ext field */) {
  if (a.is_zero()) return 0;
  QuadExt<F> c = ext_pow(a, (q - 1) / 2);
  return c == QuadExt<F>::one(a) ? 1 : -1;
}

// sqrt of u inside F_q^2 = F[s]/(s^2-r) given u in F_q (always exists).
template <class F>
inline QuadExt<F> sqrt_in_ext(const F& u, const F& r, uint64_t q,
                              const std::vector<F>& field_elems) {
  auto try_base_sqrt = [&](const F& w) -> const F* {
    for (auto& x : field_elems)
      if (x * x == w) return &x;
    return nullptr;
  };
  if (const F* s = try_base_sqrt(u)) return QuadExt<F>::embed(*s, r);
  F w = u / r;
  if (const F* s = try_base_sqrt(w)) return QuadExt<F>(F::zero(u), *s, r);
  throw Error("sqrt_in_ext: unreachable for quadratic extensions");
}

}  // namespace eds
