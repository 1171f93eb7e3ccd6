#pragma once

// Reduction of rational and quadratic-field models modulo primes, and
// Frobenius traces by exhaustive point counting (quadratic-character
// summation after completing the square for odd characteristic).

#include <vector>

#include "eds/curve.hpp"
#include "eds/finitefield.hpp"

namespace eds {

template <>
struct FieldOps<Fp> {
  static Fp zero(const Fp& like) { return Fp(like.p, 0); }
  static Fp one(const Fp& like) { return Fp(like.p, 1); }
  static bool is_zero(const Fp& x) { return x.v == 0; }
  static Fp from_int(const Fp& like, long v) { return Fp(like.p, v % like.p); }
};

template <class F>
struct FieldOps<QuadExt<F>> {
  static QuadExt<F> zero(const QuadExt<F>& like) { return QuadExt<F>::zero(like); }
  static QuadExt<F> one(const QuadExt<F>& like) { return QuadExt<F>::one(like); }
  static bool is_zero(const QuadExt<F>& x) { return x.is_zero(); }
  static QuadExt<F> from_int(const QuadExt<F>& like, long v) {
    return QuadExt<F>(FieldOps<F>::from_int(like.re, v), FieldOps<F>::zero(like.re), like.r);
  }
};

inline Fp reduce_mod(const Rat& x, int64_t p) {
  Int d = den(x);
  Int pp(p);
  if (mpz_divisible_p(d.get_mpz_t(), pp.get_mpz_t()))
    throw Error("reduce_mod: denominator divisible by p");
  Int dn = d % pp, nn = num(x) % pp;
  Fp dv(p, dn.get_si());
  Fp nv(p, nn.get_si());
  return nv / dv;
}

inline Weierstrass<Fp> reduce_curve(const RatCurve& E, int64_t p) {
  return Weierstrass<Fp>{reduce_mod(E.a1, p), reduce_mod(E.a2, p), reduce_mod(E.a3, p),
                         reduce_mod(E.a4, p), reduce_mod(E.a6, p)};
}

// Reduce u + v sqrt(d) at a degree-one prime above p given a square root
// `root` of d in F_p.
inline Fp reduce_quad_split(const QuadElem& x, int64_t p, const Fp& root) {
  return reduce_mod(x.u, p) + reduce_mod(x.v, p) * root;
}

// Reduce at an inert prime: image in F_p^2 with s = sqrt(d).
inline Fp2 reduce_quad_inert(const QuadElem& x, const Fp2Ctx& ctx, const Fp2& sqrt_d) {
  return ctx.embed(reduce_mod(x.u, ctx.p)) + ctx.embed(reduce_mod(x.v, ctx.p)) * sqrt_d;
}

inline Fp2 fp2_sqrt_of(const Fp& d, const Fp2Ctx& ctx) {
  return sqrt_in_ext<Fp>(d, Fp(ctx.p, ctx.r), ctx.q(), fp_all(ctx.p));
}

// #E(F_p) - (p + 1), by character sums for odd p, direct count for p = 2.
inline long frobenius_trace(const Weierstrass<Fp>& E, int64_t p) {
  if (FieldOps<Fp>::is_zero(E.disc())) throw Error("frobenius_trace: singular reduction");
  if (p == 2) {
    long count = 1;
    for (int64_t x = 0; x < 2; ++x)
      for (int64_t y = 0; y < 2; ++y)
        if (on_curve(CurvePoint<Fp>(Fp(2, x), Fp(2, y)), E)) ++count;
    return p + 1 - count;
  }
  // y^2 = 4x^3 + b2 x^2 + 2 b4 x + b6 after completing the square
  Fp b2 = E.b2(), b4 = E.b4(), b6 = E.b6();
  std::vector<int8_t> chi(p, 0);
  for (int64_t t = 0; t < p; ++t) chi[(int64_t)((__int128)t * t % p)] = 1;
  long sum = 0;
  Fp four(p, 4), two(p, 2);
  for (int64_t xv = 0; xv < p; ++xv) {
    Fp x(p, xv);
    Fp v = ((four * x + b2) * x + two * b4) * x + b6;
    if (v.v == 0) continue;
    sum += chi[v.v] ? 1 : -1;
  }
  return -sum;
}

// Trace over F_{p^2} for a model with coefficients in F_{p^2}.
inline long frobenius_trace(const Weierstrass<Fp2>& E, const Fp2Ctx& ctx) {
  if (FieldOps<Fp2>::is_zero(E.disc())) throw Error("frobenius_trace: singular reduction");
  const int64_t p = ctx.p;
  const uint64_t q = ctx.q();
  if (p == 2) {
    long count = 1;
    for (uint64_t xi = 0; xi < q; ++xi)
      for (uint64_t yi = 0; yi < q; ++yi) {
        Fp2 x = ctx.make(xi / 2, xi % 2), y = ctx.make(yi / 2, yi % 2);
        if (on_curve(CurvePoint<Fp2>(x, y), E)) ++count;
      }
    return (long)(q + 1 - count);
  }
  Fp2 b2 = E.b2(), b4 = E.b4(), b6 = E.b6();
  std::vector<int8_t> sq(q, 0);
  auto idx = [&](const Fp2& t) { return (uint64_t)t.re.v * p + t.im.v; };
  for (uint64_t ti = 0; ti < q; ++ti) {
    Fp2 t = ctx.make(ti / p, ti % p);
    sq[idx(t * t)] = 1;
  }
  long sum = 0;
  Fp2 four = ctx.make(4, 0), two = ctx.make(2, 0);
  for (uint64_t xi = 0; xi < q; ++xi) {
    Fp2 x = ctx.make(xi / p, xi % p);
    Fp2 v = ((four * x + b2) * x + two * b4) * x + b6;
    if (v.is_zero()) continue;
    sum += sq[idx(v)] ? 1 : -1;
  }
  return -sum;
}

}  // namespace eds
