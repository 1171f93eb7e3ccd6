#pragma once

// Exact arithmetic in quadratic fields Q(sqrt(d)), d squarefree (possibly
// negative, possibly 1 for the degenerate rational case). Elements are
// u + v*sqrt(d) with rational u, v.

#include <optional>
#include <utility>

#include "eds/int.hpp"

namespace eds {

struct QuadElem {
  Int d;  // squarefree
  Rat u, v;

  QuadElem() : d(1), u(0), v(0) {}
  QuadElem(Int d_, Rat u_, Rat v_) : d(std::move(d_)), u(std::move(u_)), v(std::move(v_)) {
    if (d == 1 && v != 0) {
      u += v;
      v = 0;
    }
  }
  static QuadElem rational(const Rat& x) { return QuadElem(Int(1), x, Rat(0)); }

  bool is_rational() const { return v == 0; }
  bool is_zero() const { return u == 0 && v == 0; }
};

namespace detail {
inline Int common_d(const QuadElem& a, const QuadElem& b) {
  if (a.v == 0) return b.d;
  if (b.v == 0) return a.d;
  if (a.d != b.d) throw Error("quad: mixing different radicands");
  return a.d;
}
}  // namespace detail

inline bool operator==(const QuadElem& a, const QuadElem& b) {
  if (a.u != b.u) return false;
  if (a.v == 0 && b.v == 0) return true;
  return a.v == b.v && a.d == b.d;
}
inline bool operator!=(const QuadElem& a, const QuadElem& b) { return !(a == b); }

inline QuadElem operator+(const QuadElem& a, const QuadElem& b) {
  return QuadElem(detail::common_d(a, b), a.u + b.u, a.v + b.v);
}
inline QuadElem operator-(const QuadElem& a, const QuadElem& b) {
  return QuadElem(detail::common_d(a, b), a.u - b.u, a.v - b.v);
}
inline QuadElem operator-(const QuadElem& a) { return QuadElem(a.d, -a.u, -a.v); }

inline QuadElem operator*(const QuadElem& a, const QuadElem& b) {
  Int d = detail::common_d(a, b);
  return QuadElem(d, a.u * b.u + Rat(d) * a.v * b.v, a.u * b.v + a.v * b.u);
}

inline QuadElem conj(const QuadElem& a) { return QuadElem(a.d, a.u, -a.v); }

inline Rat quad_norm(const QuadElem& a) { return a.u * a.u - Rat(a.d) * a.v * a.v; }
inline Rat quad_trace(const QuadElem& a) { return 2 * a.u; }

inline QuadElem inv(const QuadElem& a) {
  Rat n = quad_norm(a);
  if (n == 0) throw Error("quad: inverse of zero (or zero-norm) element");
  return QuadElem(a.d, a.u / n, -a.v / n);
}

inline QuadElem operator/(const QuadElem& a, const QuadElem& b) { return a * inv(b); }

inline QuadElem quad_pow(QuadElem a, long e) {
  if (e < 0) return quad_pow(inv(a), -e);
  QuadElem r = QuadElem(a.d, Rat(1), Rat(0));
  while (e) {
    if (e & 1) r = r * a;
    a = a * a;
    e >>= 1;
  }
  return r;
}

// Square root in Q(sqrt d) if one exists. Decided by b^2 = (u +- s)/2 with
// s = sqrt(norm) rational.
inline std::optional<QuadElem> is_square_quad(const QuadElem& x) {
  if (x.is_zero()) return QuadElem(x.d, Rat(0), Rat(0));
  if (x.v == 0) {
    if (auto r = exact_sqrt(x.u)) return QuadElem(x.d, *r, Rat(0));
    auto w = x.u / Rat(x.d);
    if (auto r = exact_sqrt(w)) return QuadElem(x.d, Rat(0), *r);
    return std::nullopt;
  }
  auto s = exact_sqrt(quad_norm(x));
  if (!s) return std::nullopt;
  for (int sgn : {1, -1}) {
    Rat b2 = (x.u + (sgn > 0 ? *s : -*s)) / 2;
    if (auto b = exact_sqrt(b2)) {
      if (*b == 0) continue;
      Rat c = x.v / (2 * *b);
      // b^2 + d c^2 == u holds by construction when the branch matches
      QuadElem root(x.d, *b, c);
      if (root * root == x) return root;
    }
  }
  return std::nullopt;
}

// Valuations of the two conjugate roots at p, from the Newton polygon of
// t^2 - tr(x) t + N(x), in units of ord_p (not normalized by ramification).
// Returns sorted {lambda1, lambda2} as exact rationals.
inline std::pair<Rat, Rat> quad_conj_valuations(const QuadElem& x, const Int& p) {
  if (x.is_zero()) throw Error("quad_conj_valuations: zero element");
  if (x.v == 0) {
    Rat w((long)0);
    long t = padic_val(x.u, p);
    return {Rat(t), Rat(t)};
  }
  Rat tr = quad_trace(x);
  Rat nm = quad_norm(x);
  long vn = padic_val(nm, p);
  if (tr == 0) return {Rat(vn) / 2, Rat(vn) / 2};
  long vt = padic_val(tr, p);
  if (2 * vt <= vn) {
    // polygon breaks at (1, vt): slopes vt and vn - vt
    Rat a(vt), b(vn - vt);
    return a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
  }
  return {Rat(vn) / 2, Rat(vn) / 2};
}

// sqrt(a) for integer a as an element of Q(sqrt d), d = squarefree core.
inline QuadElem sqrt_as_quad(const Int& a) {
  if (a == 0) return QuadElem(Int(1), Rat(0), Rat(0));
  Int s, d;
  squarefree_decomp(a, s, d);
  if (d == 1) return QuadElem(Int(1), Rat(s), Rat(0));
  return QuadElem(d, Rat(0), Rat(s));
}

inline std::string to_string(const QuadElem& x) {
  if (x.v == 0) return to_string(x.u);
  std::string s = to_string(x.u);
  s += (sign(x.v) < 0 ? " - " : " + ");
  Rat av = sign(x.v) < 0 ? Rat(-x.v) : x.v;
  if (av != 1) s += to_string(av) + "*";
  s += "sqrt(" + to_string(x.d) + ")";
  return s;
}

}  // namespace eds
