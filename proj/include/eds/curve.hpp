#pragma once

// Weierstrass models and the group law, generic over an exact coefficient
// field (Rat, QuadElem, or a finite field). Points are affine plus an
// infinity flag; exact arithmetic keeps inversions cheap at this scale.

#include "eds/int.hpp"
#include "eds/quad.hpp"

namespace eds {

template <class K>
struct FieldOps;

template <>
struct FieldOps<Rat> {
  static Rat zero(const Rat&) { return Rat(0); }
  static Rat one(const Rat&) { return Rat(1); }
  static bool is_zero(const Rat& x) { return x == 0; }
  static Rat from_int(const Rat&, long v) { return Rat(v); }
};

template <>
struct FieldOps<QuadElem> {
  static QuadElem zero(const QuadElem& like) { return QuadElem(like.d, Rat(0), Rat(0)); }
  static QuadElem one(const QuadElem& like) { return QuadElem(like.d, Rat(1), Rat(0)); }
  static bool is_zero(const QuadElem& x) { return x.is_zero(); }
  static QuadElem from_int(const QuadElem& like, long v) {
    return QuadElem(like.d, Rat(v), Rat(0));
  }
};

template <class K>
struct Weierstrass {
  K a1, a2, a3, a4, a6;

  K b2() const { return a1 * a1 + from_int(4) * a2; }
  K b4() const { return from_int(2) * a4 + a1 * a3; }
  K b6() const { return a3 * a3 + from_int(4) * a6; }
  K b8() const {
    return a1 * a1 * a6 + from_int(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  }
  K c4() const { return b2() * b2() - from_int(24) * b4(); }
  K c6() const {
    return -(b2() * b2() * b2()) + from_int(36) * b2() * b4() - from_int(216) * b6();
  }
  K disc() const {
    K B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
    return -(B2 * B2 * B8) - from_int(8) * B4 * B4 * B4 - from_int(27) * B6 * B6 +
           from_int(9) * B2 * B4 * B6;
  }
  K j() const { return c4() * c4() * c4() / disc(); }

  K from_int(long v) const { return FieldOps<K>::from_int(a1, v); }
};

template <class K>
struct CurvePoint {
  bool infinity = true;
  K x{}, y{};

  CurvePoint() = default;
  CurvePoint(K x_, K y_) : infinity(false), x(std::move(x_)), y(std::move(y_)) {}
  static CurvePoint at_infinity() { return CurvePoint(); }
};

template <class K>
inline bool operator==(const CurvePoint<K>& a, const CurvePoint<K>& b) {
  if (a.infinity || b.infinity) return a.infinity == b.infinity;
  return a.x == b.x && a.y == b.y;
}
template <class K>
inline bool operator!=(const CurvePoint<K>& a, const CurvePoint<K>& b) {
  return !(a == b);
}

template <class K>
inline bool on_curve(const CurvePoint<K>& P, const Weierstrass<K>& E) {
  if (P.infinity) return true;
  K lhs = P.y * P.y + E.a1 * P.x * P.y + E.a3 * P.y;
  K rhs = P.x * P.x * P.x + E.a2 * P.x * P.x + E.a4 * P.x + E.a6;
  return lhs == rhs;
}

template <class K>
inline CurvePoint<K> neg(const CurvePoint<K>& P, const Weierstrass<K>& E) {
  if (P.infinity) return P;
  return CurvePoint<K>(P.x, -P.y - E.a1 * P.x - E.a3);
}

template <class K>
inline CurvePoint<K> add_unchecked(const CurvePoint<K>& P, const CurvePoint<K>& Q,
                                   const Weierstrass<K>& E) {
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  K two = E.from_int(2), three = E.from_int(3);
  K lambda, nu;
  if (P.x == Q.x) {
    if (Q.y == -P.y - E.a1 * P.x - E.a3) return CurvePoint<K>::at_infinity();
    K denom = two * P.y + E.a1 * P.x + E.a3;
    lambda = (three * P.x * P.x + two * E.a2 * P.x + E.a4 - E.a1 * P.y) / denom;
    nu = (-(P.x * P.x * P.x) + E.a4 * P.x + two * E.a6 - E.a3 * P.y) / denom;
  } else {
    K dx = Q.x - P.x;
    lambda = (Q.y - P.y) / dx;
    nu = (P.y * Q.x - Q.y * P.x) / dx;
  }
  K x3 = lambda * lambda + E.a1 * lambda - E.a2 - P.x - Q.x;
  K y3 = -(lambda + E.a1) * x3 - nu - E.a3;
  return CurvePoint<K>(x3, y3);
}

template <class K>
inline CurvePoint<K> add(const CurvePoint<K>& P, const CurvePoint<K>& Q,
                         const Weierstrass<K>& E) {
  if (!on_curve(P, E) || !on_curve(Q, E)) throw Error("add: point not on curve");
  return add_unchecked(P, Q, E);
}

template <class K>
inline CurvePoint<K> scalar_mul(const Int& m, CurvePoint<K> P, const Weierstrass<K>& E) {
  if (!on_curve(P, E)) throw Error("scalar_mul: point not on curve");
  Int n = m;
  if (n < 0) {
    P = neg(P, E);
    n = -n;
  }
  CurvePoint<K> R = CurvePoint<K>::at_infinity();
  while (n > 0) {
    if (mpz_odd_p(n.get_mpz_t())) R = add_unchecked(R, P, E);
    P = add_unchecked(P, P, E);
    n >>= 1;
  }
  return R;
}

using RatCurve = Weierstrass<Rat>;
using RatPoint = CurvePoint<Rat>;

// E_D : y^2 = x^3 + D x, the j = 1728 family. D must be nonzero and free of
// fourth powers (standing assumption of all the descent arguments).
inline RatCurve ed_curve(const Int& D) {
  if (D == 0) throw Error("ed_curve: D = 0");
  for (auto& [p, e] : factor(D))
    if (e >= 4) throw Error("ed_curve: D is divisible by a fourth power");
  return RatCurve{Rat(0), Rat(0), Rat(0), Rat(D), Rat(0)};
}

inline RatPoint torsion_T() { return RatPoint(Rat(0), Rat(0)); }

}  // namespace eds
