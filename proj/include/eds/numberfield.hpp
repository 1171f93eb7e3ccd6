#pragma once

// Number fields Q[x]/(m(x)) for monic integral m, with elements as rational
// coefficient vectors, plus explicit Galois actions given by images of the
// generator. Norms use the product-of-conjugates convention, computed as
// Res(m, elem) for monic m.

#include <memory>
#include <vector>

#include "eds/poly.hpp"

namespace eds {

struct NumberField {
  Poly min_poly;  // monic, integer coefficients
  long degree;

  explicit NumberField(Poly m) : min_poly(std::move(m)) {
    degree = poly_deg(min_poly);
    if (degree < 1) throw Error("number field: constant modulus");
    if (min_poly.back() != 1) throw Error("number field: modulus not monic");
    for (auto& c : min_poly)
      if (den(c) != 1) throw Error("number field: modulus not integral");
  }
};

using NumberFieldPtr = std::shared_ptr<const NumberField>;

struct NFElem {
  NumberFieldPtr field;
  Poly coeffs;  // degree < field->degree

  NFElem() = default;
  NFElem(NumberFieldPtr f, Poly c) : field(std::move(f)), coeffs(poly_trim(std::move(c))) {
    if (poly_deg(coeffs) >= field->degree) coeffs = poly_mod(coeffs, field->min_poly);
  }
  bool is_zero() const { return coeffs.empty(); }
  bool is_rational() const { return coeffs.size() <= 1; }
  Rat rational_value() const {
    if (!is_rational()) throw Error("nf: not rational");
    return coeffs.empty() ? Rat(0) : coeffs[0];
  }
};

inline NFElem nf_make(const NumberFieldPtr& f, const Rat& c) { return NFElem(f, Poly{c}); }
inline NFElem nf_gen(const NumberFieldPtr& f) { return NFElem(f, Poly{Rat(0), Rat(1)}); }

namespace detail {
inline const NumberFieldPtr& common_field(const NFElem& a, const NFElem& b) {
  if (a.field != b.field) {
    if (a.field && b.field && a.field->min_poly == b.field->min_poly) return a.field;
    throw Error("nf: mixing elements of different fields");
  }
  return a.field;
}
}  // namespace detail

inline bool operator==(const NFElem& a, const NFElem& b) {
  detail::common_field(a, b);
  return a.coeffs == b.coeffs;
}
inline bool operator!=(const NFElem& a, const NFElem& b) { return !(a == b); }

inline NFElem operator+(const NFElem& a, const NFElem& b) {
  return NFElem(detail::common_field(a, b), poly_add(a.coeffs, b.coeffs));
}
inline NFElem operator-(const NFElem& a, const NFElem& b) {
  return NFElem(detail::common_field(a, b), poly_sub(a.coeffs, b.coeffs));
}
inline NFElem operator-(const NFElem& a) { return NFElem(a.field, poly_scale(a.coeffs, Rat(-1))); }
inline NFElem operator*(const NFElem& a, const NFElem& b) {
  auto f = detail::common_field(a, b);
  return NFElem(f, poly_mod(poly_mul(a.coeffs, b.coeffs), f->min_poly));
}

inline NFElem inv(const NFElem& a) {
  if (a.is_zero()) throw Error("nf: inverse of zero");
  Poly g, u;
  poly_half_xgcd(a.coeffs, a.field->min_poly, g, u);
  if (poly_deg(g) != 0) throw Error("nf: element not invertible (modulus not irreducible?)");
  return NFElem(a.field, poly_scale(u, Rat(1) / g[0]));
}

inline NFElem operator/(const NFElem& a, const NFElem& b) { return a * inv(b); }

inline NFElem nf_pow(NFElem a, long e) {
  if (e < 0) return nf_pow(inv(a), -e);
  NFElem r = nf_make(a.field, Rat(1));
  while (e) {
    if (e & 1) r = r * a;
    a = a * a;
    e >>= 1;
  }
  return r;
}

// Norm as the product over all embeddings: Res(m, x) for monic m, so that
// nf_norm(c) = c^n for rational c.
inline Rat nf_norm(const NFElem& a) {
  if (a.is_zero()) return Rat(0);
  if (a.is_rational()) return rat_pow(a.coeffs.empty() ? Rat(0) : a.coeffs[0], a.field->degree);
  return resultant(a.field->min_poly, a.coeffs);
}

inline Rat nf_trace(const NFElem& a) {
  // trace via Newton power sums of the modulus would work too; here we use
  // the coefficient of the characteristic polynomial computed from columns
  // of the multiplication matrix.
  Rat t(0);
  Poly cur{Rat(1)};
  const long n = a.field->degree;
  for (long i = 0; i < n; ++i) {
    Poly col = poly_mod(poly_mul(a.coeffs, cur), a.field->min_poly);
    if ((long)col.size() > i) t += col[i];
    cur = poly_mul(cur, Poly{Rat(0), Rat(1)});
  }
  return t;
}

// A Galois action on a number field: automorphisms listed by their image of
// the generator. Validated to fix the minimal polynomial.
struct GaloisField {
  NumberFieldPtr field;
  std::vector<Poly> gen_images;  // one per automorphism

  GaloisField(NumberFieldPtr f, std::vector<Poly> images)
      : field(std::move(f)), gen_images(std::move(images)) {
    for (auto& g : gen_images) {
      Poly img = poly_mod(g, field->min_poly);
      Poly chk = poly_compose_mod(field->min_poly, img, field->min_poly);
      if (!chk.empty()) throw Error("galois: image does not fix the minimal polynomial");
    }
  }

  NFElem apply(size_t idx, const NFElem& x) const {
    if (idx >= gen_images.size()) throw Error("galois: automorphism index out of range");
    return NFElem(field, poly_compose_mod(x.coeffs, gen_images[idx], field->min_poly));
  }
};

inline std::string to_string(const NFElem& a) {
  if (a.coeffs.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += to_string(a.coeffs[i]);
    if (i >= 1) s += "*t" + (i > 1 ? "^" + std::to_string(i) : "");
  }
  return s.empty() ? "0" : s;
}

}  // namespace eds
