#pragma once

// Dense univariate polynomials. The rational layer (ExactPolynomial) is the
// public face; an integer layer (IntPoly) backs the sign-sensitive work
// (Sturm chains, gcds) where pseudo-division with primitive scaling keeps
// coefficient growth under control without ever leaving exact arithmetic.
//
// The zero polynomial is the empty coefficient vector and has no degree
// (poly_degree returns an empty optional).

#include "coordlat/exact.hpp"

#include <initializer_list>
#include <optional>

namespace coordlat {

struct ExactPolynomial {
  std::vector<Rat> c; // c[i] is the coefficient of x^i; no trailing zeros

  void normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
};

inline ExactPolynomial poly_from(std::initializer_list<long> v) {
  ExactPolynomial p;
  for (long x : v) p.c.emplace_back(x);
  p.normalize();
  return p;
}

inline ExactPolynomial poly_from_rats(std::vector<Rat> v) {
  ExactPolynomial p;
  p.c = std::move(v);
  p.normalize();
  return p;
}

inline bool poly_is_zero(const ExactPolynomial& p) { return p.c.empty(); }

inline std::optional<long> poly_degree(const ExactPolynomial& p) {
  if (p.c.empty()) return std::nullopt;
  return long(p.c.size()) - 1;
}

inline Rat poly_leading(const ExactPolynomial& p) {
  if (p.c.empty()) throw std::invalid_argument("zero polynomial has no leading coefficient");
  return p.c.back();
}

inline bool poly_equal(const ExactPolynomial& a, const ExactPolynomial& b) {
  return a.c == b.c;
}

inline ExactPolynomial poly_add(const ExactPolynomial& a, const ExactPolynomial& b) {
  ExactPolynomial r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.normalize();
  return r;
}

inline ExactPolynomial poly_sub(const ExactPolynomial& a, const ExactPolynomial& b) {
  ExactPolynomial r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  r.normalize();
  return r;
}

inline ExactPolynomial poly_scale(const ExactPolynomial& a, const Rat& t) {
  ExactPolynomial r = a;
  for (auto& x : r.c) x *= t;
  r.normalize();
  return r;
}

inline ExactPolynomial poly_mul(const ExactPolynomial& a, const ExactPolynomial& b) {
  if (a.c.empty() || b.c.empty()) return {};
  ExactPolynomial r;
  r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  r.normalize();
  return r;
}

// Multiply by x^k.
inline ExactPolynomial poly_shift_up(const ExactPolynomial& a, long k) {
  if (a.c.empty()) return {};
  ExactPolynomial r;
  r.c.assign(a.c.size() + std::size_t(k), Rat(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i + std::size_t(k)] = a.c[i];
  return r;
}

inline Rat poly_eval(const ExactPolynomial& p, const Rat& x) {
  Rat acc = 0;
  for (std::size_t i = p.c.size(); i-- > 0;) acc = acc * x + p.c[i];
  return acc;
}

inline ExactPolynomial poly_derivative(const ExactPolynomial& p) {
  ExactPolynomial r;
  for (std::size_t i = 1; i < p.c.size(); ++i) r.c.push_back(p.c[i] * Int(i));
  r.normalize();
  return r;
}

// Rational long division: a = q*b + r with deg r < deg b.
inline std::pair<ExactPolynomial, ExactPolynomial> poly_divrem(const ExactPolynomial& a,
                                                               const ExactPolynomial& b) {
  if (b.c.empty()) throw std::invalid_argument("polynomial division by zero");
  ExactPolynomial r = a, q;
  if (a.c.size() >= b.c.size()) q.c.assign(a.c.size() - b.c.size() + 1, Rat(0));
  while (!r.c.empty() && r.c.size() >= b.c.size()) {
    std::size_t shift = r.c.size() - b.c.size();
    Rat coef = r.c.back() / b.c.back();
    q.c[shift] = coef;
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[shift + i] -= coef * b.c[i];
    r.normalize();
  }
  q.normalize();
  return {q, r};
}

inline ExactPolynomial poly_div_exact(const ExactPolynomial& a, const ExactPolynomial& b) {
  auto [q, r] = poly_divrem(a, b);
  if (!r.c.empty()) throw std::logic_error("poly_div_exact: division is not exact");
  return q;
}

// ---------------------------------------------------------------------------
// Integer layer.

using IntPoly = std::vector<Int>; // dense, low-first, no trailing zeros; empty = 0

inline void int_poly_normalize(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline long int_poly_degree(const IntPoly& p) { return long(p.size()) - 1; }

inline Int int_poly_content(const IntPoly& p) {
  Int g = 0;
  for (const Int& x : p) g = boost::multiprecision::gcd(g, x);
  return g; // gcd is nonnegative; 0 only for the zero polynomial
}

// Divide out the (positive) content; the sign pattern is untouched.
inline IntPoly int_poly_primitive(IntPoly p) {
  Int g = int_poly_content(p);
  if (g > 1)
    for (Int& x : p) x = div_exact(x, g);
  return p;
}

inline IntPoly int_poly_derivative(const IntPoly& p) {
  IntPoly r;
  for (std::size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * Int(i));
  int_poly_normalize(r);
  return r;
}

// Clear denominators: the returned integer polynomial is a positive rational
// multiple of p, so roots and sign patterns coincide.
inline IntPoly int_poly_from(const ExactPolynomial& p) {
  Int l = 1;
  for (const Rat& x : p.c) l = boost::multiprecision::lcm(l, rat_denominator(x));
  IntPoly r;
  r.reserve(p.c.size());
  for (const Rat& x : p.c)
    r.push_back(rat_numerator(x) * div_exact(l, rat_denominator(x)));
  int_poly_normalize(r);
  return r;
}

inline ExactPolynomial poly_from_int(const IntPoly& p) {
  ExactPolynomial r;
  for (const Int& x : p) r.c.emplace_back(x);
  r.normalize();
  return r;
}

inline Rat int_poly_eval(const IntPoly& p, const Rat& x) {
  Rat acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + Rat(p[i]);
  return acc;
}

// Sign of p(u/w) for w > 0, via the homogeneous integer evaluation
// sum c_j u^j w^(d-j); no rational arithmetic in the hot path.
inline int int_poly_sign_at(const IntPoly& p, const Int& u, const Int& w) {
  if (p.empty()) return 0;
  Int acc = p.back();
  Int wp = 1;
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    wp *= w;
    acc = acc * u + p[i] * wp;
  }
  return acc.sign();
}

inline int int_poly_sign_at(const IntPoly& p, const Rat& x) {
  return int_poly_sign_at(p, rat_numerator(x), rat_denominator(x));
}

// Pseudo-remainder prem(a, b) = lc(b)^(deg a - deg b + 1) * a mod b, all over Z.
inline IntPoly int_poly_prem(IntPoly a, const IntPoly& b) {
  if (b.empty()) throw std::invalid_argument("pseudo-division by zero polynomial");
  long db = int_poly_degree(b);
  long steps = int_poly_degree(a) - db + 1;
  if (steps <= 0) return a;
  const Int& lb = b.back();
  long used = 0;
  while (!a.empty() && int_poly_degree(a) >= db) {
    long shift = int_poly_degree(a) - db;
    Int la = a.back();
    for (Int& x : a) x *= lb;
    for (long i = 0; i <= db; ++i) a[std::size_t(shift + i)] -= la * b[std::size_t(i)];
    int_poly_normalize(a);
    ++used;
  }
  // Pad with the remaining powers of lc(b) so the result is exactly prem.
  if (used < steps) {
    Int f = int_pow(lb, static_cast<unsigned long>(steps - used));
    for (Int& x : a) x *= f;
  }
  return a;
}

// Primitive gcd over Z (primitive PRS); result has a positive leading coefficient.
inline IntPoly int_poly_gcd(IntPoly a, IntPoly b) {
  int_poly_normalize(a);
  int_poly_normalize(b);
  if (a.empty()) return int_poly_primitive(std::move(b));
  if (b.empty()) return int_poly_primitive(std::move(a));
  if (int_poly_degree(a) < int_poly_degree(b)) std::swap(a, b);
  Int ca = int_poly_content(a), cb = int_poly_content(b);
  Int cg = boost::multiprecision::gcd(ca, cb);
  a = int_poly_primitive(std::move(a));
  b = int_poly_primitive(std::move(b));
  while (!b.empty()) {
    IntPoly r = int_poly_prem(a, b);
    a = std::move(b);
    b = int_poly_primitive(std::move(r));
  }
  if (!a.empty() && a.back() < 0)
    for (Int& x : a) x = -x;
  if (int_poly_degree(a) == 0) return {cg};
  for (Int& x : a) x *= cg;
  return a;
}

inline ExactPolynomial poly_gcd(const ExactPolynomial& a, const ExactPolynomial& b) {
  return poly_from_int(int_poly_gcd(int_poly_from(a), int_poly_from(b)));
}

inline bool poly_coprime(const ExactPolynomial& a, const ExactPolynomial& b) {
  IntPoly g = int_poly_gcd(int_poly_from(a), int_poly_from(b));
  return int_poly_degree(g) <= 0;
}

inline bool poly_squarefree(const ExactPolynomial& p) {
  return poly_coprime(p, poly_derivative(p));
}

// p divided by gcd(p, p'): same distinct roots, all simple.
inline ExactPolynomial poly_squarefree_part(const ExactPolynomial& p) {
  if (poly_is_zero(p)) throw std::invalid_argument("squarefree part of zero polynomial");
  ExactPolynomial g = poly_gcd(p, poly_derivative(p));
  if (poly_degree(g) == 0) return p;
  return poly_div_exact(p, g);
}

} // namespace coordlat
