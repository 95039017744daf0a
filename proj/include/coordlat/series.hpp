#pragma once

// Truncated formal power series over the exact rationals.
//
// A series carries coefficients for exponents 0..order() inclusive and nothing
// beyond; every binary operation truncates to the smaller operand order, so a
// result never claims coefficients it cannot know (min-order propagation).
// Composition with an inner series of valuation >= 1 keeps the full common
// order: [x^m] a(b(x)) only needs a_0..a_m and b up to order m.

#include "coordlat/exact.hpp"

#include <initializer_list>
#include <stdexcept>

namespace coordlat {

struct TruncatedSeries {
  std::vector<Rat> c; // c[i] is the coefficient of x^i; size() == order()+1

  TruncatedSeries() : c(1) {}
  explicit TruncatedSeries(int order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    c.assign(std::size_t(order) + 1, Rat(0));
  }

  int order() const { return int(c.size()) - 1; }
  const Rat& operator[](std::size_t i) const { return c[i]; }
  Rat& operator[](std::size_t i) { return c[i]; }
};

struct DivisionByNonUnit : std::domain_error {
  DivisionByNonUnit()
      : std::domain_error("series division requires a nonzero constant term") {}
};
struct CompositionNonNilpotent : std::domain_error {
  CompositionNonNilpotent()
      : std::domain_error("series composition requires inner constant term 0") {}
};
struct NotReversible : std::domain_error {
  NotReversible()
      : std::domain_error("series reversion requires f(0)=0 and f'(0)!=0") {}
};
struct SqrtUnsupportedConstantTerm : std::domain_error {
  SqrtUnsupportedConstantTerm()
      : std::domain_error("series sqrt is implemented for constant term 1 only") {}
};
struct InsufficientOrder : std::out_of_range {
  explicit InsufficientOrder(const std::string& m) : std::out_of_range(m) {}
};

inline TruncatedSeries series_from(std::initializer_list<long> v) {
  TruncatedSeries s(int(v.size()) - 1);
  std::size_t i = 0;
  for (long x : v) s.c[i++] = Rat(x);
  return s;
}

inline TruncatedSeries series_from_rats(const std::vector<Rat>& v) {
  TruncatedSeries s(int(v.size()) - 1);
  s.c = v;
  return s;
}

inline TruncatedSeries series_const(const Rat& a, int order) {
  TruncatedSeries s(order);
  s.c[0] = a;
  return s;
}

inline TruncatedSeries series_x(int order) {
  TruncatedSeries s(order);
  if (order >= 1) s.c[1] = 1;
  return s;
}

inline const Rat& series_coeff(const TruncatedSeries& a, int n) {
  if (n < 0 || n > a.order())
    throw InsufficientOrder("series coefficient " + std::to_string(n) +
                            " beyond truncation order " + std::to_string(a.order()));
  return a.c[std::size_t(n)];
}

inline TruncatedSeries series_truncate(const TruncatedSeries& a, int order) {
  if (order > a.order())
    throw InsufficientOrder("cannot extend a series by truncation");
  TruncatedSeries s(order);
  for (int i = 0; i <= order; ++i) s.c[i] = a.c[i];
  return s;
}

inline TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  int n = std::min(a.order(), b.order());
  TruncatedSeries s(n);
  for (int i = 0; i <= n; ++i) s.c[i] = a.c[i] + b.c[i];
  return s;
}

inline TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  int n = std::min(a.order(), b.order());
  TruncatedSeries s(n);
  for (int i = 0; i <= n; ++i) s.c[i] = a.c[i] - b.c[i];
  return s;
}

inline TruncatedSeries series_neg(const TruncatedSeries& a) {
  TruncatedSeries s(a.order());
  for (std::size_t i = 0; i < a.c.size(); ++i) s.c[i] = -a.c[i];
  return s;
}

inline TruncatedSeries series_scale(const TruncatedSeries& a, const Rat& t) {
  TruncatedSeries s(a.order());
  for (std::size_t i = 0; i < a.c.size(); ++i) s.c[i] = a.c[i] * t;
  return s;
}

inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  int n = std::min(a.order(), b.order());
  TruncatedSeries s(n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) s.c[i + j] += a.c[i] * b.c[j];
  return s;
}

inline TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (b.c[0] == 0) throw DivisionByNonUnit();
  int n = std::min(a.order(), b.order());
  TruncatedSeries q(n);
  for (int m = 0; m <= n; ++m) {
    Rat acc = a.c[m];
    for (int i = 0; i < m; ++i) acc -= q.c[i] * b.c[m - i];
    q.c[m] = acc / b.c[0];
  }
  return q;
}

inline TruncatedSeries series_compose(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (b.c[0] != 0) throw CompositionNonNilpotent();
  int n = std::min(a.order(), b.order());
  TruncatedSeries bt = series_truncate(b, n);
  // Horner from the top coefficient down; every product stays at order n.
  TruncatedSeries res = series_const(a.c[std::size_t(n)], n);
  for (int j = n - 1; j >= 0; --j) {
    res = series_mul(res, bt);
    res.c[0] += a.c[std::size_t(j)];
  }
  return res;
}

inline TruncatedSeries series_reversion(const TruncatedSeries& f) {
  if (f.order() < 1 || f.c[0] != 0 || f.c[1] == 0) throw NotReversible();
  int n = f.order();
  TruncatedSeries g(n);
  g.c[1] = Rat(1) / f.c[1];
  for (int m = 2; m <= n; ++m) {
    // With g known below m and g_m = 0, [x^m] f(g) is the defect to cancel.
    TruncatedSeries gm = series_truncate(g, m);
    TruncatedSeries fm = series_truncate(f, m);
    TruncatedSeries h = series_compose(fm, gm);
    g.c[std::size_t(m)] = -h.c[std::size_t(m)] / f.c[1];
  }
  return g;
}

inline TruncatedSeries series_sqrt(const TruncatedSeries& a) {
  if (a.c[0] != 1) throw SqrtUnsupportedConstantTerm();
  int n = a.order();
  TruncatedSeries s(n);
  s.c[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rat acc = a.c[std::size_t(m)];
    for (int i = 1; i < m; ++i) acc -= s.c[i] * s.c[m - i];
    s.c[std::size_t(m)] = acc / 2;
  }
  return s;
}

inline TruncatedSeries series_derivative(const TruncatedSeries& a) {
  int n = std::max(a.order() - 1, 0);
  TruncatedSeries s(n);
  for (int i = 1; i <= a.order(); ++i)
    if (i - 1 <= n) s.c[std::size_t(i - 1)] = a.c[std::size_t(i)] * i;
  return s;
}

// Multiply by x^k. The shifted coefficients stay fully trusted, so the order grows.
inline TruncatedSeries series_shift_up(const TruncatedSeries& a, int k) {
  if (k < 0) throw std::invalid_argument("shift_up needs k >= 0");
  TruncatedSeries s(a.order() + k);
  for (int i = 0; i <= a.order(); ++i) s.c[std::size_t(i + k)] = a.c[std::size_t(i)];
  return s;
}

// Divide by x^k; the low-order coefficients must vanish.
inline TruncatedSeries series_shift_down(const TruncatedSeries& a, int k) {
  if (k < 0 || k > a.order())
    throw std::invalid_argument("shift_down needs 0 <= k <= order");
  for (int i = 0; i < k; ++i)
    if (a.c[std::size_t(i)] != 0)
      throw std::invalid_argument("shift_down: series has nonzero low-order terms");
  TruncatedSeries s(a.order() - k);
  for (int i = k; i <= a.order(); ++i) s.c[std::size_t(i - k)] = a.c[std::size_t(i)];
  return s;
}

// Expansion of num(x)/den(x) to the requested order (den(0) != 0).
inline TruncatedSeries series_ratio(std::initializer_list<long> num,
                                    std::initializer_list<long> den, int order) {
  TruncatedSeries a(order), b(order);
  std::size_t i = 0;
  for (long x : num) {
    if (int(i) <= order) a.c[i] = Rat(x);
    ++i;
  }
  i = 0;
  for (long x : den) {
    if (int(i) <= order) b.c[i] = Rat(x);
    ++i;
  }
  return series_div(a, b);
}

inline bool series_equal_upto(const TruncatedSeries& a, const TruncatedSeries& b, int n) {
  if (n > a.order() || n > b.order()) return false;
  for (int i = 0; i <= n; ++i)
    if (a.c[std::size_t(i)] != b.c[std::size_t(i)]) return false;
  return true;
}

} // namespace coordlat
