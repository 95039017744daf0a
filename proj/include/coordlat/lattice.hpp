#pragma once

// Lattice point counts of Z^k under the l1 metric and their central
// diagonals. The canonical representation is the memoized two-variable
// recurrence; binomial closed forms, generating functions and Jacobi
// polynomial evaluations act as independent routes that the tests compare.

#include "coordlat/exact.hpp"
#include "coordlat/series.hpp"

namespace coordlat {

struct DegenerateRecurrence : std::domain_error {
  explicit DegenerateRecurrence(const std::string& m) : std::domain_error(m) {}
};

// Memoized table for the family recurrence
//   L(0, k) = 1,  L(n, 0) = m for n >= 1,
//   L(n, k) = L(n-1, k-1) + L(n-1, k) + L(n, k-1).
// m = 0 counts shells of Z^k, m = 1 balls (Delannoy), m = 2 coordination rows.
// The memo lives in the instance; confine an instance to one thread.
class LatticeTable {
 public:
  explicit LatticeTable(long m) : m_(m) {
    if (m < 0) throw std::invalid_argument("family parameter must be >= 0");
  }

  long family() const { return m_; }

  const Int& at(long n, long k) {
    if (n < 0 || k < 0) throw std::invalid_argument("lattice indices must be >= 0");
    ensure(n, k);
    return rows_[std::size_t(n)][std::size_t(k)];
  }

 private:
  void ensure(long n, long k) {
    if (std::size_t(n) < rows_.size() && std::size_t(k) < rows_[std::size_t(n)].size())
      return;
    long maxk = std::max<long>(k, cols_ - 1);
    for (std::size_t r = rows_.size(); r <= std::size_t(n); ++r) rows_.emplace_back();
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      auto& row = rows_[r];
      for (long c = long(row.size()); c <= maxk; ++c) {
        Int v;
        if (r == 0)
          v = 1;
        else if (c == 0)
          v = m_;
        else
          v = rows_[r - 1][std::size_t(c - 1)] + rows_[r - 1][std::size_t(c)] +
              row[std::size_t(c - 1)];
        row.push_back(std::move(v));
      }
    }
    cols_ = maxk + 1;
  }

  long m_;
  long cols_ = 0;
  std::vector<std::vector<Int>> rows_;
};

inline Int lattice_number(long m, long n, long k) {
  LatticeTable t(m);
  return t.at(n, k);
}

// Shell count closed form: S(n, k) = sum_i C(n-1, i-1) C(k, i) 2^i for n >= 1,
// and S(0, k) = 1.
inline Int closed_form_shell(long n, long k) {
  if (n < 0 || k < 0) throw std::invalid_argument("indices must be >= 0");
  if (n == 0) return 1;
  Int acc = 0;
  for (long i = 1; i <= k; ++i)
    acc += binomial(n - 1, i - 1) * binomial(k, i) * int_pow(Int(2), static_cast<unsigned long>(i));
  return acc;
}

// Ball count closed forms: sum_i C(n, i) C(k, i) 2^i and sum_i C(n+i, k) C(k, i).
inline Int closed_form_ball_binom2(long n, long k) {
  if (n < 0 || k < 0) throw std::invalid_argument("indices must be >= 0");
  Int acc = 0;
  for (long i = 0; i <= std::min(n, k); ++i)
    acc += binomial(n, i) * binomial(k, i) * int_pow(Int(2), static_cast<unsigned long>(i));
  return acc;
}

inline Int closed_form_ball_shifted(long n, long k) {
  if (n < 0 || k < 0) throw std::invalid_argument("indices must be >= 0");
  Int acc = 0;
  for (long i = 0; i <= k; ++i) acc += binomial(n + i, k) * binomial(k, i);
  return acc;
}

// ---------------------------------------------------------------------------
// Central diagonals.

enum class DiagKind { Shell, Ball, Coord, Schroeder };

// Generating functions of the central sequences, with q = sqrt(1 - 6x + x^2):
//   ball 1/q, shell (1 + x + q)/(2q), coord (3 - x - q)/(2q),
//   schroeder (1 - x - q)/(2x).
inline TruncatedSeries gf_expand(DiagKind kind, int order) {
  TruncatedSeries base = series_ratio({1, -6, 1}, {1}, order + 1);
  TruncatedSeries q = series_sqrt(base);
  TruncatedSeries one = series_const(Rat(1), order + 1);
  switch (kind) {
    case DiagKind::Ball:
      return series_truncate(series_div(one, q), order);
    case DiagKind::Shell: {
      TruncatedSeries num = series_add(series_ratio({1, 1}, {1}, order + 1), q);
      return series_truncate(series_scale(series_div(num, q), Rat(1, 2)), order);
    }
    case DiagKind::Coord: {
      TruncatedSeries num = series_sub(series_ratio({3, -1}, {1}, order + 1), q);
      return series_truncate(series_scale(series_div(num, q), Rat(1, 2)), order);
    }
    case DiagKind::Schroeder: {
      TruncatedSeries num = series_sub(series_ratio({1, -1}, {1}, order + 1), q);
      return series_scale(series_shift_down(num, 1), Rat(1, 2));
    }
  }
  throw std::logic_error("unreachable");
}

// Central sequences by their three-term recurrences (the Schroeder numbers
// come from their generating function). Every division is exact and asserted.
inline std::vector<Int> diagonal(DiagKind kind, long upTo) {
  if (upTo < 0) throw std::invalid_argument("diagonal length must be >= 0");
  std::vector<Int> v;
  v.reserve(std::size_t(upTo) + 1);
  switch (kind) {
    case DiagKind::Ball: // n D_n = 3(2n-1) D_{n-1} - (n-1) D_{n-2}
      v.push_back(1);
      if (upTo >= 1) v.push_back(3);
      for (long n = 2; n <= upTo; ++n)
        v.push_back(div_exact(3 * (2 * n - 1) * v[std::size_t(n - 1)] -
                                  (n - 1) * v[std::size_t(n - 2)],
                              Int(n)));
      break;
    case DiagKind::Shell: // n(2n-3) S_n = 4(3n^2-6n+2) S_{n-1} - (n-2)(2n-1) S_{n-2}
      v.push_back(1);
      if (upTo >= 1) v.push_back(2);
      for (long n = 2; n <= upTo; ++n)
        v.push_back(div_exact(4 * (3 * n * n - 6 * n + 2) * v[std::size_t(n - 1)] -
                                  (n - 2) * (2 * n - 1) * v[std::size_t(n - 2)],
                              Int(n * (2 * n - 3))));
      break;
    case DiagKind::Coord: // n(n-1) C_n = 3(2n-1)(n-1) C_{n-1} - n(n-2) C_{n-2}
      v.push_back(1);
      if (upTo >= 1) v.push_back(4);
      for (long n = 2; n <= upTo; ++n)
        v.push_back(div_exact(3 * (2 * n - 1) * (n - 1) * v[std::size_t(n - 1)] -
                                  n * (n - 2) * v[std::size_t(n - 2)],
                              Int(n * (n - 1))));
      break;
    case DiagKind::Schroeder: {
      TruncatedSeries s = gf_expand(DiagKind::Schroeder, int(upTo));
      for (long n = 0; n <= upTo; ++n) {
        const Rat& c = series_coeff(s, int(n));
        if (rat_denominator(c) != 1)
          throw std::logic_error("schroeder expansion produced a non-integer");
        v.push_back(rat_numerator(c));
      }
      break;
    }
  }
  return v;
}

// ---------------------------------------------------------------------------
// Jacobi polynomial evaluation at a rational point (exact). The explicit sum
//   P_n^(a,b)(t) = sum_i C(n+a, i) C(n+b, n-i) ((t+1)/2)^i ((t-1)/2)^(n-i)
// is the primary route; it is total in (a, b). The three-term recurrence is a
// cross-check and refuses parameter values that zero its leading factor.
inline Rat jacobi_eval(const Rat& a, const Rat& b, const Rat& t, long n) {
  if (n < 0) throw std::invalid_argument("jacobi degree must be >= 0");
  Rat up = (t + 1) / 2, dn = (t - 1) / 2;
  Rat acc = 0;
  for (long i = 0; i <= n; ++i) {
    Rat term = binomial_rat(Rat(n) + a, i) * binomial_rat(Rat(n) + b, n - i);
    if (term == 0) continue;
    Rat p = 1;
    for (long j = 0; j < i; ++j) p *= up;
    for (long j = 0; j < n - i; ++j) p *= dn;
    acc += term * p;
  }
  return acc;
}

inline Rat jacobi_eval_recurrence(const Rat& a, const Rat& b, const Rat& t, long n) {
  if (n < 0) throw std::invalid_argument("jacobi degree must be >= 0");
  Rat p0 = 1;
  if (n == 0) return p0;
  Rat p1 = (a + 1) + (a + b + 2) * (t - 1) / 2;
  if (n == 1) return p1;
  for (long k = 2; k <= n; ++k) {
    Rat kk(k);
    Rat lead = 2 * kk * (kk + a + b) * (2 * kk + a + b - 2);
    if (lead == 0)
      throw DegenerateRecurrence("jacobi recurrence leading factor vanishes at n = " +
                                 std::to_string(k));
    Rat mid = (2 * kk + a + b - 1) *
              ((2 * kk + a + b) * (2 * kk + a + b - 2) * t + a * a - b * b);
    Rat low = 2 * (kk + a - 1) * (kk + b - 1) * (2 * kk + a + b);
    Rat p2 = (mid * p1 - low * p0) / lead;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

} // namespace coordlat
