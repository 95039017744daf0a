#pragma once

// Riordan arrays R(g, f): the infinite matrix whose column k has generating
// function g(x) f(x)^k. A proper array has g(0) = 1, f(0) = 0, f'(0) != 0 and
// is lower triangular; square (improper) arrays with f(0) != 0 are supported
// for entries, windows and as the right factor of a product, but have no
// inverse or production data.
//
// Everything is computed on truncated series, so entries are available for
// row indices up to the construction order.

#include "coordlat/matrix.hpp"
#include "coordlat/series.hpp"

namespace coordlat {

struct ImproperArray : std::domain_error {
  explicit ImproperArray(const std::string& m) : std::domain_error(m) {}
};
struct ImproperLeftFactor : std::domain_error {
  ImproperLeftFactor()
      : std::domain_error("left factor of a Riordan product must be proper") {}
};

struct RiordanArray {
  TruncatedSeries g, f;

  int order() const { return std::min(g.order(), f.order()); }
};

inline bool riordan_proper(const RiordanArray& r) {
  return r.g.c[0] == 1 && r.f.c[0] == 0 && r.f.order() >= 1 && r.f.c[1] != 0;
}

// Entry (n, k) = [x^n] g f^k.
inline Rat riordan_entry(const RiordanArray& r, long n, long k) {
  if (n < 0 || k < 0) return Rat(0);
  if (n > r.order())
    throw InsufficientOrder("riordan entry row " + std::to_string(n) +
                            " beyond construction order " + std::to_string(r.order()));
  int N = int(n);
  TruncatedSeries col = series_truncate(r.g, N);
  TruncatedSeries f = series_truncate(r.f, N);
  for (long j = 0; j < k; ++j) {
    bool all_zero = true;
    for (const Rat& c : col.c)
      if (c != 0) { all_zero = false; break; }
    if (all_zero) break; // triangular case: higher powers cannot reach x^n
    col = series_mul(col, f);
  }
  return col.c[std::size_t(n)];
}

// Rectangular window of entries, rows 0..nrows-1, columns 0..ncols-1.
inline RatMat riordan_window(const RiordanArray& r, long nrows, long ncols) {
  if (nrows - 1 > r.order())
    throw InsufficientOrder("riordan window exceeds construction order");
  int N = std::max(int(nrows) - 1, 0);
  RatMat m(nrows, ncols);
  TruncatedSeries col = series_truncate(r.g, N);
  TruncatedSeries f = series_truncate(r.f, N);
  for (long k = 0; k < ncols; ++k) {
    for (long i = 0; i < nrows; ++i) m(i, k) = col.c[std::size_t(i)];
    if (k + 1 < ncols) col = series_mul(col, f);
  }
  return m;
}

// R(g1, f1) * R(g2, f2) = R(g1 * g2(f1), f2(f1)); the left factor must be
// proper so that the compositions are defined.
inline RiordanArray riordan_multiply(const RiordanArray& a, const RiordanArray& b) {
  if (!riordan_proper(a)) throw ImproperLeftFactor();
  RiordanArray r;
  r.g = series_mul(a.g, series_compose(b.g, a.f));
  r.f = series_compose(b.f, a.f);
  return r;
}

// R(g, f)^(-1) = R(1/g(fbar), fbar) where fbar is the compositional inverse.
inline RiordanArray riordan_inverse(const RiordanArray& a) {
  if (!riordan_proper(a))
    throw ImproperArray("only proper Riordan arrays have an inverse");
  TruncatedSeries fbar = series_reversion(a.f);
  RiordanArray r;
  r.g = series_div(series_const(Rat(1), fbar.order()), series_compose(a.g, fbar));
  r.f = fbar;
  return r;
}

// Production data: the unique A, Z with f = x A(f) and g = 1 / (1 - x Z(f)).
// Orders drop by one because both come from dividing by x.
struct ProductionData {
  TruncatedSeries A, Z;
};

inline ProductionData extract_production(const RiordanArray& a) {
  if (!riordan_proper(a))
    throw ImproperArray("production data requires a proper Riordan array");
  TruncatedSeries fbar = series_reversion(a.f);
  ProductionData p;
  p.A = series_compose(series_shift_down(a.f, 1), fbar);
  TruncatedSeries one = series_const(Rat(1), a.g.order());
  TruncatedSeries znum = series_sub(one, series_div(one, a.g)); // x Z(f)
  p.Z = series_compose(series_shift_down(znum, 1), fbar);
  return p;
}

// Rebuild rows 0..nrows-1 from production data by the row-replay recurrence
//   R(n+1, 0)   = sum_j Z_j R(n, j)
//   R(n+1, k+1) = sum_j A_j R(n, k+j).
inline RatMat riordan_window_from_production(const ProductionData& p, long nrows) {
  if (nrows - 2 > p.A.order() || nrows - 2 > p.Z.order())
    throw InsufficientOrder("production data order too small for requested rows");
  RatMat m(nrows, nrows);
  if (nrows > 0) m(0, 0) = 1;
  for (long n = 0; n + 1 < nrows; ++n) {
    for (long j = 0; j <= n && j <= p.Z.order(); ++j)
      m(n + 1, 0) += series_coeff(p.Z, int(j)) * m(n, j);
    for (long k = 0; k < n + 1; ++k)
      for (long j = 0; k + j <= n && j <= p.A.order(); ++j)
        m(n + 1, k + 1) += series_coeff(p.A, int(j)) * m(n, k + j);
  }
  return m;
}

// Left product matrix of R(g, f): columns (g; f; x f; x^2 f; ...). Window has
// entry (i, 0) = g_i and (i, j) = f_{i-j+1} for j >= 1.
inline RatMat left_product_window(const RiordanArray& r, long nrows, long ncols) {
  if (nrows - 1 > r.order())
    throw InsufficientOrder("left product window exceeds construction order");
  RatMat m(nrows, ncols);
  for (long i = 0; i < nrows; ++i) {
    m(i, 0) = r.g.c[std::size_t(i)];
    for (long j = 1; j < ncols; ++j) {
      long fi = i - j + 1;
      if (fi >= 0 && fi <= r.f.order()) m(i, j) = r.f.c[std::size_t(fi)];
    }
  }
  return m;
}

// Bordered window of diag(1, R): (n+1) x n, with the original array shifted
// down and right by one.
inline RatMat bordered_window(const RiordanArray& r, long nrows, long ncols) {
  RatMat inner = riordan_window(r, nrows - 1, ncols - 1);
  RatMat m(nrows, ncols);
  m(0, 0) = 1;
  for (long i = 1; i < nrows; ++i)
    for (long j = 1; j < ncols; ++j) m(i, j) = inner(i - 1, j - 1);
  return m;
}

// Decomposition R = R^L * diag(1, R) on an n x n window: the left factor uses
// one extra column, the bordered factor one extra row, and the product equals
// the window of R exactly.
struct LeftProductDecomposition {
  RatMat left;     // n x (n+1)
  RatMat bordered; // (n+1) x n
};

inline LeftProductDecomposition left_product_decompose(const RiordanArray& r, long n) {
  return {left_product_window(r, n, n + 1), bordered_window(r, n + 1, n)};
}

// ---------------------------------------------------------------------------
// Named arrays of the cubic-lattice family.

// Shell array S: S(n, k) = number of points of Z^k at l1-distance exactly n.
inline RiordanArray make_shell(int order) {
  return {series_const(Rat(1), order), series_ratio({1, 1}, {1, -1}, order)};
}

// Cumulative (ball) array D: partial sums of shell columns; Delannoy numbers.
inline RiordanArray make_ball(int order) {
  return {series_ratio({1}, {1, -1}, order), series_ratio({1, 1}, {1, -1}, order)};
}

// Coordination array C: C(n, k) = S(n, k+1).
inline RiordanArray make_coord(int order) {
  return {series_ratio({1, 1}, {1, -1}, order), series_ratio({1, 1}, {1, -1}, order)};
}

// Triangles: same column functions multiplied by an extra x, hence proper.
inline RiordanArray make_shell_tri(int order) {
  return {series_const(Rat(1), order), series_ratio({0, 1, 1}, {1, -1}, order)};
}

inline RiordanArray make_ball_tri(int order) {
  return {series_ratio({1}, {1, -1}, order), series_ratio({0, 1, 1}, {1, -1}, order)};
}

inline RiordanArray make_coord_tri(int order) {
  return {series_ratio({1, 1}, {1, -1}, order), series_ratio({0, 1, 1}, {1, -1}, order)};
}

// One-parameter family: m = 0 gives the shell array, m = 1 the ball array,
// m = 2 the coordination array.
inline RiordanArray make_family(long m, int order) {
  return {series_ratio({1, m - 1}, {1, -1}, order), series_ratio({1, 1}, {1, -1}, order)};
}

inline RiordanArray make_family_tri(long m, int order) {
  return {series_ratio({1, m - 1}, {1, -1}, order), series_ratio({0, 1, 1}, {1, -1}, order)};
}

// Pascal square (binomial coefficients C(n+k, k)) and Pascal triangle.
inline RiordanArray make_pascal_square(int order) {
  return {series_ratio({1}, {1, -1}, order), series_ratio({1}, {1, -1}, order)};
}

inline RiordanArray make_pascal_tri(int order) {
  return {series_ratio({1}, {1, -1}, order), series_ratio({0, 1}, {1, -1}, order)};
}

// Partial-sum operator J = R(1/(1-x), x).
inline RiordanArray make_partial_sum(int order) {
  return {series_ratio({1}, {1, -1}, order), series_x(order)};
}

// Left factors appearing in the lower-diagonal-upper factorizations.
inline RiordanArray make_shell_left(int order) {
  return {series_const(Rat(1), order), series_ratio({0, 1}, {1, -1}, order)};
}

inline RiordanArray make_coord_left(int order) {
  return {series_ratio({1, 1}, {1, -1}, order), series_ratio({0, 1}, {1, -1}, order)};
}

// Toeplitz array of a sequence: T(g) = R(g, x).
inline RiordanArray make_toeplitz(const TruncatedSeries& g) {
  return {g, series_x(g.order())};
}

// ---------------------------------------------------------------------------
// Lower-diagonal-upper factorizations: S = L_S 2^P p^T, C = L_C 2^P p^T and
// D = p 2^P p^T, where 2^P = diag(1, 2, 4, ...) and p is the Pascal triangle.

enum class LduKind { Shell, Coord, Ball };

struct LduFactors {
  RatMat left, diag, upper;
};

inline LduFactors ldu_factors(LduKind kind, long n) {
  int order = int(n); // rows 0..n-1
  RiordanArray left;
  switch (kind) {
    case LduKind::Shell: left = make_shell_left(order); break;
    case LduKind::Coord: left = make_coord_left(order); break;
    case LduKind::Ball: left = make_pascal_tri(order); break;
  }
  LduFactors f;
  f.left = riordan_window(left, n, n);
  f.diag = RatMat(n, n);
  Rat p = 1;
  for (long i = 0; i < n; ++i) {
    f.diag(i, i) = p;
    p *= 2;
  }
  f.upper = mat_transpose(riordan_window(make_pascal_tri(order), n, n));
  return f;
}

} // namespace coordlat
