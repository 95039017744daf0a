#pragma once

// Analytic facts about the coefficient rows and central diagonals: exact
// mean/variance/mode statistics, Newton and Darroch inequalities, log-
// concavity and log-convexity checks, Hankel determinant identities and
// Stieltjes-moment screening, and 50-digit central/local limit comparisons
// against the Gaussian.
//
// Everything except the limit-theorem suprema is exact rational or integer
// arithmetic; the suprema are inherently numeric and use 50-digit floats.

#include "coordlat/lattice.hpp"
#include "coordlat/matrix.hpp"
#include "coordlat/poly_zeros.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/erf.hpp>

namespace coordlat {

// ---------------------------------------------------------------------------
// Exact statistics of a nonnegative coefficient row f = sum a_k x^k, read as
// the distribution P(X = k) = a_k / f(1).

struct CoeffStats {
  Rat total;    // f(1), must be positive
  Rat mean;     // f'(1) / f(1)
  Rat variance; // f''(1)/f(1) + mean - mean^2
};

inline CoeffStats coeff_stats(const IntPoly& f) {
  for (const Int& a : f)
    if (a < 0) throw std::invalid_argument("coefficients must be nonnegative");
  Rat f1 = int_poly_eval(f, Rat(1));
  if (f1 <= 0) throw std::invalid_argument("row total must be positive");
  Rat d1 = int_poly_eval(int_poly_derivative(f), Rat(1));
  Rat d2 = int_poly_eval(int_poly_derivative(int_poly_derivative(f)), Rat(1));
  Rat mean = d1 / f1;
  return {f1, mean, d2 / f1 + mean - mean * mean};
}

// Indices attaining the maximal coefficient.
inline std::vector<long> coeff_modes(const IntPoly& f) {
  if (f.empty()) throw std::invalid_argument("moded row must be nonzero");
  Int best = f[0];
  for (const Int& a : f) best = std::max(best, a);
  std::vector<long> m;
  for (std::size_t k = 0; k < f.size(); ++k)
    if (f[k] == best) m.push_back(long(k));
  return m;
}

// Newton's inequalities for a row of degree n:
//   a_k^2 >= a_{k-1} a_{k+1} (k+1)(n-k+1) / (k(n-k)),  1 <= k <= n-1.
inline bool newton_inequalities(const IntPoly& f) {
  long n = int_poly_degree(f);
  for (long k = 1; k <= n - 1; ++k) {
    Rat lhs = Rat(f[std::size_t(k)]) * Rat(f[std::size_t(k)]) * Rat(k) * Rat(n - k);
    Rat rhs = Rat(f[std::size_t(k - 1)]) * Rat(f[std::size_t(k + 1)]) * Rat(k + 1) *
              Rat(n - k + 1);
    if (lhs < rhs) return false;
  }
  return true;
}

// Darroch's bound: every mode of a real-rooted nonnegative row lies within
// one of the mean.
inline bool darroch_mode_bound(const IntPoly& f) {
  Rat mean = coeff_stats(f).mean;
  for (long m : coeff_modes(f)) {
    Rat d = Rat(m) - mean;
    if (d < 0) d = -d;
    if (!(d < 1)) return false;
  }
  return true;
}

template <class T>
inline bool seq_logconcave(const std::vector<T>& a) {
  for (std::size_t k = 1; k + 1 < a.size(); ++k)
    if (a[k] * a[k] < a[k - 1] * a[k + 1]) return false;
  return true;
}

template <class T>
inline bool seq_logconvex(const std::vector<T>& a) {
  for (std::size_t k = 1; k + 1 < a.size(); ++k)
    if (a[k] * a[k] > a[k - 1] * a[k + 1]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Log-convexity of the central diagonals via their three-term recurrences
// a_n u_n = b_n u_{n-1} - c_n u_{n-2}. The sufficient criterion checks, for
// every n in range, that
//   | a_n  a_{n+1} |        ( | a_n  a_{n+1} | )
//   | b_n  b_{n+1} | >= max ( | c_n  c_{n+1} |, 0 )
// together with positivity of the coefficient functions.

inline void recurrence_triple(DiagKind kind, long n, Int& a, Int& b, Int& c) {
  switch (kind) {
    case DiagKind::Ball:
      a = n;
      b = 6 * n - 3;
      c = n - 1;
      return;
    case DiagKind::Shell:
      a = n * (2 * n - 3);
      b = 12 * n * n - 24 * n + 8;
      c = (n - 2) * (2 * n - 1);
      return;
    case DiagKind::Coord:
      a = n * (n - 1);
      b = 3 * (2 * n - 1) * (n - 1);
      c = n * (n - 2);
      return;
    case DiagKind::Schroeder:
      throw std::invalid_argument("no recurrence triple for this diagonal");
  }
  throw std::logic_error("unreachable");
}

inline bool logconvex_recurrence_criterion(DiagKind kind, long upTo) {
  // All three triples have positive leading coefficient from n = 2 on.
  for (long n = 2; n + 1 <= upTo; ++n) {
    Int an, bn, cn, an1, bn1, cn1;
    recurrence_triple(kind, n, an, bn, cn);
    recurrence_triple(kind, n + 1, an1, bn1, cn1);
    Int d1 = an * bn1 - an1 * bn;
    Int d2 = an * cn1 - an1 * cn;
    if (d1 < 0 || d1 < d2) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Hankel determinants.

// det [ seq[offset + i + j] ]_{i,j = 0..order}
inline Int hankel_det(const std::vector<Int>& seq, long offset, long order) {
  if (offset < 0 || order < 0 ||
      std::size_t(offset + 2 * order) >= seq.size())
    throw std::invalid_argument("hankel window exceeds the sequence");
  IntMat m(order + 1, order + 1);
  for (long i = 0; i <= order; ++i)
    for (long j = 0; j <= order; ++j)
      m(i, j) = seq[std::size_t(offset + i + j)];
  return det_fraction_free(m);
}

struct HankelSuite {
  std::vector<Int> ball, ballShift, ballPadded; // determinant ladders
  bool powersMatch = false;   // the three closed-form power identities
  bool telescopes = false;    // h_k(pad) h_{k-2}(shift) =
                              //   h_{k-1}(pad) h_{k-1}(shift) - h_{k-1}(ball)^2
};

// Hankel ladders of the central ball diagonal D, its shift (D_1, D_2, ...),
// and its padding (1, D_0, D_1, ...), with the closed forms
//   h_n(D) = 2^(n(n+3)/2),  h_n(shift) = 2^(n(n+3)/2) (2^(n+1) + 1),
//   h_n(pad) = 2^(n(n+1)/2).
inline HankelSuite hankel_suite(long upTo) {
  if (upTo < 2) throw std::invalid_argument("suite needs at least order 2");
  std::vector<Int> d = diagonal(DiagKind::Ball, 2 * upTo + 2);
  std::vector<Int> padded;
  padded.push_back(1);
  padded.insert(padded.end(), d.begin(), d.end());
  HankelSuite s;
  s.powersMatch = true;
  for (long n = 0; n <= upTo; ++n) {
    s.ball.push_back(hankel_det(d, 0, n));
    s.ballShift.push_back(hankel_det(d, 1, n));
    s.ballPadded.push_back(hankel_det(padded, 0, n));
    Int p = int_pow(Int(2), static_cast<unsigned long>(n * (n + 3) / 2));
    Int q = int_pow(Int(2), static_cast<unsigned long>(n * (n + 1) / 2));
    Int shiftFactor = int_pow(Int(2), static_cast<unsigned long>(n + 1)) + 1;
    if (s.ball.back() != p || s.ballShift.back() != p * shiftFactor ||
        s.ballPadded.back() != q)
      s.powersMatch = false;
  }
  s.telescopes = true;
  for (long k = 2; k <= upTo; ++k) {
    Int lhs = s.ballPadded[std::size_t(k)] * s.ballShift[std::size_t(k - 2)];
    Int rhs = s.ballPadded[std::size_t(k - 1)] * s.ballShift[std::size_t(k - 1)] -
              s.ball[std::size_t(k - 1)] * s.ball[std::size_t(k - 1)];
    if (lhs != rhs) s.telescopes = false;
  }
  return s;
}

// Stieltjes-moment screening on a finite window: every Hankel determinant of
// the sequence and of its shift must be nonnegative. The first negative
// determinant is reported as the witness.
struct SmReport {
  bool consistent = true;
  long offset = -1, order = -1; // witness coordinates when inconsistent
  Int value;
};

inline SmReport check_sm(const std::vector<Int>& seq) {
  SmReport rep;
  for (long offset = 0; offset <= 1; ++offset) {
    long maxOrder = (long(seq.size()) - 1 - offset) / 2;
    for (long n = 0; n <= maxOrder; ++n) {
      Int d = hankel_det(seq, offset, n);
      if (d < 0) {
        rep.consistent = false;
        rep.offset = offset;
        rep.order = n;
        rep.value = d;
        return rep;
      }
    }
  }
  return rep;
}

// Desnanot-Jacobi identity for a square matrix (order >= 2):
//   det M * det interior = det NW * det SE - det NE * det SW,
// where interior strips the outer frame and the four terms strip one
// extreme row and one extreme column each.
inline bool desnanot_jacobi_check(const RatMat& m) {
  if (!m.square() || m.rows() < 2)
    throw std::invalid_argument("identity needs a square matrix of order >= 2");
  long n = m.rows();
  auto range = [](long from, long to) {
    std::vector<long> v;
    for (long i = from; i <= to; ++i) v.push_back(i);
    return v;
  };
  std::vector<long> all = range(0, n - 1), head = range(0, n - 2),
                    tail = range(1, n - 1), inner = range(1, n - 2);
  Rat lhs = minor_det(m, all, all) * minor_det(m, inner, inner);
  Rat rhs = minor_det(m, head, head) * minor_det(m, tail, tail) -
            minor_det(m, head, tail) * minor_det(m, tail, head);
  return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Mean drift and the variance lower bound, all exact.

// d_n(1) / c_n(1): the Pell-quotient that controls the centred mean.
inline Rat pell_ratio(long n) {
  return int_poly_eval(ball_row_poly(n), Rat(1)) /
         int_poly_eval(coord_row_poly(n), Rat(1));
}

// Exact identity: mean of the coordination row n minus (n-1)/2 equals
// d_n(1) / (2 c_n(1)).
inline bool mean_drift_identity(long n) {
  Rat mean = coeff_stats(coord_row_poly(n)).mean;
  return mean - Rat(n - 1, 2) == pell_ratio(n) / 2;
}

// Compare |pell_ratio(m) - 1/sqrt 2| against |pell_ratio(n) - 1/sqrt 2|
// exactly: returns -1, 0, or +1 as the first is smaller, equal, or larger.
// Uses sign((a - b)(a + b - sqrt 2)) with (a + b)^2 compared to 2.
inline int drift_compare(long m, long n) {
  Rat a = pell_ratio(m), b = pell_ratio(n);
  Rat diff = a - b;
  Rat sumSq = (a + b) * (a + b);
  int s1 = diff == 0 ? 0 : (diff > 0 ? 1 : -1);
  int s2 = sumSq == 2 ? 0 : (sumSq > 2 ? 1 : -1);
  return s1 * s2;
}

// sigma^2 > n t0 / (1 + t1)^2 with t0 = 17/100 and t1 = 583/100: rational
// brackets of the root interval (3 - 2 sqrt 2, 3 + 2 sqrt 2) after the sign
// flip, so each Bernoulli factor contributes at least t0 / (1 + t1)^2.
inline bool variance_lower_bound_holds(long n) {
  Rat var = coeff_stats(coord_row_poly(n)).variance;
  const Rat t0(17, 100), t1(583, 100);
  return var > Rat(n) * t0 / ((1 + t1) * (1 + t1));
}

// ---------------------------------------------------------------------------
// Limit-theorem suprema at 50 digits.

inline Float50 std_normal_cdf(const Float50& x) {
  static const Float50 sqrt2 = sqrt(Float50(2));
  Float50 arg = -x / sqrt2;
  Float50 e = boost::math::erfc(arg);
  return e / 2;
}

inline Float50 std_normal_pdf(const Float50& x) {
  static const Float50 norm =
      sqrt(2 * boost::math::constants::pi<Float50>());
  Float50 e = exp(-x * x / 2);
  return e / norm;
}

struct NormalityReport {
  Float50 mean, sigma;
  Float50 cltSup; // sup_x | F_n(x) - Phi(x) |
  Float50 lltSup; // sup_x | sigma f_n(x) - phi(x) | for the half-open steps
};

// Compare the row distribution against the Gaussian with its exact mean and
// variance. The distribution function is compared at its jump points (both
// one-sided limits); the scaled probability step function lives on the
// half-integer grid t_k = (k - 1/2 - mean)/sigma and is compared at interval
// endpoints, at x = 0 when an interval covers it, and against the tails.
inline NormalityReport normality_report(const IntPoly& f) {
  CoeffStats st = coeff_stats(f);
  NormalityReport rep;
  rep.mean = to_float(st.mean);
  rep.sigma = sqrt(to_float(st.variance));
  Float50 total = to_float(st.total);
  long n = int_poly_degree(f);

  rep.cltSup = 0;
  Float50 cum = 0;
  for (long k = 0; k <= n; ++k) {
    Float50 x = (Float50(k) - rep.mean) / rep.sigma;
    Float50 phi = std_normal_cdf(x);
    Float50 below = abs(cum - phi); // left limit at the jump
    cum += Float50(f[std::size_t(k)]) / total;
    Float50 at = abs(cum - phi); // value at the jump
    rep.cltSup = std::max(rep.cltSup, std::max(below, at));
  }

  rep.lltSup = 0;
  auto grid = [&](long k) {
    return Float50((Float50(k) - Float50(1) / 2 - rep.mean) / rep.sigma);
  };
  for (long k = 0; k <= n; ++k) {
    Float50 step = rep.sigma * Float50(f[std::size_t(k)]) / total;
    Float50 lo = grid(k), hi = grid(k + 1);
    Float50 atLo = abs(step - std_normal_pdf(lo));
    Float50 atHi = abs(step - std_normal_pdf(hi));
    rep.lltSup = std::max(rep.lltSup, std::max(atLo, atHi));
    if (lo < 0 && 0 < hi) {
      Float50 atPeak = abs(step - std_normal_pdf(Float50(0)));
      rep.lltSup = std::max(rep.lltSup, atPeak);
    }
  }
  Float50 leftTail = std_normal_pdf(grid(0));
  Float50 rightTail = std_normal_pdf(grid(n + 1));
  rep.lltSup = std::max(rep.lltSup, std::max(leftTail, rightTail));
  return rep;
}

} // namespace coordlat
