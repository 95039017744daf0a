#pragma once

// Row polynomials of the lattice triangles and certified facts about their
// zeros: realness, location inside the negative set of x^2 + 6x + 1,
// interlacing between family members, the closed-form zeros of the ball
// family, and how the zeros fill out their limiting interval.
//
// Everything that certifies is exact (Sturm counts and rational sign
// evaluations); 50-digit floating point appears only where a claim is
// inherently numeric (evaluating the trigonometric zero formula).

#include "coordlat/lattice.hpp"
#include "coordlat/sturm.hpp"

#include <boost/math/constants/constants.hpp>

namespace coordlat {

struct SharedRootWithBoundary : std::domain_error {
  explicit SharedRootWithBoundary(const std::string& m) : std::domain_error(m) {}
};

struct CommonRoot : std::domain_error {
  explicit CommonRoot(const std::string& m) : std::domain_error(m) {}
};

struct DegreeMismatch : std::domain_error {
  explicit DegreeMismatch(const std::string& m) : std::domain_error(m) {}
};

// ---------------------------------------------------------------------------
// Row polynomials. All three families satisfy p_n = (x+1) p_{n-1} + x p_{n-2}
// with family-specific seeds; the shell rows are x times the coordination
// rows one step earlier.

inline std::vector<IntPoly> row_poly_run(const IntPoly& p0, const IntPoly& p1,
                                         long upTo) {
  std::vector<IntPoly> v{p0, p1};
  for (long n = 2; n <= upTo; ++n) {
    const IntPoly& a = v[std::size_t(n - 1)];
    const IntPoly& b = v[std::size_t(n - 2)];
    IntPoly r(a.size() + 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
      r[i] += a[i];     // + p_{n-1}
      r[i + 1] += a[i]; // + x p_{n-1}
    }
    for (std::size_t i = 0; i < b.size(); ++i) r[i + 1] += b[i]; // + x p_{n-2}
    v.push_back(std::move(r));
  }
  v.resize(std::size_t(upTo) + 1);
  return v;
}

inline IntPoly ball_row_poly(long n) {
  if (n < 0) throw std::invalid_argument("row index must be >= 0");
  return row_poly_run({Int(1)}, {Int(1), Int(1)}, std::max(n, 1L))[std::size_t(n)];
}

inline IntPoly coord_row_poly(long n) {
  if (n < 0) throw std::invalid_argument("row index must be >= 0");
  return row_poly_run({Int(1)}, {Int(2), Int(1)}, std::max(n, 1L))[std::size_t(n)];
}

inline IntPoly shell_row_poly(long n) {
  if (n < 0) throw std::invalid_argument("row index must be >= 0");
  if (n == 0) return {Int(1)};
  IntPoly c = coord_row_poly(n - 1);
  IntPoly r(c.size() + 1, Int(0));
  for (std::size_t i = 0; i < c.size(); ++i) r[i + 1] = c[i];
  return r;
}

// ---------------------------------------------------------------------------
// Zero location. The limiting interval is the negative set of
// q(x) = x^2 + 6x + 1, i.e. (-3 - 2 sqrt 2, -3 + 2 sqrt 2).

inline IntPoly limit_interval_poly() { return {Int(1), Int(6), Int(1)}; }

struct NegativeSetCertificate {
  bool realRooted = false; // as many real roots as the degree
  bool allInside = false;  // every enclosure inside the negative set of q
  std::vector<RationalInterval> enclosures;
};

// Certify that p is real-rooted with all roots in { q < 0 }. q must be a
// convex quadratic (positive leading coefficient) so that its negative set is
// an interval and negative endpoint signs certify a whole enclosure. Roots of
// p on the boundary { q = 0 } are refused.
inline NegativeSetCertificate certify_roots_in_negative_set(
    const IntPoly& p, const IntPoly& q, const std::vector<Rat>& hints = {}) {
  if (int_poly_degree(q) != 2 || q.back() <= 0)
    throw std::invalid_argument("boundary polynomial must be a convex quadratic");
  if (int_poly_degree(int_poly_gcd(p, q)) > 0)
    throw SharedRootWithBoundary("a root lies on the interval boundary");

  IsolatedRoots iso = isolate_roots(p, hints);
  NegativeSetCertificate cert;
  cert.realRooted = long(iso.enclosures.size()) == int_poly_degree(iso.p);
  cert.allInside = true;
  for (RationalInterval iv : iso.enclosures) {
    for (int iter = 0;; ++iter) {
      int a = int_poly_sign_at(q, iv.lo);
      int b = int_poly_sign_at(q, iv.hi);
      if (a < 0 && b < 0) break; // enclosure inside the convex negative set
      if (a > 0 && b > 0) {      // enclosure (hence its root) outside
        cert.allInside = false;
        break;
      }
      if (iter >= 256)
        throw std::logic_error("negative-set certification failed to resolve");
      iv = refine_enclosure(iso.p, iv, iv.width() / 2);
      if (iv.lo == iv.hi) {
        // Exact rational root: a single sign decides.
        if (int_poly_sign_at(q, iv.lo) >= 0) cert.allInside = false;
        break;
      }
    }
    cert.enclosures.push_back(iv);
  }
  return cert;
}

// ---------------------------------------------------------------------------
// Interlacing.

enum class InterlaceVerdict { Interlaces, AlternatesLeft, Neither };

namespace detail {

inline bool disjoint(const RationalInterval& a, const RationalInterval& b) {
  return a.hi < b.lo || b.hi < a.lo;
}

// Refine the two enclosure lists (labels false = first list, true = second)
// until all intervals are pairwise disjoint. Requires all underlying roots
// distinct.
inline void make_disjoint(const IntPoly& p, std::vector<RationalInterval>& ep,
                          const IntPoly& q, std::vector<RationalInterval>& eq) {
  for (int round = 0; round < 256; ++round) {
    bool clash = false;
    for (const RationalInterval& a : ep)
      for (const RationalInterval& b : eq)
        if (!disjoint(a, b)) clash = true;
    if (!clash) return;
    for (RationalInterval& a : ep) a = refine_enclosure(p, a, a.width() / 2);
    for (RationalInterval& b : eq) b = refine_enclosure(q, b, b.width() / 2);
  }
  throw std::logic_error("make_disjoint: refinement cap hit");
}

} // namespace detail

// Decide how the real roots of p and q interleave.
//   Interlaces:     deg q = deg p + 1 and ascending roots read q p q ... p q.
//   AlternatesLeft: deg q = deg p and ascending roots read p q p q ... p q
//                   (each root of p sits just left of its partner in q).
// Throws DegreeMismatch unless deg q is deg p or deg p + 1, and CommonRoot if
// the polynomials share a root. Returns Neither when either polynomial has
// complex roots or the interleaving pattern fails.
inline InterlaceVerdict check_interlacing(const IsolatedRoots& p,
                                          const IsolatedRoots& q) {
  long dp = int_poly_degree(p.p), dq = int_poly_degree(q.p);
  if (dq != dp && dq != dp + 1)
    throw DegreeMismatch("degrees do not differ by zero or one");
  if (int_poly_degree(int_poly_gcd(p.p, q.p)) > 0)
    throw CommonRoot("polynomials share a root");
  if (long(p.enclosures.size()) != dp || long(q.enclosures.size()) != dq)
    return InterlaceVerdict::Neither;

  std::vector<RationalInterval> ep = p.enclosures, eq = q.enclosures;
  detail::make_disjoint(p.p, ep, q.p, eq);

  // Merge ascending; true marks an interval from q.
  std::vector<bool> label;
  std::size_t i = 0, j = 0;
  while (i < ep.size() || j < eq.size()) {
    if (j == eq.size() || (i < ep.size() && ep[i].hi < eq[j].lo))
      label.push_back(false), ++i;
    else
      label.push_back(true), ++j;
  }
  // Ascending patterns: q p q p ... q for Interlaces (q holds both extremes),
  // p q p q ... p q for AlternatesLeft (p leads from the left).
  bool expect = dq == dp + 1;
  for (bool l : label) {
    if (l != expect) return InterlaceVerdict::Neither;
    expect = !expect;
  }
  return (dq == dp + 1) ? InterlaceVerdict::Interlaces
                        : InterlaceVerdict::AlternatesLeft;
}

inline InterlaceVerdict check_interlacing(const IntPoly& p, const IntPoly& q) {
  return check_interlacing(isolate_roots(p), isolate_roots(q));
}

// Sign of f at each root of g, ascending. Exact: each enclosure of g is
// refined until f provably has no root inside, so f keeps one sign there.
inline std::vector<int> signs_at_roots(const IntPoly& f, const IsolatedRoots& g) {
  if (int_poly_degree(int_poly_gcd(f, g.p)) > 0)
    throw CommonRoot("sign query at a shared root");
  // Count the roots of f through its squarefree part so the chain is valid.
  SturmChain fc =
      sturm_chain(int_poly_from(poly_squarefree_part(poly_from_int(f))));
  std::vector<int> out;
  for (RationalInterval iv : g.enclosures) {
    for (int iter = 0;; ++iter) {
      if (iv.lo == iv.hi) break;
      if (sturm_count_interval(fc, iv.lo, iv.hi) == 0 &&
          int_poly_sign_at(f, iv.lo) != 0)
        break;
      if (iter >= 256) throw std::logic_error("signs_at_roots: cap hit");
      iv = refine_enclosure(g.p, iv, iv.width() / 2);
    }
    int s = int_poly_sign_at(f, iv.lo == iv.hi ? iv.lo : iv.mid());
    out.push_back(s);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Closed-form zeros of the ball rows:
//   r(n, k) = -( sqrt(1 + cos^2(k pi / (n+1))) - cos(k pi / (n+1)) )^2,
// k = 1..n, descending in k.

inline Float50 ball_zero_formula(long n, long k) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("bad zero index");
  Float50 theta = boost::math::constants::pi<Float50>() * k / (n + 1);
  Float50 c = cos(theta);
  Float50 s = sqrt(1 + c * c) - c;
  return -s * s;
}

// Round a 50-digit value to a dyadic rational with denominator 2^60.
inline Rat to_dyadic(const Float50& x) {
  Float50 scaled = x * pow(Float50(2), 60);
  Int num = static_cast<Int>(boost::multiprecision::floor(scaled + Float50(1) / 2));
  return Rat(num) / Rat(int_pow(Int(2), 60));
}

// Ascending formula values for the ball row n, as dyadic rationals.
inline std::vector<Rat> ball_zero_points(long n) {
  std::vector<Rat> v;
  for (long k = n; k >= 1; --k) v.push_back(to_dyadic(ball_zero_formula(n, k)));
  return v;
}

// Hints that usually isolate in one pass: midpoints between adjacent formula
// values of the ball row (for the ball row itself), or the formula values
// (for rows whose roots they separate).
inline std::vector<Rat> ball_zero_hints(long n) {
  std::vector<Rat> pts = ball_zero_points(n), cuts;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    cuts.push_back((pts[i] + pts[i + 1]) / 2);
  return cuts;
}

struct ZeroFormulaReport {
  bool rootCountMatches = false; // n simple real roots found
  bool insideEnclosures = false; // k-th formula value inside k-th enclosure
  bool residualsSmall = false;   // |p(formula value)| < residual threshold
  Float50 maxResidual = 0;
  Rat maxWidth = 0;
};

inline Float50 int_poly_eval_f50(const IntPoly& p, const Float50& x) {
  Float50 acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + Float50(p[i]);
  return acc;
}

// Check the trigonometric zero formula for the ball row n against certified
// enclosures of width at most 2^-60, with a 10^-30 residual threshold at
// 50-digit evaluation.
inline ZeroFormulaReport verify_ball_zero_formula(long n) {
  if (n < 1) throw std::invalid_argument("row index must be >= 1");
  IntPoly p = ball_row_poly(n);
  IsolatedRoots iso = isolate_roots(p, ball_zero_hints(n));
  ZeroFormulaReport rep;
  rep.rootCountMatches = long(iso.enclosures.size()) == n;
  if (!rep.rootCountMatches) return rep;

  const Rat widthCap = Rat(1) / Rat(int_pow(Int(2), 60));
  rep.insideEnclosures = true;
  rep.residualsSmall = true;
  const Float50 residualCap = pow(Float50(10), -30);
  // The formula value itself carries ~10^-49 of 50-digit evaluation error, so
  // the containment check gets a slack far below the 2^-60 enclosure width
  // but far above that error (a degenerate enclosure has width zero).
  const Float50 slack = pow(Float50(10), -40);
  for (long k = 1; k <= n; ++k) {
    RationalInterval iv =
        refine_enclosure(iso.p, iso.enclosures[std::size_t(n - k)], widthCap);
    rep.maxWidth = std::max(rep.maxWidth, iv.width());
    Float50 r = ball_zero_formula(n, k);
    if (!(to_float(iv.lo) - slack <= r && r <= to_float(iv.hi) + slack))
      rep.insideEnclosures = false;
    Float50 res = abs(int_poly_eval_f50(p, r));
    rep.maxResidual = std::max(rep.maxResidual, res);
    if (!(res < residualCap)) rep.residualsSmall = false;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Gap bounds: how coarsely the zeros of the ball row n sample the limiting
// interval. maxGapUpper over-estimates and maxGapLower under-estimates the
// true largest gap (gaps to the interval ends included), so
//   maxGapUpper(m) < maxGapLower(n)
// is an exact certificate that row m fills the interval more finely than
// row n.

struct ZeroGapBounds {
  long roots = 0;
  Rat maxGapUpper = 0;
  Rat maxGapLower = 0;
};

inline ZeroGapBounds zero_gap_bounds(long n) {
  if (n < 1) throw std::invalid_argument("row index must be >= 1");
  // Rational brackets of the interval ends -3 -+ 2 sqrt 2, from
  // sqrt 2 in (1.4142135623, 1.4142135624).
  const Rat kTen10 = Rat(int_pow(Int(10), 10));
  const Rat leftOuter = Rat(Int("-58284271248")) / kTen10;
  const Rat leftInner = Rat(Int("-58284271246")) / kTen10;
  const Rat rightInner = Rat(Int("-1715728754")) / kTen10;
  const Rat rightOuter = Rat(Int("-1715728752")) / kTen10;

  IntPoly p = ball_row_poly(n);
  IsolatedRoots iso = isolate_roots(p, ball_zero_hints(n));
  const Rat widthCap = Rat(1) / Rat(int_pow(Int(2), 40));
  std::vector<RationalInterval> e;
  for (const RationalInterval& iv : iso.enclosures)
    e.push_back(refine_enclosure(iso.p, iv, widthCap));

  ZeroGapBounds out;
  out.roots = long(e.size());
  if (e.empty()) return out;
  auto raise = [](Rat& m, const Rat& v) { m = std::max(m, v); };
  raise(out.maxGapUpper, e.front().hi - leftOuter);
  raise(out.maxGapLower, e.front().lo - leftInner);
  for (std::size_t i = 0; i + 1 < e.size(); ++i) {
    raise(out.maxGapUpper, e[i + 1].hi - e[i].lo);
    raise(out.maxGapLower, e[i + 1].lo - e[i].hi);
  }
  raise(out.maxGapUpper, rightOuter - e.back().lo);
  raise(out.maxGapLower, rightInner - e.back().hi);
  return out;
}

} // namespace coordlat
