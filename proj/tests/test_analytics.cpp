#include <catch2/catch_amalgamated.hpp>

#include "coordlat/analytics.hpp"
#include "coordlat/sturm.hpp"

#include <random>
#include <vector>

using namespace coordlat;

namespace {

IntPoly ip(std::initializer_list<long> v) {
  IntPoly p;
  for (long x : v) p.emplace_back(x);
  int_poly_normalize(p);
  return p;
}

// First and second moments straight from the definition, as an oracle for
// the generating-function shortcut.
CoeffStats direct_stats(const IntPoly& f) {
  Rat total = 0, first = 0, second = 0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    total += Rat(f[k]);
    first += Rat(k) * Rat(f[k]);
    second += Rat(k) * Rat(k) * Rat(f[k]);
  }
  Rat mean = first / total;
  return {total, mean, second / total - mean * mean};
}

// Cofactor-expansion determinant, usable as an oracle up to order ~5.
Int naive_det(const IntMat& m) {
  long n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Int acc = 0;
  for (long j = 0; j < n; ++j) {
    IntMat sub(n - 1, n - 1);
    for (long r = 1; r < n; ++r)
      for (long c = 0, w = 0; c < n; ++c)
        if (c != j) sub(r - 1, w++) = m(r, c);
    Int term = m(0, j) * naive_det(sub);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

IntMat hankel_window(const std::vector<Int>& seq, long offset, long order) {
  IntMat m(order + 1, order + 1);
  for (long i = 0; i <= order; ++i)
    for (long j = 0; j <= order; ++j)
      m(i, j) = seq[std::size_t(offset + i + j)];
  return m;
}

// Dense-grid estimate of sup | F_n - Phi |: the step distribution is walked
// jump by jump, so the estimate is a guaranteed lower bound for the true
// supremum and comes within (grid spacing) x (max Phi slope) of it.
Float50 clt_grid_sup(const IntPoly& f, const NormalityReport& rep, int samples) {
  Rat totalQ = coeff_stats(f).total;
  Float50 total = to_float(totalQ);
  long n = int_poly_degree(f);
  std::vector<Float50> jump, cumulative;
  Float50 cum = 0;
  for (long k = 0; k <= n; ++k) {
    jump.push_back(Float50((Float50(k) - rep.mean) / rep.sigma));
    cum += Float50(f[std::size_t(k)]) / total;
    cumulative.push_back(cum);
  }
  Float50 lo = jump.front() - 1, hi = jump.back() + 1, sup = 0;
  long idx = -1;
  for (int i = 0; i <= samples; ++i) {
    Float50 x = lo + (hi - lo) * i / samples;
    while (idx + 1 <= n && jump[std::size_t(idx + 1)] <= x) ++idx;
    Float50 F = idx < 0 ? Float50(0) : cumulative[std::size_t(idx)];
    Float50 d = abs(F - std_normal_cdf(x));
    sup = std::max(sup, d);
  }
  return sup;
}

// Same idea for the scaled probability steps against phi.
Float50 llt_grid_sup(const IntPoly& f, const NormalityReport& rep, int samples) {
  Rat totalQ = coeff_stats(f).total;
  Float50 total = to_float(totalQ);
  long n = int_poly_degree(f);
  auto boundary = [&](long k) {
    return Float50((Float50(k) - Float50(1) / 2 - rep.mean) / rep.sigma);
  };
  Float50 lo = boundary(0) - 1, hi = boundary(n + 1) + 1, sup = 0;
  long idx = -1; // current interval [boundary(idx), boundary(idx+1))
  for (int i = 0; i <= samples; ++i) {
    Float50 x = lo + (hi - lo) * i / samples;
    while (idx + 1 <= n + 1 && boundary(idx + 1) <= x) ++idx;
    Float50 step = 0;
    if (idx >= 0 && idx <= n)
      step = rep.sigma * Float50(f[std::size_t(idx)]) / total;
    Float50 d = abs(step - std_normal_pdf(x));
    sup = std::max(sup, d);
  }
  return sup;
}

} // namespace

TEST_CASE("coefficient statistics match the definition sums") {
  // Hand-checked rows first.
  CoeffStats c2 = coeff_stats(ip({2, 4, 1})); // coordination row 2
  REQUIRE(c2.total == 7);
  REQUIRE(c2.mean == Rat(6, 7));
  REQUIRE(c2.variance == Rat(20, 49));

  CoeffStats u = coeff_stats(ip({1, 1, 1})); // uniform on {0,1,2}
  REQUIRE(u.mean == 1);
  REQUIRE(u.variance == Rat(2, 3));

  // (x+2)(x+3): independent Bernoulli factors with p = 1/3 and 1/4.
  CoeffStats b = coeff_stats(ip({6, 5, 1}));
  REQUIRE(b.mean == Rat(7, 12));
  REQUIRE(b.variance == Rat(2, 9) + Rat(3, 16));

  CoeffStats lone = coeff_stats(ip({5}));
  REQUIRE(lone.mean == 0);
  REQUIRE(lone.variance == 0);

  std::mt19937 rng(20240821);
  std::uniform_int_distribution<long> coeff(0, 9), len(1, 12);
  for (int trial = 0; trial < 40; ++trial) {
    IntPoly f(std::size_t(len(rng)), Int(0));
    for (Int& a : f) a = coeff(rng);
    f.push_back(1 + coeff(rng)); // nonzero leading coefficient
    CoeffStats got = coeff_stats(f), want = direct_stats(f);
    REQUIRE(got.total == want.total);
    REQUIRE(got.mean == want.mean);
    REQUIRE(got.variance == want.variance);
  }

  REQUIRE_THROWS_AS(coeff_stats(ip({1, -2, 1})), std::invalid_argument);
  REQUIRE_THROWS_AS(coeff_stats(IntPoly{}), std::invalid_argument);
  REQUIRE_THROWS_AS(coeff_modes(IntPoly{}), std::invalid_argument);
}

TEST_CASE("ball rows are palindromic with mean exactly n/2") {
  for (long n = 0; n <= 50; ++n) {
    IntPoly d = ball_row_poly(n);
    IntPoly rev(d.rbegin(), d.rend());
    REQUIRE(d == rev);
    REQUIRE(coeff_stats(d).mean == Rat(n, 2));
  }
}

TEST_CASE("variance equals the Bernoulli sum over certified roots") {
  // The generating-function variance must agree with sum s/(1+s)^2 over the
  // (negated) roots s of the row. Midpoints of enclosures refined to width
  // 2^-120 leave an error far below the 10^-30 comparison threshold.
  const Rat width = Rat(1) / Rat(int_pow(Int(2), 120));
  const Float50 tol = pow(Float50(10), -30);
  for (long n = 1; n <= 20; ++n) {
    IntPoly c = coord_row_poly(n);
    IsolatedRoots roots = isolate_roots(c);
    REQUIRE(long(roots.enclosures.size()) == n);
    Float50 sum = 0;
    for (const RationalInterval& iv : roots.enclosures) {
      RationalInterval fine = refine_enclosure(c, iv, width);
      Float50 s = -to_float(fine.mid());
      sum += s / ((1 + s) * (1 + s));
    }
    Float50 gap = abs(sum - to_float(coeff_stats(c).variance));
    REQUIRE(gap < tol);
  }
}

TEST_CASE("coordination rows have a unique mode at floor(n/2)") {
  for (long n = 0; n <= 200; ++n) {
    std::vector<long> m = coeff_modes(coord_row_poly(n));
    REQUIRE(m == std::vector<long>{n / 2});
  }
}

TEST_CASE("ball rows have the central mode pair") {
  for (long n = 0; n <= 200; ++n) {
    std::vector<long> m = coeff_modes(ball_row_poly(n));
    std::vector<long> want =
        n % 2 == 0 ? std::vector<long>{n / 2}
                   : std::vector<long>{(n - 1) / 2, (n + 1) / 2};
    REQUIRE(m == want);
  }
}

TEST_CASE("newton, darroch, and log-concavity hold along both row families") {
  for (long n = 1; n <= 100; ++n) {
    IntPoly c = coord_row_poly(n), d = ball_row_poly(n);
    REQUIRE(newton_inequalities(c));
    REQUIRE(newton_inequalities(d));
    REQUIRE(darroch_mode_bound(c));
    REQUIRE(darroch_mode_bound(d));
    REQUIRE(seq_logconcave(c));
    REQUIRE(seq_logconcave(d));
  }

  REQUIRE_FALSE(seq_logconcave(ip({1, 1, 2})));
  REQUIRE_FALSE(newton_inequalities(ip({1, 1, 1, 6})));
  // Modes {1, 3} straddle the mean at distance exactly 1.
  REQUIRE_FALSE(darroch_mode_bound(ip({1, 100, 1, 100, 1})));
}

TEST_CASE("central diagonals are log-convex") {
  REQUIRE(seq_logconvex(diagonal(DiagKind::Ball, 200)));
  REQUIRE(seq_logconvex(diagonal(DiagKind::Shell, 200)));
  REQUIRE(seq_logconvex(diagonal(DiagKind::Coord, 200)));
  REQUIRE(seq_logconvex(diagonal(DiagKind::Schroeder, 100)));
  REQUIRE_FALSE(seq_logconvex(std::vector<Int>{Int(1), Int(3), Int(4)}));
}

TEST_CASE("recurrence triples reproduce the diagonals and pass the criterion") {
  for (DiagKind kind : {DiagKind::Ball, DiagKind::Shell, DiagKind::Coord}) {
    std::vector<Int> u = diagonal(kind, 60);
    for (long n = 2; n <= 60; ++n) {
      Int a, b, c;
      recurrence_triple(kind, n, a, b, c);
      REQUIRE(a * u[std::size_t(n)] ==
              b * u[std::size_t(n - 1)] - c * u[std::size_t(n - 2)]);
    }
    REQUIRE(logconvex_recurrence_criterion(kind, 200));
  }
  // The ball-family determinants are the constants 3 and 1.
  Int a2, b2, c2, a3, b3, c3;
  recurrence_triple(DiagKind::Ball, 2, a2, b2, c2);
  recurrence_triple(DiagKind::Ball, 3, a3, b3, c3);
  REQUIRE(a2 * b3 - a3 * b2 == 3);
  REQUIRE(a2 * c3 - a3 * c2 == 1);
  auto noTriple = [] {
    Int a;
    Int b;
    Int c;
    recurrence_triple(DiagKind::Schroeder, 4, a, b, c);
  };
  REQUIRE_THROWS_AS(noTriple(), std::invalid_argument);
}

TEST_CASE("hankel determinants match the cofactor oracle") {
  std::vector<Int> d = diagonal(DiagKind::Ball, 10);
  for (long offset = 0; offset <= 1; ++offset)
    for (long order = 0; order <= 3; ++order)
      REQUIRE(hankel_det(d, offset, order) ==
              naive_det(hankel_window(d, offset, order)));
  REQUIRE_THROWS_AS(hankel_det(d, 0, 6), std::invalid_argument);
  REQUIRE_THROWS_AS(hankel_det(d, -1, 1), std::invalid_argument);
}

TEST_CASE("hankel ladders carry the stated powers of two") {
  HankelSuite s = hankel_suite(8);
  REQUIRE(s.powersMatch);
  REQUIRE(s.telescopes);
  REQUIRE(s.ball.size() == 9);
  // Frozen small values.
  REQUIRE(s.ball[0] == 1);
  REQUIRE(s.ball[1] == 4);
  REQUIRE(s.ball[2] == 32);
  REQUIRE(s.ballShift[0] == 3);
  REQUIRE(s.ballShift[1] == 20);
  REQUIRE(s.ballPadded[1] == 2);
  REQUIRE(s.ballPadded[2] == 8);
  REQUIRE_THROWS_AS(hankel_suite(1), std::invalid_argument);
}

TEST_CASE("hankel telescoping holds term by term") {
  std::vector<Int> d = diagonal(DiagKind::Ball, 20);
  std::vector<Int> padded;
  padded.push_back(1);
  padded.insert(padded.end(), d.begin(), d.end());
  for (long k = 2; k <= 8; ++k) {
    Int lhs = hankel_det(padded, 0, k) * hankel_det(d, 1, k - 2);
    Int rhs = hankel_det(padded, 0, k - 1) * hankel_det(d, 1, k - 1) -
              hankel_det(d, 0, k - 1) * hankel_det(d, 0, k - 1);
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("desnanot-jacobi holds on hankel and random matrices") {
  std::vector<Int> d = diagonal(DiagKind::Ball, 20);
  for (long order = 1; order <= 6; ++order) {
    RatMat m(order + 1, order + 1);
    for (long i = 0; i <= order; ++i)
      for (long j = 0; j <= order; ++j)
        m(i, j) = Rat(d[std::size_t(i + j)]);
    REQUIRE(desnanot_jacobi_check(m));
  }
  std::mt19937 rng(20240821);
  std::uniform_int_distribution<long> entry(-5, 5);
  for (int trial = 0; trial < 25; ++trial) {
    long n = 2 + trial % 5;
    RatMat m(n, n);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) m(i, j) = Rat(entry(rng));
    REQUIRE(desnanot_jacobi_check(m));
  }
  REQUIRE_THROWS_AS(desnanot_jacobi_check(RatMat(1, 1)), std::invalid_argument);
  REQUIRE_THROWS_AS(desnanot_jacobi_check(RatMat(2, 3)), std::invalid_argument);
}

TEST_CASE("moment screening accepts ball and shell, rejects coordination") {
  REQUIRE(check_sm(diagonal(DiagKind::Ball, 16)).consistent);
  REQUIRE(check_sm(diagonal(DiagKind::Shell, 16)).consistent);

  SmReport bad = check_sm(diagonal(DiagKind::Coord, 16));
  REQUIRE_FALSE(bad.consistent);
  REQUIRE(bad.offset == 0);
  REQUIRE(bad.order == 2);
  REQUIRE(bad.value == -4);

  // A violation visible only after the shift.
  SmReport shifted = check_sm({Int(1), Int(1), Int(3), Int(1)});
  REQUIRE_FALSE(shifted.consistent);
  REQUIRE(shifted.offset == 1);
  REQUIRE(shifted.order == 1);
  REQUIRE(shifted.value == -8);
}

TEST_CASE("mean drift identity and pell quotients") {
  REQUIRE(pell_ratio(1) == Rat(2, 3));
  REQUIRE(pell_ratio(2) == Rat(5, 7));
  REQUIRE(pell_ratio(3) == Rat(12, 17));
  REQUIRE(pell_ratio(4) == Rat(29, 41));
  REQUIRE(pell_ratio(5) == Rat(70, 99));
  REQUIRE(pell_ratio(6) == Rat(169, 239));
  for (long n = 1; n <= 100; ++n) REQUIRE(mean_drift_identity(n));
}

TEST_CASE("mean drift alternates in sign and shrinks strictly") {
  // Quotient below 1/sqrt 2 exactly when n is odd.
  for (long n = 1; n <= 40; ++n) {
    Rat sq = pell_ratio(n) * pell_ratio(n);
    if (n % 2 == 1)
      REQUIRE(sq < Rat(1, 2));
    else
      REQUIRE(sq > Rat(1, 2));
  }
  for (long n = 1; n <= 60; ++n) {
    REQUIRE(drift_compare(n + 1, n) == -1);
    REQUIRE(drift_compare(n, n + 1) == 1);
    REQUIRE(drift_compare(n, n) == 0);
  }
}

TEST_CASE("variance admits the rational lower bound") {
  // The bracket constants straddle the root interval: both checks reduce to
  // (283/100)^2 > 8.
  REQUIRE(Rat(283, 100) * Rat(283, 100) > 8);
  for (long n = 1; n <= 200; ++n) REQUIRE(variance_lower_bound_holds(n));
}

TEST_CASE("normal cdf and pdf at pinned points") {
  Float50 eps = pow(Float50(10), -14);
  REQUIRE(std_normal_cdf(Float50(0)) == Float50(1) / 2);
  Float50 symmetry = std_normal_cdf(Float50(1)) + std_normal_cdf(Float50(-1));
  REQUIRE(abs(symmetry - 1) < pow(Float50(10), -45));
  REQUIRE(abs(std_normal_cdf(Float50(1)) - Float50("0.841344746068543")) < eps);
  REQUIRE(abs(std_normal_pdf(Float50(0)) - Float50("0.398942280401433")) < eps);
  REQUIRE(abs(std_normal_pdf(Float50(1)) - Float50("0.241970724519143")) < eps);
}

TEST_CASE("normality report on the binomial row 1,2,1") {
  IntPoly f = ip({1, 2, 1});
  NormalityReport rep = normality_report(f);
  REQUIRE(rep.mean == 1);
  Float50 sigma = sqrt(Float50(1) / 2);
  REQUIRE(abs(rep.sigma - sigma) < pow(Float50(10), -45));
  // The distribution gap at the central jump is exactly 1/4.
  REQUIRE(abs(rep.cltSup - Float50(1) / 4) < pow(Float50(10), -40));
  REQUIRE(rep.lltSup > Float50(134) / 1000);
  REQUIRE(rep.lltSup < Float50(135) / 1000);
}

TEST_CASE("reported suprema agree with a dense grid scan") {
  for (const IntPoly& f : {ip({1, 2, 1}), coord_row_poly(9), ball_row_poly(8)}) {
    NormalityReport rep = normality_report(f);
    Float50 tiny = pow(Float50(10), -25);
    Float50 slack = Float50(1) / 100;
    Float50 cg = clt_grid_sup(f, rep, 2500);
    REQUIRE(cg <= rep.cltSup + tiny);
    REQUIRE(rep.cltSup <= cg + slack);
    Float50 lg = llt_grid_sup(f, rep, 2500);
    REQUIRE(lg <= rep.lltSup + tiny);
    REQUIRE(rep.lltSup <= lg + slack);
  }
}

TEST_CASE("limit suprema shrink along the row ladder") {
  std::vector<NormalityReport> reps;
  for (long n : {25L, 50L, 100L}) reps.push_back(normality_report(coord_row_poly(n)));
  for (std::size_t i = 0; i + 1 < reps.size(); ++i) {
    REQUIRE(reps[i + 1].cltSup < reps[i].cltSup);
    REQUIRE(reps[i + 1].lltSup < reps[i].lltSup);
  }
  std::vector<NormalityReport> ball;
  for (long n : {25L, 50L, 100L}) ball.push_back(normality_report(ball_row_poly(n)));
  for (std::size_t i = 0; i + 1 < ball.size(); ++i) {
    REQUIRE(ball[i + 1].cltSup < ball[i].cltSup);
    REQUIRE(ball[i + 1].lltSup < ball[i].lltSup);
  }
}

TEST_CASE("square table rows and columns are log-concave") {
  LatticeTable ball(1), coord(2);
  for (long k = 0; k <= 8; ++k) {
    std::vector<Int> ballCol, coordCol;
    for (long n = 0; n <= 20; ++n) {
      ballCol.push_back(ball.at(n, k));
      coordCol.push_back(coord.at(n, k));
    }
    REQUIRE(seq_logconcave(ballCol));
    REQUIRE(seq_logconcave(coordCol));
  }
  for (long n = 0; n <= 8; ++n) {
    std::vector<Int> ballRow, coordRow;
    for (long k = 0; k <= 20; ++k) {
      ballRow.push_back(ball.at(n, k));
      coordRow.push_back(coord.at(n, k));
    }
    REQUIRE(seq_logconcave(ballRow));
    REQUIRE(seq_logconcave(coordRow));
  }
  // Frozen example column: planar ball counts by radius.
  std::vector<Int> col2;
  for (long n = 0; n <= 4; ++n) col2.push_back(ball.at(n, 2));
  REQUIRE(col2 == std::vector<Int>{Int(1), Int(5), Int(13), Int(25), Int(41)});
}
