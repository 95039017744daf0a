#pragma once

// Named verification suites. Each suite runs a battery of checks over the
// lattice arrays and their analytic properties and returns structured
// verdicts: a stable id, a human-readable claim, a pass flag, and a witness
// string carrying either supporting values or the first counterexample.
//
// Every check is exception-safe: a throw inside a check body fails that
// check with the message as witness instead of aborting the suite.

#include "coordlat/analytics.hpp"
#include "coordlat/lattice.hpp"
#include "coordlat/poly_zeros.hpp"
#include "coordlat/positivity.hpp"
#include "coordlat/riordan.hpp"
#include "coordlat/sturm.hpp"

#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace coordlat {

struct Check {
  std::string id;
  std::string claim;
  bool pass = false;
  std::string witness;
};

struct VerifyOptions {
  bool smoke = false; // reduced ranges for quick runs
  long window = 0;    // positivity window override (0 = suite default)
  long maxOrder = 0;  // positivity minor-order override (0 = suite default)
};

namespace detail {

inline std::string rat_str(const Rat& q) {
  Int den = rat_denominator(q);
  std::string s = rat_numerator(q).str();
  if (den != 1) s += "/" + den.str();
  return s;
}

inline std::string f50_str(const Float50& x, unsigned digits = 8) {
  return x.str(digits);
}

inline void run_check(std::vector<Check>& out, std::string id, std::string claim,
                      const std::function<bool(std::string&)>& body) {
  Check c{std::move(id), std::move(claim), false, ""};
  try {
    c.pass = body(c.witness);
  } catch (const std::exception& e) {
    c.pass = false;
    c.witness = std::string("exception: ") + e.what();
  }
  out.push_back(std::move(c));
}

// First cell where two windows differ, as a witness string; empty if equal.
inline std::string first_window_mismatch(const RatMat& got, const RatMat& want) {
  if (got.rows() != want.rows() || got.cols() != want.cols())
    return "shape mismatch";
  for (long i = 0; i < got.rows(); ++i)
    for (long j = 0; j < got.cols(); ++j)
      if (got(i, j) != want(i, j))
        return "mismatch at (" + std::to_string(i) + ", " + std::to_string(j) +
               "): got " + rat_str(got(i, j)) + ", want " + rat_str(want(i, j));
  return "";
}

// Nonincreasing ladder with at most maxSoft flat steps and no increase.
inline bool ladder_nonincreasing(const std::vector<Float50>& v, long maxSoft = 1) {
  long soft = 0;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (v[i + 1] > v[i]) return false;
    if (v[i + 1] == v[i]) ++soft;
  }
  return soft <= maxSoft;
}

inline RatMat table_window(long m, long nrows, long ncols) {
  LatticeTable t(m);
  RatMat w(nrows, ncols);
  for (long i = 0; i < nrows; ++i)
    for (long j = 0; j < ncols; ++j) w(i, j) = Rat(t.at(i, j));
  return w;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Riordan suite: array windows, production data, central diagonals.

inline std::vector<Check> verify_riordan(const VerifyOptions& opt = {}) {
  using detail::run_check;
  std::vector<Check> out;
  const long W = opt.smoke ? 6 : 11;       // window size for table agreement
  const long diagN = opt.smoke ? 12 : 30;  // central-diagonal depth
  const long replayRows = opt.smoke ? 7 : 11;
  const long leftN = opt.smoke ? 4 : 6;
  const long lduN = opt.smoke ? 5 : 8;
  const long detN = opt.smoke ? 5 : 7;

  run_check(out, "riordan.window-agreement",
            "shell, coordination, and ball windows match the additive lattice "
            "recurrence",
            [&](std::string& w) {
              const long ms[] = {0, 1, 2};
              for (long m : ms) {
                RatMat got = riordan_window(make_family(m, int(W)), W, W);
                RatMat want = detail::table_window(m, W, W);
                std::string diff = detail::first_window_mismatch(got, want);
                if (!diff.empty()) {
                  w = "family m=" + std::to_string(m) + ": " + diff;
                  return false;
                }
              }
              w = "windows of size " + std::to_string(W) + " for m = 0, 1, 2";
              return true;
            });

  run_check(out, "riordan.triangle-inverse",
            "each lattice triangle times its inverse is the identity",
            [&](std::string& w) {
              for (auto make : {make_shell_tri, make_ball_tri, make_coord_tri}) {
                RiordanArray t = make(int(W));
                RiordanArray prod = riordan_multiply(t, riordan_inverse(t));
                std::string diff = detail::first_window_mismatch(
                    riordan_window(prod, W, W), rat_identity(W));
                if (!diff.empty()) {
                  w = diff;
                  return false;
                }
              }
              w = "three triangles, windows of size " + std::to_string(W);
              return true;
            });

  run_check(out, "riordan.a-sequence",
            "the coordination triangle has the stated recurrence row weights",
            [&](std::string& w) {
              ProductionData p = extract_production(make_coord_tri(16));
              const long want[] = {1, 2, -2, 6, -22, 90, -394, 1806};
              std::ostringstream os;
              for (int i = 0; i < 8; ++i) {
                Rat c = series_coeff(p.A, i);
                os << (i ? " " : "") << detail::rat_str(c);
                if (c != want[i]) {
                  w = "term " + std::to_string(i) + " is " + detail::rat_str(c) +
                      ", want " + std::to_string(want[i]);
                  return false;
                }
              }
              w = os.str();
              return true;
            });

  run_check(out, "riordan.z-sequence",
            "the coordination triangle has the stated first-column weights",
            [&](std::string& w) {
              ProductionData p = extract_production(make_coord_tri(16));
              const long want[] = {2, -2, 6, -22, 90, -394, 1806, -8558};
              std::ostringstream os;
              for (int i = 0; i < 8; ++i) {
                Rat c = series_coeff(p.Z, i);
                os << (i ? " " : "") << detail::rat_str(c);
                if (c != want[i]) {
                  w = "term " + std::to_string(i) + " is " + detail::rat_str(c) +
                      ", want " + std::to_string(want[i]);
                  return false;
                }
              }
              w = os.str();
              return true;
            });

  run_check(out, "riordan.pascal-production",
            "the binomial triangle regenerates from weights A = 1 + x, Z = 1",
            [&](std::string& w) {
              ProductionData p = extract_production(make_pascal_tri(14));
              for (int i = 0; i < 8; ++i) {
                long wantA = i <= 1 ? 1 : 0;
                long wantZ = i == 0 ? 1 : 0;
                if (series_coeff(p.A, i) != wantA || series_coeff(p.Z, i) != wantZ) {
                  w = "term " + std::to_string(i) + " deviates";
                  return false;
                }
              }
              return true;
            });

  run_check(out, "riordan.production-replay",
            "row-by-row replay from the recurrence weights rebuilds the "
            "coordination triangle",
            [&](std::string& w) {
              RiordanArray t = make_coord_tri(int(replayRows) + 2);
              RatMat replay = riordan_window_from_production(
                  extract_production(t), replayRows);
              std::string diff = detail::first_window_mismatch(
                  replay, riordan_window(t, replayRows, replayRows));
              if (!diff.empty()) {
                w = diff;
                return false;
              }
              w = "rows 0.." + std::to_string(replayRows - 1);
              return true;
            });

  run_check(out, "riordan.central-frozen",
            "the four central sequences start with their published values",
            [&](std::string& w) {
              const std::vector<std::vector<long>> want = {
                  {1, 3, 13, 63, 321, 1683, 8989, 48639, 265729},
                  {1, 2, 8, 38, 192, 1002, 5336, 28814, 157184},
                  {1, 4, 18, 88, 450, 2364, 12642, 68464, 374274},
                  {1, 2, 6, 22, 90, 394, 1806, 8558, 41586}};
              const DiagKind kinds[] = {DiagKind::Ball, DiagKind::Shell,
                                        DiagKind::Coord, DiagKind::Schroeder};
              const char* names[] = {"ball", "shell", "coordination", "bracketing"};
              for (int t = 0; t < 4; ++t) {
                std::vector<Int> got = diagonal(kinds[t], 8);
                for (int i = 0; i <= 8; ++i)
                  if (got[std::size_t(i)] != want[std::size_t(t)][std::size_t(i)]) {
                    w = std::string(names[t]) + " term " + std::to_string(i) +
                        " is " + got[std::size_t(i)].str();
                    return false;
                  }
              }
              return true;
            });

  run_check(out, "riordan.central-three-ways",
            "central diagonals agree between the table, the closed generating "
            "function, and the hypergeometric evaluation",
            [&](std::string& w) {
              struct Row {
                DiagKind kind;
                long m;
                Rat a, b;
              };
              const Row rows[] = {{DiagKind::Ball, 1, Rat(0), Rat(0)},
                                  {DiagKind::Shell, 0, Rat(0), Rat(-1)},
                                  {DiagKind::Coord, 2, Rat(1), Rat(-1)}};
              for (const Row& r : rows) {
                std::vector<Int> rec = diagonal(r.kind, diagN);
                TruncatedSeries gf = gf_expand(r.kind, int(diagN));
                LatticeTable table(r.m);
                for (long n = 0; n <= diagN; ++n) {
                  Int fromTable = table.at(n, n);
                  Rat fromJacobi = jacobi_eval(r.a, r.b, Rat(3), n);
                  if (Rat(rec[std::size_t(n)]) != series_coeff(gf, int(n)) ||
                      rec[std::size_t(n)] != fromTable ||
                      fromJacobi != Rat(fromTable)) {
                    w = "disagreement at n = " + std::to_string(n);
                    return false;
                  }
                }
              }
              w = "three routes, n <= " + std::to_string(diagN);
              return true;
            });

  run_check(out, "riordan.central-identities",
            "twice a central shell value is a sum of adjacent ball values, and "
            "coordination values are (n+1) times the bracketing numbers",
            [&](std::string& w) {
              std::vector<Int> d = diagonal(DiagKind::Ball, diagN);
              std::vector<Int> s = diagonal(DiagKind::Shell, diagN);
              std::vector<Int> c = diagonal(DiagKind::Coord, diagN);
              std::vector<Int> r = diagonal(DiagKind::Schroeder, diagN);
              for (long n = 1; n <= diagN; ++n) {
                if (2 * s[std::size_t(n)] !=
                    d[std::size_t(n)] + d[std::size_t(n - 1)]) {
                  w = "shell identity fails at n = " + std::to_string(n);
                  return false;
                }
                if (c[std::size_t(n)] != (n + 1) * r[std::size_t(n)]) {
                  w = "bracketing identity fails at n = " + std::to_string(n);
                  return false;
                }
              }
              w = "n <= " + std::to_string(diagN);
              return true;
            });

  run_check(out, "riordan.schroeder-functional",
            "the bracketing generating function satisfies x r^2 + (x-1) r + 1 = 0",
            [&](std::string& w) {
              std::vector<Int> r = diagonal(DiagKind::Schroeder, diagN);
              for (long m = 0; m <= diagN; ++m) {
                Int acc = m == 0 ? Int(1) : Int(0); // + 1
                acc -= r[std::size_t(m)];           // - r
                if (m >= 1) {
                  acc += r[std::size_t(m - 1)]; // + x r
                  for (long i = 0; i <= m - 1; ++i) // + x r^2
                    acc += r[std::size_t(i)] * r[std::size_t(m - 1 - i)];
                }
                if (acc != 0) {
                  w = "coefficient " + std::to_string(m) + " is " + acc.str();
                  return false;
                }
              }
              w = "orders 0.." + std::to_string(diagN);
              return true;
            });

  run_check(out, "riordan.bivariate",
            "the square arrays satisfy (1 - x - y - xy) T = 1 - x, 1, 1 + x",
            [&](std::string& w) {
              struct Rhs {
                long m;
                long at00, at10, at01;
              };
              // right-hand sides 1 - x, 1, 1 + x for m = 0, 1, 2, with x
              // marking the row index
              const Rhs rhs[] = {{0, 1, -1, 0}, {1, 1, 0, 0}, {2, 1, 1, 0}};
              for (const Rhs& r : rhs) {
                LatticeTable t(r.m);
                for (long n = 0; n < W; ++n)
                  for (long k = 0; k < W; ++k) {
                    Int acc = t.at(n, k);
                    if (n >= 1) acc -= t.at(n - 1, k);
                    if (k >= 1) acc -= t.at(n, k - 1);
                    if (n >= 1 && k >= 1) acc -= t.at(n - 1, k - 1);
                    Int want = 0;
                    if (n == 0 && k == 0) want = r.at00;
                    if (n == 1 && k == 0) want = r.at10;
                    if (n == 0 && k == 1) want = r.at01;
                    if (acc != want) {
                      w = "family m=" + std::to_string(r.m) + " at (" +
                          std::to_string(n) + ", " + std::to_string(k) + ")";
                      return false;
                    }
                  }
              }
              w = "window " + std::to_string(W) + " for m = 0, 1, 2";
              return true;
            });

  run_check(out, "riordan.left-product",
            "each array window factors through its left-product matrix and the "
            "bordered copy",
            [&](std::string& w) {
              std::vector<RiordanArray> arrays = {
                  make_shell(int(leftN) + 1), make_coord(int(leftN) + 1),
                  make_ball(int(leftN) + 1), make_coord_tri(int(leftN) + 1)};
              for (const RiordanArray& r : arrays) {
                LeftProductDecomposition d = left_product_decompose(r, leftN);
                std::string diff = detail::first_window_mismatch(
                    mat_mul(d.left, d.bordered), riordan_window(r, leftN, leftN));
                if (!diff.empty()) {
                  w = diff;
                  return false;
                }
              }
              w = std::to_string(leftN) + " x " + std::to_string(leftN) +
                  " windows, four arrays";
              return true;
            });

  run_check(out, "riordan.ldu",
            "shell, coordination, and ball windows factor as lower x diagonal "
            "x upper with the doubling diagonal",
            [&](std::string& w) {
              struct Pair {
                LduKind kind;
                RiordanArray arr;
              };
              const Pair pairs[] = {{LduKind::Shell, make_shell(int(lduN))},
                                    {LduKind::Coord, make_coord(int(lduN))},
                                    {LduKind::Ball, make_ball(int(lduN))}};
              for (const Pair& p : pairs) {
                LduFactors f = ldu_factors(p.kind, lduN);
                RatMat prod = mat_mul(mat_mul(f.left, f.diag), f.upper);
                std::string diff = detail::first_window_mismatch(
                    prod, riordan_window(p.arr, lduN, lduN));
                if (!diff.empty()) {
                  w = diff;
                  return false;
                }
              }
              w = std::to_string(lduN) + " x " + std::to_string(lduN) + " windows";
              return true;
            });

  run_check(out, "riordan.window-determinants",
            "leading windows of the three squares all have determinant "
            "2^(n(n+1)/2)",
            [&](std::string& w) {
              for (auto make : {make_shell, make_coord, make_ball}) {
                RiordanArray arr = make(int(detN) + 1);
                for (long n = 0; n <= detN; ++n) {
                  RatMat win = riordan_window(arr, n + 1, n + 1);
                  Rat want(int_pow(Int(2), static_cast<unsigned long>(n * (n + 1) / 2)));
                  if (det_fraction_free(win) != want) {
                    w = "order " + std::to_string(n + 1) + " window deviates";
                    return false;
                  }
                }
              }
              w = "window sizes up to " + std::to_string(detN + 1);
              return true;
            });

  run_check(out, "riordan.family-bridge",
            "the m-parameter square is the ball square plus (m-1) copies of "
            "its shifted rows",
            [&](std::string& w) {
              LatticeTable ball(1);
              const long ms[] = {0, 1, 2, 3, 5};
              for (long m : ms) {
                RatMat got = riordan_window(make_family(m, int(W)), W, W);
                for (long n = 0; n < W; ++n)
                  for (long k = 0; k < W; ++k) {
                    Int want = ball.at(n, k);
                    if (n >= 1) want += (m - 1) * ball.at(n - 1, k);
                    if (got(n, k) != Rat(want)) {
                      w = "m=" + std::to_string(m) + " at (" + std::to_string(n) +
                          ", " + std::to_string(k) + ")";
                      return false;
                    }
                  }
              }
              w = "m in {0, 1, 2, 3, 5}, window " + std::to_string(W);
              return true;
            });

  run_check(out, "riordan.closed-forms",
            "binomial closed forms match the recurrence table",
            [&](std::string& w) {
              const long R = opt.smoke ? 8 : 12;
              LatticeTable shell(0), ball(1);
              for (long n = 0; n <= R; ++n)
                for (long k = 0; k <= R; ++k) {
                  if (closed_form_shell(n, k) != shell.at(n, k)) {
                    w = "shell closed form at (" + std::to_string(n) + ", " +
                        std::to_string(k) + ")";
                    return false;
                  }
                  Int b = ball.at(n, k);
                  if (closed_form_ball_binom2(n, k) != b ||
                      closed_form_ball_shifted(n, k) != b) {
                    w = "ball closed form at (" + std::to_string(n) + ", " +
                        std::to_string(k) + ")";
                    return false;
                  }
                }
              w = "n, k <= " + std::to_string(R);
              return true;
            });

  run_check(out, "riordan.ball-value",
            "the 10-dimensional ball of radius 10 holds 8097453 lattice points",
            [&](std::string& w) {
              Int got = lattice_number(1, 10, 10);
              w = got.str();
              return got == 8097453;
            });

  return out;
}

// ---------------------------------------------------------------------------
// Positivity suite: total positivity of windows, strict and triangular
// variants, and the PF property of rows.

inline std::vector<Check> verify_positivity(const VerifyOptions& opt = {}) {
  using detail::run_check;
  std::vector<Check> out;
  const long tpWindow = opt.window > 0 ? opt.window : (opt.smoke ? 5 : 8);
  const long tpOrder = opt.maxOrder > 0 ? opt.maxOrder : (opt.smoke ? 3 : 4);
  const long stpWindow = opt.window > 0 ? opt.window : (opt.smoke ? 5 : 7);
  const long lstpWindow = opt.window > 0 ? opt.window : (opt.smoke ? 5 : 8);
  const long pfWindow = opt.smoke ? 4 : 6;
  const long pfOrder = opt.smoke ? 2 : 3;

  auto describe = [](const PositivityReport& r) {
    std::string s = std::to_string(r.minorsChecked) + " minors";
    if (!r.holds && r.witness) {
      s += "; violation of order " + std::to_string(r.witness->order) +
           " with value " + detail::rat_str(r.witness->value);
    }
    return s;
  };

  run_check(out, "positivity.tp-windows",
            "square and triangular array windows are totally positive",
            [&](std::string& w) {
              std::vector<RiordanArray> arrays = {
                  make_shell(int(tpWindow)),     make_coord(int(tpWindow)),
                  make_ball(int(tpWindow)),      make_shell_tri(int(tpWindow)),
                  make_coord_tri(int(tpWindow)), make_ball_tri(int(tpWindow))};
              long total = 0;
              for (const RiordanArray& a : arrays) {
                PositivityReport r = check_tp_window(
                    riordan_window(a, tpWindow, tpWindow), tpOrder);
                if (!r.holds) {
                  w = describe(r);
                  return false;
                }
                total += r.minorsChecked;
              }
              w = std::to_string(total) + " minors up to order " +
                  std::to_string(tpOrder) + ", six arrays";
              return true;
            });

  run_check(out, "positivity.strict-windows",
            "coordination and ball windows are strictly totally positive",
            [&](std::string& w) {
              for (auto make : {make_coord, make_ball}) {
                PositivityReport r = check_stp_window(riordan_window(
                    make(int(stpWindow)), stpWindow, stpWindow));
                if (!r.holds) {
                  w = describe(r);
                  return false;
                }
              }
              w = "windows of size " + std::to_string(stpWindow);
              return true;
            });

  run_check(out, "positivity.triangular-strict",
            "the lattice and binomial triangles pass the corner-minor "
            "criterion",
            [&](std::string& w) {
              std::vector<RiordanArray> tris = {make_coord_tri(int(lstpWindow)),
                                                make_ball_tri(int(lstpWindow)),
                                                make_pascal_tri(int(lstpWindow))};
              for (const RiordanArray& t : tris) {
                PositivityReport r = check_lstp_window(
                    riordan_window(t, lstpWindow, lstpWindow));
                if (!r.holds) {
                  w = describe(r);
                  return false;
                }
              }
              w = "three triangles, window " + std::to_string(lstpWindow);
              return true;
            });

  run_check(out, "positivity.pf-rows",
            "early rows of the coordination and ball squares are PF sequences",
            [&](std::string& w) {
              LatticeTable coord(2), ball(1);
              for (long n = 1; n <= 5; ++n) {
                std::vector<Rat> coordRow, ballRow;
                for (long k = 0; k < pfWindow + pfOrder; ++k) {
                  coordRow.emplace_back(coord.at(n, k));
                  ballRow.emplace_back(ball.at(n, k));
                }
                for (const auto& row : {coordRow, ballRow}) {
                  PositivityReport r = check_pf_sequence(row, pfWindow, pfOrder);
                  if (!r.holds) {
                    w = "row " + std::to_string(n) + ": " + describe(r);
                    return false;
                  }
                }
              }
              w = "rows 1..5 of both squares";
              return true;
            });

  run_check(out, "positivity.gap-witness",
            "the probe sequence 1, 0, 1 is rejected with the expected minor",
            [&](std::string& w) {
              PositivityReport r =
                  check_pf_sequence({Rat(1), Rat(0), Rat(1)}, 3, 2);
              if (r.holds || !r.witness) {
                w = "probe unexpectedly accepted";
                return false;
              }
              const MinorWitness& m = *r.witness;
              w = "order " + std::to_string(m.order) + " minor, value " +
                  detail::rat_str(m.value);
              return m.order == 2 && m.value == -1 &&
                     m.rows == std::vector<long>{1, 2} &&
                     m.cols == std::vector<long>{0, 1};
            });

  return out;
}

// ---------------------------------------------------------------------------
// Zeros suite: real-rootedness, root location, interlacing, the closed-form
// zero approximations, and the packing of extreme zeros.

inline std::vector<Check> verify_zeros(const VerifyOptions& opt = {}) {
  using detail::run_check;
  std::vector<Check> out;
  const long certN = opt.smoke ? 12 : 50;
  const long formulaN = opt.smoke ? 6 : 20;
  const long altN = opt.smoke ? 6 : 12;
  const long deepGap = opt.smoke ? 25 : 50;

  run_check(out, "zeros.negative-set",
            "row polynomials of both families are real-rooted with all zeros "
            "inside the negative set of x^2 + 6x + 1",
            [&](std::string& w) {
              IntPoly q = limit_interval_poly();
              for (long n = 1; n <= certN; ++n) {
                NegativeSetCertificate coordCert =
                    certify_roots_in_negative_set(coord_row_poly(n), q);
                NegativeSetCertificate ballCert = certify_roots_in_negative_set(
                    ball_row_poly(n), q, ball_zero_hints(n));
                if (!coordCert.realRooted || !coordCert.allInside ||
                    !ballCert.realRooted || !ballCert.allInside) {
                  w = "certificate fails at n = " + std::to_string(n);
                  return false;
                }
              }
              w = "both families, n <= " + std::to_string(certN);
              return true;
            });

  run_check(out, "zeros.interlacing",
            "consecutive rows interlace within and across the two families",
            [&](std::string& w) {
              std::vector<IsolatedRoots> c, d;
              for (long n = 1; n <= certN; ++n) {
                c.push_back(isolate_roots(coord_row_poly(n)));
                d.push_back(isolate_roots(ball_row_poly(n), ball_zero_hints(n)));
              }
              auto at = [](std::vector<IsolatedRoots>& v, long n) -> IsolatedRoots& {
                return v[std::size_t(n - 1)];
              };
              for (long n = 2; n <= certN; ++n) {
                if (check_interlacing(at(c, n - 1), at(c, n)) !=
                        InterlaceVerdict::Interlaces ||
                    check_interlacing(at(d, n - 1), at(d, n)) !=
                        InterlaceVerdict::Interlaces ||
                    check_interlacing(at(d, n - 1), at(c, n)) !=
                        InterlaceVerdict::Interlaces) {
                  w = "strict interlacing fails at n = " + std::to_string(n);
                  return false;
                }
              }
              for (long n = 1; n <= certN; ++n)
                if (check_interlacing(at(c, n), at(d, n)) !=
                    InterlaceVerdict::AlternatesLeft) {
                  w = "left alternation fails at n = " + std::to_string(n);
                  return false;
                }
              w = "four relations, n <= " + std::to_string(certN);
              return true;
            });

  run_check(out, "zeros.shell-shift",
            "shell rows are the previous coordination rows times x",
            [&](std::string& w) {
              const long N = opt.smoke ? 10 : 30;
              for (long n = 1; n <= N; ++n) {
                IntPoly s = shell_row_poly(n), c = coord_row_poly(n - 1);
                IntPoly shifted(s.size(), Int(0));
                if (s.size() != c.size() + 1) {
                  w = "degree mismatch at n = " + std::to_string(n);
                  return false;
                }
                for (std::size_t i = 0; i < c.size(); ++i) shifted[i + 1] = c[i];
                if (s != shifted) {
                  w = "coefficient mismatch at n = " + std::to_string(n);
                  return false;
                }
              }
              w = "n <= " + std::to_string(N);
              return true;
            });

  run_check(out, "zeros.sign-alternation",
            "coordination rows alternate in sign across the zeros of the same "
            "ball row, ending positive",
            [&](std::string& w) {
              for (long n = 1; n <= altN; ++n) {
                IsolatedRoots roots =
                    isolate_roots(ball_row_poly(n), ball_zero_hints(n));
                std::vector<int> s = signs_at_roots(coord_row_poly(n), roots);
                if (s.empty() || s.back() != 1) {
                  w = "final sign differs at n = " + std::to_string(n);
                  return false;
                }
                for (std::size_t i = 0; i + 1 < s.size(); ++i)
                  if (s[i] * s[i + 1] != -1) {
                    w = "no strict alternation at n = " + std::to_string(n);
                    return false;
                  }
              }
              w = "n <= " + std::to_string(altN);
              return true;
            });

  run_check(out, "zeros.closed-formula",
            "the trigonometric zero formula lands inside certified enclosures "
            "with residuals below 1e-30",
            [&](std::string& w) {
              Float50 worstResidual = 0;
              for (long n = 1; n <= formulaN; ++n) {
                ZeroFormulaReport r = verify_ball_zero_formula(n);
                if (!r.rootCountMatches || !r.insideEnclosures ||
                    !r.residualsSmall) {
                  w = "formula check fails at n = " + std::to_string(n);
                  return false;
                }
                worstResidual = std::max(worstResidual, r.maxResidual);
              }
              w = "n <= " + std::to_string(formulaN) + ", worst residual " +
                  detail::f50_str(worstResidual, 3);
              return true;
            });

  run_check(out, "zeros.density-gaps",
            "extreme zeros pack strictly tighter deep in the family than near "
            "its start",
            [&](std::string& w) {
              ZeroGapBounds shallow = zero_gap_bounds(5);
              ZeroGapBounds deep = zero_gap_bounds(deepGap);
              w = "gap upper bound at depth " + std::to_string(deepGap) + ": " +
                  detail::rat_str(deep.maxGapUpper) + " < lower bound at depth 5: " +
                  detail::rat_str(shallow.maxGapLower);
              return deep.maxGapUpper < shallow.maxGapLower;
            });

  return out;
}

// ---------------------------------------------------------------------------
// Hankel suite: determinant ladders, moment screening, telescoping, and
// log-convexity of the central diagonals.

inline std::vector<Check> verify_hankel(const VerifyOptions& opt = {}) {
  using detail::run_check;
  std::vector<Check> out;
  const long suiteN = opt.smoke ? 4 : 8;
  const long screenN = opt.smoke ? 8 : 16;
  const long convexN = opt.smoke ? 50 : 200;

  run_check(out, "hankel.power-ladders",
            "ball-diagonal determinant ladders match their closed two-power "
            "forms",
            [&](std::string& w) {
              HankelSuite s = hankel_suite(suiteN);
              std::ostringstream os;
              for (std::size_t i = 0; i < 4 && i < s.ball.size(); ++i)
                os << (i ? " " : "") << s.ball[i].str();
              w = "ladder starts " + os.str();
              return s.powersMatch;
            });

  run_check(out, "hankel.telescoping",
            "the padded and shifted ladders satisfy the telescoping product "
            "identity",
            [&](std::string& w) {
              HankelSuite s = hankel_suite(suiteN);
              w = "orders 2.." + std::to_string(suiteN);
              return s.telescopes;
            });

  run_check(out, "hankel.moment-screen",
            "ball and shell diagonals pass moment screening; the coordination "
            "diagonal is rejected by a negative determinant",
            [&](std::string& w) {
              SmReport ball = check_sm(diagonal(DiagKind::Ball, screenN));
              SmReport shell = check_sm(diagonal(DiagKind::Shell, screenN));
              SmReport coord = check_sm(diagonal(DiagKind::Coord, screenN));
              if (!ball.consistent || !shell.consistent) {
                w = "a nonnegative ladder went negative";
                return false;
              }
              if (coord.consistent) {
                w = "coordination diagonal unexpectedly passed";
                return false;
              }
              w = "rejection witness: order " + std::to_string(coord.order) +
                  " determinant " + coord.value.str();
              return coord.offset == 0 && coord.order == 2 && coord.value == -4;
            });

  run_check(out, "hankel.desnanot-jacobi",
            "the determinant identity holds on ball-diagonal windows",
            [&](std::string& w) {
              std::vector<Int> d = diagonal(DiagKind::Ball, 20);
              for (long order = 1; order <= 6; ++order) {
                RatMat m(order + 1, order + 1);
                for (long i = 0; i <= order; ++i)
                  for (long j = 0; j <= order; ++j)
                    m(i, j) = Rat(d[std::size_t(i + j)]);
                if (!desnanot_jacobi_check(m)) {
                  w = "fails at order " + std::to_string(order);
                  return false;
                }
              }
              w = "orders 2..7";
              return true;
            });

  run_check(out, "hankel.log-convexity",
            "the central diagonals are log-convex and their recurrences pass "
            "the determinant criterion",
            [&](std::string& w) {
              for (DiagKind kind :
                   {DiagKind::Ball, DiagKind::Shell, DiagKind::Coord}) {
                if (!seq_logconvex(diagonal(kind, convexN)) ||
                    !logconvex_recurrence_criterion(kind, convexN)) {
                  w = "fails for one of the families";
                  return false;
                }
              }
              if (!seq_logconvex(diagonal(DiagKind::Schroeder, convexN / 2))) {
                w = "bracketing sequence not log-convex";
                return false;
              }
              w = "n <= " + std::to_string(convexN);
              return true;
            });

  return out;
}

// ---------------------------------------------------------------------------
// Normality suite: modes, inequalities, exact mean/variance facts, and the
// central/local limit ladders.

inline std::vector<Check> verify_normality(const VerifyOptions& opt = {}) {
  using detail::run_check;
  std::vector<Check> out;
  const long modeN = opt.smoke ? 50 : 200;
  const long ineqN = opt.smoke ? 25 : 100;
  const long driftN = opt.smoke ? 20 : 60;
  const long boundN = opt.smoke ? 50 : 200;
  const long rootsN = opt.smoke ? 8 : 20;
  const std::vector<long> ladder =
      opt.smoke ? std::vector<long>{10, 20, 40}
                : std::vector<long>{25, 50, 100, 200};

  run_check(out, "normality.modes",
            "coordination rows have a unique central mode; ball rows have the "
            "central pair",
            [&](std::string& w) {
              for (long n = 0; n <= modeN; ++n) {
                if (coeff_modes(coord_row_poly(n)) != std::vector<long>{n / 2}) {
                  w = "coordination mode deviates at n = " + std::to_string(n);
                  return false;
                }
                std::vector<long> want =
                    n % 2 == 0 ? std::vector<long>{n / 2}
                               : std::vector<long>{(n - 1) / 2, (n + 1) / 2};
                if (coeff_modes(ball_row_poly(n)) != want) {
                  w = "ball mode deviates at n = " + std::to_string(n);
                  return false;
                }
              }
              w = "n <= " + std::to_string(modeN);
              return true;
            });

  run_check(out, "normality.newton-darroch",
            "rows satisfy the strengthened log-concavity inequalities and the "
            "mode stays within one of the mean",
            [&](std::string& w) {
              for (long n = 1; n <= ineqN; ++n) {
                IntPoly c = coord_row_poly(n), d = ball_row_poly(n);
                if (!newton_inequalities(c) || !newton_inequalities(d) ||
                    !darroch_mode_bound(c) || !darroch_mode_bound(d) ||
                    !seq_logconcave(c) || !seq_logconcave(d)) {
                  w = "fails at n = " + std::to_string(n);
                  return false;
                }
              }
              w = "both families, n <= " + std::to_string(ineqN);
              return true;
            });

  run_check(out, "normality.mean-identity",
            "the centred row mean equals half the ball/coordination row-sum "
            "quotient",
            [&](std::string& w) {
              for (long n = 1; n <= ineqN; ++n)
                if (!mean_drift_identity(n)) {
                  w = "identity fails at n = " + std::to_string(n);
                  return false;
                }
              w = "n <= " + std::to_string(ineqN) +
                  ", first quotients 2/3 5/7 12/17";
              return pell_ratio(1) == Rat(2, 3) && pell_ratio(2) == Rat(5, 7) &&
                     pell_ratio(3) == Rat(12, 17);
            });

  run_check(out, "normality.mean-monotone",
            "the distance of the centred mean from its limit shrinks strictly "
            "and alternates in sign",
            [&](std::string& w) {
              for (long n = 1; n <= driftN; ++n) {
                if (drift_compare(n + 1, n) != -1) {
                  w = "no strict decrease at n = " + std::to_string(n);
                  return false;
                }
                Rat sq = pell_ratio(n) * pell_ratio(n);
                bool below = sq < Rat(1, 2);
                if (below != (n % 2 == 1)) {
                  w = "sign pattern breaks at n = " + std::to_string(n);
                  return false;
                }
              }
              w = "n <= " + std::to_string(driftN);
              return true;
            });

  run_check(out, "normality.variance-bound",
            "row variance exceeds 17n/100 divided by (683/100)^2",
            [&](std::string& w) {
              if (!(Rat(283, 100) * Rat(283, 100) > 8)) {
                w = "bracket constants do not straddle the root interval";
                return false;
              }
              for (long n = 1; n <= boundN; ++n)
                if (!variance_lower_bound_holds(n)) {
                  w = "bound fails at n = " + std::to_string(n);
                  return false;
                }
              w = "n <= " + std::to_string(boundN);
              return true;
            });

  run_check(out, "normality.variance-roots",
            "generating-function variance matches the Bernoulli sum over "
            "certified root enclosures",
            [&](std::string& w) {
              const Rat width = Rat(1) / Rat(int_pow(Int(2), 120));
              const Float50 tol = pow(Float50(10), -30);
              Float50 worst = 0;
              for (long n = 1; n <= rootsN; ++n) {
                IntPoly c = coord_row_poly(n);
                IsolatedRoots roots = isolate_roots(c);
                Float50 sum = 0;
                for (const RationalInterval& iv : roots.enclosures) {
                  RationalInterval fine = refine_enclosure(c, iv, width);
                  Float50 s = -to_float(fine.mid());
                  sum += s / ((1 + s) * (1 + s));
                }
                Float50 gap = abs(sum - to_float(coeff_stats(c).variance));
                worst = std::max(worst, gap);
                if (!(gap < tol)) {
                  w = "difference " + detail::f50_str(gap, 3) + " at n = " +
                      std::to_string(n);
                  return false;
                }
              }
              w = "n <= " + std::to_string(rootsN) + ", worst difference " +
                  detail::f50_str(worst, 3);
              return true;
            });

  run_check(out, "normality.clt",
            "the distribution-function distance to the Gaussian shrinks along "
            "the row ladder",
            [&](std::string& w) {
              std::vector<Float50> sups;
              std::ostringstream os;
              for (long n : ladder) {
                NormalityReport r = normality_report(coord_row_poly(n));
                sups.push_back(r.cltSup);
                os << " " << n << ":" << detail::f50_str(r.cltSup, 5);
              }
              w = "sup distances" + os.str();
              return detail::ladder_nonincreasing(sups);
            });

  run_check(out, "normality.llt",
            "the scaled point-probability distance to the Gaussian density "
            "shrinks along the row ladder",
            [&](std::string& w) {
              std::vector<Float50> sups;
              std::ostringstream os;
              for (long n : ladder) {
                NormalityReport r = normality_report(coord_row_poly(n));
                sups.push_back(r.lltSup);
                os << " " << n << ":" << detail::f50_str(r.lltSup, 5);
              }
              w = "sup distances" + os.str();
              return detail::ladder_nonincreasing(sups);
            });

  return out;
}

// ---------------------------------------------------------------------------
// Dispatch.

inline std::vector<std::string> verify_suite_names() {
  return {"riordan", "positivity", "zeros", "hankel", "normality"};
}

inline std::vector<Check> verify_suite(const std::string& name,
                                       const VerifyOptions& opt = {}) {
  if (name == "riordan") return verify_riordan(opt);
  if (name == "positivity") return verify_positivity(opt);
  if (name == "zeros") return verify_zeros(opt);
  if (name == "hankel") return verify_hankel(opt);
  if (name == "normality") return verify_normality(opt);
  if (name == "all") {
    std::vector<Check> all;
    for (const std::string& s : verify_suite_names()) {
      std::vector<Check> part = verify_suite(s, opt);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  throw std::invalid_argument("unknown suite: " + name);
}

} // namespace coordlat
