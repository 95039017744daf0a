#include <catch2/catch_amalgamated.hpp>

#include "coordlat/exact.hpp"
#include "coordlat/interval.hpp"
#include "coordlat/matrix.hpp"
#include "coordlat/polynomial.hpp"
#include "coordlat/series.hpp"

#include <random>

using namespace coordlat;

namespace {

TruncatedSeries random_series(std::mt19937_64& rng, int order, bool unit_constant) {
  std::uniform_int_distribution<int> d(-4, 4);
  TruncatedSeries s(order);
  for (int i = 0; i <= order; ++i) s[std::size_t(i)] = Rat(d(rng));
  if (unit_constant) s[0] = 1;
  return s;
}

RatMat random_int_matrix(std::mt19937_64& rng, long n, int lo = -6, int hi = 6) {
  std::uniform_int_distribution<int> d(lo, hi);
  RatMat m(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) m(i, j) = Rat(d(rng));
  return m;
}

// Independent determinant oracle: cofactor expansion along the first row.
Rat det_cofactor(const RatMat& m) {
  long n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rat acc = 0;
  for (long j = 0; j < n; ++j) {
    RatMat sub(n - 1, n - 1);
    for (long i = 1; i < n; ++i) {
      long cc = 0;
      for (long c = 0; c < n; ++c) {
        if (c == j) continue;
        sub(i - 1, cc++) = m(i, c);
      }
    }
    Rat term = m(0, j) * det_cofactor(sub);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

std::vector<std::vector<long>> index_subsets(long n, long k) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  auto rec = [&](auto&& self, long start) -> void {
    if (long(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (long i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

} // namespace

TEST_CASE("series construction and coefficient access") {
  TruncatedSeries s = series_ratio({1, 1}, {1, -1}, 6); // (1+x)/(1-x)
  REQUIRE(s.order() == 6);
  REQUIRE(series_coeff(s, 0) == 1);
  for (int i = 1; i <= 6; ++i) REQUIRE(series_coeff(s, i) == 2);
  REQUIRE_THROWS_AS(series_coeff(s, 7), InsufficientOrder);
}

TEST_CASE("series multiplication truncates to the smaller order") {
  TruncatedSeries a = series_ratio({1, 1}, {1}, 5);  // 1+x at order 5
  TruncatedSeries b = series_ratio({1}, {1, -1}, 9); // 1/(1-x) at order 9
  TruncatedSeries p = series_mul(a, b);
  REQUIRE(p.order() == 5);
  REQUIRE(series_coeff(p, 0) == 1);
  for (int i = 1; i <= 5; ++i) REQUIRE(series_coeff(p, i) == 2);
}

TEST_CASE("series division reproduces a linear-recurrence expansion") {
  // 1/(1-2x-x^2): coefficients obey u_n = 2 u_{n-1} + u_{n-2}, u_0=1, u_1=2.
  TruncatedSeries q = series_ratio({1}, {1, -2, -1}, 12);
  std::vector<Int> u{1, 2};
  for (int n = 2; n <= 12; ++n) u.push_back(2 * u[std::size_t(n - 1)] + u[std::size_t(n - 2)]);
  for (int n = 0; n <= 12; ++n) REQUIRE(series_coeff(q, n) == Rat(u[std::size_t(n)]));
  REQUIRE_THROWS_AS(series_div(series_x(4), series_x(4)), DivisionByNonUnit);
}

TEST_CASE("series composition") {
  TruncatedSeries outer = series_ratio({1}, {1, -1}, 8);
  TruncatedSeries inner = series_ratio({0, 1}, {1, -1}, 8); // x/(1-x)
  TruncatedSeries comp = series_compose(outer, inner);
  // 1/(1 - x/(1-x)) = (1-x)/(1-2x) = 1 + x + 2x^2 + 4x^3 + ...
  REQUIRE(series_coeff(comp, 0) == 1);
  REQUIRE(series_coeff(comp, 1) == 1);
  Rat pow2 = 1;
  for (int n = 2; n <= 8; ++n) {
    REQUIRE(series_coeff(comp, n) == 2 * pow2);
    pow2 *= 2;
  }
  REQUIRE_THROWS_AS(series_compose(outer, outer), CompositionNonNilpotent);
}

TEST_CASE("series composition is associative on a common window") {
  std::mt19937_64 rng(20260821);
  for (int trial = 0; trial < 20; ++trial) {
    TruncatedSeries a = random_series(rng, 8, false);
    TruncatedSeries b = random_series(rng, 8, false);
    TruncatedSeries c = random_series(rng, 8, false);
    b[0] = 0;
    c[0] = 0;
    if (b[1] == 0) b[1] = 1;
    if (c[1] == 0) c[1] = 1;
    TruncatedSeries lhs = series_compose(series_compose(a, b), c);
    TruncatedSeries rhs = series_compose(a, series_compose(b, c));
    REQUIRE(series_equal_upto(lhs, rhs, 8));
  }
}

TEST_CASE("series reversion") {
  // x(1+x)/(1-x) reverts to x - 2x^2 + 6x^3 - 22x^4 + 90x^5 - ...
  TruncatedSeries f = series_ratio({0, 1, 1}, {1, -1}, 7);
  TruncatedSeries g = series_reversion(f);
  std::vector<long> expect{0, 1, -2, 6, -22, 90, -394, 1806};
  for (int n = 0; n <= 7; ++n) REQUIRE(series_coeff(g, n) == Rat(expect[std::size_t(n)]));
  REQUIRE(series_equal_upto(series_compose(f, g), series_x(7), 7));
  REQUIRE(series_equal_upto(series_compose(g, f), series_x(7), 7));
  REQUIRE_THROWS_AS(series_reversion(series_const(Rat(1), 5)), NotReversible);
  TruncatedSeries bad = series_shift_up(series_x(3), 1); // x^2: f'(0)=0
  REQUIRE_THROWS_AS(series_reversion(bad), NotReversible);
}

TEST_CASE("series reversion roundtrip on random units") {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 15; ++trial) {
    TruncatedSeries f = random_series(rng, 9, false);
    f[0] = 0;
    if (f[1] == 0) f[1] = 2;
    TruncatedSeries g = series_reversion(f);
    REQUIRE(series_equal_upto(series_compose(f, g), series_x(9), 9));
    REQUIRE(series_equal_upto(series_compose(g, f), series_x(9), 9));
  }
}

TEST_CASE("series square root") {
  TruncatedSeries a = series_from({1, -6, 1}); // 1 - 6x + x^2
  TruncatedSeries a8 = series_ratio({1, -6, 1}, {1}, 8);
  TruncatedSeries s = series_sqrt(a8);
  REQUIRE(series_equal_upto(series_mul(s, s), a8, 8));
  // 1/sqrt(1-6x+x^2) expands to the central cumulative-lattice sequence.
  TruncatedSeries inv = series_div(series_const(Rat(1), 8), s);
  std::vector<long> central{1, 3, 13, 63, 321, 1683, 8989, 48639, 265729};
  for (int n = 0; n <= 8; ++n) REQUIRE(series_coeff(inv, n) == Rat(central[std::size_t(n)]));
  REQUIRE_THROWS_AS(series_sqrt(series_const(Rat(4), 5)), SqrtUnsupportedConstantTerm);
  (void)a;
}

TEST_CASE("series shifts and derivative") {
  TruncatedSeries f = series_ratio({0, 1, 1}, {1, -1}, 6); // valuation 1
  TruncatedSeries down = series_shift_down(f, 1);
  REQUIRE(down.order() == 5);
  REQUIRE(series_coeff(down, 0) == 1);
  TruncatedSeries up = series_shift_up(down, 2);
  REQUIRE(up.order() == 7);
  REQUIRE(series_coeff(up, 2) == 1);
  REQUIRE_THROWS(series_shift_down(series_const(Rat(3), 4), 1));
  TruncatedSeries d = series_derivative(series_from({5, 1, 3, 7}));
  REQUIRE(d.order() == 2);
  REQUIRE(series_coeff(d, 0) == 1);
  REQUIRE(series_coeff(d, 1) == 6);
  REQUIRE(series_coeff(d, 2) == 21);
}

TEST_CASE("series mul/div roundtrip on random data") {
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 25; ++trial) {
    TruncatedSeries a = random_series(rng, 10, false);
    TruncatedSeries b = random_series(rng, 10, true);
    TruncatedSeries q = series_div(series_mul(a, b), b);
    REQUIRE(series_equal_upto(q, a, 10));
  }
}

TEST_CASE("polynomial basics and zero-polynomial degree marker") {
  ExactPolynomial z;
  REQUIRE(poly_is_zero(z));
  REQUIRE(!poly_degree(z).has_value());
  ExactPolynomial p = poly_from({2, 4, 1}); // x^2 + 4x + 2
  REQUIRE(poly_degree(p).value() == 2);
  REQUIRE(poly_eval(p, Rat(1)) == 7);
  REQUIRE(poly_eval(p, Rat(-2)) == -2);
  ExactPolynomial d = poly_derivative(p);
  REQUIRE(poly_equal(d, poly_from({4, 2})));
  ExactPolynomial diff = poly_sub(p, p);
  REQUIRE(poly_is_zero(diff));
}

TEST_CASE("polynomial division, gcd, squarefree part") {
  ExactPolynomial a = poly_from({-1, 0, 1});    // x^2 - 1
  ExactPolynomial b = poly_from({-1, 0, 0, 1}); // x^3 - 1
  ExactPolynomial g = poly_gcd(a, b);
  REQUIRE(poly_equal(g, poly_from({-1, 1}))); // x - 1 (primitive, positive leading)
  auto [q, r] = poly_divrem(b, a);
  REQUIRE(poly_equal(poly_add(poly_mul(q, a), r), b));

  // (x-1)^2 (x+2) has squarefree part (x-1)(x+2).
  ExactPolynomial sq = poly_mul(poly_mul(poly_from({-1, 1}), poly_from({-1, 1})),
                                poly_from({2, 1}));
  ExactPolynomial sf = poly_squarefree_part(sq);
  REQUIRE(poly_equal(sf, poly_mul(poly_from({-1, 1}), poly_from({2, 1}))));
  REQUIRE(poly_squarefree(sf));
  REQUIRE(!poly_squarefree(sq));
  REQUIRE(poly_coprime(poly_from({1, 1}), poly_from({1, 0, 1})));
}

TEST_CASE("integer polynomial sign evaluation matches rational evaluation") {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<int> coef(-9, 9), num(-40, 40), den(1, 17);
  for (int trial = 0; trial < 50; ++trial) {
    ExactPolynomial p;
    for (int i = 0; i < 7; ++i) p.c.emplace_back(coef(rng));
    p.normalize();
    if (poly_is_zero(p)) continue;
    IntPoly ip = int_poly_from(p);
    Rat x(num(rng), den(rng));
    REQUIRE(int_poly_sign_at(ip, x) == sign_of(poly_eval(p, x)));
  }
}

TEST_CASE("fraction-free determinant matches frozen values") {
  RatMat m(2, 2);
  m(0, 0) = 2; m(0, 1) = 1; m(1, 0) = 2; m(1, 1) = 4;
  REQUIRE(det_fraction_free(m) == 6);

  RatMat h(2, 2);
  h(0, 0) = 1; h(0, 1) = 3; h(1, 0) = 3; h(1, 1) = 13;
  REQUIRE(det_fraction_free(h) == 4);

  RatMat empty(0, 0);
  REQUIRE(det_fraction_free(empty) == 1);

  // Singular integer matrix (row 2 = row 0 + row 1).
  RatMat s(3, 3);
  long vals[3][3] = {{1, 2, 3}, {4, 5, 6}, {5, 7, 9}};
  for (long i = 0; i < 3; ++i)
    for (long j = 0; j < 3; ++j) s(i, j) = vals[i][j];
  REQUIRE(det_fraction_free(s) == 0);

  // Rational entries: the 3x3 Hilbert determinant is 1/2160.
  RatMat hb(3, 3);
  for (long i = 0; i < 3; ++i)
    for (long j = 0; j < 3; ++j) hb(i, j) = Rat(1, i + j + 1);
  REQUIRE(det_fraction_free(hb) == Rat(1, 2160));
}

TEST_CASE("fraction-free determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(424242);
  for (long n = 1; n <= 5; ++n)
    for (int trial = 0; trial < 8; ++trial) {
      RatMat m = random_int_matrix(rng, n);
      REQUIRE(det_fraction_free(m) == det_cofactor(m));
    }
}

TEST_CASE("pivoting handles zero leading entries") {
  RatMat m(3, 3);
  long vals[3][3] = {{0, 2, 1}, {1, 0, 3}, {2, 1, 0}};
  for (long i = 0; i < 3; ++i)
    for (long j = 0; j < 3; ++j) m(i, j) = vals[i][j];
  REQUIRE(det_fraction_free(m) == det_cofactor(m));
}

TEST_CASE("minor extraction validates index sets") {
  RatMat m = mat_int_to_rat([] {
    IntMat t(3, 3);
    for (long i = 0; i < 3; ++i)
      for (long j = 0; j < 3; ++j) t(i, j) = i * 3 + j + 1;
    return t;
  }());
  REQUIRE(minor_det(m, {0, 1}, {0, 1}) == Rat(1 * 5 - 2 * 4));
  REQUIRE_THROWS_AS(minor_det(m, {1, 0}, {0, 1}), BadIndexSet);
  REQUIRE_THROWS_AS(minor_det(m, {0, 1}, {0, 3}), BadIndexSet);
  REQUIRE_THROWS_AS(minor_det(m, {0, 1, 2}, {0, 1}), BadIndexSet);
}

TEST_CASE("Cauchy-Binet identity for minors of a product") {
  std::mt19937_64 rng(31337);
  RatMat a = random_int_matrix(rng, 5, -3, 3);
  RatMat b = random_int_matrix(rng, 5, -3, 3);
  RatMat c = mat_mul(a, b);
  for (long k = 1; k <= 3; ++k) {
    auto sets = index_subsets(5, k);
    for (const auto& I : sets)
      for (const auto& J : sets) {
        Rat lhs = minor_det(c, I, J);
        Rat rhs = 0;
        for (const auto& L : sets) rhs += minor_det(a, I, L) * minor_det(b, L, J);
        REQUIRE(lhs == rhs);
      }
  }
}

TEST_CASE("rational intervals") {
  RationalInterval iv(Rat(-3), Rat(-1));
  REQUIRE(iv.width() == 2);
  REQUIRE(iv.mid() == -2);
  REQUIRE(iv.contains(Rat(-2)));
  REQUIRE(!iv.contains(Rat(0)));
  REQUIRE_THROWS(RationalInterval(Rat(1), Rat(0)));
}

TEST_CASE("exact helpers") {
  REQUIRE(binomial(8, 3) == 56);
  REQUIRE(binomial(5, 0) == 1);
  REQUIRE(binomial(5, 6) == 0);
  REQUIRE(binomial(-1, 0) == 0);
  REQUIRE(binomial_rat(Rat(-1), 2) == 1);               // C(-1,2) = 1
  REQUIRE(binomial_rat(Rat(1, 2), 2) == Rat(-1, 8));    // C(1/2,2)
  REQUIRE(int_pow(Int(2), 10) == 1024);
  REQUIRE(factorial(6) == 720);
  REQUIRE(div_exact(Int(84), Int(7)) == 12);
  REQUIRE_THROWS(div_exact(Int(85), Int(7)));
}
