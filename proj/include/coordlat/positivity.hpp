#pragma once

// Total-positivity checks over finite windows, reported with an explicit
// witness when they fail.
//
//   check_tp_window    every minor up to a given order is >= 0 (exhaustive,
//                      canonical scan order, first violation returned)
//   check_stp_window   strict positivity of all minors, certified through the
//                      initial-minor criterion: a matrix is strictly totally
//                      positive iff all solid minors anchored on the first
//                      row or first column are positive
//   check_lstp_window  triangular variant: in every leading principal
//                      submatrix the bottom-left solid corner minors are
//                      positive (the minors a lower triangle allows)
//   check_pf_sequence  a sequence is a Polya frequency sequence up to the
//                      given order iff its lower-triangular Toeplitz window
//                      is totally positive
//
// Windows are finite, so every verdict here is about the window it was given.

#include "coordlat/matrix.hpp"

#include <optional>

namespace coordlat {

struct NotLowerTriangular : std::domain_error {
  explicit NotLowerTriangular(const std::string& m) : std::domain_error(m) {}
};

struct MinorWitness {
  long order = 0;
  std::vector<long> rows, cols;
  Rat value;
};

struct PositivityReport {
  bool holds = true;
  long minorsChecked = 0;
  std::optional<MinorWitness> witness; // first failing minor in scan order
};

namespace detail {

// Visit the k-subsets of {0..n-1} in lexicographic order; fn returning false
// stops the scan. Returns false when stopped early.
template <typename F>
bool for_each_subset(long n, long k, F&& fn) {
  if (k > n) return true;
  std::vector<long> idx(static_cast<std::size_t>(k));
  for (long i = 0; i < k; ++i) idx[std::size_t(i)] = i;
  while (true) {
    if (!fn(idx)) return false;
    long i = k - 1;
    while (i >= 0 && idx[std::size_t(i)] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[std::size_t(i)];
    for (long j = i + 1; j < k; ++j) idx[std::size_t(j)] = idx[std::size_t(j - 1)] + 1;
  }
}

inline std::vector<long> iota_range(long from, long to) {
  std::vector<long> v;
  for (long i = from; i <= to; ++i) v.push_back(i);
  return v;
}

} // namespace detail

// Exhaustive check that every minor of order 1..maxOrder is nonnegative.
// Scan order: minor order ascending, then row set lex, then column set lex.
inline PositivityReport check_tp_window(const RatMat& a, long maxOrder) {
  if (maxOrder < 1) throw std::invalid_argument("maxOrder must be >= 1");
  PositivityReport rep;
  long top = std::min({maxOrder, a.rows(), a.cols()});
  for (long k = 1; k <= top && rep.holds; ++k) {
    detail::for_each_subset(a.rows(), k, [&](const std::vector<long>& rows) {
      return detail::for_each_subset(a.cols(), k, [&](const std::vector<long>& cols) {
        ++rep.minorsChecked;
        Rat d = minor_det(a, rows, cols);
        if (d < 0) {
          rep.holds = false;
          rep.witness = MinorWitness{k, rows, cols, d};
          return false;
        }
        return true;
      });
    });
  }
  return rep;
}

// Strict total positivity via initial minors: for every order, the solid
// minors hugging the left edge (rows i..i+k, cols 0..k) and the top edge
// (rows 0..k, cols j..j+k) must all be strictly positive. Scan order: order
// ascending, left-anchored minors by row offset, then top-anchored by column
// offset.
inline PositivityReport check_stp_window(const RatMat& a) {
  PositivityReport rep;
  long top = std::min(a.rows(), a.cols());
  for (long k = 0; k < top && rep.holds; ++k) {
    auto fail = [&](std::vector<long> rows, std::vector<long> cols, const Rat& d) {
      rep.holds = false;
      rep.witness = MinorWitness{k + 1, std::move(rows), std::move(cols), d};
    };
    for (long i = 0; i + k < a.rows() && rep.holds; ++i) {
      std::vector<long> rows = detail::iota_range(i, i + k);
      std::vector<long> cols = detail::iota_range(0, k);
      ++rep.minorsChecked;
      Rat d = minor_det(a, rows, cols);
      if (d <= 0) fail(std::move(rows), std::move(cols), d);
    }
    for (long j = 1; j + k < a.cols() && rep.holds; ++j) {
      std::vector<long> rows = detail::iota_range(0, k);
      std::vector<long> cols = detail::iota_range(j, j + k);
      ++rep.minorsChecked;
      Rat d = minor_det(a, rows, cols);
      if (d <= 0) fail(std::move(rows), std::move(cols), d);
    }
  }
  return rep;
}

// Triangular strict total positivity. The window must be lower triangular;
// for every leading principal (m+1) x (m+1) submatrix, the solid bottom-left
// corner minors (rows m-k..m, cols 0..k) must be strictly positive. Scan
// order: m ascending, then k ascending.
inline PositivityReport check_lstp_window(const RatMat& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("triangular check needs a square window");
  for (long i = 0; i < a.rows(); ++i)
    for (long j = i + 1; j < a.cols(); ++j)
      if (a(i, j) != 0)
        throw NotLowerTriangular("window has a nonzero entry above the diagonal");
  PositivityReport rep;
  for (long m = 0; m < a.rows() && rep.holds; ++m) {
    for (long k = 0; k <= m && rep.holds; ++k) {
      std::vector<long> rows = detail::iota_range(m - k, m);
      std::vector<long> cols = detail::iota_range(0, k);
      ++rep.minorsChecked;
      Rat d = minor_det(a, rows, cols);
      if (d <= 0) {
        rep.holds = false;
        rep.witness = MinorWitness{k + 1, std::move(rows), std::move(cols), d};
      }
    }
  }
  return rep;
}

// Lower-triangular Toeplitz window of a sequence: t(i, j) = seq[i - j].
inline RatMat toeplitz_window(const std::vector<Rat>& seq, long n) {
  if (n < 1) throw std::invalid_argument("window size must be >= 1");
  RatMat t(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j <= i; ++j)
      t(i, j) = std::size_t(i - j) < seq.size() ? seq[std::size_t(i - j)] : Rat(0);
  return t;
}

// A finite sequence is Polya-frequency of order maxOrder on this window iff
// its Toeplitz window is totally positive to that order.
inline PositivityReport check_pf_sequence(const std::vector<Rat>& seq, long window,
                                          long maxOrder) {
  return check_tp_window(toeplitz_window(seq, window), maxOrder);
}

} // namespace coordlat
