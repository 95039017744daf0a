#pragma once

// Dense matrices over exact scalars with fraction-free (Bareiss) determinants.
// Rational matrices are reduced to integer ones by clearing row denominators,
// so every determinant is computed purely over Z with exact single-step
// divisions (asserted), then rescaled.

#include "coordlat/exact.hpp"

namespace coordlat {

struct NotSquare : std::invalid_argument {
  NotSquare() : std::invalid_argument("matrix must be square") {}
};
struct BadIndexSet : std::invalid_argument {
  explicit BadIndexSet(const std::string& m) : std::invalid_argument(m) {}
};

template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(long rows, long cols) : rows_(rows), cols_(cols), d_(std::size_t(rows * cols)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  }

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(long i, long j) { return d_[std::size_t(i * cols_ + j)]; }
  const T& operator()(long i, long j) const { return d_[std::size_t(i * cols_ + j)]; }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_;
  }

 private:
  long rows_ = 0, cols_ = 0;
  std::vector<T> d_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

template <class T>
Mat<T> mat_mul(const Mat<T>& a, const Mat<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  Mat<T> r(a.rows(), b.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == 0) continue;
      for (long j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

template <class T>
Mat<T> mat_transpose(const Mat<T>& a) {
  Mat<T> r(a.cols(), a.rows());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
  return r;
}

inline RatMat rat_identity(long n) {
  RatMat r(n, n);
  for (long i = 0; i < n; ++i) r(i, i) = 1;
  return r;
}

inline RatMat mat_int_to_rat(const IntMat& a) {
  RatMat r(a.rows(), a.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j) r(i, j) = Rat(a(i, j));
  return r;
}

inline IntMat mat_rat_to_int(const RatMat& a) {
  IntMat r(a.rows(), a.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j) {
      if (rat_denominator(a(i, j)) != 1)
        throw std::invalid_argument("matrix entry is not an integer");
      r(i, j) = rat_numerator(a(i, j));
    }
  return r;
}

// Bareiss one-step fraction-free elimination. Exact over Z: every division is
// by the previous pivot and leaves no remainder (asserted via div_exact).
inline Int det_fraction_free(IntMat m) {
  if (!m.square()) throw NotSquare();
  long n = m.rows();
  if (n == 0) return 1;
  int sign = 1;
  Int prev = 1;
  for (long k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      long piv = -1;
      for (long i = k + 1; i < n; ++i)
        if (m(i, k) != 0) { piv = i; break; }
      if (piv < 0) return 0;
      for (long j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i)
      for (long j = k + 1; j < n; ++j)
        m(i, j) = div_exact(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

inline Rat det_fraction_free(const RatMat& a) {
  if (!a.square()) throw NotSquare();
  long n = a.rows();
  IntMat m(n, n);
  Int scale = 1;
  for (long i = 0; i < n; ++i) {
    Int l = 1;
    for (long j = 0; j < n; ++j)
      l = boost::multiprecision::lcm(l, rat_denominator(a(i, j)));
    for (long j = 0; j < n; ++j)
      m(i, j) = rat_numerator(a(i, j)) * div_exact(l, rat_denominator(a(i, j)));
    scale *= l;
  }
  return Rat(det_fraction_free(std::move(m)), scale);
}

inline void check_index_set(const std::vector<long>& idx, long bound, const char* what) {
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 0 || idx[i] >= bound)
      throw BadIndexSet(std::string(what) + " index out of bounds");
    if (i > 0 && idx[i] <= idx[i - 1])
      throw BadIndexSet(std::string(what) + " indices must be strictly increasing");
  }
}

inline RatMat submatrix(const RatMat& m, const std::vector<long>& rows,
                        const std::vector<long>& cols) {
  check_index_set(rows, m.rows(), "row");
  check_index_set(cols, m.cols(), "column");
  RatMat r(long(rows.size()), long(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) r(long(i), long(j)) = m(rows[i], cols[j]);
  return r;
}

// Determinant of the submatrix picked by equally sized, strictly increasing
// row and column index lists.
inline Rat minor_det(const RatMat& m, const std::vector<long>& rows,
                     const std::vector<long>& cols) {
  if (rows.size() != cols.size())
    throw BadIndexSet("minor needs equally many rows and columns");
  return det_fraction_free(submatrix(m, rows, cols));
}

} // namespace coordlat
