#ifndef HYPERPOLY_LINALG_HPP
#define HYPERPOLY_LINALG_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hyperpoly/error.hpp"
#include "hyperpoly/rational.hpp"

namespace hyperpoly {

/// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Matrix diagonal(const std::vector<Rational>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shapes");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw Error(ErrorCode::DimensionMismatch, "matrix sum shapes");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  Matrix rref;
  Matrix transform;  // transform * input == rref
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const { return pivot_columns.size(); }
};

/// Reduced row-echelon form by fraction-free (Bareiss) forward elimination
/// on the integer-scaled matrix, then rational back-substitution. Pivot
/// column is the first nonzero column; among candidate rows the largest
/// absolute numerator wins (ties to the lowest row).
inline RrefResult rref(const Matrix& input) {
  const std::size_t m = input.rows(), n = input.cols(), w = n + m;
  // Augmented integer matrix [D*A | D], D clearing each row's denominators.
  std::vector<std::vector<Integer>> a(m, std::vector<Integer>(w));
  for (std::size_t i = 0; i < m; ++i) {
    Integer d = 1;
    for (std::size_t j = 0; j < n; ++j)
      mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), input(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = input(i, j).get_num() * (d / input(i, j).get_den());
    a[i][n + i] = d;
  }

  std::vector<std::size_t> pivots;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t best = m;
    for (std::size_t i = r; i < m; ++i) {
      if (a[i][c] == 0) continue;
      if (best == m || abs(a[i][c]) > abs(a[best][c])) best = i;
    }
    if (best == m) continue;
    std::swap(a[r], a[best]);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = 0; j < w; ++j) {
        if (j == c) continue;
        Integer v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }

  // Rational back-substitution.
  std::vector<std::vector<Rational>> q(m, std::vector<Rational>(w));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < w; ++j) q[i][j] = Rational(a[i][j]);
  for (std::size_t k = pivots.size(); k-- > 0;) {
    const std::size_t c = pivots[k];
    const Rational inv = 1 / q[k][c];
    for (std::size_t j = 0; j < w; ++j) q[k][j] *= inv;
    for (std::size_t i = 0; i < k; ++i) {
      if (q[i][c] == 0) continue;
      const Rational f = q[i][c];
      for (std::size_t j = 0; j < w; ++j) q[i][j] -= f * q[k][j];
    }
  }

  RrefResult out{Matrix(m, n), Matrix(m, m), pivots};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.rref(i, j) = q[i][j];
    for (std::size_t j = 0; j < m; ++j) out.transform(i, j) = q[i][n + j];
  }
  return out;
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank(); }

inline Rational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square");
  Matrix a = m;
  Rational det = 1;
  const std::size_t k = a.rows();
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (p < k && a(p, c) == 0) ++p;
    if (p == k) return 0;
    if (p != c) {
      a.swap_rows(p, c);
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < k; ++i) {
      if (a(i, c) == 0) continue;
      const Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < k; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

/// P * G * P^T = diag(diagonal), P invertible.
struct CongruenceDiagonalization {
  Matrix transform;
  std::vector<Rational> diagonal;
  int positive = 0, negative = 0, zero = 0;
  int signature() const { return positive - negative; }
};

/// Symmetric Gaussian elimination over Q.
inline CongruenceDiagonalization congruence_diagonalize(const Matrix& g) {
  if (!g.is_symmetric()) throw Error(ErrorCode::DimensionMismatch, "form is not symmetric");
  const std::size_t k = g.rows();
  Matrix a = g;
  Matrix p = Matrix::identity(k);

  auto add_multiple = [&](std::size_t dst, std::size_t src, const Rational& f) {
    // row_dst += f*row_src; col_dst += f*col_src
    for (std::size_t j = 0; j < k; ++j) a(dst, j) += f * a(src, j);
    for (std::size_t j = 0; j < k; ++j) a(j, dst) += f * a(j, src);
    for (std::size_t j = 0; j < k; ++j) p(dst, j) += f * p(src, j);
  };
  auto swap_both = [&](std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    for (std::size_t r = 0; r < k; ++r) std::swap(a(r, i), a(r, j));
    p.swap_rows(i, j);
  };

  for (std::size_t i = 0; i < k; ++i) {
    if (a(i, i) == 0) {
      std::size_t j = i + 1;
      while (j < k && a(j, j) == 0) ++j;
      if (j < k) {
        swap_both(i, j);
      } else {
        j = i + 1;
        while (j < k && a(i, j) == 0) ++j;
        if (j == k) continue;  // row i already zero beyond the diagonal
        add_multiple(i, j, 1);  // new a(i,i) = 2 a(i,j) != 0
      }
    }
    for (std::size_t j = i + 1; j < k; ++j) {
      if (a(j, i) == 0) continue;
      add_multiple(j, i, -a(j, i) / a(i, i));
    }
  }

  CongruenceDiagonalization out{p, {}, 0, 0, 0};
  for (std::size_t i = 0; i < k; ++i) {
    out.diagonal.push_back(a(i, i));
    const int s = sgn(a(i, i));
    (s > 0 ? out.positive : s < 0 ? out.negative : out.zero)++;
  }
  return out;
}

}  // namespace hyperpoly

#endif  // HYPERPOLY_LINALG_HPP
