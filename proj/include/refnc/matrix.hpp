#pragma once

/**
 * @file matrix.hpp
 * @brief Dense matrices over Q(zeta_N) and exact Gaussian elimination.
 *
 * Echelon conventions are fixed for reproducible output: pivots are chosen
 * by increasing column index, every pivot is scaled to 1 and reduced rows
 * have zeros above and below each pivot.
 */

#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "refnc/cyclotomic.hpp"
#include "refnc/error.hpp"

namespace refnc {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = CycNum(1);
    return m;
  }

  static Matrix diagonal(const std::vector<CycNum>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<CycNum>>& rows) {
    if (rows.empty()) return {};
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw InvalidArgument("Matrix::from_rows: ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix column(const std::vector<CycNum>& v) {
    Matrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  CycNum& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const CycNum& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  const std::vector<CycNum>& entries() const { return a_; }

  /// Least common conductor of the entries.
  int conductor() const {
    int n = 1;
    for (const auto& x : a_) n = std::lcm(n, x.conductor());
    return n;
  }

  Matrix promote(int n) const {
    Matrix m = *this;
    for (auto& x : m.a_) x = x.promote(n);
    return m;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  CycNum trace() const {
    CycNum t;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  bool is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        const CycNum& x = (*this)(i, j);
        if (i == j ? !x.is_one() : !x.is_zero()) return false;
      }
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InvalidArgument("Matrix product: dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const CycNum& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const CycNum& y = b(k, j);
          if (y.is_zero()) continue;
          c(i, j) += x * y;
        }
      }
    }
    return c;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("Matrix sum: dimension mismatch");
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("Matrix difference: dimension mismatch");
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
    return a;
  }

  friend Matrix operator*(const CycNum& s, Matrix a) {
    for (auto& x : a.a_) x *= s;
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::size_t hash() const {
    std::size_t h = rows_ * 31 + cols_;
    for (const auto& x : a_) h = h * 0x100000001b3ULL ^ x.hash();
    return h;
  }

  /// Rows of scalar literals.
  std::vector<std::vector<std::string>> to_literals() const {
    std::vector<std::vector<std::string>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i].push_back((*this)(i, j).str());
    return out;
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? "; " : "";
      for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + (*this)(i, j).str();
    }
    return s + "]";
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<CycNum> a_;
};

/// Reduced row echelon form; pivot columns are reported in increasing order.
inline Matrix rref(Matrix m, std::vector<std::size_t>* pivots = nullptr) {
  std::size_t row = 0;
  std::vector<std::size_t> piv;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t p = row;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    }
    CycNum inv = m(row, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) {
      if (!m(row, j).is_zero()) m(row, j) *= inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, c).is_zero()) continue;
      CycNum f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m(row, j).is_zero()) m(r, j) -= f * m(row, j);
      }
    }
    piv.push_back(c);
    ++row;
  }
  if (pivots) *pivots = std::move(piv);
  return m;
}

inline std::size_t rank(const Matrix& m) {
  std::vector<std::size_t> piv;
  rref(m, &piv);
  return piv.size();
}

/// Exact basis of the right null space {v : M v = 0}.
///
/// One vector per non-pivot column f of rref(M): it has entry 1 at f, zero
/// at the other free columns and -rref(M)(i, f) at the i-th pivot column.
/// The vectors are returned in increasing order of f.
inline std::vector<Matrix> kernel_basis(const Matrix& m) {
  std::vector<std::size_t> piv;
  Matrix r = rref(m, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<Matrix> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Matrix v(m.cols(), 1);
    v(f, 0) = CycNum(1);
    for (std::size_t i = 0; i < piv.size(); ++i) v(piv[i], 0) = -r(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline CycNum determinant(Matrix m) {
  if (!m.is_square()) throw InvalidArgument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  CycNum det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return CycNum();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    CycNum inv = m(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      CycNum f = m(r, c) * inv;
      for (std::size_t j = c; j < n; ++j) {
        if (!m(c, j).is_zero()) m(r, j) -= f * m(c, j);
      }
    }
  }
  return det;
}

inline Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw InvalidArgument("inverse: matrix is not square");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = CycNum(1);
  }
  std::vector<std::size_t> piv;
  Matrix r = rref(aug, &piv);
  if (piv.size() < n || piv[n - 1] != n - 1) throw InvalidArgument("inverse: matrix is singular");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

/// Result of solving A x = b exactly.
struct LinearSolution {
  bool consistent = false;
  Matrix particular;            // cols(A) x 1, free variables set to zero
  std::vector<Matrix> kernel;   // basis of the null space of A
};

inline LinearSolution solve(const Matrix& a, const Matrix& b) {
  if (b.rows() != a.rows() || b.cols() != 1) throw InvalidArgument("solve: right-hand side has wrong shape");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b(i, 0);
  }
  std::vector<std::size_t> piv;
  Matrix r = rref(aug, &piv);
  LinearSolution sol;
  sol.consistent = piv.empty() || piv.back() != a.cols();
  sol.kernel = kernel_basis(a);
  if (!sol.consistent) return sol;
  sol.particular = Matrix(a.cols(), 1);
  for (std::size_t i = 0; i < piv.size(); ++i) sol.particular(piv[i], 0) = r(i, a.cols());
  return sol;
}

/// Multiplicative order of g by repeated exact multiplication.
/// Throws NonFiniteError when no power up to max_order is the identity.
inline long char_poly_order(const Matrix& g, long max_order = 10000) {
  if (!g.is_square()) throw InvalidArgument("char_poly_order: matrix is not square");
  Matrix p = g;
  for (long k = 1; k <= max_order; ++k) {
    if (p.is_identity()) return k;
    p = p * g;
  }
  throw NonFiniteError("element order exceeds " + std::to_string(max_order) +
                       "; input is not of finite order");
}

/// Coefficients c_0..c_n of det(I - t g) = sum c_k t^k (Newton identities).
inline std::vector<CycNum> det_one_minus_tg(const Matrix& g) {
  if (!g.is_square()) throw InvalidArgument("det_one_minus_tg: matrix is not square");
  const std::size_t n = g.rows();
  std::vector<CycNum> power_traces(n + 1);
  Matrix p = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    p = p * g;
    power_traces[k] = p.trace();
  }
  // elementary symmetric functions of the eigenvalues
  std::vector<CycNum> e(n + 1);
  e[0] = CycNum(1);
  for (std::size_t k = 1; k <= n; ++k) {
    CycNum acc;
    for (std::size_t i = 1; i <= k; ++i) {
      CycNum term = e[k - i] * power_traces[i];
      if (i % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    e[k] = acc / CycNum(static_cast<long>(k));
  }
  std::vector<CycNum> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[k] = (k % 2 == 0) ? e[k] : -e[k];
  return c;
}

}  // namespace refnc
