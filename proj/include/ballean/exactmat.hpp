#pragma once

// Exact integer matrix kernel: Hermite and Smith normal forms, determinants
// and integer linear systems over arbitrary-precision integers.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ballean {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

  /// Row-major construction; all rows must have the same length.
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged rows");
      for (long v : r) data_.emplace_back(v);
    }
  }

  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("IntMatrix: ragged rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  std::vector<IntVector> row_list() const {
    std::vector<IntVector> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  /// row[dst] -= q * row[src]
  void sub_row(std::size_t dst, std::size_t src, const Integer& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) -= q * (*this)(src, j);
  }

  void sub_col(std::size_t dst, std::size_t src, const Integer& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) -= q * (*this)(i, src);
  }

  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
  }

  /// Replace rows (a, b) by (s*a + t*b, u*a + v*b).
  void combine_rows(std::size_t a, std::size_t b, const Integer& s, const Integer& t,
                    const Integer& u, const Integer& v) {
    for (std::size_t j = 0; j < cols_; ++j) {
      Integer x = (*this)(a, j), y = (*this)(b, j);
      (*this)(a, j) = s * x + t * y;
      (*this)(b, j) = u * x + v * y;
    }
  }

  bool row_is_zero(std::size_t i) const {
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0) return false;
    return true;
  }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  IntMatrix first_rows(std::size_t k) const {
    IntMatrix out(k, cols_);
    std::copy_n(data_.begin(), static_cast<std::ptrdiff_t>(k * cols_), out.data_.begin());
    return out;
  }

  /// Stack `other` below this matrix.
  IntMatrix stacked(const IntMatrix& other) const {
    if (rows_ && other.rows_ && cols_ != other.cols_)
      throw std::invalid_argument("IntMatrix: column mismatch in stack");
    IntMatrix out(rows_ + other.rows_, rows_ ? cols_ : other.cols_);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    std::copy(other.data_.begin(), other.data_.end(),
              out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return out;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: product shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ",[" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? "," : "") << m(i, j).get_str();
      os << ']';
    }
    return os << ']';
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// row vector times matrix
inline IntVector row_times(const IntVector& c, const IntMatrix& m) {
  if (c.size() != m.rows()) throw std::invalid_argument("row_times: dimension mismatch");
  IntVector out(m.cols(), Integer(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (c[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += c[i] * m(i, j);
  }
  return out;
}

namespace detail {

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline void gcdext(Integer& g, Integer& s, Integer& t, const Integer& a, const Integer& b) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

} // namespace detail

/// Result of a row-HNF computation with its unimodular transform:
/// `transform * input == form`, the first `rank` rows of `form` are the HNF
/// and the remaining rows are zero.
struct HnfDecomposition {
  IntMatrix form;
  IntMatrix transform;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

inline HnfDecomposition hnf_decompose(const IntMatrix& m) {
  HnfDecomposition d{m, IntMatrix::identity(m.rows()), 0, {}};
  IntMatrix& a = d.form;
  IntMatrix& u = d.transform;
  std::size_t p = 0;
  for (std::size_t c = 0; c < a.cols() && p < a.rows(); ++c) {
    std::size_t first = a.rows();
    for (std::size_t i = p; i < a.rows(); ++i)
      if (a(i, c) != 0) { first = i; break; }
    if (first == a.rows()) continue;
    a.swap_rows(p, first);
    u.swap_rows(p, first);
    for (std::size_t j = p + 1; j < a.rows(); ++j) {
      if (a(j, c) == 0) continue;
      Integer x = a(p, c), y = a(j, c);
      Integer g, s, t;
      detail::gcdext(g, s, t, x, y);
      Integer yg = y / g, xg = x / g;
      // [[s, t], [y/g, -x/g]] has determinant -1
      a.combine_rows(p, j, s, t, yg, Integer(-xg));
      u.combine_rows(p, j, s, t, yg, Integer(-xg));
    }
    if (a(p, c) < 0) {
      a.negate_row(p);
      u.negate_row(p);
    }
    for (std::size_t i = 0; i < p; ++i) {
      Integer q = detail::floor_div(a(i, c), a(p, c));
      a.sub_row(i, p, q);
      u.sub_row(i, p, q);
    }
    d.pivot_cols.push_back(c);
    ++p;
  }
  d.rank = p;
  return d;
}

/// Canonical row-style Hermite normal form of the row span; zero rows removed.
inline IntMatrix row_hnf(const IntMatrix& m) {
  auto d = hnf_decompose(m);
  return d.form.first_rows(d.rank);
}

inline std::size_t rank(const IntMatrix& m) { return hnf_decompose(m).rank; }

/// Basis (as rows) of the integer left kernel {c : c * m == 0}.
inline IntMatrix left_kernel(const IntMatrix& m) {
  auto d = hnf_decompose(m);
  IntMatrix k(m.rows() - d.rank, m.rows());
  for (std::size_t i = d.rank; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) k(i - d.rank, j) = d.transform(i, j);
  return k;
}

/// Smith normal form diagonal d1 | d2 | ... of length min(rows, cols),
/// trailing zeros for rank deficiency.
inline std::vector<Integer> snf(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t n = std::min(a.rows(), a.cols());
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < n; ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    bool found = false;
    std::size_t bi = t, bj = t;
    for (std::size_t i = t; i < a.rows(); ++i)
      for (std::size_t j = t; j < a.cols(); ++j)
        if (a(i, j) != 0 && (!found || mpz_cmpabs(a(i, j).get_mpz_t(), a(bi, bj).get_mpz_t()) < 0)) {
          found = true;
          bi = i;
          bj = j;
        }
    if (!found) break;
    a.swap_rows(t, bi);
    a.swap_cols(t, bj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        a.sub_row(i, t, detail::floor_div(a(i, t), a(t, t)));
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        a.sub_col(j, t, detail::floor_div(a(t, j), a(t, t)));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        // move the smallest remainder in row/column t into the pivot
        std::size_t si = t, sj = t;
        for (std::size_t i = t + 1; i < a.rows(); ++i)
          if (a(i, t) != 0 && mpz_cmpabs(a(i, t).get_mpz_t(), a(si, sj).get_mpz_t()) < 0) { si = i; sj = t; }
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (a(t, j) != 0 && mpz_cmpabs(a(t, j).get_mpz_t(), a(si, sj).get_mpz_t()) < 0) { si = t; sj = j; }
        a.swap_rows(t, si);
        a.swap_cols(t, sj);
        continue;
      }
      std::size_t bad = 0;
      for (std::size_t i = t + 1; i < a.rows() && !bad; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (!bad) break;
      a.sub_row(t, bad, Integer(-1)); // row t += row bad
    }
    diag.push_back(abs(a(t, t)));
  }
  diag.resize(n, Integer(0));
  return diag;
}

/// |det(m)| by fraction-free (Bareiss) elimination.
inline Integer abs_det(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      a.swap_rows(k, r);
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return abs(a(n - 1, n - 1));
}

/// Integer coefficients c with c * m == target, or nullopt if none exist.
inline std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& target) {
  if (target.size() != m.cols()) throw std::invalid_argument("solve_integer: dimension mismatch");
  auto d = hnf_decompose(m);
  // forward substitution against the echelon rows
  IntVector residual = target;
  IntVector y(d.rank, Integer(0));
  for (std::size_t k = 0; k < d.rank; ++k) {
    const std::size_t c = d.pivot_cols[k];
    // columns before this pivot must already be cleared
    for (std::size_t j = (k ? d.pivot_cols[k - 1] + 1 : 0); j < c; ++j)
      if (residual[j] != 0) return std::nullopt;
    if (!mpz_divisible_p(residual[c].get_mpz_t(), d.form(k, c).get_mpz_t())) return std::nullopt;
    y[k] = residual[c] / d.form(k, c);
    for (std::size_t j = c; j < m.cols(); ++j) residual[j] -= y[k] * d.form(k, j);
  }
  for (const auto& r : residual)
    if (r != 0) return std::nullopt;
  IntVector coeffs(m.rows(), Integer(0));
  for (std::size_t k = 0; k < d.rank; ++k) {
    if (y[k] == 0) continue;
    for (std::size_t j = 0; j < m.rows(); ++j) coeffs[j] += y[k] * d.transform(k, j);
  }
  return coeffs;
}

} // namespace ballean
