#include "liecoh/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "liecoh/errors.hpp"

namespace liecoh {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionMismatch("column length differs from row count");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(const Vector& x) const {
  if (x.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
  Vector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero() && !x[c].is_zero()) y[r] += (*this)(r, c) * x[c];
  return y;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product size mismatch");
  Matrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) p(i, j) += aik * b(k, j);
    }
  return p;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

namespace {

struct GaussianInteger {
  mpz_class re;
  mpz_class im;

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

// a*b - c*d
GaussianInteger cross(const GaussianInteger& a, const GaussianInteger& b,
                      const GaussianInteger& c, const GaussianInteger& d) {
  GaussianInteger out;
  out.re = a.re * b.re - a.im * b.im - (c.re * d.re - c.im * d.im);
  out.im = a.re * b.im + a.im * b.re - (c.re * d.im + c.im * d.re);
  return out;
}

void divide_exact(GaussianInteger& x, const GaussianInteger& d) {
  if (sgn(d.im) == 0) {
    mpz_divexact(x.re.get_mpz_t(), x.re.get_mpz_t(), d.re.get_mpz_t());
    mpz_divexact(x.im.get_mpz_t(), x.im.get_mpz_t(), d.re.get_mpz_t());
    return;
  }
  mpz_class n = d.re * d.re + d.im * d.im;
  mpz_class re = x.re * d.re + x.im * d.im;
  mpz_class im = x.im * d.re - x.re * d.im;
  mpz_divexact(x.re.get_mpz_t(), re.get_mpz_t(), n.get_mpz_t());
  mpz_divexact(x.im.get_mpz_t(), im.get_mpz_t(), n.get_mpz_t());
}

using IntRow = std::vector<GaussianInteger>;

IntRow clear_denominators(const Matrix& m, std::size_t r) {
  mpz_class l = 1;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const Scalar& s = m(r, c);
    if (s.is_zero()) continue;
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), s.re().get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), s.im().get_den_mpz_t());
  }
  IntRow row(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const Scalar& s = m(r, c);
    if (s.is_zero()) continue;
    row[c].re = s.re().get_num() * (l / s.re().get_den());
    row[c].im = s.im().get_num() * (l / s.im().get_den());
  }
  return row;
}

}  // namespace

std::size_t rank_fraction_free(const Matrix& m) {
  std::vector<IntRow> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    IntRow row = clear_denominators(m, r);
    if (std::any_of(row.begin(), row.end(), [](const auto& x) { return !x.is_zero(); }))
      rows.push_back(std::move(row));
  }

  GaussianInteger previous{1, 0};
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);

    const IntRow& pivot_row = rows[rank];
    const GaussianInteger& pivot = pivot_row[c];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      IntRow& row = rows[r];
      GaussianInteger lead = row[c];
      for (std::size_t cc = c + 1; cc < m.cols(); ++cc) {
        if (row[cc].is_zero() && pivot_row[cc].is_zero()) continue;
        row[cc] = cross(pivot, row[cc], lead, pivot_row[cc]);
        divide_exact(row[cc], previous);
      }
      row[c] = GaussianInteger{};
    }
    previous = pivot;
    ++rank;
  }
  return rank;
}

Echelon reduced_row_echelon(Matrix m) {
  Echelon e;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row)
      for (std::size_t cc = 0; cc < m.cols(); ++cc) std::swap(m(p, cc), m(lead_row, cc));

    Scalar inv = Scalar(1) / m(lead_row, c);
    for (std::size_t cc = c; cc < m.cols(); ++cc)
      if (!m(lead_row, cc).is_zero()) m(lead_row, cc) *= inv;

    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, c).is_zero()) continue;
      Scalar factor = m(r, c);
      for (std::size_t cc = c; cc < m.cols(); ++cc)
        if (!m(lead_row, cc).is_zero()) m(r, cc) -= factor * m(lead_row, cc);
    }
    e.pivots.push_back(c);
    ++lead_row;
  }
  e.reduced = std::move(m);
  return e;
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  Echelon e = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> column_space_basis(const Matrix& m) {
  Echelon e = reduced_row_echelon(m);
  std::vector<Vector> basis;
  basis.reserve(e.pivots.size());
  for (auto c : e.pivots) basis.push_back(m.column(c));
  return basis;
}

std::size_t rank_of_vectors(const std::vector<Vector>& vectors, std::size_t dim) {
  if (vectors.empty()) return 0;
  return rank_fraction_free(Matrix::from_columns(vectors, dim));
}

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  Matrix a = m;
  const std::size_t n = a.rows();
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      for (std::size_t cc = 0; cc < n; ++cc) std::swap(a(p, cc), a(c, cc));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      Scalar factor = a(r, c) / a(c, c);
      for (std::size_t cc = c; cc < n; ++cc) a(r, cc) -= factor * a(c, cc);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Matrix();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  Echelon e = reduced_row_echelon(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

}  // namespace liecoh
