#include "polyzeta/linalg.hpp"

#include <algorithm>
#include <utility>

namespace polyzeta {

namespace {

using ZMatrix = std::vector<std::vector<mpz_class>>;

Int to_int(const mpz_class& z) {
  if (!z.fits_slong_p()) throw DomainError("integer overflow");
  return z.get_si();
}

ZMatrix to_z(const IntMatrix& m) {
  ZMatrix z(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) z[i][j] = static_cast<long>(m(i, j));
  return z;
}

mpz_class bareiss(ZMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// Row-reduces in place; returns pivot columns.
std::vector<std::size_t> row_reduce(std::vector<RationalVector>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t j = c; j < rows[i].size(); ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Column reduction of a (rows x k) by unimodular column operations, tracking u.
// Returns the number of nonzero leading columns; the remaining columns of u
// span the integer kernel.
std::size_t column_reduce(ZMatrix& a, ZMatrix& u) {
  const std::size_t rows = a.size();
  const std::size_t k = rows ? a[0].size() : u.size();
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    for (auto& row : a) std::swap(row[x], row[y]);
    for (auto& row : u) std::swap(row[x], row[y]);
  };
  auto axpy = [&](std::size_t dst, std::size_t src, const mpz_class& q) {  // col dst -= q col src
    for (auto& row : a) row[dst] -= q * row[src];
    for (auto& row : u) row[dst] -= q * row[src];
  };
  std::size_t pivot = 0;
  for (std::size_t r = 0; r < rows && pivot < k; ++r) {
    while (true) {
      std::size_t best = k;
      for (std::size_t j = pivot; j < k; ++j)
        if (a[r][j] != 0 && (best == k || abs(a[r][j]) < abs(a[r][best]))) best = j;
      if (best == k) break;
      swap_cols(pivot, best);
      bool done = true;
      for (std::size_t j = pivot + 1; j < k; ++j) {
        if (a[r][j] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[r][j].get_mpz_t(), a[r][pivot].get_mpz_t());
        axpy(j, pivot, q);
        if (a[r][j] != 0) done = false;
      }
      if (done) break;
    }
    if (a[r][pivot] != 0) ++pivot;
  }
  return pivot;
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns) {
  if (columns.empty()) return {};
  IntMatrix m(columns[0].size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != m.rows()) throw DomainError("from_columns: ragged input");
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  return from_columns(rows).transpose();
}

IntMatrix IntMatrix::diagonal(const IntVector& d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<IntVector> IntMatrix::columns() const {
  std::vector<IntVector> out;
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  if (v.size() != cols_) throw DomainError("matrix-vector dimension mismatch");
  IntVector out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw DomainError("matrix product dimension mismatch");
  IntMatrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += (*this)(i, k) * o(k, j);
  return out;
}

Int determinant(const IntMatrix& m) {
  if (!m.is_square()) throw DomainError("determinant of non-square matrix");
  return to_int(bareiss(to_z(m)));
}

IntMatrix adjugate(const IntMatrix& m) {
  if (!m.is_square()) throw DomainError("adjugate of non-square matrix");
  const std::size_t n = m.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  ZMatrix z = to_z(m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ZMatrix minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        std::vector<mpz_class> row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != i) row.push_back(z[r][c]);
        minor.push_back(std::move(row));
      }
      mpz_class d = bareiss(std::move(minor));
      adj(i, j) = to_int(((i + j) % 2 ? -1 : 1) * d);
    }
  return adj;
}

std::size_t rank(const std::vector<RationalVector>& vectors) {
  if (vectors.empty()) return 0;
  std::vector<RationalVector> rows(vectors);
  return row_reduce(rows, rows[0].size()).size();
}

std::size_t rank(const std::vector<IntVector>& vectors) {
  std::vector<RationalVector> rows;
  for (const auto& v : vectors) rows.push_back(to_rational(v));
  return rank(rows);
}

std::vector<IntVector> nullspace(const IntMatrix& m) {
  const std::size_t cols = m.cols();
  std::vector<RationalVector> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_rational(m.row(i)));
  std::vector<std::size_t> pivots = rows.empty() ? std::vector<std::size_t>{} : row_reduce(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<IntVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
    basis.push_back(primitive(v));
  }
  return basis;
}

std::vector<IntVector> integer_kernel(const IntMatrix& m) {
  const std::size_t k = m.cols();
  ZMatrix a = to_z(m);
  ZMatrix u(k, std::vector<mpz_class>(k, 0));
  for (std::size_t i = 0; i < k; ++i) u[i][i] = 1;
  std::size_t nonzero = column_reduce(a, u);
  std::vector<IntVector> basis;
  for (std::size_t j = nonzero; j < k; ++j) {
    IntVector v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = to_int(u[i][j]);
    basis.push_back(v);
  }
  return basis;
}

std::optional<RationalVector> solve(const IntMatrix& m, const RationalVector& b) {
  if (b.size() != m.rows()) throw DomainError("solve: dimension mismatch");
  const std::size_t cols = m.cols();
  std::vector<RationalVector> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    RationalVector r = to_rational(m.row(i));
    r.push_back(b[i]);
    rows.push_back(std::move(r));
  }
  std::vector<std::size_t> pivots = row_reduce(rows, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  if (pivots.size() != cols) throw DomainError("solve: matrix lacks full column rank");
  RationalVector x(cols);
  for (std::size_t r = 0; r < cols; ++r) x[pivots[r]] = rows[r][cols];
  return x;
}

IntMatrix column_hermite_form(const IntMatrix& m) {
  if (!m.is_square() || determinant(m) == 0) throw DomainError("Hermite form needs a nonsingular square matrix");
  const std::size_t n = m.rows();
  ZMatrix a = to_z(m);
  ZMatrix u(n, std::vector<mpz_class>(n, 0));
  column_reduce(a, u);
  IntMatrix h(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    int s = sgn(a[j][j]) < 0 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) h(i, j) = to_int(s * a[i][j]);
  }
  return h;
}

std::optional<RationalVector> nonnegative_solution(const std::vector<RationalVector>& a,
                                                   const RationalVector& b) {
  const std::size_t m = a.size();
  if (b.size() != m) throw DomainError("nonnegative_solution: dimension mismatch");
  const std::size_t k = m ? a[0].size() : 0;
  if (m == 0) return RationalVector(k, 0);
  // Tableau columns: k structural, m artificial, 1 rhs.
  const std::size_t width = k + m + 1;
  std::vector<RationalVector> t(m, RationalVector(width, 0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    int s = sgn(b[i]) < 0 ? -1 : 1;
    for (std::size_t j = 0; j < k; ++j) t[i][j] = s * a[i][j];
    t[i][k + i] = 1;
    t[i][width - 1] = s * b[i];
    basis[i] = k + i;
  }
  // Reduced costs of the phase-one objective sum(artificials).
  RationalVector cost(width, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < width; ++j)
      if (j < k || j == width - 1) cost[j] -= t[i][j];
  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j)
      if (sgn(cost[j]) < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(t[i][enter]) <= 0) continue;
      Rational ratio = t[i][width - 1] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot happen for phase one
    Rational piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || sgn(t[i][enter]) == 0) continue;
      Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    Rational f = cost[enter];
    for (std::size_t j = 0; j < width; ++j) cost[j] -= f * t[leave][j];
    basis[leave] = enter;
  }
  if (sgn(cost[width - 1]) != 0) return std::nullopt;
  RationalVector x(k, 0);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < k) x[basis[i]] = t[i][width - 1];
  return x;
}

}  // namespace polyzeta
