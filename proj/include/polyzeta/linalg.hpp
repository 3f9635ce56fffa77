#ifndef POLYZETA_LINALG_HPP
#define POLYZETA_LINALG_HPP

#include <optional>
#include <vector>

#include "polyzeta/arith.hpp"

namespace polyzeta {

/// Dense row-major integer matrix. Small sizes only (n <= 6 in practice).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(const std::vector<IntVector>& columns);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);
  static IntMatrix diagonal(const IntVector& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  std::vector<IntVector> columns() const;
  IntMatrix transpose() const;
  IntVector operator*(const IntVector& v) const;
  IntMatrix operator*(const IntMatrix& o) const;
  bool is_square() const { return rows_ == cols_; }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

// Exact determinant (fraction-free elimination over mpz).
Int determinant(const IntMatrix& m);
// Adjugate: adj(m) * m = det(m) * I.
IntMatrix adjugate(const IntMatrix& m);

std::size_t rank(const std::vector<IntVector>& vectors);
std::size_t rank(const std::vector<RationalVector>& vectors);

// Basis of the rational null space {x : m x = 0}, as primitive integer vectors.
std::vector<IntVector> nullspace(const IntMatrix& m);

// Lattice basis of {x in Z^k : m x = 0}.
std::vector<IntVector> integer_kernel(const IntMatrix& m);

// Unique solution of m x = b when m has full column rank and b lies in its
// column space; nullopt when the system is inconsistent.
std::optional<RationalVector> solve(const IntMatrix& m, const RationalVector& b);

// Column-style Hermite form H = m U (U unimodular) of a nonsingular square
// matrix: lower triangular with positive diagonal.
IntMatrix column_hermite_form(const IntMatrix& m);

// Exact feasibility of {x >= 0 : a x = b} by phase-one simplex with Bland's
// rule. Returns a feasible point or nullopt.
std::optional<RationalVector> nonnegative_solution(const std::vector<RationalVector>& a,
                                                   const RationalVector& b);

}  // namespace polyzeta

#endif
