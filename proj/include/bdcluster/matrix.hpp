#pragma once

#include "bdcluster/poly.hpp"

#include <optional>
#include <vector>

namespace bdc {

class NotSquare : public std::invalid_argument {
 public:
  NotSquare() : std::invalid_argument("matrix is not square") {}
};

class IndexOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Polynomial& at(int r, int c) { return a_[std::size_t(r) * cols_ + c]; }
  const Polynomial& at(int r, int c) const { return a_[std::size_t(r) * cols_ + c]; }

  // 0-based row and column index lists.
  PolyMatrix sub(const std::vector<int>& rows, const std::vector<int>& cols) const;
  PolyMatrix without(const std::vector<int>& drop_rows, const std::vector<int>& drop_cols) const;
  PolyMatrix swapped_rows(int r1, int r2) const;
  std::vector<std::vector<mpq_class>> eval(const std::function<mpq_class(Variable)>& val) const;

  // Submatrix of the generic variable matrix X (1-based row and column lists).
  static PolyMatrix of_variables(const std::vector<int>& rows, const std::vector<int>& cols);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Polynomial> a_;
};

// Cofactor expansion along rows, memoized over used-column subsets. det of 0x0 is 1.
Polynomial determinant(const PolyMatrix& m);

// det A * det A(rows r1,r2; cols c1,c2 removed)
//   == det A(r1;c1) det A(r2;c2) - det A(r2;c1) det A(r1;c2)   (0-based indices)
bool desnanot_jacobi_check(const PolyMatrix& a, int r1, int r2, int c1, int c2);

// Variant for a matrix with one more row than columns:
// det B(r1) det B(r2,r3;c1) == det B(r2) det B(r1,r3;c1) - det B(r3) det B(r1,r2;c1)
bool desnanot_jacobi_check_tall(const PolyMatrix& b, int r1, int r2, int r3, int c1);

// Exact rational linear algebra.
using QMatrix = std::vector<std::vector<mpq_class>>;
using QVector = std::vector<mpq_class>;

mpq_class det_rational(QMatrix a);
int rank(QMatrix a);
// Basis of {v : A v = 0}; free variables in increasing column order.
std::vector<QVector> null_space(const QMatrix& a, int ncols);
// Solution of A v = b with free variables set to zero, or nullopt if inconsistent.
std::optional<QVector> solve_particular(const QMatrix& a, const QVector& b, int ncols);

}  // namespace bdc
