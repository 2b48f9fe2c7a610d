#pragma once

#include <cstddef>
#include <vector>

#include "rncdr/rational.hpp"

namespace rncdr {

// Dense row-major matrix over the rationals.
class RMatrix {
 public:
  RMatrix() = default;
  RMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RMatrix from_rows(const std::vector<RVec>& rows, size_t cols);
  static RMatrix from_columns(const std::vector<RVec>& cols, size_t rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Rational& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  RVec row(size_t i) const;
  RVec col(size_t j) const;
  RMatrix transpose() const;
  RVec operator*(const RVec& x) const;
  RMatrix operator*(const RMatrix& b) const;
  bool operator==(const RMatrix& o) const = default;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

struct Rref {
  RMatrix reduced;
  std::vector<size_t> pivots;  // pivot column of each nonzero row
};

Rref rref(RMatrix a);
size_t rank(const RMatrix& a);
size_t rank(const std::vector<RVec>& vectors, size_t dim);

// Basis of {x : A x = 0}; one primitive integer vector per free column.
std::vector<RVec> nullspace(const RMatrix& a);
// Basis of {y : y^T A = 0}.
std::vector<RVec> left_kernel(const RMatrix& a);

// Maximal independent subset, in the given order.
std::vector<RVec> independent_subset(const std::vector<RVec>& vectors, size_t dim);
// Reduced row-echelon basis of the span (canonical).
std::vector<RVec> canonical_basis(const std::vector<RVec>& vectors, size_t dim);
bool in_span(const std::vector<RVec>& basis, const RVec& v, size_t dim);
bool same_span(const std::vector<RVec>& a, const std::vector<RVec>& b, size_t dim);
// Basis of the orthogonal complement of span(vectors).
std::vector<RVec> orthogonal_complement(const std::vector<RVec>& vectors, size_t dim);

}  // namespace rncdr
