#include "rncdr/matrix.hpp"

#include <utility>

namespace rncdr {

RMatrix RMatrix::from_rows(const std::vector<RVec>& rows, size_t cols) {
  RMatrix m(rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  return m;
}

RMatrix RMatrix::from_columns(const std::vector<RVec>& cols, size_t rows) {
  RMatrix m(rows, cols.size());
  for (size_t j = 0; j < cols.size(); ++j)
    for (size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  return m;
}

RVec RMatrix::row(size_t i) const { return RVec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

RVec RMatrix::col(size_t j) const {
  RVec v(rows_);
  for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

RMatrix RMatrix::transpose() const {
  RMatrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RVec RMatrix::operator*(const RVec& x) const {
  RVec y(rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (sgn((*this)(i, j)) != 0 && sgn(x[j]) != 0) y[i] += (*this)(i, j) * x[j];
  return y;
}

RMatrix RMatrix::operator*(const RMatrix& b) const {
  RMatrix c(rows_, b.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (size_t j = 0; j < b.cols_; ++j)
        if (sgn(b(k, j)) != 0) c(i, j) += a * b(k, j);
    }
  return c;
}

Rref rref(RMatrix a) {
  Rref out;
  size_t r = 0;
  for (size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    size_t p = r;
    while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Rational inv = 1 / a(r, c);
    for (size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (size_t i = 0; i < a.rows(); ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      Rational f = a(i, c);
      for (size_t j = c; j < a.cols(); ++j)
        if (sgn(a(r, j)) != 0) a(i, j) -= f * a(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(a);
  return out;
}

size_t rank(const RMatrix& a) { return rref(a).pivots.size(); }

size_t rank(const std::vector<RVec>& vectors, size_t dim) {
  if (vectors.empty()) return 0;
  return rank(RMatrix::from_rows(vectors, dim));
}

std::vector<RVec> nullspace(const RMatrix& a) {
  Rref rr = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (size_t c : rr.pivots) is_pivot[c] = true;
  std::vector<RVec> basis;
  for (size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    RVec v(a.cols());
    v[f] = 1;
    for (size_t i = 0; i < rr.pivots.size(); ++i) v[rr.pivots[i]] = -rr.reduced(i, f);
    basis.push_back(primitive(v));
  }
  return basis;
}

std::vector<RVec> left_kernel(const RMatrix& a) { return nullspace(a.transpose()); }

std::vector<RVec> independent_subset(const std::vector<RVec>& vectors, size_t dim) {
  std::vector<RVec> kept;
  for (const auto& v : vectors) {
    kept.push_back(v);
    if (rank(kept, dim) < kept.size()) kept.pop_back();
  }
  return kept;
}

std::vector<RVec> canonical_basis(const std::vector<RVec>& vectors, size_t dim) {
  if (vectors.empty()) return {};
  Rref rr = rref(RMatrix::from_rows(vectors, dim));
  std::vector<RVec> out;
  for (size_t i = 0; i < rr.pivots.size(); ++i) out.push_back(rr.reduced.row(i));
  return out;
}

bool in_span(const std::vector<RVec>& basis, const RVec& v, size_t dim) {
  if (is_zero(v)) return true;
  auto all = basis;
  all.push_back(v);
  return rank(all, dim) == rank(basis, dim);
}

bool same_span(const std::vector<RVec>& a, const std::vector<RVec>& b, size_t dim) {
  return canonical_basis(a, dim) == canonical_basis(b, dim);
}

std::vector<RVec> orthogonal_complement(const std::vector<RVec>& vectors, size_t dim) {
  if (vectors.empty()) {
    std::vector<RVec> id;
    for (size_t i = 0; i < dim; ++i) {
      RVec e(dim);
      e[i] = 1;
      id.push_back(e);
    }
    return id;
  }
  return nullspace(RMatrix::from_rows(vectors, dim));
}

}  // namespace rncdr
