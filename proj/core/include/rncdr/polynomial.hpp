#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rncdr/rational.hpp"

namespace rncdr {

// Symbol order used for printing and canonical keys: k-symbols, then other
// symbols, then z-symbols; natural order within each group (k2 < k10).
bool symbol_less(const std::string& a, const std::string& b);

// Sorted (symbol, exponent) pairs with positive exponents.
class Monomial {
 public:
  Monomial() = default;
  static Monomial of(const std::string& symbol, int exponent = 1);

  const std::vector<std::pair<std::string, int>>& factors() const { return f_; }
  int degree() const;
  int degree_if(bool (*pred)(const std::string&)) const;
  int exponent(const std::string& symbol) const;
  Monomial operator*(const Monomial& o) const;
  // Keeps only the factors whose symbol satisfies pred.
  Monomial filter(bool (*pred)(const std::string&)) const;
  std::string str() const;  // "k1*k2*z3", "1" when empty

  bool operator==(const Monomial& o) const { return f_ == o.f_; }
  bool operator<(const Monomial& o) const;

 private:
  std::vector<std::pair<std::string, int>> f_;
};

class SparsePolynomial {
 public:
  SparsePolynomial() = default;
  SparsePolynomial(const Rational& c);  // NOLINT(implicit)
  static SparsePolynomial symbol(const std::string& s);
  static SparsePolynomial term(const Monomial& m, const Rational& c);

  const std::map<Monomial, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }

  SparsePolynomial& operator+=(const SparsePolynomial& o);
  SparsePolynomial& operator-=(const SparsePolynomial& o);
  SparsePolynomial operator+(const SparsePolynomial& o) const;
  SparsePolynomial operator-(const SparsePolynomial& o) const;
  SparsePolynomial operator*(const SparsePolynomial& o) const;
  SparsePolynomial operator-() const;
  bool operator==(const SparsePolynomial& o) const { return t_ == o.t_; }

  // Substitute exact values for some symbols.
  SparsePolynomial substitute(const std::map<std::string, Rational>& values) const;
  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> t_;
};

using PolyMatrix = std::vector<std::vector<SparsePolynomial>>;

// Exact determinant by cofactor expansion over column subsets.
SparsePolynomial determinant(const PolyMatrix& a, size_t max_size = 12);

}  // namespace rncdr
