#include "rncdr/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "rncdr/error.hpp"

namespace rncdr {

namespace {

int group(const std::string& s) {
  if (!s.empty() && s[0] == 'k') return 0;
  if (!s.empty() && s[0] == 'z') return 2;
  return 1;
}

// Natural comparison: digit runs compare numerically.
bool natural_less(const std::string& a, const std::string& b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (std::isdigit(static_cast<unsigned char>(a[i])) && std::isdigit(static_cast<unsigned char>(b[j]))) {
      size_t i2 = i, j2 = j;
      while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
      while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
      std::string na = a.substr(i, i2 - i), nb = b.substr(j, j2 - j);
      while (na.size() > 1 && na[0] == '0') na.erase(0, 1);
      while (nb.size() > 1 && nb[0] == '0') nb.erase(0, 1);
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = i2;
      j = j2;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
  return a < b;
}

}  // namespace

bool symbol_less(const std::string& a, const std::string& b) {
  int ga = group(a), gb = group(b);
  if (ga != gb) return ga < gb;
  return natural_less(a, b);
}

Monomial Monomial::of(const std::string& symbol, int exponent) {
  Monomial m;
  if (exponent != 0) m.f_.push_back({symbol, exponent});
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [s, e] : f_) d += e;
  return d;
}

int Monomial::degree_if(bool (*pred)(const std::string&)) const {
  int d = 0;
  for (const auto& [s, e] : f_)
    if (pred(s)) d += e;
  return d;
}

int Monomial::exponent(const std::string& symbol) const {
  for (const auto& [s, e] : f_)
    if (s == symbol) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  size_t i = 0, j = 0;
  while (i < f_.size() || j < o.f_.size()) {
    if (j == o.f_.size() || (i < f_.size() && symbol_less(f_[i].first, o.f_[j].first))) {
      r.f_.push_back(f_[i++]);
    } else if (i == f_.size() || symbol_less(o.f_[j].first, f_[i].first)) {
      r.f_.push_back(o.f_[j++]);
    } else {
      r.f_.push_back({f_[i].first, f_[i].second + o.f_[j].second});
      ++i;
      ++j;
    }
  }
  return r;
}

Monomial Monomial::filter(bool (*pred)(const std::string&)) const {
  Monomial r;
  for (const auto& fe : f_)
    if (pred(fe.first)) r.f_.push_back(fe);
  return r;
}

std::string Monomial::str() const {
  if (f_.empty()) return "1";
  std::string out;
  for (const auto& [s, e] : f_) {
    if (!out.empty()) out += "*";
    out += s;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

bool Monomial::operator<(const Monomial& o) const {
  size_t n = std::min(f_.size(), o.f_.size());
  for (size_t i = 0; i < n; ++i) {
    if (f_[i].first != o.f_[i].first) return symbol_less(f_[i].first, o.f_[i].first);
    if (f_[i].second != o.f_[i].second) return f_[i].second > o.f_[i].second;
  }
  return f_.size() > o.f_.size();
}

SparsePolynomial::SparsePolynomial(const Rational& c) {
  if (sgn(c) != 0) t_[Monomial()] = c;
}

SparsePolynomial SparsePolynomial::symbol(const std::string& s) {
  SparsePolynomial p;
  p.t_[Monomial::of(s)] = 1;
  return p;
}

SparsePolynomial SparsePolynomial::term(const Monomial& m, const Rational& c) {
  SparsePolynomial p;
  p.add_term(m, c);
  return p;
}

void SparsePolynomial::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = t_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) t_.erase(it);
  }
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& o) {
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& o) {
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& o) const {
  SparsePolynomial r = *this;
  r += o;
  return r;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& o) const {
  SparsePolynomial r = *this;
  r -= o;
  return r;
}

SparsePolynomial SparsePolynomial::operator-() const {
  SparsePolynomial r;
  for (const auto& [m, c] : t_) r.t_[m] = -c;
  return r;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& o) const {
  SparsePolynomial r;
  for (const auto& [m1, c1] : t_)
    for (const auto& [m2, c2] : o.t_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

SparsePolynomial SparsePolynomial::substitute(const std::map<std::string, Rational>& values) const {
  SparsePolynomial r;
  for (const auto& [m, c] : t_) {
    Rational coef = c;
    Monomial rest;
    for (const auto& [s, e] : m.factors()) {
      auto it = values.find(s);
      if (it == values.end()) {
        rest = rest * Monomial::of(s, e);
        continue;
      }
      for (int i = 0; i < e; ++i) coef *= it->second;
    }
    r.add_term(rest, coef);
  }
  return r;
}

std::string SparsePolynomial::str() const {
  if (t_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : t_) {
    Rational a = abs(c);
    bool neg = sgn(c) < 0;
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    if (m.factors().empty()) out += to_string(a);
    else if (a == 1) out += m.str();
    else out += to_string(a) + "*" + m.str();
  }
  return out;
}

SparsePolynomial determinant(const PolyMatrix& a, size_t max_size) {
  const size_t n = a.size();
  if (n > max_size) fail(ErrorKind::SizeLimit, "determinant limited to " + std::to_string(max_size) + " rows");
  for (const auto& row : a)
    if (row.size() != n) fail(ErrorKind::InvalidInput, "determinant of a non-square matrix");
  if (n == 0) return SparsePolynomial(Rational(1));
  // minors[mask] = determinant of the bottom popcount(mask) rows restricted to the columns in mask.
  std::unordered_map<unsigned, SparsePolynomial> prev, cur;
  for (size_t c = 0; c < n; ++c) prev[1u << c] = a[n - 1][c];
  for (size_t k = 2; k <= n; ++k) {
    const size_t row = n - k;
    cur.clear();
    for (const auto& [mask, minor] : prev) {
      if (minor.is_zero()) continue;
      for (size_t c = 0; c < n; ++c) {
        if (mask & (1u << c)) continue;
        if (a[row][c].is_zero()) continue;
        // Sign from the position of column c among the selected columns.
        unsigned below = mask & ((1u << c) - 1);
        int pos = __builtin_popcount(below);
        SparsePolynomial term = a[row][c] * minor;
        if (pos % 2) cur[mask | (1u << c)] -= term;
        else cur[mask | (1u << c)] += term;
      }
    }
    prev.swap(cur);
  }
  auto it = prev.find((1u << n) - 1);
  return it == prev.end() ? SparsePolynomial() : it->second;
}

}  // namespace rncdr
