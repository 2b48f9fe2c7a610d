#pragma once

// Independent reference computations used to check the library.

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "rncdr/kinetics.hpp"
#include "rncdr/polynomial.hpp"
#include "rncdr/rational.hpp"

namespace oracle {

using rncdr::Rational;
using rncdr::RVec;

// Rank by fraction-free Bareiss elimination on integer-scaled rows.
inline size_t bareiss_rank(std::vector<RVec> rows, size_t cols) {
  std::vector<std::vector<mpz_class>> a;
  for (auto& r : rows) {
    mpz_class l = 1;
    for (auto& x : r) l = lcm(l, mpz_class(x.get_den()));
    std::vector<mpz_class> ir;
    for (auto& x : r) ir.push_back(mpz_class(x * l));
    a.push_back(ir);
  }
  size_t rank = 0;
  mpz_class prev = 1;
  for (size_t c = 0; c < cols && rank < a.size(); ++c) {
    size_t p = rank;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (size_t i = rank + 1; i < a.size(); ++i) {
      for (size_t j = c + 1; j < cols; ++j) a[i][j] = (a[i][j] * a[rank][c] - a[i][c] * a[rank][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

// Transitive closure by Floyd-Warshall.
inline std::vector<std::vector<bool>> reachability(size_t n, const std::vector<std::pair<size_t, size_t>>& edges) {
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i) r[i][i] = true;
  for (auto [a, b] : edges) r[a][b] = true;
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = true;
  return r;
}

// Leibniz expansion over all permutations.
inline rncdr::SparsePolynomial leibniz_det(const rncdr::PolyMatrix& a) {
  const size_t n = a.size();
  std::vector<size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  rncdr::SparsePolynomial out;
  do {
    int inversions = 0;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    rncdr::SparsePolynomial term(Rational(inversions % 2 ? -1 : 1));
    for (size_t i = 0; i < n; ++i) term = term * a[i][perm[i]];
    out += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Right-hand side written out reaction by reaction in floating point.
inline std::vector<double> naive_rhs(const rncdr::KineticSystem& sys, const std::vector<double>& x) {
  auto f = rncdr::numeric_orders(sys);
  auto k = rncdr::numeric_rate_constants(sys);
  std::vector<double> out(sys.net.m(), 0.0);
  for (size_t j = 0; j < sys.net.r(); ++j) {
    double rate = k[j];
    for (size_t s = 0; s < sys.net.m(); ++s) rate *= std::pow(x[s], f(j, s).get_d());
    const auto& rx = sys.net.reactions()[j];
    for (size_t s = 0; s < sys.net.m(); ++s)
      out[s] += rate * (sys.net.complexes()[rx.product][s].get_d() - sys.net.complexes()[rx.reactant][s].get_d());
  }
  return out;
}

// Symbolic ODE term: sign, rate constant text, and kinetic-order monomial text.
struct OdeTerm {
  int sign;
  std::string constant;
  std::string monomial;
  bool operator<(const OdeTerm& o) const {
    return std::tie(sign, constant, monomial) < std::tie(o.sign, o.constant, o.monomial);
  }
  bool operator==(const OdeTerm& o) const = default;
};

// Multiset of terms per species, read off the kinetic system.
inline std::map<std::string, std::vector<OdeTerm>> symbolic_ode(const rncdr::KineticSystem& sys) {
  std::map<std::string, std::vector<OdeTerm>> out;
  const auto& net = sys.net;
  for (size_t j = 0; j < net.r(); ++j) {
    const auto& rx = net.reactions()[j];
    std::string mono;
    for (size_t s = 0; s < net.m(); ++s) {
      const auto& o = sys.kin.orders[j][s];
      if (o.is_zero()) continue;
      mono += (mono.empty() ? "" : "*") + net.species()[s] + "^" + o.str();
    }
    for (size_t s = 0; s < net.m(); ++s) {
      Rational d = net.complexes()[rx.product][s] - net.complexes()[rx.reactant][s];
      if (d == 0) continue;
      for (int c = 0; c < abs(d.get_num().get_si()); ++c)
        out[net.species()[s]].push_back({rncdr::sign(d), sys.kin.rates[j].str(), mono});
    }
  }
  for (auto& [s, v] : out) std::sort(v.begin(), v.end());
  return out;
}

inline std::vector<double> random_positive(std::mt19937_64& rng, size_t n, double lo = 0.1, double hi = 10.0) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  std::vector<double> x(n);
  for (auto& v : x) v = std::exp(u(rng));
  return x;
}

}  // namespace oracle
