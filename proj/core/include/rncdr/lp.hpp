#pragma once

#include <optional>
#include <vector>

#include "rncdr/rational.hpp"

namespace rncdr {

enum class Rel { Eq, Ge, Le };

struct LinearConstraint {
  RVec coeffs;
  Rel rel = Rel::Eq;
  Rational rhs;
};

// Variables are free unless marked nonnegative.
struct LinearProgram {
  explicit LinearProgram(size_t n) : num_vars(n), nonneg(n, false) {}

  size_t num_vars;
  std::vector<bool> nonneg;
  std::vector<LinearConstraint> constraints;
  std::optional<RVec> minimize;

  void add(RVec coeffs, Rel rel, Rational rhs) { constraints.push_back({std::move(coeffs), rel, std::move(rhs)}); }
  // Single-variable bound helpers.
  void fix(size_t var, const Rational& value);
  void at_least(size_t var, const Rational& value);
  void at_most(size_t var, const Rational& value);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  RVec x;
};

// Exact two-phase simplex with Bland's rule.
LpResult solve(const LinearProgram& lp);
std::optional<RVec> find_feasible(const LinearProgram& lp);

// Sign pattern of a vector: -1, 0, +1 per coordinate.
using SignPattern = std::vector<int>;

// Is there x in span(basis) with sign(x) == pattern? Returns such an x.
std::optional<RVec> realize_sign_pattern(const std::vector<RVec>& basis_perp, const SignPattern& pattern);

// All nonzero sign patterns realizable by vectors of the subspace whose
// orthogonal complement is spanned by basis_perp, in base-3 enumeration order
// (coordinate 0 least significant; digit 0 -> 0, 1 -> +, 2 -> -).
std::vector<SignPattern> realizable_sign_patterns(const std::vector<RVec>& basis_perp, size_t dim);

SignPattern pattern_from_index(unsigned long index, size_t dim);

}  // namespace rncdr
