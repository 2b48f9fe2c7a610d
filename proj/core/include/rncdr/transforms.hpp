#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rncdr/kinetics.hpp"

namespace rncdr {

struct TransformStep {
  enum class Kind { Shift, Split };
  Kind kind = Kind::Shift;
  std::string reaction;       // label in the current network
  RVec shift;                 // added to both sides (Shift)
  std::vector<Rational> weights;  // positive, summing to 1 (Split)

  static TransformStep shift_by(std::string reaction, RVec complex) {
    return {Kind::Shift, std::move(reaction), std::move(complex), {}};
  }
  static TransformStep split(std::string reaction, std::vector<Rational> weights) {
    return {Kind::Split, std::move(reaction), {}, std::move(weights)};
  }
};

// Split copies are labelled <label>a, <label>b, ...
KineticSystem apply_transform(const KineticSystem& sys, const std::vector<TransformStep>& steps);

std::vector<TransformStep> beccs_wr_steps();
KineticSystem beccs_wr_transform(const KineticSystem& sys);
bool is_beccs(const KineticSystem& sys);

long kinetic_deficiency(const KineticSystem& sys);

struct BalancedNegative {
  bool balanced_negative = false;  // R == -1
  bool s_equals_flux = false;      // S == kinetic flux subspace
  bool all_four_equal = false;     // S, flux subspace, and both on the WR transform
};

BalancedNegative balanced_negative_check(const KineticSystem& sys);

struct VcbResult {
  RVec transformed_constants;  // complex balancing constants on the WR transform
  RVec rate_constants;         // same constants on the original reactions
  std::vector<double> alphas;
  std::vector<double> residuals;
  std::vector<std::vector<double>> totals;  // conservation totals at e^alpha * 1
  bool family_verified = false;             // every residual < 1e-10
  bool distinct_classes = false;
};

VcbResult vcb_analysis(const KineticSystem& sys, const std::vector<double>& alphas = {-1.0, 0.5, 1.0});

struct ReductionCheck {
  Rational implied_xi;
  bool feasible = false;  // implied_xi > 1/5
};

// x0 over (A1, A2, A3, A4, A8).
ReductionCheck reduction_feasibility(const RVec& x0);
bool reduction_target_feasible(const Rational& xi);

}  // namespace rncdr
