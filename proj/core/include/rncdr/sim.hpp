#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rncdr/kinetics.hpp"

namespace rncdr {

struct IntegrateOptions {
  double rtol = 1e-8;
  double atol = 1e-12;
  double initial_step = 1e-3;
  double min_step = 1e-14;
  size_t max_steps = 2000000;
  bool record = true;  // keep every accepted step
};

struct Trajectory {
  std::vector<double> t;
  std::vector<std::vector<double>> x;
  std::vector<RVec> conservation_laws;          // left-kernel basis of N
  std::vector<std::vector<double>> totals;      // law . x per recorded step
  size_t accepted = 0, rejected = 0;
};

// Dormand-Prince 5(4) with step rejection on loss of positivity.
Trajectory integrate(const KineticSystem& sys, const std::vector<double>& x0, double t_end,
                     const IntegrateOptions& opt = {});

// max over species of |(N K(x))_i| / (|N| K(x))_i, i.e. net over gross turnover.
double steady_state_residual(const KineticSystem& sys, const std::vector<double>& x);

struct SteadyStateOptions {
  double tolerance = 1e-10;
  size_t newton_iterations = 60;
  size_t integration_rounds = 6;  // horizons 10, 100, ...
};

// Steady state in the stoichiometric class of x0.
std::vector<double> find_steady_state(const KineticSystem& sys, const std::vector<double>& x0,
                                      const SteadyStateOptions& opt = {});

bool confirm_multistationarity(const KineticSystem& sys, const std::vector<double>& x1, const std::vector<double>& x2);

// CSV with columns t, species..., total_1...
std::string trajectory_csv(const KineticSystem& sys, const Trajectory& tr);

}  // namespace rncdr
