#include "rncdr/acr.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "rncdr/error.hpp"
#include "rncdr/parallel.hpp"
#include "rncdr/sim.hpp"

namespace rncdr {

const char* to_string(ClassKind k) {
  switch (k) {
    case ClassKind::Positive: return "positive";
    case ClassKind::Negative: return "negative";
    case ClassKind::PNull: return "P-null";
    case ClassKind::QNull: return "Q-null";
    case ClassKind::Undefined: return "undefined";
  }
  return "?";
}

SystemClass classify(const Rational& p1, const Rational& p2, const Rational& q1, const Rational& q2) {
  SystemClass out;
  Rational dp = p2 - p1, dq = q2 - q1;
  if (sgn(dq) != 0) out.r = Rational(dp / dq);
  if (sgn(dp) != 0) out.q = Rational(dq / dp);
  if (sgn(dp) == 0 && sgn(dq) == 0)
    out.kind = ClassKind::Undefined;
  else if (sgn(dp) == 0)
    out.kind = ClassKind::PNull;
  else if (sgn(dq) == 0)
    out.kind = ClassKind::QNull;
  else
    out.kind = sgn(*out.r) > 0 ? ClassKind::Positive : ClassKind::Negative;
  return out;
}

AnderiesOrders anderies_orders(const KineticSystem& sys) {
  auto r1 = sys.net.reaction_index("R1"), r2 = sys.net.reaction_index("R2");
  auto a1 = sys.net.species_index("A1"), a2 = sys.net.species_index("A2");
  if (!r1 || !r2 || !a1 || !a2) fail(ErrorKind::InvalidInput, "system lacks reactions R1, R2 or species A1, A2");
  auto get = [&](size_t j, size_t s) {
    auto v = resolve(sys, sys.kin.orders[j][s]);
    if (!v) fail(ErrorKind::NonNumeric, "kinetic order " + sys.kin.orders[j][s].symbol + " has no value");
    return *v;
  };
  return {get(*r1, *a1), get(*r2, *a1), get(*r1, *a2), get(*r2, *a2)};
}

SystemClass classify(const KineticSystem& sys) {
  auto o = anderies_orders(sys);
  return classify(o.p1, o.p2, o.q1, o.q2);
}

SubspaceBasis kinetic_flux_subspace(const KineticSystem& sys) {
  if (network_numbers(sys.net).n_r != sys.net.n())
    fail(ErrorKind::NotCycleTerminal, "kinetic flux subspace needs every complex to be a reactant complex");
  auto cols = numeric_t_columns(sys);
  std::vector<RVec> diffs;
  for (const auto& rx : sys.net.reactions()) {
    RVec d(sys.net.m());
    for (size_t s = 0; s < d.size(); ++s) d[s] = cols[rx.product][s] - cols[rx.reactant][s];
    diffs.push_back(std::move(d));
  }
  return {sys.net.m(), independent_subset(diffs, sys.net.m())};
}

HyperplaneAcr acr_hyperplane(const KineticSystem& sys) {
  auto flux = kinetic_flux_subspace(sys);
  HyperplaneAcr out;
  out.flux_perp = orthogonal_complement(flux.vectors, flux.ambient);
  for (size_t s = 0; s < sys.net.m(); ++s) {
    bool zero = std::all_of(out.flux_perp.begin(), out.flux_perp.end(), [&](const RVec& v) { return sgn(v[s]) == 0; });
    if (zero) out.species.push_back(s);
  }
  return out;
}

SamplingAcr acr_sampling(const KineticSystem& sys, const SamplingOptions& opt) {
  const size_t m = sys.net.m();
  std::vector<std::optional<std::vector<double>>> found(opt.trials);
  parallel_for(opt.trials, [&](size_t trial) {
    std::mt19937_64 rng(opt.seed * 0x9E3779B97F4A7C15ULL + trial);
    std::uniform_real_distribution<double> u(std::log(opt.low), std::log(opt.high));
    for (size_t attempt = 0; attempt <= opt.retries; ++attempt) {
      std::vector<double> x0(m);
      for (auto& v : x0) v = std::exp(u(rng));
      try {
        auto x = find_steady_state(sys, x0);
        if (steady_state_residual(sys, x) < 1e-9) {
          found[trial] = std::move(x);
          return;
        }
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotConverged && e.kind() != ErrorKind::StepSizeUnderflow) throw;
      }
    }
  });

  SamplingAcr out;
  out.seed = opt.seed;
  for (auto& f : found) {
    if (f)
      out.equilibria.push_back(std::move(*f));
    else
      ++out.failures;
  }
  if (out.equilibria.empty()) fail(ErrorKind::NoEquilibriumFound, "no equilibrium found in any trial");
  out.spread.assign(m, 0.0);
  for (size_t s = 0; s < m; ++s) {
    double lo = out.equilibria.front()[s], hi = lo;
    for (const auto& x : out.equilibria) {
      lo = std::min(lo, x[s]);
      hi = std::max(hi, x[s]);
    }
    out.spread[s] = (hi - lo) / hi;
    if (out.equilibria.size() >= 2 && out.spread[s] < opt.tolerance) out.species.push_back(s);
  }
  return out;
}

}  // namespace rncdr
