#include "rncdr/transforms.hpp"

#include <cmath>
#include <set>

#include "rncdr/acr.hpp"
#include "rncdr/doa.hpp"
#include "rncdr/error.hpp"
#include "rncdr/lp.hpp"
#include "rncdr/models.hpp"
#include "rncdr/sim.hpp"

namespace rncdr {

namespace {

struct Row {
  ReactionSpec spec;
  std::vector<KineticOrder> orders;
  RateConstant rate;
};

size_t find_row(const std::vector<Row>& rows, const std::string& label) {
  for (size_t j = 0; j < rows.size(); ++j)
    if (rows[j].spec.label == label) return j;
  fail(ErrorKind::InvalidStep, "no reaction labelled '" + label + "'");
}

RVec unit_sum(const ReactionNetwork& net, const std::vector<std::string>& names) {
  RVec v(net.m());
  for (const auto& s : names) v[*net.species_index(s)] += 1;
  return v;
}

}  // namespace

KineticSystem apply_transform(const KineticSystem& sys, const std::vector<TransformStep>& steps) {
  std::vector<Row> rows;
  auto specs = sys.net.specs();
  for (size_t j = 0; j < specs.size(); ++j) rows.push_back({specs[j], sys.kin.orders[j], sys.kin.rates[j]});

  for (const auto& step : steps) {
    size_t j = find_row(rows, step.reaction);
    if (step.kind == TransformStep::Kind::Shift) {
      if (step.shift.size() != sys.net.m()) fail(ErrorKind::InvalidStep, "shift complex has the wrong width");
      for (size_t s = 0; s < step.shift.size(); ++s) {
        if (sgn(step.shift[s]) < 0) fail(ErrorKind::InvalidStep, "shift complex has a negative coefficient");
        rows[j].spec.reactant[s] += step.shift[s];
        rows[j].spec.product[s] += step.shift[s];
      }
    } else {
      if (step.weights.size() < 2) fail(ErrorKind::InvalidStep, "split needs at least two weights");
      Rational total = 0;
      for (const auto& w : step.weights) {
        if (sgn(w) <= 0) fail(ErrorKind::InvalidStep, "split weights must be positive");
        total += w;
      }
      if (total != 1) fail(ErrorKind::InvalidStep, "split weights must sum to 1");
      if (step.weights.size() > 26) fail(ErrorKind::InvalidStep, "too many split copies");
      Row base = rows[j];
      std::vector<Row> copies;
      for (size_t c = 0; c < step.weights.size(); ++c) {
        Row r = base;
        r.spec.label += static_cast<char>('a' + c);
        r.rate.coefficient *= step.weights[c];
        copies.push_back(std::move(r));
      }
      rows.erase(rows.begin() + static_cast<long>(j));
      rows.insert(rows.begin() + static_cast<long>(j), copies.begin(), copies.end());
    }
  }

  KineticSystem out;
  std::vector<ReactionSpec> new_specs;
  for (const auto& r : rows) new_specs.push_back(r.spec);
  try {
    out.net = ReactionNetwork::build(sys.net.species(), new_specs);
  } catch (const Error& e) {
    fail(ErrorKind::InvalidStep, e.what());
  }
  for (auto& r : rows) {
    out.kin.orders.push_back(std::move(r.orders));
    out.kin.rates.push_back(std::move(r.rate));
  }
  out.kin.assumptions = sys.kin.assumptions;
  out.kin.values = sys.kin.values;
  return out;
}

bool is_beccs(const KineticSystem& sys) {
  auto ref = build_model("beccs").net;
  if (sys.net.species() != ref.species() || sys.net.r() != ref.r()) return false;
  auto a = sys.net.specs(), b = ref.specs();
  for (size_t j = 0; j < a.size(); ++j)
    if (a[j].label != b[j].label || a[j].reactant != b[j].reactant || a[j].product != b[j].product) return false;
  return true;
}

std::vector<TransformStep> beccs_wr_steps() {
  auto ref = build_model("beccs").net;
  RVec a1a2 = unit_sum(ref, {"A1", "A2"}), a4 = unit_sum(ref, {"A4"});
  return {
      TransformStep::shift_by("R8_6", a1a2),
      TransformStep::shift_by("R8_7", a1a2),
      TransformStep::shift_by("R5", a1a2),
      TransformStep::split("R1", {Rational(1, 2), Rational(1, 2)}),
      TransformStep::shift_by("R1b", a4),
      TransformStep::shift_by("R2", a4),
  };
}

KineticSystem beccs_wr_transform(const KineticSystem& sys) {
  if (!is_beccs(sys)) fail(ErrorKind::NotBECCS, "system is not the BECCS network");
  return apply_transform(sys, beccs_wr_steps());
}

long kinetic_deficiency(const KineticSystem& sys) {
  auto nn = network_numbers(sys.net);
  auto flux = kinetic_flux_subspace(sys);
  return static_cast<long>(nn.n) - static_cast<long>(nn.l) - static_cast<long>(flux.dim());
}

BalancedNegative balanced_negative_check(const KineticSystem& sys) {
  auto o = anderies_orders(sys);
  if (o.q2 == o.q1) fail(ErrorKind::QDifferenceZero, "q2 - q1 = 0, R is undefined");
  BalancedNegative out;
  out.balanced_negative = Rational((o.p2 - o.p1) / (o.q2 - o.q1)) == -1;
  size_t m = sys.net.m();
  auto s = stoichiometric_subspace(sys.net);
  auto flux = kinetic_flux_subspace(sys);
  out.s_equals_flux = same_span(s.vectors, flux.vectors, m);
  auto wr = beccs_wr_transform(sys);
  auto s2 = stoichiometric_subspace(wr.net);
  auto flux2 = kinetic_flux_subspace(wr);
  out.all_four_equal = out.s_equals_flux && same_span(s.vectors, s2.vectors, m) &&
                       same_span(s.vectors, flux2.vectors, m);
  return out;
}

VcbResult vcb_analysis(const KineticSystem& sys, const std::vector<double>& alphas) {
  auto wr = beccs_wr_transform(sys);
  const size_t r = wr.net.r(), n = wr.net.n();
  LinearProgram lp(r);
  for (size_t j = 0; j < r; ++j) lp.at_least(j, 1);
  for (size_t c = 0; c < n; ++c) {
    RVec row(r);
    for (size_t j = 0; j < r; ++j) {
      if (wr.net.reactions()[j].product == c) row[j] += 1;
      if (wr.net.reactions()[j].reactant == c) row[j] -= 1;
    }
    lp.add(std::move(row), Rel::Eq, 0);
  }
  // Split copies carry equal shares of the original constant.
  auto a = wr.net.reaction_index("R1a"), b = wr.net.reaction_index("R1b");
  RVec tie(r);
  tie[*a] = 1;
  tie[*b] = -1;
  lp.add(std::move(tie), Rel::Eq, 0);
  lp.minimize = RVec(r, Rational(1));
  auto res = solve(lp);
  if (res.status != LpStatus::Optimal) fail(ErrorKind::NotFound, "no complex balancing rate constants at x = 1");

  VcbResult out;
  out.transformed_constants = res.x;
  out.rate_constants.assign(sys.net.r(), Rational(0));
  for (size_t j = 0; j < r; ++j) {
    std::string label = wr.net.reactions()[j].label;
    if (label == "R1a" || label == "R1b") label = "R1";
    out.rate_constants[*sys.net.reaction_index(label)] += res.x[j];
  }
  std::vector<double> k;
  for (const auto& v : out.rate_constants) k.push_back(v.get_d());
  KineticSystem numeric = with_rate_constants(sys, k);

  auto laws = left_kernel(sys.net.stoichiometric_matrix());
  out.alphas = alphas;
  out.family_verified = true;
  for (double alpha : alphas) {
    std::vector<double> x(sys.net.m(), std::exp(alpha));
    double res_a = steady_state_residual(numeric, x);
    out.residuals.push_back(res_a);
    if (!(res_a < 1e-10)) out.family_verified = false;
    std::vector<double> tot;
    for (const auto& w : laws) {
      double t = 0;
      for (size_t i = 0; i < w.size(); ++i) t += w[i].get_d() * x[i];
      tot.push_back(t);
    }
    out.totals.push_back(std::move(tot));
  }
  out.distinct_classes = true;
  for (size_t i = 0; i < out.totals.size(); ++i)
    for (size_t j = i + 1; j < out.totals.size(); ++j)
      if (out.totals[i] == out.totals[j]) out.distinct_classes = false;
  return out;
}

ReductionCheck reduction_feasibility(const RVec& x0) {
  if (x0.size() != 5) fail(ErrorKind::InvalidInput, "initial composition needs five entries (A1, A2, A3, A4, A8)");
  for (const auto& v : x0)
    if (sgn(v) <= 0) fail(ErrorKind::InvalidInput, "initial composition must be positive");
  Rational others = x0[0] + x0[2] + x0[3] + x0[4];
  ReductionCheck out;
  out.implied_xi = (others / x0[1] + 1) / 5;
  out.feasible = out.implied_xi > Rational(1, 5);
  return out;
}

bool reduction_target_feasible(const Rational& xi) { return xi > Rational(1, 5) && xi < 1; }

}  // namespace rncdr
