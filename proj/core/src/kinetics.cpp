#include "rncdr/kinetics.hpp"

#include <cmath>

#include "rncdr/error.hpp"

namespace rncdr {

const char* to_string(Assumption a) {
  switch (a) {
    case Assumption::Negative: return "<0";
    case Assumption::Zero: return "=0";
    case Assumption::Positive: return ">0";
    case Assumption::NonNegative: return ">=0";
    case Assumption::GreaterThanOne: return ">1";
  }
  return "?";
}

Assumption parse_assumption(const std::string& text) {
  if (text == "<0") return Assumption::Negative;
  if (text == "=0") return Assumption::Zero;
  if (text == ">0") return Assumption::Positive;
  if (text == ">=0") return Assumption::NonNegative;
  if (text == ">1") return Assumption::GreaterThanOne;
  fail(ErrorKind::InvalidInput, "unknown sign assumption '" + text + "'");
}

std::string RateConstant::str() const {
  std::string out;
  if (coefficient != 1 || symbols.empty()) out = rncdr::to_string(coefficient);
  for (const auto& s : symbols) out += (out.empty() ? "" : "*") + s;
  return out;
}

PowerLawKinetics mass_action(const ReactionNetwork& net) {
  PowerLawKinetics kin;
  for (const auto& rx : net.reactions()) {
    std::vector<KineticOrder> row;
    for (const auto& c : net.complexes()[rx.reactant]) row.push_back(KineticOrder::number(c));
    kin.orders.push_back(std::move(row));
    kin.rates.push_back(RateConstant::named("k_" + rx.label));
  }
  return kin;
}

void validate(const KineticSystem& sys) {
  const auto& net = sys.net;
  if (sys.kin.orders.size() != net.r() || sys.kin.rates.size() != net.r())
    fail(ErrorKind::InvalidInput, "kinetics does not match the reaction count");
  for (size_t j = 0; j < net.r(); ++j) {
    if (sys.kin.orders[j].size() != net.m()) fail(ErrorKind::InvalidInput, "kinetic order row width mismatch");
    const RVec& y = net.complexes()[net.reactions()[j].reactant];
    for (size_t s = 0; s < net.m(); ++s) {
      const auto& o = sys.kin.orders[j][s];
      if (sgn(y[s]) == 0 && !o.is_zero())
        fail(ErrorKind::InvalidInput, "reaction '" + net.reactions()[j].label + "' has a kinetic order for " +
                                          net.species()[s] + " outside its reactant complex");
    }
    if (sgn(sys.kin.rates[j].coefficient) <= 0)
      fail(ErrorKind::InvalidInput, "non-positive rate constant in '" + net.reactions()[j].label + "'");
  }
  for (const auto& [sym, v] : sys.kin.values) {
    auto it = sys.kin.assumptions.find(sym);
    if (it == sys.kin.assumptions.end()) continue;
    int sg = sgn(v);
    bool ok = true;
    switch (it->second) {
      case Assumption::Negative: ok = sg < 0; break;
      case Assumption::Zero: ok = sg == 0; break;
      case Assumption::Positive: ok = sg > 0; break;
      case Assumption::NonNegative: ok = sg >= 0; break;
      case Assumption::GreaterThanOne: ok = v > 1; break;
    }
    if (!ok) fail(ErrorKind::InvalidInput, "value of " + sym + " contradicts its assumption");
  }
}

std::optional<Rational> resolve(const KineticSystem& sys, const KineticOrder& o) {
  if (o.value) return o.value;
  if (auto it = sys.kin.values.find(o.symbol); it != sys.kin.values.end()) return it->second;
  if (auto it = sys.kin.assumptions.find(o.symbol); it != sys.kin.assumptions.end() && it->second == Assumption::Zero)
    return Rational(0);
  return std::nullopt;
}

KineticSystem bind(KineticSystem sys, const std::map<std::string, Rational>& values) {
  for (const auto& [k, v] : values) sys.kin.values[k] = v;
  return sys;
}

RMatrix numeric_orders(const KineticSystem& sys) {
  RMatrix f(sys.net.r(), sys.net.m());
  for (size_t j = 0; j < sys.net.r(); ++j)
    for (size_t s = 0; s < sys.net.m(); ++s) {
      auto v = resolve(sys, sys.kin.orders[j][s]);
      if (!v) fail(ErrorKind::NonNumeric, "kinetic order " + sys.kin.orders[j][s].symbol + " has no value");
      f(j, s) = *v;
    }
  return f;
}

std::vector<double> numeric_rate_constants(const KineticSystem& sys) {
  std::vector<double> k;
  for (const auto& rc : sys.kin.rates) {
    Rational v = rc.coefficient;
    for (const auto& s : rc.symbols) {
      auto it = sys.kin.values.find(s);
      if (it == sys.kin.values.end()) fail(ErrorKind::NonNumeric, "rate constant " + s + " has no value");
      v *= it->second;
    }
    if (sgn(v) <= 0) fail(ErrorKind::InvalidInput, "rate constant " + rc.str() + " is not positive");
    k.push_back(v.get_d());
  }
  return k;
}

TMatrix t_matrix(const KineticSystem& sys) {
  const auto& net = sys.net;
  TMatrix t;
  t.columns = net.reactant_complexes();
  t.data.assign(net.m(), {});
  for (size_t c : t.columns) {
    const std::vector<KineticOrder>* row = nullptr;
    for (size_t j = 0; j < net.r(); ++j) {
      if (net.reactions()[j].reactant != c) continue;
      if (row && *row != sys.kin.orders[j])
        fail(ErrorKind::NotRDK, "branching reactions from " + net.complex_label(c) + " have different kinetic orders");
      row = &sys.kin.orders[j];
    }
    for (size_t s = 0; s < net.m(); ++s) t.data[s].push_back((*row)[s]);
  }
  return t;
}

bool is_pl_rdk(const KineticSystem& sys) {
  try {
    t_matrix(sys);
    return true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotRDK) return false;
    throw;
  }
}

std::vector<RVec> numeric_t_columns(const KineticSystem& sys) {
  auto t = t_matrix(sys);
  std::vector<RVec> cols(sys.net.n());
  for (size_t k = 0; k < t.columns.size(); ++k) {
    RVec col(sys.net.m());
    for (size_t s = 0; s < sys.net.m(); ++s) {
      auto v = resolve(sys, t.data[s][k]);
      if (!v) fail(ErrorKind::NonNumeric, "kinetic order " + t.data[s][k].symbol + " has no value");
      col[s] = *v;
    }
    cols[t.columns[k]] = std::move(col);
  }
  return cols;
}

std::vector<double> rate_vector(const KineticSystem& sys, const std::vector<double>& x) {
  RMatrix f = numeric_orders(sys);
  auto k = numeric_rate_constants(sys);
  if (x.size() != sys.net.m()) fail(ErrorKind::InvalidInput, "state dimension mismatch");
  std::vector<double> out(sys.net.r());
  for (size_t j = 0; j < sys.net.r(); ++j) {
    double v = k[j];
    for (size_t s = 0; s < sys.net.m(); ++s)
      if (sgn(f(j, s)) != 0) v *= std::pow(x[s], f(j, s).get_d());
    out[j] = v;
  }
  return out;
}

std::vector<double> species_formation_rate(const KineticSystem& sys, const std::vector<double>& x) {
  auto rates = rate_vector(sys, x);
  std::vector<double> dx(sys.net.m(), 0.0);
  const auto& net = sys.net;
  for (size_t j = 0; j < net.r(); ++j) {
    const auto& a = net.complexes()[net.reactions()[j].reactant];
    const auto& b = net.complexes()[net.reactions()[j].product];
    for (size_t s = 0; s < net.m(); ++s) {
      Rational d = b[s] - a[s];
      if (sgn(d) != 0) dx[s] += d.get_d() * rates[j];
    }
  }
  return dx;
}

Rational emission_coefficient(const EmissionParams& p) { return (1 - p.lambda) + p.mu * p.lambda; }

EmissionOrders emission_power_law(const EmissionParams& p) {
  if (p.lambda < 0 || p.lambda > 1 || p.mu < 0 || p.mu > 1)
    fail(ErrorKind::InvalidInput, "lambda and mu must lie in [0,1]");
  if (sgn(p.a4_0) <= 0 || sgn(p.ai_0) <= 0) fail(ErrorKind::InvalidInput, "operating point must be positive");
  Rational c = emission_coefficient(p);
  Rational denom = p.a4_0 - c * p.ai_0;
  if (sgn(denom) <= 0)
    fail(ErrorKind::DegenerateOperatingPoint, "emission rate is not positive at the operating point");
  Rational e = p.a4_0 / denom;
  Rational f = -(c * p.ai_0) / denom;
  return {e, f};
}

double emission_rate(double k5, const EmissionParams& p, double a4, double ai) {
  return k5 * (a4 - emission_coefficient(p).get_d() * ai);
}

PowerLawFit power_law_approx_2var(const std::function<double(double, double)>& v, double x1, double x2,
                                  double rel_step) {
  auto logv = [&](double a, double b) {
    double y = v(a, b);
    if (!(y > 0)) fail(ErrorKind::NonPositiveV, "rate function is not positive near the operating point");
    return std::log(y);
  };
  if (!(x1 > 0) || !(x2 > 0)) fail(ErrorKind::InvalidInput, "operating point must be positive");
  double v0 = v(x1, x2);
  if (!(v0 > 0)) fail(ErrorKind::NonPositiveV, "rate function is not positive at the operating point");
  double h = rel_step;
  PowerLawFit fit;
  fit.p = (logv(x1 * std::exp(h), x2) - logv(x1 * std::exp(-h), x2)) / (2 * h);
  fit.q = (logv(x1, x2 * std::exp(h)) - logv(x1, x2 * std::exp(-h))) / (2 * h);
  fit.alpha = v0 / (std::pow(x1, fit.p) * std::pow(x2, fit.q));
  return fit;
}

}  // namespace rncdr
