#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rncdr/matrix.hpp"
#include "rncdr/network.hpp"
#include "rncdr/rational.hpp"

namespace rncdr {

enum class Assumption { Negative, Zero, Positive, NonNegative, GreaterThanOne };

const char* to_string(Assumption a);  // "<0", "=0", ">0", ">=0", ">1"
Assumption parse_assumption(const std::string& text);

// Either an exact value or an opaque symbol.
struct KineticOrder {
  std::optional<Rational> value;
  std::string symbol;

  static KineticOrder number(Rational v) { return {std::move(v), {}}; }
  static KineticOrder named(std::string s) { return {std::nullopt, std::move(s)}; }
  bool is_symbol() const { return !value.has_value(); }
  bool is_zero() const { return value && sgn(*value) == 0; }
  std::string str() const { return value ? rncdr::to_string(*value) : symbol; }
  bool operator==(const KineticOrder&) const = default;
};

// coefficient * product of constant symbols, e.g. a_m*beta.
struct RateConstant {
  Rational coefficient = 1;
  std::vector<std::string> symbols;

  static RateConstant named(std::string s) { return {1, {std::move(s)}}; }
  std::string str() const;
  bool operator==(const RateConstant&) const = default;
};

struct PowerLawKinetics {
  std::vector<std::vector<KineticOrder>> orders;  // r x m
  std::vector<RateConstant> rates;                // per reaction
  std::map<std::string, Assumption> assumptions;
  std::map<std::string, Rational> values;         // bound symbols (constants and orders)
};

struct KineticSystem {
  ReactionNetwork net;
  PowerLawKinetics kin;
};

// Mass-action kinetics with rate constants k_<label>.
PowerLawKinetics mass_action(const ReactionNetwork& net);

// Checks dimensions and that every nonzero order lies on the reactant support.
void validate(const KineticSystem& sys);

// Value of an order after substituting bound symbols, if any.
std::optional<Rational> resolve(const KineticSystem& sys, const KineticOrder& o);
// Same system with the given symbols bound (orders and constants).
KineticSystem bind(KineticSystem sys, const std::map<std::string, Rational>& values);

// Kinetic order matrix (r x m) with every entry numeric; throws NonNumeric.
RMatrix numeric_orders(const KineticSystem& sys);
std::vector<double> numeric_rate_constants(const KineticSystem& sys);

struct TMatrix {
  std::vector<size_t> columns;                  // reactant complex indices
  std::vector<std::vector<KineticOrder>> data;  // m x n_r
};

TMatrix t_matrix(const KineticSystem& sys);
bool is_pl_rdk(const KineticSystem& sys);
// Numeric T columns (over species) keyed by complex index; throws NonNumeric.
std::vector<RVec> numeric_t_columns(const KineticSystem& sys);

std::vector<double> rate_vector(const KineticSystem& sys, const std::vector<double>& x);
std::vector<double> species_formation_rate(const KineticSystem& sys, const std::vector<double>& x);

struct EmissionParams {
  Rational lambda;
  Rational mu;
  Rational a4_0;
  Rational ai_0;
};

struct EmissionOrders {
  Rational e;
  Rational f;
};

Rational emission_coefficient(const EmissionParams& p);  // (1-lambda)+mu*lambda
EmissionOrders emission_power_law(const EmissionParams& p);
double emission_rate(double k5, const EmissionParams& p, double a4, double ai);

struct PowerLawFit {
  double alpha = 0, p = 0, q = 0;
};

PowerLawFit power_law_approx_2var(const std::function<double(double, double)>& v, double x1, double x2,
                                  double rel_step = 1e-6);

}  // namespace rncdr
