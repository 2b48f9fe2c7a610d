#include "rncdr/models.hpp"

#include <algorithm>

#include "rncdr/error.hpp"

namespace rncdr {

namespace {

struct Builder {
  std::vector<std::string> species;
  std::vector<ReactionSpec> specs;
  std::vector<std::map<std::string, KineticOrder>> orders;
  std::vector<RateConstant> rates;
  std::map<std::string, Assumption> assumptions;

  RVec complex(const std::map<std::string, Rational>& terms) const {
    RVec v(species.size());
    for (const auto& [s, c] : terms) {
      auto it = std::find(species.begin(), species.end(), s);
      v[static_cast<size_t>(it - species.begin())] = c;
    }
    return v;
  }

  void add(std::string label, const std::map<std::string, Rational>& reactant,
           const std::map<std::string, Rational>& product, RateConstant rate,
           std::map<std::string, KineticOrder> kin) {
    specs.push_back({std::move(label), complex(reactant), complex(product)});
    rates.push_back(std::move(rate));
    orders.push_back(std::move(kin));
  }

  void mass_action(std::string label, const std::string& from, const std::string& to, RateConstant rate) {
    add(std::move(label), {{from, 1}}, {{to, 1}}, std::move(rate), {{from, KineticOrder::number(1)}});
  }

  KineticSystem finish(const ModelParams& params) const {
    KineticSystem sys;
    sys.net = ReactionNetwork::build(species, specs);
    for (size_t j = 0; j < specs.size(); ++j) {
      std::vector<KineticOrder> row(species.size(), KineticOrder::number(0));
      for (const auto& [s, o] : orders[j]) {
        auto it = std::find(species.begin(), species.end(), s);
        row[static_cast<size_t>(it - species.begin())] = o;
      }
      sys.kin.orders.push_back(std::move(row));
    }
    sys.kin.rates = rates;
    sys.kin.assumptions = assumptions;
    sys = rncdr::bind(std::move(sys), params);
    validate(sys);
    return sys;
  }
};

RateConstant k(const std::string& s) { return RateConstant::named(s); }

// R1 and R2 of the Anderies subnetwork plus the ocean exchange.
void anderies_core(Builder& b, bool translated) {
  b.add("R1", {{"A1", 1}, {"A2", 2}}, {{"A1", 2}, {"A2", 1}}, k("k1"),
        {{"A1", KineticOrder::named("p1")}, {"A2", KineticOrder::named("q1")}});
  if (translated)
    b.add("R2", {{"A1", 2}, {"A2", 1}}, {{"A1", 1}, {"A2", 2}}, k("k2"),
          {{"A1", KineticOrder::named("p2")}, {"A2", KineticOrder::named("q2")}});
  else
    b.add("R2", {{"A1", 1}, {"A2", 1}}, {{"A2", 2}}, k("k2"),
          {{"A1", KineticOrder::named("p2")}, {"A2", KineticOrder::named("q2")}});
  b.mass_action("R3", "A2", "A3", k("a_m"));
  b.mass_action("R4", "A3", "A2", RateConstant{1, {"a_m", "beta"}});
}

std::string storage_index(const std::string& species) { return species.substr(1); }

}  // namespace

const std::vector<std::string>& model_names() {
  static const std::vector<std::string> names{"anderies_raw", "anderies", "beccs", "ar", "dac"};
  return names;
}

const std::vector<CdrMethodInfo>& cdr_table() {
  static const std::vector<CdrMethodInfo> table{
      {"BECCS", "A8", 1, 0, "CO2 injected into the geological stock"},
      {"DAC", "A9", 1, 0, "CO2 injected onto the geological stock"},
      {"EW", "A10", 1, 1, "Rock spread primarily on beaches (other fields)"},
      {"Biochar", "A11", 1, Rational(1, 2), "Biocharcoal in soil (0.5), biofuel in geostock (0.5)"},
      {"OF", "A12", 1, 0, "Deep ocean"},
      {"SCS", "A13", Rational(1, 100), 0, "Soil (microbial enhancement)"},
      {"WR", "A14", Rational(1, 100), Rational(9, 10), "Wetland floor"},
      {"AR", "A15", Rational(1, 2), 0, "Sequence of trees and soil"},
      {"OA", "A16", 1, 1, "Deep ocean"},
      {"DOC", "A17", 1, 0, "CO2 injected into the geological stock"},
  };
  return table;
}

const CdrMethodInfo& cdr_method(const std::string& code) {
  for (const auto& row : cdr_table())
    if (row.code == code) return row;
  fail(ErrorKind::UnknownModel, "unknown CDR method '" + code + "'");
}

CDRSpec cdr_spec(const std::string& method) {
  const auto& row = cdr_method(method);
  CDRSpec spec;
  spec.method = row.code;
  spec.storage = row.storage;
  spec.lambda = row.lambda;
  spec.mu = row.mu;
  std::string i = storage_index(row.storage);
  if (row.code == "BECCS") {
    spec.capture_rate = "k6";
    spec.storage_rate = "k7";
  } else if (row.code == "DAC") {
    spec.capture_source = "A2";
    spec.capture_rate = "k4";
    spec.storage_rate = "k6";
  } else {
    spec.capture_rate = "k" + i + "_6";
    spec.storage_rate = "k" + i + "_7";
  }
  return spec;
}

KineticSystem rncdr_build(const std::vector<CDRSpec>& portfolio, const ModelParams& params,
                          const std::optional<OperatingPoint>& op) {
  if (portfolio.size() != 1)
    fail(ErrorKind::UnsupportedPortfolioSize, "only single-method portfolios are supported");
  const CDRSpec& spec = portfolio.front();
  if (spec.lambda < 0 || spec.lambda > 1 || spec.mu < 0 || spec.mu > 1)
    fail(ErrorKind::InvalidInput, "lambda and mu must lie in [0,1]");
  const std::string& ai = spec.storage;
  const std::string i = storage_index(ai);
  Builder b;
  b.species = {"A1", "A2", "A3", "A4", ai};
  if (std::find(b.species.begin(), b.species.end() - 1, ai) != b.species.end() - 1)
    fail(ErrorKind::InvalidInput, "storage species clashes with a common pool");
  if (std::find(b.species.begin(), b.species.end(), spec.capture_source) == b.species.end())
    fail(ErrorKind::InvalidInput, "unknown capture source " + spec.capture_source);
  anderies_core(b, true);

  Rational c = emission_coefficient({spec.lambda, spec.mu, 1, 1});
  KineticOrder e = KineticOrder::number(1), f = KineticOrder::number(0);
  if (op) {
    auto ef = emission_power_law({spec.lambda, spec.mu, op->a4_0, op->ai_0});
    e = KineticOrder::number(ef.e);
    f = KineticOrder::number(ef.f);
  } else if (sgn(c) != 0) {
    e = KineticOrder::named("e" + i);
    f = KineticOrder::named("f" + i);
    b.assumptions[e.symbol] = Assumption::GreaterThanOne;
    b.assumptions[f.symbol] = Assumption::Negative;
  }
  if (f.is_zero())
    b.add("R5", {{"A4", 1}}, {{"A2", 1}}, k("k5"), {{"A4", e}});
  else
    b.add("R5", {{"A4", 1}, {ai, 1}}, {{"A2", 1}, {ai, 1}}, k("k5"), {{"A4", e}, {ai, f}});

  b.mass_action("R" + i + "_6", spec.capture_source, ai, k(spec.capture_rate));
  b.mass_action("R" + i + "_7", ai, "A4", k(spec.storage_rate));
  return b.finish(params);
}

KineticSystem build_model(const std::string& name, const ModelParams& params) {
  if (name == "anderies_raw" || name == "anderies") {
    Builder b;
    b.species = {"A1", "A2", "A3"};
    anderies_core(b, name == "anderies");
    return b.finish(params);
  }
  if (name == "beccs") return rncdr_build({cdr_spec("BECCS")}, params);
  if (name == "ar") return rncdr_build({cdr_spec("AR")}, params);
  if (name == "dac") return rncdr_build({cdr_spec("DAC")}, params);
  fail(ErrorKind::UnknownModel, "unknown model '" + name + "'");
}

std::string model_card(const std::string& name) {
  if (name == "anderies_raw")
    return "Anderies pre-industrial carbon cycle as first written: land A1, atmosphere A2, ocean A3.\n"
           "R2 (land to atmosphere) is A1+A2 -> 2A2; three linkage classes, deficiency 1.\n";
  if (name == "anderies")
    return "Anderies pre-industrial carbon cycle with R2 translated by A1: A1+2A2 <-> 2A1+A2, A2 <-> A3.\n"
           "Weakly reversible, deficiency 0.\n";
  if (name == "beccs")
    return "Bioenergy with carbon capture and storage: Anderies subnetwork, geological stock A4,\n"
           "emission R5: A4 -> A2 (mass action since lambda=1, mu=0), capture R8_6: A1 -> A8,\n"
           "storage R8_7: A8 -> A4.\n";
  if (name == "ar")
    return "Afforestation/reforestation: emission R5: A4+A15 -> A2+A15 with rate k5*A4^e15*A15^f15\n"
           "(e15 > 1, f15 < 0, e15+f15 = 1), capture R15_6: A1 -> A15, storage R15_7: A15 -> A4.\n";
  if (name == "dac")
    return "Direct air capture with storage pool A9: capture R9_6: A2 -> A9 (k4), storage R9_7: A9 -> A4 (k6),\n"
           "emission R5: A4 -> A2 (k5). The DAC monostationarity parametrization names the storage pool A5\n"
           "with A4 = (k4/k5) A2 and A5 = (k4/k6) A2; this model uses A9 and the rate constants that\n"
           "reproduce those relations.\n";
  fail(ErrorKind::UnknownModel, "unknown model '" + name + "'");
}

}  // namespace rncdr
