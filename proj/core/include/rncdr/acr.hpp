#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rncdr/kinetics.hpp"
#include "rncdr/network.hpp"

namespace rncdr {

enum class ClassKind { Positive, Negative, PNull, QNull, Undefined };

const char* to_string(ClassKind k);

struct SystemClass {
  ClassKind kind = ClassKind::Undefined;
  std::optional<Rational> r;  // (p2-p1)/(q2-q1)
  std::optional<Rational> q;  // (q2-q1)/(p2-p1)
};

SystemClass classify(const Rational& p1, const Rational& p2, const Rational& q1, const Rational& q2);

// Orders of A1 and A2 in reactions R1 and R2.
struct AnderiesOrders {
  Rational p1, p2, q1, q2;
};
AnderiesOrders anderies_orders(const KineticSystem& sys);
SystemClass classify(const KineticSystem& sys);

// Span of T(product) - T(reactant); needs every complex to be a reactant.
SubspaceBasis kinetic_flux_subspace(const KineticSystem& sys);

struct HyperplaneAcr {
  std::vector<size_t> species;
  std::vector<RVec> flux_perp;  // basis of the orthogonal complement of the kinetic flux subspace
  bool assumes_plp = true;
};

HyperplaneAcr acr_hyperplane(const KineticSystem& sys);

struct SamplingOptions {
  size_t trials = 32;
  double tolerance = 1e-6;
  std::uint64_t seed = 1;
  double low = 0.1, high = 10.0;
  size_t retries = 4;
};

struct SamplingAcr {
  std::vector<size_t> species;                  // flagged species
  std::vector<double> spread;                   // relative spread per species
  std::vector<std::vector<double>> equilibria;  // ordered by trial
  std::uint64_t seed = 0;
  size_t failures = 0;
};

SamplingAcr acr_sampling(const KineticSystem& sys, const SamplingOptions& opt = {});

}  // namespace rncdr
