#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rncdr/kinetics.hpp"

namespace rncdr {

using ModelParams = std::map<std::string, Rational>;

// anderies_raw, anderies, beccs, ar, dac
const std::vector<std::string>& model_names();
KineticSystem build_model(const std::string& name, const ModelParams& params = {});
std::string model_card(const std::string& name);

struct CdrMethodInfo {
  std::string code;     // BECCS, DAC, ...
  std::string storage;  // A8 ... A17
  Rational lambda, mu;
  std::string physical_storage;
};

const std::vector<CdrMethodInfo>& cdr_table();
const CdrMethodInfo& cdr_method(const std::string& code);

struct CDRSpec {
  std::string method;
  std::string storage;
  Rational lambda, mu;
  std::string capture_source = "A1";
  std::string capture_rate;  // rate constant symbol of source -> storage
  std::string storage_rate;  // rate constant symbol of storage -> A4
};

// Spec with the tabulated storage species, lambda and mu.
CDRSpec cdr_spec(const std::string& method);

struct OperatingPoint {
  Rational a4_0, ai_0;
};

// Anderies subnetwork, emission R5, capture and storage for a single method.
KineticSystem rncdr_build(const std::vector<CDRSpec>& portfolio, const ModelParams& params = {},
                          const std::optional<OperatingPoint>& op = std::nullopt);

}  // namespace rncdr
