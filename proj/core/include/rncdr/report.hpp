#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rncdr/decomposition.hpp"
#include "rncdr/dsl.hpp"
#include "rncdr/network.hpp"

namespace rncdr {

struct AnalysisReport {
  std::string name;
  std::vector<std::string> species;
  NetworkNumbers numbers;
  StructuralFlags flags;
  std::optional<ConcordanceResult> concordance;  // nullopt when the network is too large
  Verdict conservative;
  Verdict positively_dependent;
  bool independent_linkage_classes = false;
  Regularity regular;
  Decomposition fid;
  std::vector<std::string> notes;
};

AnalysisReport analyze(const NetworkDocument& doc);
// Discrepancy annotations for built-in models, keyed by document name.
std::vector<std::string> fixture_notes(const std::string& name, const NetworkNumbers& numbers);

std::string render_text(const AnalysisReport& report);
std::string render_json(const AnalysisReport& report);
std::string render_fid(const ReactionNetwork& net, const Decomposition& d);

}  // namespace rncdr
