#pragma once

#include <string>
#include <vector>

#include "rncdr/error.hpp"
#include "rncdr/models.hpp"
#include "rncdr/network.hpp"

namespace fixture {

using rncdr::Rational;

inline rncdr::ReactionNetwork network(std::vector<std::string> species,
                                      const std::vector<std::pair<rncdr::RVec, rncdr::RVec>>& reactions) {
  std::vector<rncdr::ReactionSpec> specs;
  for (size_t i = 0; i < reactions.size(); ++i)
    specs.push_back({"R" + std::to_string(i + 1), reactions[i].first, reactions[i].second});
  return rncdr::ReactionNetwork::build(std::move(species), specs);
}

inline rncdr::ModelParams orders(Rational p1, Rational p2, Rational q1, Rational q2) {
  return {{"p1", p1}, {"p2", p2}, {"q1", q1}, {"q2", q2}};
}

// Every rate constant of the built-in models set to 1.
inline rncdr::ModelParams unit_constants(rncdr::ModelParams p, const std::string& model) {
  for (auto s : {"k1", "k2", "k5", "a_m", "beta"}) p[s] = 1;
  if (model == "beccs") p["k6"] = p["k7"] = 1;
  if (model == "dac") p["k4"] = p["k6"] = 1;
  if (model == "ar") {
    p["k15_6"] = p["k15_7"] = 1;
    if (!p.count("e15")) p["e15"] = 2;
    if (!p.count("f15")) p["f15"] = -1;
  }
  return p;
}

inline std::vector<std::string> names(const rncdr::ReactionNetwork& net, const std::vector<size_t>& idx) {
  std::vector<std::string> out;
  for (auto i : idx) out.push_back(net.species()[i]);
  return out;
}

}  // namespace fixture
