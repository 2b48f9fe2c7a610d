#pragma once

#include <vector>

#include "rncdr/kinetics.hpp"
#include "rncdr/network.hpp"

namespace rncdr {

struct Decomposition {
  std::vector<std::vector<size_t>> blocks;  // reaction indices, ascending
  std::vector<SubspaceBasis> subspaces;
  bool independent = false;
};

Decomposition finest_independent_decomposition(const ReactionNetwork& net);
bool is_independent(const ReactionNetwork& net, const std::vector<std::vector<size_t>>& partition);
Decomposition make_decomposition(const ReactionNetwork& net, std::vector<std::vector<size_t>> partition);

// Per-block max-norm of N_i K_i(x), relative to max(1, largest rate in the block).
std::vector<double> verify_equilibria_intersection(const KineticSystem& sys,
                                                   const std::vector<std::vector<size_t>>& partition,
                                                   const std::vector<double>& x);

}  // namespace rncdr
