#include "rncdr/decomposition.hpp"

#include <algorithm>
#include <cmath>

#include "rncdr/error.hpp"
#include "rncdr/graph.hpp"

namespace rncdr {

namespace {

std::vector<RVec> block_vectors(const ReactionNetwork& net, const std::vector<size_t>& block) {
  std::vector<RVec> v;
  for (size_t j : block) v.push_back(net.reaction_vector(j));
  return v;
}

}  // namespace

bool is_independent(const ReactionNetwork& net, const std::vector<std::vector<size_t>>& partition) {
  std::vector<bool> seen(net.r(), false);
  size_t sum = 0;
  for (const auto& b : partition) {
    for (size_t j : b) {
      if (j >= net.r() || seen[j]) fail(ErrorKind::InvalidInput, "partition is not a partition of the reactions");
      seen[j] = true;
    }
    sum += rank(block_vectors(net, b), net.m());
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    fail(ErrorKind::InvalidInput, "partition does not cover every reaction");
  return sum == rank(net.stoichiometric_matrix());
}

Decomposition make_decomposition(const ReactionNetwork& net, std::vector<std::vector<size_t>> partition) {
  Decomposition d;
  for (auto& b : partition) std::sort(b.begin(), b.end());
  d.independent = is_independent(net, partition);
  for (const auto& b : partition)
    d.subspaces.push_back({net.m(), independent_subset(block_vectors(net, b), net.m())});
  d.blocks = std::move(partition);
  return d;
}

Decomposition finest_independent_decomposition(const ReactionNetwork& net) {
  Digraph g;
  g.nodes = net.r();
  for (const auto& v : nullspace(net.stoichiometric_matrix())) {
    size_t first = SIZE_MAX;
    for (size_t j = 0; j < v.size(); ++j) {
      if (sgn(v[j]) == 0) continue;
      if (first == SIZE_MAX) first = j;
      else g.edges.push_back({first, j});
    }
  }
  auto comp = weak_components(g);
  std::vector<std::vector<size_t>> blocks(component_count(comp));
  for (size_t j = 0; j < net.r(); ++j) blocks[comp[j]].push_back(j);
  return make_decomposition(net, std::move(blocks));
}

std::vector<double> verify_equilibria_intersection(const KineticSystem& sys,
                                                   const std::vector<std::vector<size_t>>& partition,
                                                   const std::vector<double>& x) {
  for (double v : x)
    if (!(v > 0)) fail(ErrorKind::InvalidInput, "state must be positive");
  auto rates = rate_vector(sys, x);
  std::vector<double> out;
  for (const auto& block : partition) {
    std::vector<double> acc(sys.net.m(), 0.0);
    double scale = 1.0;
    for (size_t j : block) {
      RVec v = sys.net.reaction_vector(j);
      scale = std::max(scale, std::abs(rates[j]));
      for (size_t s = 0; s < sys.net.m(); ++s)
        if (sgn(v[s]) != 0) acc[s] += v[s].get_d() * rates[j];
    }
    double res = 0;
    for (double a : acc) res = std::max(res, std::abs(a));
    out.push_back(res / scale);
  }
  return out;
}

}  // namespace rncdr
