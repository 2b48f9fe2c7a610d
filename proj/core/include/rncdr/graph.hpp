#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace rncdr {

struct Digraph {
  size_t nodes = 0;
  std::vector<std::pair<size_t, size_t>> edges;
};

// Component id per node; ids numbered by first node in each component.
std::vector<size_t> weak_components(const Digraph& g);
std::vector<size_t> strong_components(const Digraph& g);
size_t component_count(const std::vector<size_t>& comp);

// Flags per strong component: true when no edge leaves it.
std::vector<bool> terminal_components(const Digraph& g, const std::vector<size_t>& scc);

// Undirected adjacent pairs (a < b) whose removal disconnects their weak component.
std::vector<std::pair<size_t, size_t>> bridges(const Digraph& g);

// Weak component labels after removing every edge between a and b.
std::vector<size_t> weak_components_without(const Digraph& g, size_t a, size_t b);

}  // namespace rncdr
