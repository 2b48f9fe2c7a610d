#include "rncdr/graph.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace rncdr {

namespace {

std::vector<size_t> relabel(const std::vector<size_t>& raw) {
  std::vector<size_t> map(raw.size(), SIZE_MAX), out(raw.size());
  size_t next = 0;
  for (size_t i = 0; i < raw.size(); ++i) {
    if (map[raw[i]] == SIZE_MAX) map[raw[i]] = next++;
    out[i] = map[raw[i]];
  }
  return out;
}

std::vector<size_t> undirected_components(size_t n, const std::vector<std::pair<size_t, size_t>>& edges) {
  std::vector<size_t> parent(n);
  for (size_t i = 0; i < n; ++i) parent[i] = i;
  std::function<size_t(size_t)> find = [&](size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto [a, b] : edges) {
    size_t ra = find(a), rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::vector<size_t> raw(n);
  for (size_t i = 0; i < n; ++i) raw[i] = find(i);
  return relabel(raw);
}

}  // namespace

std::vector<size_t> weak_components(const Digraph& g) { return undirected_components(g.nodes, g.edges); }

size_t component_count(const std::vector<size_t>& comp) {
  size_t c = 0;
  for (size_t x : comp) c = std::max(c, x + 1);
  return c;
}

std::vector<size_t> strong_components(const Digraph& g) {
  std::vector<std::vector<size_t>> adj(g.nodes);
  for (auto [a, b] : g.edges) adj[a].push_back(b);
  std::vector<size_t> index(g.nodes, SIZE_MAX), low(g.nodes), comp(g.nodes, SIZE_MAX), stack;
  std::vector<bool> on(g.nodes, false);
  size_t counter = 0, ncomp = 0;
  std::function<void(size_t)> visit = [&](size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on[v] = true;
    for (size_t w : adj[v]) {
      if (index[w] == SIZE_MAX) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on[w] = false;
        comp[w] = ncomp;
      } while (w != v);
      ++ncomp;
    }
  };
  for (size_t v = 0; v < g.nodes; ++v)
    if (index[v] == SIZE_MAX) visit(v);
  return relabel(comp);
}

std::vector<bool> terminal_components(const Digraph& g, const std::vector<size_t>& scc) {
  std::vector<bool> term(component_count(scc), true);
  for (auto [a, b] : g.edges)
    if (scc[a] != scc[b]) term[scc[a]] = false;
  return term;
}

std::vector<size_t> weak_components_without(const Digraph& g, size_t a, size_t b) {
  std::vector<std::pair<size_t, size_t>> kept;
  for (auto e : g.edges)
    if (!((e.first == a && e.second == b) || (e.first == b && e.second == a))) kept.push_back(e);
  return undirected_components(g.nodes, kept);
}

std::vector<std::pair<size_t, size_t>> bridges(const Digraph& g) {
  std::set<std::pair<size_t, size_t>> pairs;
  for (auto [a, b] : g.edges) pairs.insert({std::min(a, b), std::max(a, b)});
  auto base = component_count(weak_components(g));
  std::vector<std::pair<size_t, size_t>> out;
  for (auto [a, b] : pairs)
    if (component_count(weak_components_without(g, a, b)) > base) out.push_back({a, b});
  return out;
}

}  // namespace rncdr
