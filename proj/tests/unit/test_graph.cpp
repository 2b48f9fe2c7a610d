#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "rncdr/graph.hpp"

using namespace rncdr;

namespace {

Digraph random_graph(std::mt19937_64& rng) {
  Digraph g;
  g.nodes = 1 + rng() % 9;
  size_t e = rng() % (2 * g.nodes + 1);
  for (size_t i = 0; i < e; ++i) {
    size_t a = rng() % g.nodes, b = rng() % g.nodes;
    if (a != b) g.edges.emplace_back(a, b);
  }
  return g;
}

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("strong and weak components agree with reachability") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
      Digraph g = random_graph(rng);
      auto reach = oracle::reachability(g.nodes, g.edges);
      auto undirected = g.edges;
      for (auto [a, b] : g.edges) undirected.emplace_back(b, a);
      auto ureach = oracle::reachability(g.nodes, undirected);
      auto scc = strong_components(g);
      auto wcc = weak_components(g);
      for (size_t i = 0; i < g.nodes; ++i)
        for (size_t j = 0; j < g.nodes; ++j) {
          CHECK((scc[i] == scc[j]) == (reach[i][j] && reach[j][i]));
          CHECK((wcc[i] == wcc[j]) == ureach[i][j]);
        }
      auto term = terminal_components(g, scc);
      REQUIRE(term.size() == component_count(scc));
      for (size_t i = 0; i < g.nodes; ++i) {
        bool leaves = false;
        for (size_t j = 0; j < g.nodes; ++j)
          if (reach[i][j] && scc[i] != scc[j]) leaves = true;
        CHECK(term[scc[i]] == !leaves);
      }
    }
  }

  TEST_CASE("component ids follow first node") {
    Digraph g{4, {{2, 3}, {0, 1}}};
    auto w = weak_components(g);
    CHECK(w == std::vector<size_t>{0, 0, 1, 1});
    CHECK(component_count(w) == 2);
  }

  TEST_CASE("bridges disconnect their component") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 200; ++trial) {
      Digraph g = random_graph(rng);
      auto before = component_count(weak_components(g));
      auto br = bridges(g);
      std::set<std::pair<size_t, size_t>> bs(br.begin(), br.end());
      for (auto [a, b] : g.edges) {
        auto key = std::minmax(a, b);
        std::vector<std::pair<size_t, size_t>> rest;
        for (auto e : g.edges)
          if (std::minmax(e.first, e.second) != key) rest.push_back(e);
        auto ureach_edges = rest;
        for (auto [x, y] : rest) ureach_edges.emplace_back(y, x);
        auto ur = oracle::reachability(g.nodes, ureach_edges);
        bool disconnects = !ur[key.first][key.second];
        CHECK(bs.count({key.first, key.second}) == (disconnects ? 1u : 0u));
        CHECK(component_count(weak_components_without(g, a, b)) == before + (disconnects ? 1 : 0));
      }
    }
  }
}
