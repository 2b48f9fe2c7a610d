#include "doctest.h"
#include "fixtures.hpp"
#include "rncdr/decomposition.hpp"
#include "rncdr/models.hpp"
#include "rncdr/sim.hpp"

using namespace rncdr;

TEST_SUITE("decomposition") {
  TEST_CASE("BECCS and AR split off the ocean exchange") {
    for (auto name : {"beccs", "ar"}) {
      CAPTURE(name);
      auto net = build_model(name).net;
      auto d = finest_independent_decomposition(net);
      REQUIRE(d.blocks.size() == 2);
      CHECK(d.independent);
      CHECK(d.blocks[1] == std::vector<size_t>{2, 3});
      size_t total = 0;
      for (auto& b : d.subspaces) total += b.dim();
      CHECK(total == network_numbers(net).s);
      CHECK(is_independent(net, d.blocks));
    }
  }

  TEST_CASE("coarser partitions can be dependent") {
    auto net = fixture::network({"A", "B"}, {{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}});
    CHECK(finest_independent_decomposition(net).blocks.size() == 1);
    CHECK_FALSE(is_independent(net, {{0}, {1}}));
    CHECK(is_independent(net, {{0, 1}}));
  }

  TEST_CASE("equilibria satisfy every block") {
    for (auto name : {"beccs", "ar"}) {
      CAPTURE(name);
      auto sys = rncdr::bind(build_model(name), fixture::unit_constants(fixture::orders(Rational(1, 2), 1, 1, Rational(1, 2)), name));
      auto x = find_steady_state(sys, std::vector<double>(sys.net.m(), 1.0));
      auto d = finest_independent_decomposition(sys.net);
      for (double r : verify_equilibria_intersection(sys, d.blocks, x)) CHECK(r < 1e-9);
    }
  }
}
