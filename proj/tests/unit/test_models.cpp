#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "rncdr/models.hpp"

using namespace rncdr;

namespace {

using Terms = std::map<std::string, std::vector<oracle::OdeTerm>>;

Terms sorted(Terms t) {
  for (auto& [s, v] : t) std::sort(v.begin(), v.end());
  return t;
}

}  // namespace

TEST_SUITE("models") {
  TEST_CASE("BECCS equations term by term") {
    const std::string r1 = "A1^p1*A2^q1", r2 = "A1^p2*A2^q2";
    Terms want{
        {"A1", {{1, "k1", r1}, {-1, "k2", r2}, {-1, "k6", "A1^1"}}},
        {"A2", {{1, "k2", r2}, {-1, "k1", r1}, {1, "k5", "A4^1"}, {-1, "a_m", "A2^1"}, {1, "a_m*beta", "A3^1"}}},
        {"A3", {{1, "a_m", "A2^1"}, {-1, "a_m*beta", "A3^1"}}},
        {"A4", {{1, "k7", "A8^1"}, {-1, "k5", "A4^1"}}},
        {"A8", {{1, "k6", "A1^1"}, {-1, "k7", "A8^1"}}},
    };
    CHECK(oracle::symbolic_ode(build_model("beccs")) == sorted(want));
  }

  TEST_CASE("AR equations term by term") {
    const std::string r1 = "A1^p1*A2^q1", r2 = "A1^p2*A2^q2", r5 = "A4^e15*A15^f15";
    Terms want{
        {"A1", {{1, "k1", r1}, {-1, "k2", r2}, {-1, "k15_6", "A1^1"}}},
        {"A2", {{1, "k2", r2}, {-1, "k1", r1}, {-1, "a_m", "A2^1"}, {1, "a_m*beta", "A3^1"}, {1, "k5", r5}}},
        {"A3", {{1, "a_m", "A2^1"}, {-1, "a_m*beta", "A3^1"}}},
        {"A4", {{1, "k15_7", "A15^1"}, {-1, "k5", r5}}},
        {"A15", {{1, "k15_6", "A1^1"}, {-1, "k15_7", "A15^1"}}},
    };
    CHECK(oracle::symbolic_ode(build_model("ar")) == sorted(want));
  }

  TEST_CASE("Anderies equations") {
    const std::string r1 = "A1^p1*A2^q1", r2 = "A1^p2*A2^q2";
    Terms want{
        {"A1", {{1, "k1", r1}, {-1, "k2", r2}}},
        {"A2", {{1, "k2", r2}, {-1, "k1", r1}, {-1, "a_m", "A2^1"}, {1, "a_m*beta", "A3^1"}}},
        {"A3", {{1, "a_m", "A2^1"}, {-1, "a_m*beta", "A3^1"}}},
    };
    CHECK(oracle::symbolic_ode(build_model("anderies")) == sorted(want));
    CHECK(oracle::symbolic_ode(build_model("anderies_raw")) == sorted(want));
  }

  TEST_CASE("catalogue") {
    CHECK(model_names() == std::vector<std::string>{"anderies_raw", "anderies", "beccs", "ar", "dac"});
    for (auto& name : model_names()) {
      CHECK_FALSE(model_card(name).empty());
      validate(build_model(name));
    }
    CHECK_THROWS_AS(build_model("nope"), Error);
    CHECK(cdr_table().size() >= 9);
    CHECK(cdr_method("BECCS").storage == "A8");
    CHECK(cdr_method("AR").storage == "A15");
  }

  TEST_CASE("builder reproduces the fixed models") {
    auto b = rncdr_build({cdr_spec("BECCS")});
    auto fixed = build_model("beccs");
    CHECK(oracle::symbolic_ode(b) == oracle::symbolic_ode(fixed));
    CHECK_THROWS_AS(rncdr_build({cdr_spec("BECCS"), cdr_spec("AR")}), Error);
    CHECK_THROWS_AS(rncdr_build({}), Error);
  }

  TEST_CASE("operating point fixes the emission orders") {
    auto sys = rncdr_build({cdr_spec("AR")}, {}, OperatingPoint{10, 4});
    auto r5 = *sys.net.reaction_index("R5");
    auto info = cdr_method("AR");
    auto o = emission_power_law({info.lambda, info.mu, 10, 4});
    auto a4 = *sys.net.species_index("A4");
    auto a15 = *sys.net.species_index("A15");
    CHECK(resolve(sys, sys.kin.orders[r5][a4]) == o.e);
    CHECK(resolve(sys, sys.kin.orders[r5][a15]) == o.f);
  }

  TEST_CASE("parameters bind symbols") {
    auto sys = build_model("beccs", fixture::orders(1, 2, 3, 4));
    CHECK(numeric_orders(sys)(1, 0) == 2);
  }
}
