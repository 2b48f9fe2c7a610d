#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "rncdr/dsl.hpp"
#include "rncdr/json_io.hpp"
#include "rncdr/models.hpp"
#include "rncdr/report.hpp"
#ifdef RNCDR_HAVE_CLI
#include "cli.hpp"
#endif

using namespace rncdr;

namespace {

NetworkDocument model_doc(const std::string& name) { return {name, build_model(name)}; }

ParseError parse_failure(const std::string& text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  return ParseError(0, 0, {}, "");
}

}  // namespace

TEST_SUITE("dsl") {
  TEST_CASE("serialize then parse is the identity on built-in models") {
    for (auto& name : model_names()) {
      CAPTURE(name);
      auto doc = model_doc(name);
      auto text = serialize_document(doc);
      auto back = parse_document(text);
      CHECK(back.name == name);
      CHECK(serialize_document(back) == text);
      CHECK(back.system.net.species() == doc.system.net.species());
      CHECK(back.system.net.complexes() == doc.system.net.complexes());
      CHECK(back.system.kin.orders == doc.system.kin.orders);
      CHECK(back.system.kin.rates == doc.system.kin.rates);
      CHECK(back.system.kin.assumptions == doc.system.kin.assumptions);
    }
  }

  TEST_CASE("constants, comments and implicit species") {
    auto doc = parse_document(
        "network \"toy\"\n"
        "# comment line\n"
        "assume p <0\n"
        "const k = 3/2\n"
        "reaction R1: 2 X + Y -> Z rate 2 * k * X^p * Y^1\n"
        "reaction R2: Z -> 0 rate k\n");
    CHECK(doc.name == "toy");
    CHECK(doc.system.net.species() == std::vector<std::string>{"X", "Y", "Z"});
    CHECK(doc.system.kin.rates[0].coefficient == 2);
    CHECK(doc.system.kin.values.at("k") == Rational(3, 2));
    CHECK(doc.system.kin.assumptions.at("p") == Assumption::Negative);
    CHECK(doc.system.net.complex_label(doc.system.net.reactions()[1].product) == "0");
    auto again = parse_document(serialize_document(doc));
    CHECK(serialize_document(again) == serialize_document(doc));
  }

  TEST_CASE("syntax errors report line and column") {
    auto e = parse_failure("network \"x\"\nreaction R1: A -> B rate\n");
    CHECK(e.line() == 2);
    CHECK(e.column() == 25);
    CHECK(e.kind() == ErrorKind::Parse);
    CHECK_FALSE(e.expected().empty());

    auto e2 = parse_failure("network \"x\"\n\nreaction R1: A => B rate k\n");
    CHECK(e2.line() == 3);
    CHECK(e2.column() == 16);
    CHECK(std::string(e2.what()).find("line 3, column 16") != std::string::npos);
  }

  TEST_CASE("semantic errors") {
    parse_failure("network \"x\"\nreaction R1: A -> B rate k\nreaction R1: B -> A rate k\n");
    parse_failure("network \"x\"\nreaction R1: A -> A rate k\n");
    parse_failure("network \"x\"\nreaction R1: A -> B rate k * B^1\n");
    parse_failure("network \"x\"\nreaction R1: A -> B rate k * A^1 * A^2\n");
  }
}

TEST_SUITE("json") {
  TEST_CASE("byte-stable canonical output") {
    for (auto& name : model_names()) {
      CAPTURE(name);
      auto a = document_to_json(model_doc(name));
      auto b = document_to_json(model_doc(name));
      CHECK(a == b);
      auto back = document_from_json(a);
      CHECK(document_to_json(back) == a);
      CHECK(serialize_document(back) == serialize_document(model_doc(name)));
    }
  }

  TEST_CASE("schema errors carry a JSON pointer") {
    auto text = document_to_json(model_doc("beccs"));
    auto broken = text;
    auto pos = broken.find("\"constant\"");
    REQUIRE(pos != std::string::npos);
    broken.replace(pos, 10, "\"konstant\"");
    try {
      document_from_json(broken);
      FAIL("expected a schema error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Schema);
      CHECK(std::string(e.what()).find("/reactions/0/rate/constant") != std::string::npos);
    }
    CHECK_THROWS_AS(document_from_json("{"), Error);
    CHECK_THROWS_AS(document_from_json("[]"), Error);
  }

  TEST_CASE("analysis report renders") {
    auto rep = analyze(model_doc("beccs"));
    auto txt = render_text(rep);
    CHECK(txt.find("Deficiency") != std::string::npos);
    CHECK(txt.find("Discordant") != std::string::npos);
    CHECK_FALSE(rep.notes.empty());
    CHECK(render_json(rep) == render_json(analyze(model_doc("beccs"))));
    CHECK(analyze(model_doc("ar")).notes.empty());
  }
}

#ifdef RNCDR_HAVE_CLI
TEST_SUITE("cli") {
  struct Run {
    int code;
    std::string out, err;
  };

  Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
  }

  TEST_CASE("model emission feeds analysis") {
    auto emitted = run({"model", "beccs"});
    REQUIRE(emitted.code == 0);
    CHECK(emitted.out == serialize_document(model_doc("beccs")));
  }

  TEST_CASE("exit codes") {
    CHECK(run({"model", "nope"}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"analyze", "/nonexistent/file.crn"}).code == 2);
    CHECK(run({"model", "ar", "--json"}).code == 0);
  }

  TEST_CASE("verdict exit codes") {
    auto path = std::filesystem::temp_directory_path() / "rncdr_cli_beccs.crn";
    std::ofstream(path) << serialize_document(model_doc("beccs"));
    auto witness = run({"doa", path.string(), "--orders", "p1=4,p2=2,q1=3,q2=2"});
    CHECK(witness.code == 0);
    CHECK(witness.out.find("Witness found") != std::string::npos);
    CHECK(run({"doa", path.string(), "--orders", "p1=-1,p2=1,q1=1,q2=-1"}).code == 1);
    CHECK(run({"injectivity", path.string(), "--params", "p1=-1,p2=1,q1=1,q2=-1"}).code == 0);
    CHECK(run({"injectivity", path.string(), "--params", "p1=3,p2=2,q1=2,q2=1"}).code == 1);
    auto analyzed = run({"analyze", path.string()});
    CHECK(analyzed.code == 0);
    CHECK(analyzed.out.find("Deficiency") != std::string::npos);
    CHECK(run({"doa", path.string(), "--orders", "p1=oops"}).code == 2);
    std::filesystem::remove(path);
  }
}
#endif
