#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sf/cli.hpp"

using namespace sf;
namespace fs = std::filesystem;

namespace {

std::string slurp(const std::string& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("sf_cli_test_" + name);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("config parsing") {
  RunConfig c = parse_config_text(R"(
type: A1
form: adjoint
valuations: [2]
s: {order: 4, values: [1]}
kappa: "-1"
tau: w
q: [2, 3]
space: flag
kmax: 3
lemmas: {vmax: 2, seed: 9}
)");
  CHECK(c.cartan.form == "adjoint");
  CHECK(c.valuations == std::vector<int>{2});
  CHECK(c.s == "4:1");
  CHECK(c.q == std::vector<long>{2, 3});
  CHECK(c.space == Space::flag);
  CHECK(c.vmax == 2);
  CHECK(c.seed == 9u);
  RootDatum d = c.datum();
  CHECK(parse_character(d, c.kappa) == Character{4, {1}});
  CHECK(parse_tau(d, "w").w == d.reflection_index(d.positive[0]));
  CHECK(parse_tau(d, "id") == AffineWeylElement::identity(d));

  CHECK(parse_config_text("").cartan.type == "A1");
  CHECK_THROWS_WITH_AS(parse_config_text("colour: blue"), "unknown config key 'colour'", MathError);
  CHECK_THROWS_AS(parse_config_text("q: 6"), MathError);
  CHECK_THROWS_AS(parse_config_text("type: Z9"), std::exception);
  CHECK_THROWS_AS(parse_config_text("valuations: [1, 2]"), MathError);
  CHECK_THROWS_AS(parse_config_text("kappa: \"3:1,1\""), MathError);
  CHECK_THROWS_AS(parse_config_text("[1, 2"), MathError);
}

TEST_CASE("lemma suite") {
  RunConfig c;
  VerificationReport r = run_lemma_suite(c);
  CHECK(r.passed());
  CHECK(r.checks.size() > 100);
  for (auto& ch : r.checks) CHECK_FALSE(ch.anchor.empty());
  auto j = report_json(r);
  CHECK(nlohmann::json::parse(j.dump()) == j);
}

TEST_CASE("dispatch writes deterministic artifacts") {
  RunConfig c = parse_config_text("type: A1\nform: adjoint\nvaluations: 1\nq: [2]\n");
  fs::path a = scratch("a"), b = scratch("b");
  DispatchResult r1 = dispatch("orbital", c, a.string());
  DispatchResult r2 = dispatch("orbital", c, b.string());
  CHECK(r1.exit_code == 0);
  REQUIRE(r1.files.size() == 2);
  CHECK(slurp(r1.files[0]) == slurp(r2.files[0]));
  CHECK(slurp(r1.files[1]) == slurp(r2.files[1]));
  auto doc = nlohmann::json::parse(slurp(r1.files[0]));
  CHECK(doc["schema_version"] == kSchemaVersion);
  CHECK(doc["verdict"] == "pass");
  CHECK(nlohmann::json::parse(doc.dump()) == doc);
  CHECK(doc["result"]["reports"][0]["point_side"] == "2");
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST_CASE("every subcommand runs") {
  RunConfig c = parse_config_text("type: A1\nvaluations: 2\nkmax: 4\nwindow: 5\n");
  fs::path out = scratch("all");
  for (const char* sub : {"lemmas", "present", "graph", "orbital"}) {
    DispatchResult r = dispatch(sub, c, out.string());
    CHECK(r.exit_code == 0);
    CHECK(fs::exists(out / (std::string(sub) + ".json")));
  }
  auto present = nlohmann::json::parse(slurp((out / "present.json").string()));
  auto pieces = present["result"]["pieces"];
  REQUIRE(pieces.size() == 5);
  CHECK(pieces[0]["invariant_factors"].size() == 1);
  CHECK(pieces[2]["free_rank"] == 1);
  auto graph = nlohmann::json::parse(slurp((out / "graph.json").string()));
  // Eleven vertices on [-5, 5]; v = 2 joins every pair at distance 1 or 2.
  CHECK(graph["result"]["edges"].size() == 10 + 9);

  RunConfig e = parse_config_text("type: A1\nform: adjoint\nvaluations: 1\ns: \"-1\"\nkmax: 4\n");
  CHECK(dispatch("endoscopy", e, out.string()).exit_code == 0);
  CHECK_THROWS_WITH_AS(dispatch("plot", c, out.string()), "unknown subcommand 'plot'", MathError);

  RunConfig f = parse_config_text("type: A1\nvaluations: 1\nspace: flag\n");
  CHECK(dispatch("orbital", f, out.string()).exit_code == 2);
  fs::remove_all(out);
}

TEST_CASE("exit codes") {
  CHECK(exit_code_for(Verdict::pass) == 0);
  CHECK(exit_code_for(Verdict::fail) == 1);
  CHECK(exit_code_for(Verdict::undetermined) == 2);
}
