#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "charclose/closure.hpp"
#include "charclose/driver.hpp"
#include "charclose/errors.hpp"

using namespace charclose;
using nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_spec(const ProblemSpec& spec) {
  std::ostringstream out, err;
  const int code = run(spec, out, err);
  return RunResult{code, out.str(), err.str()};
}

ProblemSpec fermat_member_spec() {
  ProblemSpec spec;
  spec.mode = Mode::frobenius_member;
  spec.p = 2;
  spec.curve = "x^3+y^3+z^3";
  spec.ideal = {"x", "y"};
  spec.element = "z^2";
  spec.format = OutputFormat::json;
  return spec;
}

json result_of(const RunResult& r) { return json::parse(r.out).at("result"); }

}  // namespace

TEST_SUITE("driver") {

TEST_CASE("frobenius-member golden query") {
  const RunResult r = run_spec(fermat_member_spec());
  CHECK(r.code == kExitOk);
  const json res = result_of(r);
  CHECK(res.at("verdict") == true);
  CHECK(res.at("exponent") == 1);
  CHECK(res.at("q") == 2);
  CHECK(res.at("n") == 2);
  CHECK(res.at("bound") == 1);
}

TEST_CASE("hasse query over F_7") {
  ProblemSpec spec;
  spec.mode = Mode::hasse;
  spec.p = 7;
  spec.curve = "x^3+y^3+z^3";
  spec.format = OutputFormat::json;
  const RunResult r = run_spec(spec);
  CHECK(r.code == kExitOk);
  CHECK(result_of(r).at("hasse") == 6);
  CHECK(result_of(r).at("supersingular") == false);
}

TEST_CASE("validate rejects the Fermat cubic over F_3") {
  ProblemSpec spec;
  spec.mode = Mode::validate;
  spec.p = 3;
  spec.curve = "x^3+y^3+z^3";
  spec.format = OutputFormat::json;
  const RunResult r = run_spec(spec);
  CHECK(r.code == kExitValidation);
  CHECK(json::parse(r.out).at("error").at("category") == "not-elliptic");
  CHECK(r.err.find("not-elliptic") != std::string::npos);
}

TEST_CASE("exit codes by failure family") {
  ProblemSpec spec = fermat_member_spec();
  SUBCASE("syntax errors exit 1") {
    spec.element = "z^^2";
    CHECK(run_spec(spec).code == kExitValidation);
  }
  SUBCASE("non-primary ideals exit 1") {
    spec.ideal = {"x"};
    const RunResult r = run_spec(spec);
    CHECK(r.code == kExitValidation);
    CHECK(json::parse(r.out).at("error").at("category") == "not-primary");
  }
  SUBCASE("resource exhaustion exits 2") {
    spec.degree_cap = 2;
    CHECK(run_spec(spec).code == kExitResource);
  }
  SUBCASE("composite p exits 1") {
    spec.p = 6;
    CHECK(run_spec(spec).code == kExitValidation);
  }
  SUBCASE("missing element exits 1") {
    spec.element.reset();
    CHECK(run_spec(spec).code == kExitValidation);
  }
}

TEST_CASE("JSON reports round-trip as problem files") {
  for (Mode mode : {Mode::frobenius_member, Mode::tight_member, Mode::oracle,
                    Mode::frobenius_closure}) {
    ProblemSpec spec = fermat_member_spec();
    spec.mode = mode;
    const RunResult first = run_spec(spec);
    REQUIRE(first.code == kExitOk);

    const ProblemSpec replay = problem_from_json_text(first.out);
    const RunResult second = run_spec(replay);
    REQUIRE(second.code == kExitOk);

    json a = json::parse(first.out);
    json b = json::parse(second.out);
    a.at("result").erase("elapsed_ms");
    b.at("result").erase("elapsed_ms");
    CHECK(a == b);
  }
}

TEST_CASE("positive verdicts re-verify through frobenius_member_at") {
  const RunResult r = run_spec(fermat_member_spec());
  const json res = result_of(r);
  REQUIRE(res.at("verdict") == true);
  const CubicCone ring = validate_curve(parse("x^3+y^3+z^3", 2), 2);
  const HomIdeal I = make_ideal(ring, {parse("x", 2), parse("y", 2)});
  CHECK(frobenius_member_at(parse("z^2", 2), I,
                            res.at("exponent").get<unsigned>()));
}

TEST_CASE("oracle mode defaults emax to n+1") {
  ProblemSpec spec = fermat_member_spec();
  spec.mode = Mode::oracle;
  const RunResult r = run_spec(spec);
  CHECK(r.code == kExitOk);
  const json res = result_of(r);
  CHECK(res.at("emax") == 3);
  CHECK(res.at("found") == true);
  CHECK(res.at("exponent") == 1);
  CHECK(res.at("q") == 2);
}

TEST_CASE("syzygy-info takes the twist from the element degree") {
  ProblemSpec spec = fermat_member_spec();
  spec.mode = Mode::syzygy_info;
  spec.pullback = 1;
  const RunResult r = run_spec(spec);
  CHECK(r.code == kExitOk);
  const json res = result_of(r);
  CHECK(res.at("rank") == 1);
  CHECK(res.at("twist") == 2);
  CHECK(res.at("degree") == 0);
  CHECK(res.at("pullback").at("twist") == 4);
}

TEST_CASE("search over F_2 stays within the n-1 bound") {
  ProblemSpec spec;
  spec.mode = Mode::search;
  spec.p = 2;
  spec.curve = "x^3+y^3+z^3";
  spec.format = OutputFormat::json;
  spec.samples = 6;
  spec.max_gens = 2;
  spec.gen_degree = 2;
  spec.seed = 12345;
  const RunResult r = run_spec(spec);
  REQUIRE(r.code == kExitOk);
  const json res = result_of(r);
  CHECK(res.at("seed") == 12345);
  CHECK(res.at("violations").empty());
  for (const json& row : res.at("histogram")) {
    REQUIRE(row.at("n") == 2);
    for (const auto& [e, count] : row.at("exponents").items())
      CHECK(std::stoul(e) <= 1);
  }
}

TEST_CASE("search over an ordinary curve only sees exponent 0") {
  ProblemSpec spec;
  spec.mode = Mode::search;
  spec.p = 7;
  spec.curve = "x^3+y^3+z^3";
  spec.format = OutputFormat::json;
  spec.samples = 4;
  spec.max_gens = 2;
  spec.gen_degree = 2;
  spec.seed = 5;
  const RunResult r = run_spec(spec);
  REQUIRE(r.code == kExitOk);
  const json res = result_of(r);
  for (const json& row : res.at("histogram"))
    for (const auto& [e, count] : row.at("exponents").items())
      CHECK(e == "0");
}

TEST_CASE("empty search budget is a successful empty table") {
  ProblemSpec spec;
  spec.mode = Mode::search;
  spec.p = 2;
  spec.curve = "x^3+y^3+z^3";
  spec.format = OutputFormat::json;
  spec.samples = 0;
  const RunResult r = run_spec(spec);
  CHECK(r.code == kExitOk);
  CHECK(result_of(r).at("histogram").empty());
}

TEST_CASE("seeded searches are reproducible") {
  ProblemSpec spec;
  spec.mode = Mode::search;
  spec.p = 2;
  spec.curve = "x^3+y^3+z^3";
  spec.format = OutputFormat::json;
  spec.samples = 5;
  spec.seed = 99;
  json a = json::parse(run_spec(spec).out);
  json b = json::parse(run_spec(spec).out);
  a.at("result").erase("elapsed_ms");
  b.at("result").erase("elapsed_ms");
  CHECK(a == b);
}

TEST_CASE("problem files are validated") {
  CHECK_THROWS_AS(problem_from_json_text("{not json"), ValidationError);
  CHECK_THROWS_AS(problem_from_json_text(R"({"mode":"bogus"})"),
                  ValidationError);
  CHECK_THROWS_AS(problem_from_json_text(R"({"p":"two"})"), ValidationError);
  const ProblemSpec spec = problem_from_json_text(
      R"({"mode":"hasse","p":7,"curve":"x^3+y^3+z^3","degree_cap":500})");
  CHECK(spec.mode == Mode::hasse);
  CHECK(spec.p == 7);
  CHECK(spec.degree_cap == 500);
}

TEST_CASE("the installed binary honors flags over the problem file") {
  const std::string problem_path = "roundtrip_problem.json";
  {
    std::ofstream f(problem_path);
    f << R"({"mode":"frobenius-member","p":2,"curve":"x^3+y^3+z^3",)"
      << R"("ideal":["x","y"],"element":"z","format":"json"})";
  }
  const std::string command = std::string(CHARCLOSE_CLI_PATH) +
                              " --problem " + problem_path +
                              " --element z^2 > roundtrip_out.json";
  const int status = std::system(command.c_str());
  REQUIRE(status != -1);
  CHECK(WEXITSTATUS(status) == 0);
  std::ifstream in("roundtrip_out.json");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const json report = json::parse(buffer.str());
  // the flag overrode the file's element z, so the verdict is positive
  CHECK(report.at("query").at("element") == "z^2");
  CHECK(report.at("result").at("verdict") == true);
  std::remove(problem_path.c_str());
  std::remove("roundtrip_out.json");
}

}  // TEST_SUITE
