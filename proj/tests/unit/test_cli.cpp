#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "multimult/cli.hpp"

using namespace multimult;

namespace {

std::string data_path(const std::string& name) { return std::string(MULTIMULT_TEST_DATA) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ErrorCode parse_error_code(const std::string& text) {
  try {
    parse_document(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("parse succeeded: " << text);
  return ErrorCode::InvalidArgument;
}

std::string parse_error_message(const std::string& text) {
  try {
    parse_document(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

struct Shell {
  int status;
  std::string out;
};

Shell shell(const std::string& args) {
  const std::string cmd = std::string(MULTIMULT_BIN) + " " + args + " 2>&1";
  Shell r{0, ""};
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) r.out.append(buf, n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace

TEST_CASE("three-slot fixture parses to the nine-variable ring and the intersection ideal") {
  const InputDocument doc = parse_file(data_path("three_slot.mm"));
  CHECK(doc.grading == 3);
  REQUIRE(doc.ring->variable_count() == 9);
  for (std::size_t s = 0; s < 3; ++s) CHECK(doc.ring->slot_size(s) == 3);
  const IdealSpec* ideal = doc.find_ideal("I");
  REQUIRE(ideal);
  // Oracle: the intersection built directly from the four components.
  const RingPtr r = testing::three_slot_ring();
  CHECK(*doc.ring == *r);
  const MonomialIdeal expected = testing::three_slot_ideal(r);
  CHECK(ideal->to_monomial(doc.ring).generators() == expected.generators());
  CHECK(expected.generators().size() == 7);
  REQUIRE(doc.module);
  CHECK(doc.module->outer->unit);
  CHECK(doc.build_module().kind() == GradedModule::Kind::Monomial);
}

TEST_CASE("grammar") {
  SUBCASE("d = 1 with no variables is the trivial ring") {
    const InputDocument doc = parse_document("grading 1\n");
    CHECK(doc.ring->variable_count() == 0);
    CHECK(!doc.module);
  }
  SUBCASE("sums, products, powers and names") {
    const InputDocument doc = parse_document(
        "grading 2\nvar x y slot 1\nvar z slot 2\n"
        "ideal A = (x, y)\nideal B = A^2 + (z) * (x)\nideal C = intersect(A, (y, z))\n"
        "module outer=A inner=B\nseed 9\n");
    const MonomialIdeal b = doc.find_ideal("B")->to_monomial(doc.ring);
    const auto& R = doc.ring;
    auto mono = [&](std::vector<int> e) { return Monomial(std::move(e)); };
    CHECK(b == MonomialIdeal(R, {mono({2, 0, 0}), mono({1, 1, 0}), mono({0, 2, 0}), mono({1, 0, 1})}));
    const MonomialIdeal c = doc.find_ideal("C")->to_monomial(doc.ring);
    CHECK(c == MonomialIdeal(R, {mono({0, 1, 0}), mono({1, 0, 1})}));
    CHECK(doc.seed == 9);
    CHECK(doc.module->outer);
  }
  SUBCASE("polynomial generators make a general module") {
    const InputDocument doc =
        parse_document("grading 1\nvar x y slot 1\nmodule outer=1 inner=(x^2 - 3/2*x*y, y^3)\n");
    const auto& gens = doc.module->inner.generators;
    REQUIRE(gens.size() == 2);
    CHECK(gens[0].terms().size() == 2);
    CHECK(gens[0].to_string() == "x^2 - 3/2*x*y");
    CHECK(doc.build_module().kind() == GradedModule::Kind::General);
  }
  SUBCASE("a unit generator gives the unit ideal") {
    const InputDocument doc = parse_document("grading 1\nvar x slot 1\nideal A = (x, 1)\n");
    CHECK(doc.find_ideal("A")->unit);
  }
  SUBCASE("comments and semicolons") {
    const InputDocument doc = parse_document("# header\ngrading 1; var x slot 1; # trailing\nideal A = (x);\n");
    CHECK(doc.find_ideal("A"));
  }
  SUBCASE("system block") {
    const InputDocument doc =
        parse_document("grading 1\nvar x y slot 1\nsystem { J = (x, y); I1 = (x); I2 = (y^2); N = (x)/(x^3) }\n");
    REQUIRE(doc.system);
    CHECK(doc.system->ideal_count() == 2);
    CHECK(doc.system->module_string() == "(x)/(x^3)");
  }
}

TEST_CASE("parse errors carry codes and positions") {
  CHECK(parse_error_code("grading 1\nvar x slot 1\nideal A = B\n") == ErrorCode::UndeclaredName);
  CHECK(parse_error_code("grading 1\nvar x slot 1\nideal A = (w)\n") == ErrorCode::UndeclaredName);
  CHECK(parse_error_code("grading 2\nvar x slot 3\n") == ErrorCode::BadSlot);
  CHECK(parse_error_code("grading 2\nvar x slot 0\n") == ErrorCode::BadSlot);
  CHECK(parse_error_code("grading 0\n") == ErrorCode::BadSlot);
  CHECK(parse_error_code("var x slot 1\n") == ErrorCode::ParseError);
  CHECK(parse_error_code("grading 1\nvar x y slot 1\nideal A = (x + y^2)\n") == ErrorCode::ParseError);
  CHECK(parse_error_code("grading 1\nvar x slot 1\nideal A = (x\n") == ErrorCode::ParseError);
  CHECK(parse_error_code("grading 1\nvar x slot 1\nideal A = x\n") == ErrorCode::ParseError);
  CHECK(parse_error_code("grading 1\nvar x slot 1\nideal A = (x) $\n") == ErrorCode::ParseError);
  CHECK(parse_error_code("grading 1\nvar x x slot 1\n") == ErrorCode::ParseError);
  CHECK(parse_error_code("grading 1\nvar x y slot 1\nmodule inner=(x)\nvar z slot 1\n") == ErrorCode::ParseError);
  CHECK(parse_error_code("grading 1\nvar x y slot 1\nsystem { J = (x); I1 = (x) }\n") ==
        ErrorCode::InvalidArgument);
  CHECK(parse_error_code("grading 1\nvar x y slot 1\nsystem { J = (x, y); I1 = (x + y) }\n") ==
        ErrorCode::InvalidArgument);
  CHECK(parse_error_code("grading 1\nvar x y slot 1\nideal A = intersect((x + y), (x))\n") ==
        ErrorCode::InvalidArgument);

  const std::string msg = parse_error_message("grading 1\nvar x slot 1\nideal A = (x) * Q\n");
  CHECK(msg.find("line 3, column 17") != std::string::npos);
  CHECK(msg.find("UNDECLARED_NAME") == 0);
}

TEST_CASE("element lists and integer lists") {
  const InputDocument doc = parse_file(data_path("three_slot.mm"));
  const auto xs = parse_elements(doc.ring, "x3, y3 - 2*y1, z3");
  REQUIRE(xs.size() == 3);
  CHECK(xs[1].to_string() == "-2*y1 + y3");
  CHECK(xs[1].unit_slot() == 1);
  CHECK(parse_multidegree("1, 0,2") == MultiDegree{1, 0, 2});
  CHECK_THROWS_AS(parse_multidegree("1,a"), Error);
  CHECK_THROWS_AS(parse_multidegree(""), Error);
  CHECK_THROWS_AS(parse_elements(doc.ring, "x3, w"), Error);
}

TEST_CASE("report schema and exit codes") {
  const InputDocument ex = parse_file(data_path("three_slot.mm"));
  CommandFlags flags;

  SUBCASE("mixed on an undefined type") {
    flags.type = MultiDegree{0, 0, 0};
    flags.method = "delta";
    const auto out = run_command("mixed", ex, flags);
    CHECK(out.exit_code == 2);
    REQUIRE(out.report["results"].size() == 1);
    CHECK(out.report["results"][0]["defined"] == false);
    CHECK(out.report["results"][0]["value"].is_null());
  }
  SUBCASE("mixed, all routes at (1,1,1)") {
    flags.type = MultiDegree{1, 1, 1};
    const auto out = run_command("mixed", ex, flags);
    CHECK(out.exit_code == 0);
    const Json& results = out.report["results"];
    REQUIRE(results.size() == 4);
    std::vector<std::string> methods;
    for (const auto& r : results) {
      CHECK(r["value"] == 1);
      CHECK(r["defined"] == true);
      CHECK(r["certified"] == true);
      methods.push_back(r["method"]);
    }
    CHECK(methods == std::vector<std::string>{"DELTA", "FILTER", "KOSZUL_CHI", "SYMBOL"});
  }
  SUBCASE("schema keys in order") {
    const auto out = run_command("hilbert", ex, flags);
    std::vector<std::string> keys;
    for (const auto& [k, _] : out.report.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"schema", "command", "inputs", "results", "details", "diagnostics",
                                           "exit_code"});
    CHECK(out.report["schema"] == "multimult/1");
    const Json& poly = out.report["details"]["hilbert"]["polynomial"];
    CHECK(poly["degree"] == 4);
    CHECK(poly["terms"][0].contains("k"));
    CHECK(poly["terms"][0].contains("coeff"));
    CHECK(out.report["results"].size() == 15);
  }
  SUBCASE("zero polynomial degree serializes as -inf") {
    const InputDocument z = parse_document("grading 1\nvar x slot 1\nmodule outer=1 inner=1\n");
    const auto out = run_command("hilbert", z, flags);
    CHECK(out.report["details"]["hilbert"]["polynomial"]["degree"] == "-inf");
    CHECK(out.exit_code == 2);
  }
  SUBCASE("koszul slice at an explicit degree") {
    flags.sequence = "x3, y3, z3";
    flags.degree = MultiDegree{3, 3, 3};
    flags.stabilize = true;
    const auto out = run_command("koszul", ex, flags);
    CHECK(out.exit_code == 0);
    const Json& slice = out.report["details"]["slices"][0];
    CHECK(slice["d_squared_zero"] == true);
    CHECK(slice["euler"] == slice["chain_euler"]);
    CHECK(out.report["results"][1]["method"] == "KOSZUL_CHI");
    CHECK(out.report["results"][1]["value"] == 1);
  }
  SUBCASE("sequence-check") {
    flags.sequence = "x3, x2, x1";
    const auto out = run_command("sequence-check", ex, flags);
    CHECK(out.exit_code == 0);
    CHECK(out.report["details"]["system"] == true);
    CHECK(out.report["results"][0]["value"] == 0);
  }
  SUBCASE("bad inputs exit 1") {
    flags.type = MultiDegree{1, 1};
    CHECK(run_command("mixed", ex, flags).exit_code == 1);
    CHECK(run_command("ideal", ex, flags).exit_code == 1);
    CHECK(run_command("nonsense", ex, flags).exit_code == 1);
  }
}

TEST_CASE("ideal command on the k[x,y] maximal-ideal fixture") {
  const InputDocument doc = parse_file(data_path("maximal_xy.mm"));
  CommandFlags flags;
  flags.k0 = 1;
  flags.type = MultiDegree{0};
  SUBCASE("value") {
    const auto out = run_command("ideal", doc, flags);
    CHECK(out.exit_code == 0);
    CHECK(out.report["results"][0]["value"] == 1);
    CHECK(out.report["results"][0]["certified"] == false);
  }
  SUBCASE("verify with a given sequence") {
    flags.k0 = 0;
    flags.type = MultiDegree{1};
    flags.sequence = "x";
    flags.verify = true;
    const auto out = run_command("ideal", doc, flags);
    CHECK(out.exit_code == 0);
    CHECK(out.report["details"]["weak_fc"] == true);
    CHECK(out.report["details"]["verification"]["saturation_value"] == 1);
    for (const auto& r : out.report["results"]) CHECK(r["value"] == 1);
  }
  SUBCASE("undefined type") {
    flags.k0 = 0;
    flags.type = MultiDegree{0};
    CHECK(run_command("ideal", doc, flags).exit_code == 2);
  }
  SUBCASE("sequence of the wrong length") {
    flags.sequence = "x, y";
    CHECK(run_command("ideal", doc, flags).exit_code == 1);
  }
  SUBCASE("verify suite") {
    const auto out = run_command("verify", doc, flags);
    CHECK(out.exit_code == 0);
    CHECK(out.report["results"].size() == 2);
    for (const auto& r : out.report["results"]) CHECK(r["value"] == 1);
  }
}

TEST_CASE("golden report for the three-slot Hilbert polynomial") {
  const InputDocument ex = parse_file(data_path("three_slot.mm"));
  const auto out = run_command("hilbert", ex, CommandFlags{});
  CHECK(out.report.dump(2) + "\n" == slurp(data_path("golden/three_slot_hilbert.json")));
}

TEST_CASE("identical inputs give byte-identical JSON") {
  const InputDocument ex = parse_file(data_path("three_slot.mm"));
  CommandFlags flags;
  flags.type = MultiDegree{2, 1, 1};
  flags.seed = 17;
  const std::string a = run_command("mixed", ex, flags).report.dump();
  const std::string b = run_command("mixed", parse_file(data_path("three_slot.mm")), flags).report.dump();
  CHECK(a == b);
}

TEST_CASE("executable") {
  const std::string ex = data_path("three_slot.mm");
  SUBCASE("exit code 2 on an undefined type") {
    CHECK(shell("mixed " + ex + " --type 0,0,0 --method delta").status == 2);
  }
  SUBCASE("parse failure exits 1 with the diagnostic") {
    const std::string bad = data_path("bad_slot.mm");
    const Shell r = shell("hilbert " + bad + " --json");
    CHECK(r.status == 1);
    CHECK(r.out.find("BAD_SLOT") != std::string::npos);
  }
  SUBCASE("repeated runs are byte-identical") {
    const Shell a = shell("mixed " + ex + " --type 1,2,1 --json --seed 5");
    const Shell b = shell("mixed " + ex + " --type 1,2,1 --json --seed 5");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == slurp(data_path("golden/three_slot_mixed_121.json")));
  }
}
