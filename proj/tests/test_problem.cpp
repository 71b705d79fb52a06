#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cybe/report.hpp"
#include "oracle.hpp"

using namespace cybe;
using nlohmann::json;

namespace {

ProblemFile parse(const std::string& text) { return parse_problem_text(text); }

void rejects(const std::string& text, const std::string& fragment) {
  CAPTURE(text);
  CHECK_THROWS_WITH_AS(parse(text), doctest::Contains(fragment.c_str()), InputError);
}

const std::string kSl2 = R"("field": {"kind": "rational"}, "algebra": {"family": "SL2"})";

// Random problem documents over small fields for round-trip tests.
json random_document(oracle::Rng& rng) {
  json doc;
  const bool prime = rng.integer(0, 1) == 1;
  const std::uint64_t p = std::vector<std::uint64_t>{3, 5, 7, 101}[rng.integer(0, 3)];
  doc["field"] = prime ? json{{"kind", "prime"}, {"p", p}} : json{{"kind", "rational"}};
  const FieldSpec f = prime ? FieldSpec::prime(p) : FieldSpec::rational();
  std::size_t dim = 3;
  switch (rng.integer(0, 4)) {
  case 0: doc["algebra"] = {{"family", "SL2"}}; break;
  case 1: doc["algebra"] = {{"family", "II"}, {"alpha", rng.nonzero(f).to_string()}, {"beta", rng.nonzero(f).to_string()}}; break;
  case 2: doc["algebra"] = {{"family", "IV"}, {"beta", rng.scalar(f).to_string()}, {"delta", rng.nonzero(f).to_string()}}; break;
  case 3:
    dim = 2;
    doc["algebra"] = {{"family", "VI"}};
    break;
  default:
    dim = 2;
    doc["algebra"] = {{"dim", 2}, {"brackets", json::array({{{"i", 1}, {"j", 2}, {"k", 1}, {"c", "1"}}})}};
  }
  json tensors = json::array();
  for (int t = rng.integer(0, 3); t > 0; --t) {
    json entries = json::array();
    for (std::size_t i = 1; i <= dim; ++i)
      for (std::size_t j = 1; j <= dim; ++j)
        if (rng.integer(0, 2) == 0) entries.push_back(json::array({i, j, rng.scalar(f).to_string()}));
    tensors.push_back({{"entries", entries}});
  }
  doc["tensors"] = tensors;
  return doc;
}

} // namespace

TEST_CASE("named and explicit tensors") {
  const ProblemFile a = parse("{" + kSl2 + R"(, "tensor": {"p": "2", "q": "-2", "s": "1", "t": "-1"}})");
  const ProblemFile b = parse(
      "{" + kSl2 + R"(, "tensor": {"entries": [[1, 2, "2"], [2, 1, "-2"], [1, 3, "1"], [3, 1, "-1"]]}})");
  REQUIRE(a.tensors.size() == 1);
  CHECK(a.tensors == b.tensors);
  CHECK(a.tensors[0](0, 1) == Scalar::from_int(2, FieldSpec::rational()));

  const ProblemFile c = parse(R"({"field": {"kind": "prime", "p": 5}, "algebra": {"family": "VI"},
    "tensors": [{"entries": [[1, 2, "-7"]]}, {"entries": []}]})");
  CHECK(c.tensors.size() == 2);
  CHECK(c.tensors[0](0, 1) == Scalar::from_int(3, FieldSpec::prime(5)));
  CHECK(c.tensors[1].is_zero());
}

TEST_CASE("algebra specs") {
  const ProblemFile a = parse(R"({"field": {"kind": "rational"},
    "algebra": {"dim": 3, "brackets": [{"i": 2, "j": 1, "k": 3, "c": "1"}]}})");
  REQUIRE(a.algebra.brackets.size() == 1);
  CHECK(a.algebra.brackets[0].i == 1);
  CHECK(a.algebra.brackets[0].j == 2);
  CHECK(a.algebra.brackets[0].c == Scalar::from_int(-1, FieldSpec::rational()));
  CHECK(build_algebra(a).label() == "explicit");

  const ProblemFile b = parse(R"({"field": {"kind": "rational"}, "algebra": {"family": "I", "dim": 4}})");
  CHECK(build_algebra(b).dim() == 4);
  CHECK(build_algebra(parse(R"({"field": {"kind": "rational"}, "algebra": {"family": "iv", "beta": "0", "delta": "1"}})"))
            .dim() == 3);
}

TEST_CASE("validation errors name the offending path") {
  rejects("{" + kSl2 + R"(, "tensor": {"entries": [[1, 1, 1.5]]}})", "tensor.entries[0]: coefficients must be strings");
  rejects("{" + kSl2 + R"(, "tensor": {"entries": [[1, 1, "1"], [1, 1, "2"]]}})", "duplicate entry (1,1)");
  rejects("{" + kSl2 + R"(, "tensor": {"entries": [[1, 4, "1"]]}})", "outside 1..3");
  rejects("{" + kSl2 + R"(, "tensor": {"entries": [[0, 1, "1"]]}})", "outside 1..3");
  rejects("{" + kSl2 + R"(, "tensor": {"w": "1"}})", "unknown key 'w'");
  rejects("{" + kSl2 + R"(, "extra": 1})", "unknown key 'extra'");
  rejects("{" + kSl2 + R"(, "tensor": {"entries": [[1, 1, "1/0"]]}})", "tensor.entries[0]");
  rejects("{" + kSl2 + R"(, "tensor": {"entries": []}, "tensors": []})", "either 'tensor' or 'tensors'");
  rejects(R"({"field": {"kind": "rational"}, "algebra": {"family": "VI"}, "tensor": {"x": "1"}})", "need a dim-3 algebra");
  rejects(R"({"field": {"kind": "prime", "p": 2}, "algebra": {"family": "VI"}})", "characteristic 2");
  rejects(R"({"field": {"kind": "prime", "p": 9}, "algebra": {"family": "VI"}})", "field.p");
  rejects(R"({"field": {"kind": "prime"}, "algebra": {"family": "VI"}})", "required for a prime field");
  rejects(R"({"field": {"kind": "real"}, "algebra": {"family": "VI"}})", "field.kind");
  rejects(R"({"field": {"kind": "rational"}})", "missing 'algebra'");
  rejects(R"({"field": {"kind": "rational"}, "algebra": {"family": "VII"}})", "algebra.family");
  rejects(R"({"field": {"kind": "rational"}, "algebra": {"family": "II", "alpha": "1"}})", "required for family II");
  rejects(R"({"field": {"kind": "rational"}, "algebra": {"family": "SL2", "alpha": "1"}})", "not a parameter");
  rejects(R"({"field": {"kind": "rational"}, "algebra": {"family": "VI", "dim": 2}})", "only family I");
  rejects(R"({"field": {"kind": "rational"}, "algebra": {"dim": 2, "brackets": [{"i": 1, "j": 1, "k": 1, "c": "1"}]}})",
          "cannot be assigned");
  rejects(R"({"field": {"kind": "rational"}, "algebra": {"dim": 2, "brackets": [
    {"i": 1, "j": 2, "k": 1, "c": "1"}, {"i": 2, "j": 1, "k": 1, "c": "1"}]}})",
          "duplicate constant");
  rejects(R"({"field": {"kind": "rational"}, "algebra": {"dim": 2, "brackets": [{"i": 1, "j": 2, "k": 1}]}})", "missing 'c'");
  rejects("{" + kSl2 + R"(, "options": {"generate": {"case": "nope", "params": {}}}})", "options.generate.case");
  rejects("{" + kSl2 + R"(, "options": {"generate": {"case": "strong_y", "params": {"w": "1"}}}})", "unknown parameter");
  rejects("{" + kSl2 + R"(, "options": {"budget": -1}})", "options.budget");
  rejects(R"({"field": {"kind": "prime", "p": 5}, "algebra": {"family": "VI"}, "tensor": {"entries": [[1, 2, "1/2"]]}})",
          "must be an integer");
  rejects("not json", "malformed JSON");
}

TEST_CASE("parse, serialize, parse is the identity") {
  oracle::Rng rng(2718);
  for (int trial = 0; trial < 300; ++trial) {
    const json doc = random_document(rng);
    CAPTURE(doc.dump());
    const ProblemFile a = parse_problem(doc);
    const nlohmann::ordered_json canon = serialize_problem(a);
    const ProblemFile b = parse_problem_text(canon.dump());
    REQUIRE(a == b);
    REQUIRE(serialize_problem(b).dump() == canon.dump());
  }
}

TEST_CASE("check command") {
  const CommandResult ok = cmd_check(parse("{" + kSl2 + R"(, "tensor": {"entries": [[1, 1, "1"]]}})"));
  CHECK(ok.exit_code == kExitOk);
  CHECK(ok.report["tensors"][0]["labels"] == json::array({"strongly_symmetric"}));
  CHECK(ok.report["tensors"][0]["is_solution"] == true);
  CHECK(ok.report["verdict"]["ok"] == true);
  CHECK(ok.report["command"] == "check");

  const CommandResult bad = cmd_check(parse("{" + kSl2 + R"(, "tensor": {"entries": [[1, 2, "1"], [2, 1, "-1"]]}})"));
  CHECK(bad.exit_code == kExitFailed);
  CHECK(bad.report["tensors"][0]["is_solution"] == false);
  CHECK(bad.report["tensors"][0]["residual"].size() > 0);

  const CommandResult jac = cmd_check(parse(R"({"field": {"kind": "rational"}, "algebra": {"dim": 3, "brackets": [
    {"i": 1, "j": 2, "k": 3, "c": "1"}, {"i": 1, "j": 3, "k": 1, "c": "1"}]}, "tensor": {"entries": []}})"));
  CHECK(jac.exit_code == kExitFailed);
  CHECK(jac.report["algebra"]["jacobi"] == false);
}

TEST_CASE("bialgebra command") {
  const CommandResult tri = cmd_bialgebra(parse("{" + kSl2 + R"(, "tensor": {"p": "2", "q": "-2", "s": "1", "t": "-1"}})"));
  CHECK(tri.exit_code == kExitOk);
  const auto& t = tri.report["tensors"][0];
  CHECK(t["is_coboundary"] == true);
  CHECK(t["is_triangular"] == true);
  CHECK(t["predicates"]["agreement"] == true);

  const CommandResult cob = cmd_bialgebra(parse("{" + kSl2 + R"(, "tensor": {"p": "1", "q": "-1", "s": "1", "t": "-1"}})"));
  CHECK(cob.report["tensors"][0]["is_coboundary"] == true);
  CHECK(cob.report["tensors"][0]["is_triangular"] == false);

  const CommandResult sym = cmd_bialgebra(parse("{" + kSl2 + R"(, "tensor": {"entries": [[1, 1, "1"]]}})"));
  CHECK(sym.report["tensors"][0]["predicates"]["status"] == "not_skew");
}

TEST_CASE("enumerate command") {
  const CommandResult vi = cmd_enumerate(parse(R"({"field": {"kind": "prime", "p": 3}, "algebra": {"family": "VI"}})"));
  CHECK(vi.exit_code == kExitOk);
  CHECK(vi.report["total"] == 81);
  CHECK(vi.report["mismatches"] == 0);
  CHECK(vi.report["confirmed"] == true);

  const ProblemFile ii = parse(R"({"field": {"kind": "prime", "p": 3}, "algebra": {"family": "II", "alpha": "1", "beta": "1"}})");
  const CommandResult a = cmd_enumerate(ii);
  CHECK(a.report["total"] == 19683);
  CHECK(a.report["solutions"] == 59);

  // Byte-identical reports across runs and worker counts.
  CommandOptions four;
  four.workers = 4;
  CHECK(cmd_enumerate(ii).report.dump() == a.report.dump());
  CHECK(cmd_enumerate(ii, four).report.dump() == a.report.dump());
  CHECK(cmd_enumerate(ii, four).text == a.text);

  CommandOptions tight;
  tight.budget = 100;
  const CommandResult over = cmd_enumerate(ii, tight);
  CHECK(over.exit_code == kExitFailed);
  CHECK(over.report["error"] == "budget_exceeded");

  CHECK_THROWS_AS(cmd_enumerate(parse("{" + kSl2 + "}")), InputError);
}

TEST_CASE("generate command") {
  const CommandResult g = cmd_generate(parse(R"({"field": {"kind": "rational"},
    "algebra": {"family": "II", "alpha": "1", "beta": "1"},
    "options": {"generate": {"case": "strong_z", "params": {"s": "2", "u": "0", "z": "1"}}}})"));
  CHECK(g.exit_code == kExitOk);
  CHECK(g.report["self_check"]["is_solution"] == true);
  CHECK(g.report["named"]["x"] == "4");
  CHECK_THROWS_AS(cmd_generate(parse("{" + kSl2 + "}")), InputError);
  CHECK_THROWS_WITH(cmd_generate(parse(R"({"field": {"kind": "rational"}, "algebra": {"family": "III"},
    "options": {"generate": {"case": "heisenberg_p_nonzero", "params": {"p": "0", "x": "1", "u": "0", "v": "0", "z": "0"}}}})")),
                    doctest::Contains("p != 0"));
}

TEST_CASE("families command and label prose") {
  const CommandResult f = cmd_families();
  CHECK(f.exit_code == kExitOk);
  CHECK(f.report["families"].size() >= 7);
  CHECK(label_prose(SolutionLabel::StronglySymmetric) == "strongly symmetric");
}
