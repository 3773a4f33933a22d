#include <doctest.h>

#include <set>

#include "fanocert/certify/fan_io.hpp"
#include "fanocert/certify/suites.hpp"
#include "fanocert/error.hpp"

using namespace fanocert;
using namespace fanocert::certify;

namespace {

const Certificate* find(const Report& r, const std::string& id) {
  for (const auto& c : r.certificates)
    if (c.id == id) return &c;
  return nullptr;
}

std::string data(const char* name) { return std::string(FANOCERT_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("verdicts") {
  CHECK(check("a", "", "1", Provenance::Paper, "1").verdict == Verdict::Pass);
  CHECK(check("a", "", "1", Provenance::Paper, "1/1").verdict == Verdict::Fail);
  CHECK(flag("a", "", "1", Provenance::Paper, "2", "n").verdict == Verdict::Flagged);
  Report r;
  r.certificates = {check("a", "", "1", Provenance::Trivial, "1"), check("b", "", "1", Provenance::Derived, "2"),
                    flag("c", "", "x", Provenance::Paper, "y", "")};
  auto s = r.summary();
  CHECK(s.total == 3);
  CHECK(s.pass == 1);
  CHECK(s.fail == 1);
  CHECK(s.flagged == 1);
}

TEST_CASE("report schema validation") {
  Report r;
  r.suite = "x";
  r.certificates = {check("a", "d", "1", Provenance::Paper, "1")};
  auto doc = to_json(r);
  CHECK_NOTHROW(validate_report(doc));
  CHECK(doc["certificates"][0]["expected"]["provenance"] == "paper");

  auto untagged = doc;
  untagged["certificates"][0]["expected"].erase("provenance");
  CHECK_THROWS_WITH_AS(validate_report(untagged), doctest::Contains("untagged"), Error);
  auto bare = doc;
  bare["certificates"][0]["expected"] = "1";
  CHECK_THROWS_AS(validate_report(bare), Error);
  auto unknown = doc;
  unknown["certificates"][0]["expected"]["provenance"] = "folklore";
  CHECK_THROWS_AS(validate_report(unknown), Error);
  auto miscount = doc;
  miscount["summary"]["pass"] = 0;
  CHECK_THROWS_AS(validate_report(miscount), Error);
  CHECK_THROWS_AS(validate_report(nlohmann::ordered_json::object()), Error);
}

TEST_CASE("suites are deterministic and sorted") {
  SuiteConfig cfg;
  cfg.trials = 50;
  auto a = to_json(run_suite("all", cfg)).dump();
  auto b = to_json(run_suite("all", cfg)).dump();
  CHECK(a == b);
  auto r = run_suite("all", cfg);
  for (std::size_t i = 1; i < r.certificates.size(); ++i) CHECK(r.certificates[i - 1].id < r.certificates[i].id);
  CHECK_NOTHROW(validate_report(to_json(r)));
  CHECK_THROWS_AS(run_suite("geometry"), Error);
  for (const auto& name : suite_names())
    if (name != "all") CHECK_FALSE(run_suite(name, cfg).certificates.empty());
}

TEST_CASE("named certificates") {
  SuiteConfig cfg;
  cfg.trials = 20;
  auto sch = run_suite("schubert", cfg);
  auto* c3 = find(sch, "c3-omega-v5-twist");
  REQUIRE(c3);
  CHECK(c3->expected.value == "620");
  CHECK(c3->expected.provenance == Provenance::Paper);
  CHECK(c3->computed == "20");

  auto tor = run_suite("toric", cfg);
  auto* d1 = find(tor, "l014-delta1-smooth");
  REQUIRE(d1);
  CHECK(d1->expected.value == "false");
  CHECK(d1->verdict == Verdict::Pass);
  auto* lab = find(tor, "l023-labeling-inconsistency");
  REQUIRE(lab);
  CHECK(lab->verdict == Verdict::Flagged);
  REQUIRE(find(tor, "l023-delta-v1v3-multiplicities"));
  REQUIRE(find(tor, "l023-delta-v2v4-smooth"));

  // the failures are exactly the disagreements recorded against the source values
  std::set<std::string> failing;
  for (const auto& c : run_suite("all", cfg).certificates)
    if (c.verdict == Verdict::Fail) failing.insert(c.id);
  CHECK(failing == std::set<std::string>{"c3-omega-v5-restricted", "c3-omega-v5-twist", "omega-g-twist-c3",
                                         "veronese-hilbert-identity", "veronese-kernel-S2-TU",
                                         "veronese-primality-hilbert"});
}

TEST_CASE("text rendering") {
  Report r;
  r.suite = "demo";
  r.certificates = {check("x", "thing", "3/2", Provenance::Derived, "3/2")};
  auto t = to_text(r);
  CHECK(t.find("PASS    x") != std::string::npos);
  CHECK(t.find("expected: 3/2 [derived]") != std::string::npos);
  CHECK(t.find("1 certificates: 1 pass, 0 fail, 0 flagged") != std::string::npos);
}

TEST_CASE("fan files") {
  auto l014 = check_fan(load_fan(data("l014_bundle.json")));
  CHECK(l014.complete);
  CHECK(l014.smooth == true);
  CHECK(l014.maximal_cones == 8);
  auto p2 = check_fan(load_fan(data("p2.json")));
  CHECK(p2.complete);
  CHECK(p2.smooth == true);
  CHECK_FALSE(p2.fibration);
  CHECK_THROWS_WITH_AS(load_fan(data("nonprimitive.json")), doctest::Contains("ray not primitive"), Error);
  CHECK_THROWS_WITH_AS(load_fan(data("broken.json")), doctest::Contains("line 4"), Error);
  CHECK_THROWS_AS(load_fan(data("missing.json")), Error);
}

TEST_CASE("fan parse errors name the field") {
  CHECK_THROWS_WITH_AS(parse_fan(R"({"rays": [], "cones": []})"), "missing field 'dim'", Error);
  CHECK_THROWS_WITH_AS(parse_fan(R"({"dim": 2, "cones": []})"), "missing field 'rays'", Error);
  CHECK_THROWS_WITH_AS(parse_fan(R"({"dim": 2, "rays": [[1, 0], [0, "a"]], "cones": []})"),
                       doctest::Contains("rays[1][1]"), Error);
  CHECK_THROWS_WITH_AS(parse_fan(R"({"dim": 2, "rays": [[1, 0, 0]], "cones": []})"), doctest::Contains("rays[0]"),
                       Error);
  CHECK_THROWS_WITH_AS(parse_fan(R"({"dim": 2, "rays": [[1, 0], [0, 1]], "cones": [[0, 2]]})"),
                       doctest::Contains("cones[0][1]"), Error);
  CHECK_THROWS_AS(parse_fan("[1, 2]"), Error);
  auto c = check_fan(parse_fan(R"({"dim": 2, "rays": [[1, 0], [1, 2]], "cones": [[0, 1]]})"));
  CHECK_FALSE(c.complete);
  CHECK(c.smooth == false);
  REQUIRE(c.singular_cones.size() == 1);
  CHECK(c.singular_cones[0] == "{0,1} multiplicity 2");
  auto j = to_json(c);
  CHECK(j["fibration"].is_null());
}
