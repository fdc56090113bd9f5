#include "doctest.h"
#include "enrichkit/runner.hpp"
#include "enrichkit/spec.hpp"

using namespace enrichkit;

namespace {

ErrorKind parse_error_kind(const std::string& text, std::string* witness = nullptr) {
  try {
    parse_spec_text(text);
  } catch (const Error& e) {
    if (witness) *witness = e.witness();
    return e.kind();
  }
  FAIL("parsed");
  return ErrorKind::InternalError;
}

const char* chain = R"({
  "enrichkit-spec": 1,
  "monoidal": {"bool": {"builtin": "boolean"}},
  "enriched": {"chain": {"base": "bool", "objects": ["a", "b"],
    "hom": [["a","a","1"], ["a","b","1"], ["b","a","0"], ["b","b","1"]]}}
})";

std::string data(const std::string& file) { return std::string(ENRICHKIT_DATA) + "/" + file; }

const CheckRecord* find(const Report& r, const std::string& check, const std::string& instance) {
  for (const auto& rec : r.records) {
    if (rec.check == check && rec.instance == instance) return &rec;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("the shipped chain declares one base and one enriched category") {
  const SpecFile s = parse_spec(data("boolean_chain.json"));
  CHECK(s.monoidal.size() == 1);
  CHECK(s.enriched.size() == 1);
  CHECK(s.categories.empty());
  CHECK(parse_spec_text(chain).enriched.front().first == "chain");
}

TEST_CASE("input errors") {
  CHECK(parse_error_kind("") == ErrorKind::SchemaViolation);
  CHECK(parse_error_kind("  \n") == ErrorKind::SchemaViolation);
  CHECK(parse_error_kind("{}") == ErrorKind::SchemaViolation);
  CHECK(parse_error_kind(R"({"enrichkit-spec": 2})") == ErrorKind::SchemaViolation);
  CHECK(parse_error_kind(R"({"enrichkit-spec": 1, "extra": {}})") == ErrorKind::SchemaViolation);

  std::string witness;
  CHECK(parse_error_kind("{\n  \"enrichkit-spec\": 1,\n  oops\n}", &witness) == ErrorKind::ParseError);
  CHECK(witness.rfind("<string>:3:", 0) == 0);

  std::string bad = chain;
  bad.replace(bad.find(R"(["b","a","0"])"), 13, R"(["b","z","0"])");
  CHECK(parse_error_kind(bad, &witness) == ErrorKind::UnresolvedReference);
  CHECK(witness.find("z") != std::string::npos);

  std::string no_base = chain;
  no_base.replace(no_base.find(R"("base": "bool")"), 14, R"("base": "nope")");
  CHECK(parse_error_kind(no_base) == ErrorKind::UnresolvedReference);

  const std::string dup = R"({"enrichkit-spec": 1, "monoidal": {"x": {"builtin": "boolean"}},
    "enriched": {"x": {"base": "x", "objects": []}}})";
  CHECK(parse_error_kind(dup) == ErrorKind::SchemaViolation);
  CHECK(parse_error_kind(R"({"enrichkit-spec": 1, "monoidal": {"m": {"builtin": "quaternions"}}})") ==
        ErrorKind::UnresolvedReference);
}

TEST_CASE("missing file") {
  try {
    parse_spec(data("does_not_exist.json"));
    FAIL("parsed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
  }
}

TEST_CASE("validate records every declaration") {
  const SpecFile s = parse_spec(data("boolean_tables.json"));
  const Report r = run("validate", &s);
  CHECK(r.records.size() == 6);
  CHECK(r.count(Verdict::pass) == 6);
  CHECK(r.exit_code() == 0);
  CHECK(find(r, "validate", "mfunctor:constant_top"));
}

TEST_CASE("a declaration that fails its validator, and its dependents") {
  const std::string text = R"({"enrichkit-spec": 1,
    "monoidal": {"bool": {"builtin": "boolean"}},
    "enriched": {"chain": {"base": "bool", "objects": ["a", "b"],
      "hom": [["a","a","1"], ["a","b","1"], ["b","a","0"], ["b","b","1"]]}},
    "presheaves": {"bad": {"source": "chain", "values": [["a","0"], ["b","1"]]}}})";
  const SpecFile s = parse_spec_text(text);
  const Report r = run("validate", &s);
  const CheckRecord* bad = find(r, "validate", "presheaf:bad");
  REQUIRE(bad);
  CHECK(bad->verdict == Verdict::fail);
  REQUIRE(bad->error);
  // f(b)⊗hom(a,b) = 1 has no map into f(a) = 0
  CHECK(*bad->error == ErrorKind::TypeMismatch);
  CHECK(r.exit_code() == 1);

  const std::string broken = R"({"enrichkit-spec": 1,
    "monoidal": {"bool": {"builtin": "boolean"}},
    "enriched": {"loop": {"base": "bool", "objects": ["a"], "hom": [["a","a","0"]]}},
    "presheaves": {"p": {"source": "loop", "values": [["a","0"]]}}})";
  const SpecFile t = parse_spec_text(broken);
  const Report q = run("presheaves", &t);
  REQUIRE(q.records.size() == 2);
  CHECK(q.records[0].instance == "enriched:loop");
  CHECK(q.records[0].verdict == Verdict::fail);
  CHECK(q.records[1].instance == "presheaf:p");
  REQUIRE(q.records[1].witnesses.size() == 1);
  CHECK(q.records[1].witnesses[0].find("depends on 'loop'") != std::string::npos);
}

TEST_CASE("commands on the shipped files") {
  const SpecFile chain_spec = parse_spec(data("boolean_chain.json"));
  const Report y = run("yoneda", &chain_spec);
  CHECK(y.exit_code() == 0);
  const CheckRecord* lemma = find(y, "yoneda-lemma", "chain");
  REQUIRE(lemma);
  CHECK(lemma->details["presheaves"] == 3);
  CHECK(lemma->details["failures"] == 0);

  const SpecFile swap = parse_spec(data("parallel_pair_swap.json"));
  const Report w = run("wcolim", &swap);
  REQUIRE(w.records.size() == 1);
  CHECK(w.records[0].details["apex"] == 1);

  const SpecFile arrow = parse_spec(data("arrow.json"));
  const Report u = run("universal", &arrow);
  CHECK(u.exit_code() == 0);
  CHECK(u.records.size() == 6);

  const SpecFile bad = parse_spec(data("corrupt_composition.json"));
  const Report v = run("validate", &bad);
  CHECK(v.exit_code() == 1);
  REQUIRE(v.records.size() == 1);
  CHECK(*v.records[0].error == ErrorKind::AssociativityViolation);
}

TEST_CASE("machine reports are deterministic and carry no timings") {
  const SpecFile s = parse_spec(data("arrow.json"));
  RunOptions o;
  o.seed = 4;
  const std::string a = run("wcolim", &s, o).machine();
  const std::string b = run("wcolim", &s, o).machine();
  CHECK(a == b);
  CHECK(a.find("seconds") == std::string::npos);
  const auto j = nlohmann::ordered_json::parse(a);
  CHECK(j["enrichkit-report"] == 1);
  CHECK(j["seed"] == 4);
  CHECK(j["summary"]["failed"] == 0);
}

TEST_CASE("commands need a spec, except fuzz") {
  CHECK_THROWS_AS(run("yoneda", nullptr), Error);
  CHECK_THROWS_AS(run("frobnicate", nullptr), Error);
}
