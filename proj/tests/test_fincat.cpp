#include "doctest.h"
#include "enrichkit/fincat.hpp"
#include "mutations.hpp"

using namespace enrichkit;

namespace {

RawCategory cyclic3() {
  RawCategory raw{{"*"}, {{"e", "*", "*"}, {"c", "*", "*"}, {"c2", "*", "*"}}, {{"*", "e"}}, {}};
  const std::vector<std::string> n = {"e", "c", "c2"};
  for (std::size_t g = 0; g < 3; ++g) {
    for (std::size_t f = 0; f < 3; ++f) raw.compose.push_back({n[g], n[f], n[(g + f) % 3]});
  }
  return raw;
}

RawCategory arrow() { return {{"a", "b"}, {{"id_a", "a", "a"}, {"id_b", "b", "b"}, {"u", "a", "b"}}, {}, {}}; }

ErrorKind kind_of(const RawCategory& raw) {
  try {
    FinCat::validate(raw);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected a validation error");
  return ErrorKind::InternalError;
}

}  // namespace

TEST_CASE("cyclic group as a one-object category") {
  const FinCat c = FinCat::validate(cyclic3());
  CHECK(c.object_count() == 1);
  CHECK(c.morphism_count() == 3);
  const MorId cc = *c.find_morphism("c");
  CHECK(c.name(c.compose(cc, cc)) == "c2");
  CHECK(c.identity(ObId{0}) == *c.find_morphism("e"));
  CHECK(c.is_iso(cc));
  CHECK(c.name(*c.inverse(cc)) == "c2");
}

TEST_CASE("identities and trivial composites are inferred") {
  const FinCat c = FinCat::validate(arrow());
  CHECK(c.name(c.identity(*c.find_object("b"))) == "id_b");
  CHECK(c.hom(*c.find_object("a"), *c.find_object("b")).size() == 1);
  CHECK(c.hom(*c.find_object("b"), *c.find_object("a")).empty());
  CHECK_FALSE(c.is_iso(*c.find_morphism("u")));
}

TEST_CASE("round trip through the raw form") {
  const FinCat c = FinCat::validate(cyclic3());
  CHECK(FinCat::validate(c.to_raw()) == c);
}

TEST_CASE("structural errors") {
  RawCategory dangling = arrow();
  dangling.morphisms.push_back({"v", "a", "z"});
  CHECK(kind_of(dangling) == ErrorKind::DanglingReference);

  RawCategory missing = cyclic3();
  missing.compose.pop_back();  // c2∘c2 has three candidates
  CHECK(kind_of(missing) == ErrorKind::MissingComposite);

  RawCategory no_identity{{"a"}, {}, {}, {}};
  CHECK(kind_of(no_identity) == ErrorKind::UnitViolation);
}

TEST_CASE("associativity mutation is caught at a violating triple") {
  const auto r = testkit::category_associativity();
  CHECK(r.original_valid);
  REQUIRE(r.caught);
  CHECK(*r.caught == ErrorKind::AssociativityViolation);
  CHECK_FALSE(r.violations.empty());
  CHECK(r.witness_correct());
  // first violating triple in (h, g, f) index order
  CHECK(r.witness_tuple() == testkit::Tuple{"c", "c", "c"});
}

TEST_CASE("functor enumeration") {
  const auto a = std::make_shared<const FinCat>(FinCat::validate(arrow()));
  // monotone self-maps of a two-element chain
  CHECK(enumerate_functors(a, a).size() == 3);
  const auto c = std::make_shared<const FinCat>(FinCat::validate(cyclic3()));
  // endomorphisms of Z/3
  CHECK(enumerate_functors(c, c).size() == 3);
  CHECK(enumerate_functors(a, c).size() == 3);
  CHECK(enumerate_functors(c, a).size() == 2);
  for (const auto& f : enumerate_functors(c, c)) CHECK_FALSE(functor_failure(f));
}

TEST_CASE("candidate cap") {
  const auto c = std::make_shared<const FinCat>(FinCat::validate(cyclic3()));
  Limits tiny;
  tiny.max_candidates = 2;
  CHECK_THROWS_AS(enumerate_functors(c, c, tiny), Error);
}
