#include "doctest.h"
#include "enrichkit/corpus.hpp"
#include "enrichkit/enriched.hpp"
#include "mutations.hpp"

using namespace enrichkit;

namespace {

ErrorKind kind_of(const MonStrPtr& base, const RawEnriched& raw) {
  try {
    make_mcat(base, raw);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected a validation error");
  return ErrorKind::InternalError;
}

}  // namespace

TEST_CASE("units and compositions are forced over a poset") {
  const MCatPtr a = boolean_chain();
  const MonStr& m = *a->base;
  CHECK(a->size() == 2);
  CHECK(m.describe(a->hom(0, 1)) == "1");
  CHECK(m.describe(a->hom(1, 0)) == "0");
  CHECK(m.describe(a->unit(0)) == "id1");
  // hom(a,b)⊗hom(b,a) = 0 → hom(b,b) = 1
  CHECK(m.describe(a->comp(1, 0, 1)) == "le");
}

TEST_CASE("opposite swaps homs and reverses the base") {
  const MCatPtr a = s3_two_object();
  const MCat op = opposite_mcat(*a);
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t y = 0; y < 2; ++y) CHECK(op.hom(x, y) == a->hom(y, x));
  }
  CHECK(opposite_mcat(op).homs == a->homs);
}

TEST_CASE("round trip through the raw form") {
  const MCatPtr a = s3_two_object();
  CHECK(make_mcat(a->base, to_raw(*a)) == *a);
}

TEST_CASE("an impossible hom table is a type error") {
  RawEnriched raw;
  raw.objects = {"a", "b"};
  raw.hom = {{"a", "a", "1"}, {"a", "b", "0"}, {"b", "a", "1"}, {"b", "b", "0"}};
  // hom(b,b) = 0 admits no unit 1 → 0
  CHECK(kind_of(boolean_base(), raw) == ErrorKind::TypeMismatch);
}

TEST_CASE("S3 homs must compose to the identity on the diagonal") {
  RawEnriched raw;
  raw.objects = {"x", "y"};
  raw.hom = {{"x", "x", "e"}, {"x", "y", "(12)"}, {"y", "x", "(13)"}, {"y", "y", "e"}};
  // (12)⊗(13) is not e, so comp(x, y, x) has no candidate
  CHECK(kind_of(symmetric_group_s3(), raw) == ErrorKind::TypeMismatch);
}

TEST_CASE("enriched associativity mutation is caught at a violating quadruple") {
  const auto r = testkit::enriched_associativity();
  CHECK(r.original_valid);
  REQUIRE(r.caught);
  CHECK(*r.caught == ErrorKind::EnrichedAssociativityViolation);
  CHECK(r.witness_correct());
}

TEST_CASE("a unit that is not neutral") {
  const auto z2 = one_object_commutative({"e", "s"}, 0, {{0, 1}, {1, 0}});
  RawEnriched raw;
  raw.objects = {"a"};
  raw.hom = {{"a", "a", "*"}};
  raw.unit = {{"a", "s"}};
  raw.comp = {{"a", "a", "a", "e"}};
  CHECK(kind_of(z2, raw) == ErrorKind::EnrichedUnitViolation);
}

TEST_CASE("the empty category") {
  CHECK(empty_mcat()->size() == 0);
}
