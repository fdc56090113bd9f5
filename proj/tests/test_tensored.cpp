#include "doctest.h"
#include "enrichkit/corpus.hpp"
#include "enrichkit/tensored.hpp"
#include "mutations.hpp"

using namespace enrichkit;

TEST_CASE("self-module of S3") {
  const auto m = symmetric_group_s3();
  const auto b = self_module(m);
  for (ObId p : m->objects()) {
    for (ObId x : b->objects()) CHECK(b->act(p, x) == m->tensor(p, x));
  }
  CHECK(LTensored::validate(m, m->carrier_ptr(), b->to_raw()).act(m->unit_object(), ObId{3}) == ObId{3});
}

TEST_CASE("module law mutation is caught at a violating triple") {
  const auto r = testkit::module_law();
  CHECK(r.original_valid);
  REQUIRE(r.caught);
  CHECK(*r.caught == ErrorKind::ModuleLawViolation);
  CHECK(r.witness_correct());
}

TEST_CASE("a non-unital action") {
  const auto m = cyclic_group_c3();
  RawModule raw;
  const std::vector<std::string> n = {"e", "c", "c2"};
  for (std::size_t p = 0; p < 3; ++p) {
    for (std::size_t x = 0; x < 3; ++x) raw.act_ob.push_back({n[p], n[x], n[(p + x + 1) % 3]});
  }
  try {
    LTensored::validate(m, m->carrier_ptr(), raw);
    FAIL("accepted");
  } catch (const Error& e) {
    INFO(to_string(e.kind()), ": ", e.witness());
    CHECK((e.kind() == ErrorKind::UnitActionViolation || e.kind() == ErrorKind::ModuleLawViolation));
  }
}

TEST_CASE("hom objects in the truth-value self-module") {
  // act(h, x) ≤ y iff h ≤ hom(x, y), with hom(1,0) = 0 and 1 otherwise
  const auto m = boolean_base();
  const auto b = self_module(m);
  const ObId zero = *m->carrier().find_object("0"), one = *m->carrier().find_object("1");
  const auto expect = [&](ObId x, ObId y) { return x == one && y == zero ? zero : one; };
  for (ObId x : {zero, one}) {
    for (ObId y : {zero, one}) {
      const auto r = hom_object(*b, x, y);
      REQUIRE(r.first);
      CHECK(r.first->object == expect(x, y));
      CHECK(r.all.size() == 1);
      CHECK(is_universal(*b, x, y, *r.first));
      CHECK(representation_is_natural(*b, x, *r.first));
    }
  }
}

TEST_CASE("hom objects in a group self-module") {
  // Hom(m·x, y) is nonempty iff m = y·x⁻¹
  const auto m = symmetric_group_s3();
  const auto b = self_module(m);
  const auto prod = testkit::s3_product();
  for (std::size_t x = 0; x < 6; ++x) {
    for (std::size_t y = 0; y < 6; ++y) {
      const auto r = hom_object(*b, ObId{static_cast<std::uint32_t>(x)}, ObId{static_cast<std::uint32_t>(y)});
      REQUIRE(r.first);
      CHECK(prod[r.first->object.value][x] == y);
    }
  }
}

TEST_CASE("isomorphisms in a thin category are identities") {
  const auto m = boolean_base();
  CHECK_FALSE(find_isomorphism(*m, ObId{0}, ObId{1}));
  CHECK(find_isomorphism(*m, ObId{1}, ObId{1}));
}
