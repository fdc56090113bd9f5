#include "doctest.h"
#include "enrichkit/corpus.hpp"
#include "enrichkit/mfunctor.hpp"
#include "mutations.hpp"

using namespace enrichkit;

namespace {

// One object, hom = *, over the monoid {e, z} with z·z = z.
MCatPtr idempotent_point() {
  const auto base = one_object_commutative({"e", "z"}, 0, {{0, 1}, {1, 1}});
  RawEnriched raw;
  raw.objects = {"p"};
  raw.hom = {{"p", "p", "*"}};
  raw.unit = {{"p", "e"}};
  raw.comp = {{"p", "p", "p", "e"}};
  return std::make_shared<const MCat>(make_mcat(base, raw));
}

}  // namespace

TEST_CASE("M-functors from the chain into the truth values") {
  // F(a) ≤ F(b); morphisms are pointwise inequalities
  const MCatPtr a = boolean_chain();
  const MFunCategory c = enumerate_mfun_et(a, self_module(a->base));
  CHECK(c.functors.size() == 3);
  CHECK(c.arrows.size() == 6);
  CHECK(c.category->object_count() == 3);
  for (const auto& f : c.functors) CHECK(a->base->describe(f.ob_map[0]) <= a->base->describe(f.ob_map[1]));
  for (const auto& arrow : c.arrows) {
    CHECK_FALSE(mfun_mor_failure(c.functors[arrow.source], c.functors[arrow.target], arrow.components));
  }
}

TEST_CASE("M-functors over a group: one per choice of F(x)") {
  const MCatPtr a = s3_two_object();
  const auto fs = enumerate_mfun_et_objects(a, self_module(a->base));
  // F(y) = (12)·F(x), and phi is forced in a discrete base
  CHECK(fs.size() == 6);
  const auto prod = testkit::s3_product();
  for (const auto& f : fs) CHECK(prod[1][f.ob_map[0].value] == f.ob_map[1].value);
}

TEST_CASE("composition-square mutation is caught at a violating triple") {
  const auto r = testkit::functor_square();
  CHECK(r.original_valid);
  REQUIRE(r.caught);
  CHECK(*r.caught == ErrorKind::CompatibilityViolation);
  CHECK(r.witness_correct());
}

TEST_CASE("cocycle mutation is caught") {
  const auto r = testkit::structure_cocycle();
  CHECK(r.original_valid);
  REQUIRE(r.caught);
  CHECK(*r.caught == ErrorKind::CocycleViolation);
  CHECK(r.witness_tuple() == testkit::Tuple{"*", "*", "*"});
  CHECK(r.witness_correct());
}

TEST_CASE("left multiplication by a transposition is not an S3-functor with identity structure maps") {
  const auto m = symmetric_group_s3();
  const auto b = self_module(m);
  const auto prod = testkit::s3_product();
  const FinCat& c = m->carrier();
  FinFunctor f{m->carrier_ptr(), m->carrier_ptr(), {}, {}};
  for (ObId x : c.objects()) f.ob_map.push_back(ObId{static_cast<std::uint32_t>(prod[1][x.value])});
  for (MorId g : c.morphisms()) f.mor_map.push_back(c.identity(f(c.dom(g))));
  MFunctorTT t{b, b, f, {}};
  for (ObId p : m->objects()) {
    for (ObId a : m->objects()) t.sigma.push_back(c.identity(f(b->act(p, a))));
  }
  // oracle: first (m, a) with (12)·m·a ≠ m·(12)·a
  testkit::Tuple expected;
  for (std::size_t p = 0; p < 6 && expected.empty(); ++p) {
    for (std::size_t a = 0; a < 6 && expected.empty(); ++a) {
      if (prod[1][prod[p][a]] != prod[p][prod[1][a]]) expected = {testkit::s3_names[p], testkit::s3_names[a]};
    }
  }
  CHECK(expected == testkit::Tuple{"(13)", "e"});
  try {
    validate_mfun_tt(t);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NaturalityViolation);
    CHECK(testkit::parse_tuple(e.witness()) == expected);
  }
}

TEST_CASE("identity M-functors are valid") {
  CHECK_NOTHROW(validate_mfun_tt(identity_mfun_tt(self_module(symmetric_group_s3()))));
  CHECK_NOTHROW(validate_mfun_tt(identity_mfun_tt(self_module(boolean_base()))));
}

TEST_CASE("dropping the unit law admits the idempotent") {
  // phi ∈ {e, z}: the square asks phi·phi = phi, the unit law asks phi = e
  const MCatPtr a = idempotent_point();
  const auto b = self_module(a->base);
  CHECK(enumerate_mfun_et_objects(a, b).size() == 1);
  CHECK(enumerate_mfun_et_objects(a, b, UnitLaw::skip).size() == 2);
  const UnitAutomatism u = measure_unit_automatism(a, b);
  CHECK(u.compatible == 2);
  CHECK(u.unit_failures == 1);
  CHECK(u.examples.size() == 1);
}

TEST_CASE("different bases are a type error") {
  const MCatPtr a = boolean_chain();
  MFunctorET<LTensored> f{a, self_module(cyclic_group_c3()), {ObId{0}, ObId{0}}, {MorId{0}, MorId{0}, MorId{0}, MorId{0}}};
  const auto e = mfun_et_failure(f);
  REQUIRE(e);
  CHECK(e->kind() == ErrorKind::TypeMismatch);
}
