#include "doctest.h"
#include "enrichkit/corpus.hpp"
#include "enrichkit/fuzz.hpp"
#include "enrichkit/random.hpp"

using namespace enrichkit;

TEST_CASE("random bases stay within the corpus bounds") {
  Rng rng(21);
  SamplerStats stats;
  for (int i = 0; i < 300; ++i) {
    const RandomBase b = random_base(rng, stats);
    CHECK(b.base->carrier().object_count() <= 3);
    CHECK(b.base->carrier().morphism_count() <= 9);
  }
  CHECK(stats.base_accepted >= 300);  // order draws count too
  CHECK(stats.base_attempts >= stats.base_accepted);
}

TEST_CASE("random set categories and data stay within the corpus bounds") {
  Rng rng(22);
  SamplerStats stats;
  for (int i = 0; i < 100; ++i) {
    const SetCategory c = random_set_category(rng, stats);
    CHECK(c.size() <= 3);
    for (std::size_t x = 0; x < c.size(); ++x) {
      for (std::size_t y = 0; y < c.size(); ++y) CHECK(c.enriched->hom(x, y).card <= 3);
    }
    for (SkSet v : random_set_presheaf(c, rng, stats).values) CHECK(v.card <= 3);
    for (SkSet v : random_set_functor(c, rng, stats).ob_map) CHECK(v.card <= 3);
  }
}

TEST_CASE("random M-categories are valid") {
  Rng rng(23);
  SamplerStats stats;
  std::size_t made = 0;
  for (int i = 0; i < 50; ++i) {
    const RandomBase b = random_base(rng, stats);
    if (const MCatPtr a = random_mcat(b.base, 1 + rng.below(3), rng, stats)) {
      CHECK_NOTHROW(validate_mcat(*a));
      ++made;
    }
  }
  CHECK(made > 0);
  CHECK(stats.mcat_accepted == made);
}

TEST_CASE("small presheaf fuzz run") {
  const PresheafFuzz f = fuzz_presheaves(2, 15, 3);
  CHECK(f.instances == 15);
  CHECK(f.yoneda.failures == 0);
  CHECK(f.fully_faithful.failures == 0);
  CHECK(f.op_dictionary.failures == 0);
  CHECK(f.functors.unit_failures <= f.functors.compatible);
  const PresheafFuzz g = fuzz_presheaves(2, 15, 3);
  CHECK(g.presheaves == f.presheaves);
  CHECK(g.functors.unit_failures == f.functors.unit_failures);
}

TEST_CASE("small colimit fuzz run") {
  const ColimitFuzz f = fuzz_colimits(2, 5, 20);
  CHECK(f.instances == 5);
  CHECK(f.coyoneda.failures == 0);
  CHECK(f.universal.failures == 0);
  CHECK(f.presentation.failures == 0);
  CHECK(f.equivalence.failures == 0);
}

TEST_CASE("bounded draws are reproducible and in range") {
  Rng a(99), b(99);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t x = a.below(7);
    CHECK(x < 7);
    CHECK(x == b.below(7));
  }
}
