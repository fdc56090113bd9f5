#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "enrichkit/enriched.hpp"
#include "enrichkit/monoidal.hpp"
#include "enrichkit/random.hpp"
#include "enrichkit/wcolim.hpp"

namespace enrichkit {

// Shipped instances over finite bases.

/// a ≤ b over the Boolean base: hom(a,b) = 1, hom(b,a) = 0.
MCatPtr boolean_chain();
/// Two objects over discrete S3 with hom(x,y) = hom(y,x) = (12).
MCatPtr s3_two_object();
/// One object over discrete C3 with hom = e.
MCatPtr c3_one_object();
/// The empty enriched category over the Boolean base.
MCatPtr empty_mcat();

// Shipped instances over finite sets.

/// a → b, one non-identity arrow u.
SetCategory arrow_category();
/// p ⇉ q via u, v.
SetCategory parallel_pair();
/// One object, identity only.
SetCategory point_category();

/// Counts kept by the random generators; acceptance rates are reported.
struct SamplerStats {
  std::size_t base_attempts = 0;
  std::size_t base_accepted = 0;
  std::size_t mcat_attempts = 0;
  std::size_t mcat_accepted = 0;
  std::size_t category_attempts = 0;
  std::size_t category_accepted = 0;
  std::size_t diagram_fallbacks = 0;  // DFS ran out of budget; constant 1 used
};

/// A random finite strict monoidal base with at most 3 objects and at most 9
/// morphisms. Families: discrete monoids, partially ordered monoids and
/// one-object commutative monoids.
struct RandomBase {
  std::string family;
  MonStrPtr base;
};
RandomBase random_base(Rng& rng, SamplerStats& stats);

/// A random MCat with `objects` objects over `base`: hom objects and units
/// drawn uniformly, then a randomized search for a valid composition. Returns
/// nullptr after `attempts` rejected draws.
MCatPtr random_mcat(const MonStrPtr& base, std::size_t objects, Rng& rng, SamplerStats& stats,
                    std::size_t attempts = 50);

/// A random concrete subcategory of finite sets: up to 3 objects of card ≤ 3,
/// a few random maps, closed under composition; hom-sets larger than 3 are
/// rejected.
SetCategory random_set_category(Rng& rng, SamplerStats& stats);

/// Random presheaf / functor with values of card ≤ max_card, by randomized
/// search over the maps of non-identity morphisms.
SetPresheaf random_set_presheaf(const SetCategory& c, Rng& rng, SamplerStats& stats, std::size_t max_card = 3);
SetFunctor random_set_functor(const SetCategory& c, Rng& rng, SamplerStats& stats, std::size_t max_card = 3);

/// The constant presheaf with value 1.
SetPresheaf terminal_presheaf(const SetCategory& c);

}  // namespace enrichkit
