#include <random>

#include "doctest.h"
#include "enrichkit/finset.hpp"
#include "enrichkit/monoidal.hpp"

using namespace enrichkit;

namespace {

SkMap random_map(std::mt19937& gen, std::size_t dom, std::size_t cod) {
  std::vector<std::size_t> t(dom);
  for (auto& v : t) v = std::uniform_int_distribution<std::size_t>(0, cod - 1)(gen);
  return SkMap::make(SkSet{dom}, SkSet{cod}, t);
}

// Naive closure: relabel until stable.
std::vector<std::size_t> naive_classes(const SkMap& f, const SkMap& g) {
  std::vector<std::size_t> label(f.cod.card);
  for (std::size_t i = 0; i < label.size(); ++i) label[i] = i;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < f.dom.card; ++i) {
      const std::size_t a = f(i), b = g(i);
      const std::size_t lo = std::min(label[a], label[b]);
      for (auto& l : label) {
        if ((l == label[a] || l == label[b]) && l != lo) {
          l = lo;
          changed = true;
        }
      }
    }
  }
  return label;
}

}  // namespace

TEST_CASE("maps must be total and land in the codomain") {
  CHECK_THROWS_AS(SkMap::make(SkSet{2}, SkSet{2}, {0}), Error);
  CHECK_THROWS_AS(SkMap::make(SkSet{2}, SkSet{2}, {0, 2}), Error);
  CHECK_NOTHROW(SkMap::make(SkSet{0}, SkSet{0}, {}));
  try {
    SkMap::make(SkSet{1}, SkSet{1}, {3});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ShapeMismatch);
  }
}

TEST_CASE("composition, identity and inverse") {
  const SkMap f = SkMap::make(SkSet{3}, SkSet{3}, {2, 0, 1});
  const SkMap g = SkMap::make(SkSet{3}, SkSet{2}, {0, 1, 1});
  CHECK(compose(g, f).table == std::vector<std::size_t>{1, 0, 1});
  CHECK(compose(f, SkMap::identity(SkSet{3})) == f);
  CHECK(compose(inverse(f), f) == SkMap::identity(SkSet{3}));
  CHECK(f.bijective());
  CHECK_FALSE(g.injective());
  CHECK(g.surjective());
}

TEST_CASE("pairing is lexicographic") {
  const SkSet y{3};
  CHECK(product(SkSet{2}, y).card == 6);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const std::size_t p = pair(y, i, j);
      CHECK(p == i * 3 + j);
      CHECK(first(y, p) == i);
      CHECK(second(y, p) == j);
    }
  }
  const SkMap f = SkMap::make(SkSet{2}, SkSet{2}, {1, 0});
  const SkMap g = SkMap::make(SkSet{3}, SkSet{1}, {0, 0, 0});
  CHECK(product(f, g).table == std::vector<std::size_t>{1, 1, 1, 0, 0, 0});
}

TEST_CASE("coproduct offsets, locate and copair") {
  const std::vector<SkSet> parts = {SkSet{2}, SkSet{0}, SkSet{3}};
  const Coproduct c = coproduct(parts);
  CHECK(c.total.card == 5);
  CHECK(c.offsets == std::vector<std::size_t>{0, 2, 2});
  CHECK(c.locate(3) == std::pair<std::size_t, std::size_t>{2, 1});
  CHECK(c.injection(2).table == std::vector<std::size_t>{2, 3, 4});
  const std::vector<SkMap> maps = {SkMap::constant(SkSet{2}, SkSet{1}, 0), SkMap::constant(SkSet{0}, SkSet{1}, 0),
                                   SkMap::constant(SkSet{3}, SkSet{1}, 0)};
  CHECK(c.copair(maps).table == std::vector<std::size_t>(5, 0));
}

TEST_CASE("coequalizer agrees with a naive closure") {
  std::mt19937 gen(7);
  for (int round = 0; round < 300; ++round) {
    const std::size_t d = gen() % 5, n = 1 + gen() % 6;
    const SkMap f = random_map(gen, d, n), g = random_map(gen, d, n);
    const Coequalizer q = coequalizer(f, g);
    const auto label = naive_classes(f, g);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) CHECK((label[i] == label[j]) == (q.projection(i) == q.projection(j)));
    }
    // classes numbered by their minimal element
    for (std::size_t k = 0; k + 1 < q.representatives.size(); ++k) CHECK(q.representatives[k] < q.representatives[k + 1]);
    for (std::size_t k = 0; k < q.representatives.size(); ++k) CHECK(q.projection(q.representatives[k]) == k);
  }
}

TEST_CASE("factor through a coequalizer") {
  const SkMap f = SkMap::make(SkSet{1}, SkSet{3}, {0});
  const SkMap g = SkMap::make(SkSet{1}, SkSet{3}, {2});
  const Coequalizer q = coequalizer(f, g);
  CHECK(q.quotient.card == 2);
  const SkMap h = SkMap::make(SkSet{3}, SkSet{4}, {3, 1, 3});
  CHECK(compose(q.factor(h), q.projection) == h);
  CHECK_THROWS_AS(q.factor(SkMap::make(SkSet{3}, SkSet{4}, {0, 1, 3})), Error);
}

TEST_CASE("finite sets are strict monoidal under product and sum") {
  CHECK_NOTHROW(validate_on_probes(FinSetMonoidal(FinSetMonoidal::Kind::cartesian), 2));
  CHECK_NOTHROW(validate_on_probes(FinSetMonoidal(FinSetMonoidal::Kind::cocartesian), 2));
  const FinSetMonoidal cart;
  CHECK(cart.tensor(SkSet{2}, SkSet{3}).card == 6);
  CHECK(cart.unit_object().card == 1);
  const FinSetMonoidal sum(FinSetMonoidal::Kind::cocartesian);
  CHECK(sum.tensor(SkSet{2}, SkSet{3}).card == 5);
  CHECK(sum.unit_object().card == 0);
}

TEST_CASE("cardinality cap") {
  CHECK_THROWS_AS(product(SkSet{2000}, SkSet{2000}, 1000000), Error);
  try {
    product(SkSet{2000}, SkSet{2000}, 1000000);
  } catch (const Error& e) {
    CHECK(is_resource_error(e.kind()));
  }
}
