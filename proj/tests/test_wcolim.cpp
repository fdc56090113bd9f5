#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "enrichkit/corpus.hpp"
#include "enrichkit/random.hpp"
#include "enrichkit/wcolim.hpp"

using namespace enrichkit;

namespace {

SkMap map_of(std::size_t dom, std::size_t cod, std::vector<std::size_t> t) {
  return SkMap::make(SkSet{dom}, SkSet{cod}, std::move(t));
}

// Classes of ⊔ W(x)×F(x) under (x, W(h)w, e) ~ (y, w, F(h)e), by relabelling.
struct NaiveColimit {
  std::vector<std::size_t> offsets;
  std::vector<std::size_t> label;
  std::size_t classes = 0;
};

NaiveColimit naive_colimit(const SetCategory& c, const SetPresheaf& w, const SetFunctor& f) {
  const FinCat& cat = *c.ordinary;
  NaiveColimit out;
  std::size_t total = 0;
  for (ObId x : cat.objects()) {
    out.offsets.push_back(total);
    total += w.values[x.value].card * f.ob_map[x.value].card;
  }
  auto at = [&](ObId x, std::size_t wi, std::size_t e) {
    return out.offsets[x.value] + wi * f.ob_map[x.value].card + e;
  };
  out.label.resize(total);
  std::iota(out.label.begin(), out.label.end(), 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (MorId h : cat.morphisms()) {
      const ObId x = cat.dom(h), y = cat.cod(h);
      const SkMap wh = presheaf_map(c, w, h), fh = functor_map(c, f, h);
      for (std::size_t wi = 0; wi < w.values[y.value].card; ++wi) {
        for (std::size_t e = 0; e < f.ob_map[x.value].card; ++e) {
          std::size_t& l1 = out.label[at(x, wh(wi), e)];
          std::size_t& l2 = out.label[at(y, wi, fh(e))];
          if (l1 == l2) continue;
          const std::size_t lo = std::min(l1, l2), hi = std::max(l1, l2);
          for (auto& l : out.label) {
            if (l == hi) l = lo;
          }
          changed = true;
        }
      }
    }
  }
  std::vector<std::size_t> distinct = out.label;
  std::sort(distinct.begin(), distinct.end());
  out.classes = static_cast<std::size_t>(std::unique(distinct.begin(), distinct.end()) - distinct.begin());
  return out;
}

void same_partition(const SetCategory& c, const WColimit& wc, const NaiveColimit& n) {
  std::vector<std::size_t> ours;
  for (ObId x : c.ordinary->objects()) {
    for (std::size_t i = 0; i < wc.legs[x.value].dom.card; ++i) ours.push_back(wc.legs[x.value](i));
  }
  REQUIRE(ours.size() == n.label.size());
  for (std::size_t i = 0; i < ours.size(); ++i) {
    for (std::size_t j = 0; j < ours.size(); ++j) CHECK((ours[i] == ours[j]) == (n.label[i] == n.label[j]));
  }
}

std::vector<std::size_t> cards_of(const SetPresheaf& w) {
  std::vector<std::size_t> out;
  for (SkSet v : w.values) out.push_back(v.card);
  return out;
}

// Some natural isomorphism between two presheaves, by trying every family of bijections.
bool naturally_isomorphic(const SetCategory& c, const SetPresheaf& p, const SetPresheaf& q) {
  const std::size_t n = c.size();
  if (cards_of(p) != cards_of(q)) return false;
  std::vector<std::vector<std::size_t>> perm(n);
  for (std::size_t x = 0; x < n; ++x) {
    perm[x].resize(p.values[x].card);
    std::iota(perm[x].begin(), perm[x].end(), 0);
  }
  for (;;) {
    bool natural = true;
    for (MorId h : c.ordinary->morphisms()) {
      const std::size_t x = c.ordinary->dom(h).value, y = c.ordinary->cod(h).value;
      const SkMap ph = presheaf_map(c, p, h), qh = presheaf_map(c, q, h);
      for (std::size_t i = 0; i < p.values[y].card && natural; ++i) natural = perm[x][ph(i)] == qh(perm[y][i]);
    }
    if (natural) return true;
    std::size_t x = 0;
    for (; x < n && !std::next_permutation(perm[x].begin(), perm[x].end()); ++x) {
    }
    if (x == n) return false;
  }
}

}  // namespace

TEST_CASE("conical colimit of the swap is a point") {
  const SetCategory c = parallel_pair();
  // p ↦ 2, q ↦ 2, u ↦ id, v ↦ swap
  std::vector<SkMap> maps;
  for (MorId h : c.ordinary->morphisms()) {
    const std::string& n = c.ordinary->name(h);
    maps.push_back(n == "v" ? map_of(2, 2, {1, 0}) : SkMap::identity(SkSet{2}));
  }
  const SetFunctor f = set_functor(c, {2, 2}, maps);
  const WColimit wc = weighted_colimit(terminal_presheaf(c), f);
  CHECK(wc.apex.card == 1);
  Rng rng(1);
  const Tally t = check_universal(wc, standard_probes(wc, rng, 20));
  CHECK(t.checks == 23);
  CHECK(t.failures == 0);
}

TEST_CASE("colimits over the walking arrow") {
  const SetCategory c = arrow_category();
  const FinCat& cat = *c.ordinary;
  // F = (2, 3), F(u) = [0, 2]
  std::vector<SkMap> fm;
  for (MorId h : cat.morphisms()) {
    fm.push_back(cat.name(h) == "u" ? map_of(2, 3, {0, 2}) : SkMap::identity(SkSet{cat.name(h) == "id_a" ? 2u : 3u}));
  }
  const SetFunctor f = set_functor(c, {2, 3}, fm);
  auto weight = [&](std::size_t wa, std::size_t wb, std::vector<std::size_t> wu) {
    std::vector<SkMap> m;
    for (MorId h : cat.morphisms()) {
      m.push_back(cat.name(h) == "u" ? map_of(wb, wa, wu) : SkMap::identity(SkSet{cat.name(h) == "id_a" ? wa : wb}));
    }
    return set_presheaf(c, {wa, wb}, m);
  };
  // representables give F(a) and F(b); the conical colimit is F(b);
  // Y(a) ⊔ Y(b) gives 2 + 3; gluing both elements of W(b) over W(a) gives 4
  const std::vector<std::pair<SetPresheaf, std::size_t>> cases = {
      {representable(*c.enriched, 0), 2}, {representable(*c.enriched, 1), 3}, {terminal_presheaf(c), 3},
      {weight(2, 1, {1}), 5},             {weight(1, 2, {0, 0}), 4}};
  Rng rng(3);
  for (const auto& [w, apex] : cases) {
    const WColimit wc = weighted_colimit(w, f);
    CHECK(wc.apex.card == apex);
    same_partition(c, wc, naive_colimit(c, w, f));
    CHECK(check_universal(wc, standard_probes(wc, rng, 20)).failures == 0);
  }
}

TEST_CASE("colimits agree with a naive quotient on random instances") {
  Rng rng(5);
  SamplerStats stats;
  for (int i = 0; i < 40; ++i) {
    const SetCategory c = random_set_category(rng, stats);
    const SetFunctor f = random_set_functor(c, rng, stats);
    const SetPresheaf w = random_set_presheaf(c, rng, stats);
    const WColimit wc = weighted_colimit(w, f);
    const NaiveColimit n = naive_colimit(c, w, f);
    CHECK(wc.apex.card == n.classes);
    same_partition(c, wc, n);
  }
}

TEST_CASE("mediators exist exactly for cocones") {
  const SetCategory c = arrow_category();
  const SetFunctor f = corepresentable(c, 0);
  const WColimit wc = weighted_colimit(terminal_presheaf(c), f);
  CHECK(wc.apex.card == 1);
  std::vector<SkMap> bad;
  for (const auto& leg : wc.legs) bad.push_back(SkMap::make(leg.dom, SkSet{2}, std::vector<std::size_t>(leg.dom.card, 0)));
  bad.back().table.back() = 1;
  CHECK(cocone_failure(wc.weight, f, SkSet{2}, bad));
  CHECK_FALSE(mediator(wc, SkSet{2}, bad));
  CHECK_FALSE(cocone_failure(wc.weight, f, wc.apex, wc.legs));
  CHECK(mediator(wc, wc.apex, wc.legs) == SkMap::identity(wc.apex));
}

TEST_CASE("canonical presentation is naturally isomorphic to the presheaf") {
  Rng rng(9);
  SamplerStats stats;
  for (int i = 0; i < 25; ++i) {
    const SetCategory c = random_set_category(rng, stats);
    const SetPresheaf w = random_set_presheaf(c, rng, stats);
    const Presentation p = canonical_presentation(c, w);
    CHECK_FALSE(p.failure);
    CHECK(naturally_isomorphic(c, p.colimit, w));
    for (std::size_t x = 0; x < c.size(); ++x) CHECK(p.comparison[x].bijective());
  }
}

TEST_CASE("restriction after extension recovers the diagram") {
  const SetCategory c = arrow_category();
  const SetFunctor f = corepresentable(c, 0);
  const Ext ext(f);
  const SetFunctor r = res(ext);
  for (std::size_t x = 0; x < c.size(); ++x) CHECK(r.ob_map[x] == f.ob_map[x]);
  const UnitIso eta = ext_unit(ext, r);
  for (std::size_t x = 0; x < c.size(); ++x) {
    CHECK(eta.forward[x].bijective());
    CHECK(compose(eta.backward[x], eta.forward[x]) == SkMap::identity(f.ob_map[x]));
  }
}

TEST_CASE("coproducts and quotients of weights") {
  const SetCategory c = parallel_pair();
  const SetMCat& a = *c.enriched;
  const SetPresheaf yp = representable(a, 0), yq = representable(a, 1);
  const PresheafCoproduct s = coproduct_presheaf(a, yp, yq);
  CHECK(cards_of(s.sum) == std::vector<std::size_t>{3, 1});
  // Y(q)(p) = {u, v}; identify u and v
  const PresheafCoequalizer q = coequalizer_presheaf(a, yq, yoneda_element(a, yq, 0, 0), yoneda_element(a, yq, 0, 1));
  CHECK(cards_of(q.quotient) == std::vector<std::size_t>{1, 1});
  CHECK(naturally_isomorphic(c, q.quotient, terminal_presheaf(c)));
}

TEST_CASE("extension is an equivalence on the shipped set categories") {
  Rng rng(13);
  SamplerStats stats;
  for (const SetCategory& c : {arrow_category(), parallel_pair(), point_category()}) {
    const SetMCat& a = *c.enriched;
    for (int i = 0; i < 4; ++i) {
      EquivalenceInstance inst{"shipped", c, random_set_functor(c, rng, stats), {}};
      inst.weights.push_back(terminal_presheaf(c));
      for (std::size_t x = 0; x < c.size(); ++x) inst.weights.push_back(representable(a, x));
      inst.weights.push_back(coproduct_presheaf(a, representable(a, 0), terminal_presheaf(c)).sum);
      inst.weights.push_back(random_set_presheaf(c, rng, stats));
      const Tally t = check_equivalence(inst);
      CHECK(t.checks > 0);
      CHECK(t.failures == 0);
    }
  }
}

TEST_CASE("tensor comparison") {
  const SetCategory c = arrow_category();
  const Ext ext(corepresentable(c, 0));
  const SetPresheaf w = terminal_presheaf(c);
  for (std::size_t m = 0; m < 3; ++m) {
    const SkMap t = ext.tensor_comparison(SkSet{m}, w);
    CHECK(t.bijective());
    CHECK(t.dom.card == m * ext(w).apex.card);
  }
}
