#include "enrichkit/corpus.hpp"

#include <algorithm>
#include <map>

namespace enrichkit {

MCatPtr boolean_chain() {
  RawEnriched raw;
  raw.objects = {"a", "b"};
  raw.hom = {{"a", "a", "1"}, {"a", "b", "1"}, {"b", "a", "0"}, {"b", "b", "1"}};
  return std::make_shared<const MCat>(make_mcat(boolean_base(), raw));
}

MCatPtr s3_two_object() {
  RawEnriched raw;
  raw.objects = {"x", "y"};
  raw.hom = {{"x", "x", "e"}, {"x", "y", "(12)"}, {"y", "x", "(12)"}, {"y", "y", "e"}};
  return std::make_shared<const MCat>(make_mcat(symmetric_group_s3(), raw));
}

MCatPtr c3_one_object() {
  RawEnriched raw;
  raw.objects = {"*"};
  raw.hom = {{"*", "*", "e"}};
  return std::make_shared<const MCat>(make_mcat(cyclic_group_c3(), raw));
}

MCatPtr empty_mcat() { return std::make_shared<const MCat>(make_mcat(boolean_base(), RawEnriched{})); }

namespace {

// Shipped set categories list only their non-identity arrows.
SetCategory set_category(RawCategory raw) {
  for (const auto& x : raw.objects) raw.morphisms.push_back({"id_" + x, x, x});
  return enrich_over_sets(std::make_shared<const FinCat>(FinCat::validate(raw)));
}

}  // namespace

SetCategory arrow_category() { return set_category({{"a", "b"}, {{"u", "a", "b"}}, {}, {}}); }

SetCategory parallel_pair() { return set_category({{"p", "q"}, {{"u", "p", "q"}, {"v", "p", "q"}}, {}, {}}); }

SetCategory point_category() { return set_category({{"*"}, {}, {}, {}}); }

namespace {

using Table = std::vector<std::vector<std::size_t>>;

bool associative(const Table& t) {
  const std::size_t k = t.size();
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      for (std::size_t c = 0; c < k; ++c) {
        if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
      }
    }
  }
  return true;
}

// A monoid on {0..k-1} with unit 0, by rejection.
Table random_monoid(Rng& rng, std::size_t k, bool commutative, SamplerStats& stats) {
  for (;;) {
    ++stats.base_attempts;
    Table t(k, std::vector<std::size_t>(k));
    for (std::size_t i = 0; i < k; ++i) {
      t[0][i] = i;
      t[i][0] = i;
    }
    for (std::size_t i = 1; i < k; ++i) {
      for (std::size_t j = commutative ? i : 1; j < k; ++j) {
        t[i][j] = rng.below(k);
        if (commutative) t[j][i] = t[i][j];
      }
    }
    if (associative(t)) {
      ++stats.base_accepted;
      return t;
    }
  }
}

std::vector<std::string> element_names(std::size_t k) {
  std::vector<std::string> names{"e"};
  for (std::size_t i = 1; i < k; ++i) names.push_back("a" + std::to_string(i));
  return names;
}

// A partial order on {0..k-1} compatible with the monoid t; falls back to the
// discrete order when the draws keep failing.
std::vector<std::vector<bool>> random_order(Rng& rng, const Table& t, SamplerStats& stats) {
  const std::size_t k = t.size();
  for (int attempt = 0; attempt < 20; ++attempt) {
    ++stats.base_attempts;
    std::vector<std::size_t> rank(k);
    for (std::size_t i = 0; i < k; ++i) rank[i] = i;
    rng.shuffle(rank);
    std::vector<std::vector<bool>> le(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i) le[i][i] = true;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (rank[i] < rank[j] && rng.chance(1, 2)) le[i][j] = true;
      }
    }
    for (std::size_t m = 0; m < k; ++m) {
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          if (le[i][m] && le[m][j]) le[i][j] = true;
        }
      }
    }
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      for (std::size_t j = 0; j < k && ok; ++j) {
        if (!le[i][j]) continue;
        for (std::size_t c = 0; c < k && ok; ++c) ok = le[t[i][c]][t[j][c]] && le[t[c][i]][t[c][j]];
      }
    }
    if (ok) {
      ++stats.base_accepted;
      return le;
    }
  }
  std::vector<std::vector<bool>> le(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i) le[i][i] = true;
  return le;
}

MonStrPtr ordered_monoid(const Table& t, const std::vector<std::vector<bool>>& le) {
  const std::size_t k = t.size();
  const auto names = element_names(k);
  RawCategory cat;
  cat.objects = names;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (!le[i][j]) continue;
      cat.morphisms.push_back({i == j ? "id_" + names[i] : names[i] + "<=" + names[j], names[i], names[j]});
    }
  }
  auto carrier = std::make_shared<const FinCat>(FinCat::validate(cat));
  RawMonoidal raw;
  raw.unit = names[0];
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) raw.tensor_ob.push_back({names[i], names[j], names[t[i][j]]});
  }
  return std::make_shared<const MonStr>(MonStr::validate(carrier, raw));
}

}  // namespace

RandomBase random_base(Rng& rng, SamplerStats& stats) {
  switch (rng.below(3)) {
    case 0: {
      const std::size_t k = rng.between(1, 3);
      return {"discrete monoid", discrete_monoid(element_names(k), 0, random_monoid(rng, k, false, stats))};
    }
    case 1: {
      const std::size_t k = rng.between(1, 3);
      const Table t = random_monoid(rng, k, false, stats);
      return {"ordered monoid", ordered_monoid(t, random_order(rng, t, stats))};
    }
    default: {
      const std::size_t k = rng.between(1, 4);
      return {"commutative one-object", one_object_commutative(element_names(k), 0, random_monoid(rng, k, true, stats))};
    }
  }
}

MCatPtr random_mcat(const MonStrPtr& base, std::size_t objects, Rng& rng, SamplerStats& stats,
                    std::size_t attempts) {
  const MonStr& m = *base;
  const auto obs = m.objects();
  const std::size_t n = objects;
  // Composition cells, and the associativity / unit constraints that become
  // checkable once their highest cell is set.
  auto cell = [n](std::size_t x, std::size_t y, std::size_t z) { return (x * n + y) * n + z; };
  std::vector<std::vector<std::array<std::size_t, 4>>> assoc_due(n * n * n);
  std::vector<std::vector<std::array<std::size_t, 2>>> unit_due(n * n * n);
  for (std::size_t w = 0; w < n; ++w) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          assoc_due[std::max({cell(w, x, z), cell(x, y, z), cell(w, y, z), cell(w, x, y)})].push_back({w, x, y, z});
        }
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) unit_due[std::max(cell(x, y, y), cell(x, x, y))].push_back({x, y});
  }

  for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
    ++stats.mcat_attempts;
    MCat a;
    a.base = base;
    for (std::size_t x = 0; x < n; ++x) a.objects.push_back(std::string(1, static_cast<char>('a' + x)));
    for (std::size_t i = 0; i < n * n; ++i) a.homs.push_back(obs[rng.below(obs.size())]);
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      const auto cands = m.hom(m.unit_object(), a.hom(x, x));
      if (cands.empty()) {
        ok = false;
      } else {
        a.units.push_back(cands[rng.below(cands.size())]);
      }
    }
    if (!ok) continue;
    a.comps.assign(n * n * n, MorId{0});
    std::size_t budget = 20000;
    auto check = [&](std::size_t k) {
      for (const auto& [w, x, y, z] : assoc_due[k]) {
        const MorId left = m.compose(a.comp(w, x, z), m.tensor(a.comp(x, y, z), m.identity(a.hom(w, x))));
        const MorId right = m.compose(a.comp(w, y, z), m.tensor(m.identity(a.hom(y, z)), a.comp(w, x, y)));
        if (left != right) return false;
      }
      for (const auto& [x, y] : unit_due[k]) {
        const MorId id = m.identity(a.hom(x, y));
        if (m.compose(a.comp(x, y, y), m.tensor(a.unit(y), id)) != id) return false;
        if (m.compose(a.comp(x, x, y), m.tensor(id, a.unit(x))) != id) return false;
      }
      return true;
    };
    auto search = [&](auto&& self, std::size_t k) -> bool {
      if (k == n * n * n) return true;
      const std::size_t x = k / (n * n), y = (k / n) % n, z = k % n;
      const auto span = m.hom(m.tensor(a.hom(y, z), a.hom(x, y)), a.hom(x, z));
      std::vector<MorId> cands(span.begin(), span.end());
      rng.shuffle(cands);
      for (MorId c : cands) {
        if (budget == 0) return false;
        --budget;
        a.comps[k] = c;
        if (check(k) && self(self, k + 1)) return true;
      }
      return false;
    };
    if (!search(search, 0)) continue;
    validate_mcat(a);
    ++stats.mcat_accepted;
    return std::make_shared<const MCat>(std::move(a));
  }
  return nullptr;
}

namespace {

struct Arrow {
  std::size_t dom, cod;
  SkMap map;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

}  // namespace

SetCategory random_set_category(Rng& rng, SamplerStats& stats) {
  for (;;) {
    ++stats.category_attempts;
    const std::size_t k = rng.between(1, 3);
    std::vector<SkSet> cards;
    for (std::size_t i = 0; i < k; ++i) cards.push_back(SkSet{rng.between(1, 3)});
    std::vector<Arrow> arrows;
    for (std::size_t i = 0; i < k; ++i) arrows.push_back({i, i, SkMap::identity(cards[i])});
    const std::size_t generators = rng.between(0, 3);
    for (std::size_t g = 0; g < generators; ++g) {
      const std::size_t d = rng.below(k), c = rng.below(k);
      std::vector<std::size_t> t;
      for (std::size_t i = 0; i < cards[d].card; ++i) t.push_back(rng.below(cards[c].card));
      Arrow a{d, c, SkMap::make(cards[d], cards[c], std::move(t))};
      if (std::find(arrows.begin(), arrows.end(), a) == arrows.end()) arrows.push_back(std::move(a));
    }
    // Close under composition, giving up once a hom-set exceeds 3.
    bool too_big = false;
    for (bool grew = true; grew && !too_big;) {
      grew = false;
      const std::size_t count = arrows.size();
      for (std::size_t g = 0; g < count && !too_big; ++g) {
        for (std::size_t f = 0; f < count && !too_big; ++f) {
          if (arrows[g].dom != arrows[f].cod) continue;
          Arrow gf{arrows[f].dom, arrows[g].cod, compose(arrows[g].map, arrows[f].map)};
          if (std::find(arrows.begin(), arrows.end(), gf) != arrows.end()) continue;
          arrows.push_back(std::move(gf));
          grew = true;
          const auto hom_size = std::count_if(arrows.begin(), arrows.end(), [&](const Arrow& a) {
            return a.dom == arrows.back().dom && a.cod == arrows.back().cod;
          });
          too_big = hom_size > 3;
        }
      }
    }
    if (too_big) continue;
    ++stats.category_accepted;
    RawCategory raw;
    for (std::size_t i = 0; i < k; ++i) raw.objects.push_back("x" + std::to_string(i));
    for (std::size_t i = 0; i < arrows.size(); ++i) {
      raw.morphisms.push_back({i < k ? "id" + std::to_string(i) : "m" + std::to_string(i - k),
                               raw.objects[arrows[i].dom], raw.objects[arrows[i].cod]});
    }
    for (std::size_t i = 0; i < k; ++i) raw.identities.emplace_back(raw.objects[i], raw.morphisms[i].name);
    for (std::size_t g = 0; g < arrows.size(); ++g) {
      for (std::size_t f = 0; f < arrows.size(); ++f) {
        if (arrows[g].dom != arrows[f].cod) continue;
        const Arrow gf{arrows[f].dom, arrows[g].cod, compose(arrows[g].map, arrows[f].map)};
        const auto pos = std::find(arrows.begin(), arrows.end(), gf) - arrows.begin();
        raw.compose.push_back({raw.morphisms[g].name, raw.morphisms[f].name,
                               raw.morphisms[static_cast<std::size_t>(pos)].name});
      }
    }
    return enrich_over_sets(std::make_shared<const FinCat>(FinCat::validate(raw)));
  }
}

namespace {

std::vector<SkMap> all_maps(SkSet dom, SkSet cod) {
  std::vector<SkMap> out;
  std::size_t count = 1;
  for (std::size_t i = 0; i < dom.card; ++i) count *= cod.card;
  for (std::size_t code = 0; code < count; ++code) {
    std::vector<std::size_t> t(dom.card);
    std::size_t c = code;
    for (std::size_t i = 0; i < dom.card; ++i) {
      t[i] = c % cod.card;
      c /= cod.card;
    }
    out.push_back(SkMap::make(dom, cod, std::move(t)));
  }
  return out;
}

// Random functorial assignment of maps to the morphisms of c, covariant or
// contravariant. Returns false when the search budget runs out.
bool random_maps(const SetCategory& c, const std::vector<std::size_t>& cards, bool contravariant, Rng& rng,
                 std::vector<SkMap>& maps) {
  const FinCat& cat = *c.ordinary;
  const auto mors = cat.morphisms();
  maps.assign(mors.size(), SkMap{});
  std::vector<bool> set(mors.size(), false);
  for (ObId x : cat.objects()) {
    maps[cat.identity(x).value] = SkMap::identity(SkSet{cards[x.value]});
    set[cat.identity(x).value] = true;
  }
  std::vector<MorId> todo;
  for (MorId f : mors) {
    if (!set[f.value]) todo.push_back(f);
  }
  auto consistent = [&]() {
    for (MorId g : mors) {
      for (MorId f : mors) {
        if (!cat.composable(g, f)) continue;
        const MorId gf = cat.compose(g, f);
        if (!set[g.value] || !set[f.value] || !set[gf.value]) continue;
        const SkMap expect = contravariant ? compose(maps[f.value], maps[g.value]) : compose(maps[g.value], maps[f.value]);
        if (expect != maps[gf.value]) return false;
      }
    }
    return true;
  };
  std::size_t budget = 5000;
  auto search = [&](auto&& self, std::size_t k) -> bool {
    if (k == todo.size()) return true;
    const MorId f = todo[k];
    SkSet src{cards[cat.dom(f).value]}, dst{cards[cat.cod(f).value]};
    if (contravariant) std::swap(src, dst);
    auto cands = all_maps(src, dst);
    rng.shuffle(cands);
    for (auto& cand : cands) {
      if (budget == 0) return false;
      --budget;
      maps[f.value] = std::move(cand);
      set[f.value] = true;
      if (consistent() && self(self, k + 1)) return true;
      set[f.value] = false;
    }
    return false;
  };
  return search(search, 0);
}

}  // namespace

SetPresheaf terminal_presheaf(const SetCategory& c) {
  std::vector<SkMap> maps;
  for (MorId f : c.ordinary->morphisms()) {
    (void)f;
    maps.push_back(SkMap::identity(SkSet{1}));
  }
  return set_presheaf(c, std::vector<std::size_t>(c.size(), 1), maps);
}

SetPresheaf random_set_presheaf(const SetCategory& c, Rng& rng, SamplerStats& stats, std::size_t max_card) {
  for (int attempt = 0; attempt < 10; ++attempt) {
    std::vector<std::size_t> cards;
    for (std::size_t x = 0; x < c.size(); ++x) cards.push_back(rng.between(0, max_card));
    std::vector<SkMap> maps;
    if (random_maps(c, cards, true, rng, maps)) return set_presheaf(c, cards, maps);
  }
  ++stats.diagram_fallbacks;
  return terminal_presheaf(c);
}

SetFunctor random_set_functor(const SetCategory& c, Rng& rng, SamplerStats& stats, std::size_t max_card) {
  for (int attempt = 0; attempt < 10; ++attempt) {
    std::vector<std::size_t> cards;
    for (std::size_t x = 0; x < c.size(); ++x) cards.push_back(rng.between(0, max_card));
    std::vector<SkMap> maps;
    if (random_maps(c, cards, false, rng, maps)) return set_functor(c, cards, maps);
  }
  ++stats.diagram_fallbacks;
  std::vector<SkMap> maps(c.ordinary->morphism_count(), SkMap::identity(SkSet{1}));
  return set_functor(c, std::vector<std::size_t>(c.size(), 1), maps);
}

}  // namespace enrichkit
