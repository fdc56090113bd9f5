#include "enrichkit/finset.hpp"

#include <algorithm>
#include <numeric>

namespace enrichkit {

namespace {

void check_card(std::size_t card, std::size_t max_card) {
  if (card > max_card) {
    throw Error(ErrorKind::Overflow,
                "cardinality " + std::to_string(card) + " exceeds cap " + std::to_string(max_card));
  }
}

}  // namespace

SkMap SkMap::make(SkSet dom, SkSet cod, std::vector<std::size_t> table) {
  if (table.size() != dom.card) {
    throw Error(ErrorKind::ShapeMismatch, "table length " + std::to_string(table.size()) +
                                              " for domain of card " + std::to_string(dom.card));
  }
  for (std::size_t v : table) {
    if (v >= cod.card) {
      throw Error(ErrorKind::ShapeMismatch,
                  "entry " + std::to_string(v) + " outside codomain of card " + std::to_string(cod.card));
    }
  }
  return SkMap{dom, cod, std::move(table)};
}

SkMap SkMap::identity(SkSet s) {
  std::vector<std::size_t> t(s.card);
  std::iota(t.begin(), t.end(), std::size_t{0});
  return SkMap{s, s, std::move(t)};
}

SkMap SkMap::constant(SkSet dom, SkSet cod, std::size_t value) {
  return make(dom, cod, std::vector<std::size_t>(dom.card, value));
}

bool SkMap::injective() const {
  std::vector<bool> seen(cod.card, false);
  for (std::size_t v : table) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool SkMap::surjective() const {
  std::vector<bool> seen(cod.card, false);
  for (std::size_t v : table) seen[v] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

SkMap compose(const SkMap& g, const SkMap& f) {
  if (f.cod != g.dom) {
    throw Error(ErrorKind::ShapeMismatch, "composing maps with cod " + std::to_string(f.cod.card) +
                                              " and dom " + std::to_string(g.dom.card));
  }
  std::vector<std::size_t> t(f.dom.card);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = g.table[f.table[i]];
  return SkMap{f.dom, g.cod, std::move(t)};
}

SkMap inverse(const SkMap& f) {
  if (!f.bijective()) throw Error(ErrorKind::ShapeMismatch, "inverting a non-bijection");
  std::vector<std::size_t> t(f.cod.card);
  for (std::size_t i = 0; i < f.dom.card; ++i) t[f.table[i]] = i;
  return SkMap{f.cod, f.dom, std::move(t)};
}

std::string describe(const SkMap& f) {
  std::string s = std::to_string(f.dom.card) + "→" + std::to_string(f.cod.card) + " [";
  for (std::size_t i = 0; i < f.table.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(f.table[i]);
  }
  return s + "]";
}

SkSet product(SkSet x, SkSet y, std::size_t max_card) {
  if (y.card != 0 && x.card > max_card / y.card) {
    throw Error(ErrorKind::Overflow, "product " + std::to_string(x.card) + "×" +
                                         std::to_string(y.card) + " exceeds cap");
  }
  check_card(x.card * y.card, max_card);
  return SkSet{x.card * y.card};
}

SkMap product(const SkMap& f, const SkMap& g, std::size_t max_card) {
  const SkSet dom = product(f.dom, g.dom, max_card);
  const SkSet cod = product(f.cod, g.cod, max_card);
  std::vector<std::size_t> t(dom.card);
  for (std::size_t i = 0; i < f.dom.card; ++i) {
    for (std::size_t j = 0; j < g.dom.card; ++j) {
      t[pair(g.dom, i, j)] = pair(g.cod, f.table[i], g.table[j]);
    }
  }
  return SkMap{dom, cod, std::move(t)};
}

SkMap Coproduct::injection(std::size_t p) const {
  std::vector<std::size_t> t(parts[p].card);
  std::iota(t.begin(), t.end(), offsets[p]);
  return SkMap{parts[p], total, std::move(t)};
}

std::pair<std::size_t, std::size_t> Coproduct::locate(std::size_t element) const {
  // Empty parts share offsets with their successor; pick the last part
  // starting at or before the element that is non-empty.
  auto it = std::upper_bound(offsets.begin(), offsets.end(), element);
  std::size_t p = static_cast<std::size_t>(it - offsets.begin()) - 1;
  while (parts[p].card == 0) --p;
  return {p, element - offsets[p]};
}

SkMap Coproduct::copair(std::span<const SkMap> maps) const {
  if (maps.size() != parts.size()) throw Error(ErrorKind::ShapeMismatch, "copair arity");
  if (maps.empty()) return SkMap{total, SkSet{0}, {}};
  const SkSet cod = maps.front().cod;
  std::vector<std::size_t> t(total.card);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (maps[p].dom != parts[p] || maps[p].cod != cod) {
      throw Error(ErrorKind::ShapeMismatch, "copair component " + std::to_string(p));
    }
    for (std::size_t i = 0; i < parts[p].card; ++i) t[offsets[p] + i] = maps[p].table[i];
  }
  return SkMap{total, cod, std::move(t)};
}

Coproduct coproduct(std::span<const SkSet> parts, std::size_t max_card) {
  Coproduct c;
  c.parts.assign(parts.begin(), parts.end());
  std::size_t sum = 0;
  for (SkSet p : parts) {
    c.offsets.push_back(sum);
    if (p.card > max_card - sum) throw Error(ErrorKind::Overflow, "coproduct exceeds cap");
    sum += p.card;
  }
  c.total = SkSet{sum};
  return c;
}

SkMap coproduct(const SkMap& f, const SkMap& g, std::size_t max_card) {
  const SkSet dom{f.dom.card + g.dom.card};
  const SkSet cod{f.cod.card + g.cod.card};
  check_card(dom.card, max_card);
  check_card(cod.card, max_card);
  std::vector<std::size_t> t;
  t.reserve(dom.card);
  for (std::size_t v : f.table) t.push_back(v);
  for (std::size_t v : g.table) t.push_back(f.cod.card + v);
  return SkMap{dom, cod, std::move(t)};
}

DisjointSets::DisjointSets(std::size_t n) : parent_(n) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSets::find(std::size_t x) {
  std::size_t root = x;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[x] != root) x = std::exchange(parent_[x], root);
  return root;
}

void DisjointSets::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return;
  if (a < b) {
    parent_[b] = a;
  } else {
    parent_[a] = b;
  }
}

Coequalizer coequalizer(const SkMap& f, const SkMap& g) {
  if (f.dom != g.dom || f.cod != g.cod) {
    throw Error(ErrorKind::ShapeMismatch, "coequalizer of maps with different shapes");
  }
  DisjointSets sets(f.cod.card);
  for (std::size_t i = 0; i < f.dom.card; ++i) sets.unite(f.table[i], g.table[i]);

  Coequalizer q;
  std::vector<std::size_t> class_of_root(f.cod.card, 0);
  for (std::size_t i = 0; i < f.cod.card; ++i) {
    if (sets.find(i) == i) {
      class_of_root[i] = q.representatives.size();
      q.representatives.push_back(i);
    }
  }
  q.quotient = SkSet{q.representatives.size()};
  std::vector<std::size_t> t(f.cod.card);
  for (std::size_t i = 0; i < f.cod.card; ++i) t[i] = class_of_root[sets.find(i)];
  q.projection = SkMap{f.cod, q.quotient, std::move(t)};
  return q;
}

SkMap Coequalizer::factor(const SkMap& h) const {
  if (h.dom != projection.dom) throw Error(ErrorKind::ShapeMismatch, "factoring a map of wrong domain");
  std::vector<std::size_t> t(quotient.card);
  for (std::size_t c = 0; c < quotient.card; ++c) t[c] = h.table[representatives[c]];
  for (std::size_t i = 0; i < h.dom.card; ++i) {
    if (t[projection.table[i]] != h.table[i]) {
      throw Error(ErrorKind::ShapeMismatch,
                  "map is not constant on the class of " + std::to_string(i));
    }
  }
  return SkMap{quotient, h.cod, std::move(t)};
}

}  // namespace enrichkit
