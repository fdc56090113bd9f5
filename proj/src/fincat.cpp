#include "enrichkit/fincat.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace enrichkit {

namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

std::size_t saturating_mul(std::size_t a, std::size_t b, std::size_t cap) {
  if (a == 0 || b == 0) return 0;
  if (a > cap / b) return cap + 1;
  return std::min(a * b, cap + 1);
}

}  // namespace

FinCat FinCat::validate(const RawCategory& raw, const Limits& limits) {
  if (raw.objects.size() > limits.max_objects) {
    throw Error(ErrorKind::SizeBound, std::to_string(raw.objects.size()) + " objects exceed cap " +
                                          std::to_string(limits.max_objects));
  }
  if (raw.morphisms.size() > limits.max_morphisms) {
    throw Error(ErrorKind::SizeBound, std::to_string(raw.morphisms.size()) +
                                          " morphisms exceed cap " +
                                          std::to_string(limits.max_morphisms));
  }

  FinCat c;
  std::map<std::string, std::uint32_t, std::less<>> ob_index;
  std::map<std::string, std::uint32_t, std::less<>> mor_index;
  for (const auto& name : raw.objects) {
    if (!ob_index.emplace(name, static_cast<std::uint32_t>(ob_index.size())).second) {
      throw Error(ErrorKind::SchemaViolation, "duplicate object '" + name + "'");
    }
    c.object_names_.push_back(name);
  }
  auto lookup_ob = [&](const std::string& name, std::string_view context) {
    auto it = ob_index.find(name);
    if (it == ob_index.end()) {
      throw Error(ErrorKind::DanglingReference,
                  "undeclared object '" + name + "' in " + std::string(context));
    }
    return ObId{it->second};
  };
  for (const auto& m : raw.morphisms) {
    if (!mor_index.emplace(m.name, static_cast<std::uint32_t>(mor_index.size())).second) {
      throw Error(ErrorKind::SchemaViolation, "duplicate morphism '" + m.name + "'");
    }
    c.mor_names_.push_back(m.name);
    c.dom_.push_back(lookup_ob(m.dom, "morphism " + m.name));
    c.cod_.push_back(lookup_ob(m.cod, "morphism " + m.name));
  }
  auto lookup_mor = [&](const std::string& name, std::string_view context) {
    auto it = mor_index.find(name);
    if (it == mor_index.end()) {
      throw Error(ErrorKind::DanglingReference,
                  "undeclared morphism '" + name + "' in " + std::string(context));
    }
    return MorId{it->second};
  };

  const std::size_t n_ob = c.object_names_.size();
  const std::size_t n_mor = c.mor_names_.size();
  c.hom_.assign(n_ob * n_ob, {});
  for (std::uint32_t f = 0; f < n_mor; ++f) {
    c.hom_[c.dom_[f].value * n_ob + c.cod_[f].value].push_back(MorId{f});
  }

  c.compose_.assign(n_mor * n_mor, kUnset);
  for (const auto& [gn, fn, hn] : raw.compose) {
    const MorId g = lookup_mor(gn, "compose entry");
    const MorId f = lookup_mor(fn, "compose entry");
    const MorId h = lookup_mor(hn, "compose entry");
    if (c.dom(g) != c.cod(f)) {
      throw Error(ErrorKind::TypeMismatch, "compose entry (" + gn + ", " + fn +
                                               ") is not a composable pair");
    }
    auto& cell = c.compose_[g.value * n_mor + f.value];
    if (cell != kUnset && cell != h.value) {
      throw Error(ErrorKind::SchemaViolation,
                  "conflicting compose entries for (" + gn + ", " + fn + ")");
    }
    cell = h.value;
  }

  c.identity_.assign(n_ob, MorId{kUnset});
  for (const auto& [on, mn] : raw.identities) {
    const ObId x = lookup_ob(on, "identity declaration");
    const MorId e = lookup_mor(mn, "identity declaration");
    if (c.dom(e) != x || c.cod(e) != x) {
      throw Error(ErrorKind::UnitViolation,
                  "declared identity " + mn + " is not an endomorphism of " + on);
    }
    c.identity_[x.value] = e;
  }
  for (std::uint32_t x = 0; x < n_ob; ++x) {
    if (c.identity_[x].value != kUnset) continue;
    const auto endos = c.hom(ObId{x}, ObId{x});
    if (endos.size() == 1) {
      c.identity_[x] = endos.front();
      continue;
    }
    for (MorId e : endos) {
      bool unit = true;
      for (std::uint32_t f = 0; f < n_mor && unit; ++f) {
        if (c.cod_[f].value == x) unit = c.compose_[e.value * n_mor + f] == f;
        if (unit && c.dom_[f].value == x) unit = c.compose_[f * n_mor + e.value] == f;
      }
      if (unit) {
        c.identity_[x] = e;
        break;
      }
    }
    if (c.identity_[x].value == kUnset) {
      throw Error(ErrorKind::UnitViolation, "object " + c.object_names_[x] + " has no identity");
    }
  }

  for (std::uint32_t g = 0; g < n_mor; ++g) {
    for (std::uint32_t f = 0; f < n_mor; ++f) {
      if (c.dom_[g] != c.cod_[f]) continue;
      auto& cell = c.compose_[g * n_mor + f];
      if (cell != kUnset) continue;
      if (c.is_identity(MorId{g})) {
        cell = f;
      } else if (c.is_identity(MorId{f})) {
        cell = g;
      } else if (auto h = c.hom(c.dom_[f], c.cod_[g]); h.size() == 1) {
        cell = h.front().value;
      } else {
        throw Error(ErrorKind::MissingComposite,
                    "(" + c.mor_names_[g] + ", " + c.mor_names_[f] + ")");
      }
    }
  }

  for (std::uint32_t g = 0; g < n_mor; ++g) {
    for (std::uint32_t f = 0; f < n_mor; ++f) {
      if (c.dom_[g] != c.cod_[f]) continue;
      const std::uint32_t h = c.compose_[g * n_mor + f];
      if (c.dom_[h] != c.dom_[f] || c.cod_[h] != c.cod_[g]) {
        throw Error(ErrorKind::TypeMismatch, "composite of (" + c.mor_names_[g] + ", " +
                                                 c.mor_names_[f] + ") is " + c.mor_names_[h] +
                                                 " with the wrong domain or codomain");
      }
    }
  }

  for (std::uint32_t f = 0; f < n_mor; ++f) {
    const MorId m{f};
    if (c.compose(c.identity(c.cod(m)), m) != m || c.compose(m, c.identity(c.dom(m))) != m) {
      throw Error(ErrorKind::UnitViolation, c.mor_names_[f]);
    }
  }

  for (std::uint32_t h = 0; h < n_mor; ++h) {
    for (std::uint32_t g = 0; g < n_mor; ++g) {
      if (c.dom_[h] != c.cod_[g]) continue;
      for (std::uint32_t f = 0; f < n_mor; ++f) {
        if (c.dom_[g] != c.cod_[f]) continue;
        const MorId left = c.compose(MorId{h}, c.compose(MorId{g}, MorId{f}));
        const MorId right = c.compose(c.compose(MorId{h}, MorId{g}), MorId{f});
        if (left != right) {
          throw Error(ErrorKind::AssociativityViolation,
                      "(" + c.mor_names_[h] + ", " + c.mor_names_[g] + ", " + c.mor_names_[f] +
                          "): h∘(g∘f) = " + c.mor_names_[left.value] + " but (h∘g)∘f = " +
                          c.mor_names_[right.value]);
        }
      }
    }
  }
  return c;
}

std::optional<ObId> FinCat::find_object(std::string_view name) const {
  auto it = std::find(object_names_.begin(), object_names_.end(), name);
  if (it == object_names_.end()) return std::nullopt;
  return ObId{static_cast<std::uint32_t>(it - object_names_.begin())};
}

std::optional<MorId> FinCat::find_morphism(std::string_view name) const {
  auto it = std::find(mor_names_.begin(), mor_names_.end(), name);
  if (it == mor_names_.end()) return std::nullopt;
  return MorId{static_cast<std::uint32_t>(it - mor_names_.begin())};
}

std::optional<MorId> FinCat::inverse(MorId f) const {
  for (MorId g : hom(cod(f), dom(f))) {
    if (compose(g, f) == identity(dom(f)) && compose(f, g) == identity(cod(f))) return g;
  }
  return std::nullopt;
}

std::vector<ObId> FinCat::objects() const {
  std::vector<ObId> out(object_count());
  for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = ObId{i};
  return out;
}

std::vector<MorId> FinCat::morphisms() const {
  std::vector<MorId> out(morphism_count());
  for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = MorId{i};
  return out;
}

RawCategory FinCat::to_raw() const {
  RawCategory raw;
  raw.objects = object_names_;
  for (std::size_t f = 0; f < mor_names_.size(); ++f) {
    raw.morphisms.push_back(
        {mor_names_[f], object_names_[dom_[f].value], object_names_[cod_[f].value]});
  }
  for (std::size_t x = 0; x < object_names_.size(); ++x) {
    raw.identities.emplace_back(object_names_[x], mor_names_[identity_[x].value]);
  }
  for (MorId g : morphisms()) {
    for (MorId f : morphisms()) {
      if (composable(g, f)) raw.compose.push_back({name(g), name(f), name(compose(g, f))});
    }
  }
  return raw;
}

std::optional<std::string> functor_failure(const FinFunctor& F) {
  const FinCat& c = *F.source;
  const FinCat& d = *F.target;
  if (F.ob_map.size() != c.object_count() || F.mor_map.size() != c.morphism_count()) {
    return "functor tables have the wrong size";
  }
  for (MorId f : c.morphisms()) {
    const MorId image = F(f);
    if (d.dom(image) != F(c.dom(f)) || d.cod(image) != F(c.cod(f))) {
      return "image of " + c.name(f) + " has the wrong domain or codomain";
    }
  }
  for (ObId x : c.objects()) {
    if (F(c.identity(x)) != d.identity(F(x))) return "identity of " + c.name(x) + " not preserved";
  }
  for (MorId g : c.morphisms()) {
    for (MorId f : c.morphisms()) {
      if (!c.composable(g, f)) continue;
      if (F(c.compose(g, f)) != d.compose(F(g), F(f))) {
        return "composite (" + c.name(g) + ", " + c.name(f) + ") not preserved";
      }
    }
  }
  return std::nullopt;
}

FinFunctor identity_functor(FinCatPtr c) {
  FinFunctor f{c, c, c->objects(), c->morphisms()};
  return f;
}

FinFunctor compose(const FinFunctor& g, const FinFunctor& f) {
  FinFunctor h{f.source, g.target, {}, {}};
  for (ObId x : f.ob_map) h.ob_map.push_back(g(x));
  for (MorId m : f.mor_map) h.mor_map.push_back(g(m));
  return h;
}

std::vector<FinFunctor> enumerate_functors(const FinCatPtr& cp, const FinCatPtr& dp,
                                           const Limits& limits) {
  const FinCat& c = *cp;
  const FinCat& d = *dp;
  const std::size_t cap = limits.max_candidates;
  const std::size_t n_ob = c.object_count();
  const std::size_t n_mor = c.morphism_count();

  std::size_t object_maps = 1;
  for (std::size_t i = 0; i < n_ob; ++i) object_maps = saturating_mul(object_maps, d.object_count(), cap);
  if (n_ob > 0 && d.object_count() == 0) return {};
  if (object_maps > cap) {
    throw Error(ErrorKind::SizeBound, "object maps exceed candidate cap");
  }

  // Typed candidate count: sum over object maps of the product of target
  // hom-set sizes over non-identity morphisms.
  std::size_t space = 0;
  std::vector<ObId> obs(n_ob, ObId{0});
  for (std::size_t k = 0; k < object_maps; ++k) {
    std::size_t prod = 1;
    for (MorId f : c.morphisms()) {
      if (c.is_identity(f)) continue;
      prod = saturating_mul(prod, d.hom(obs[c.dom(f).value], obs[c.cod(f).value]).size(), cap);
    }
    space = std::min(space + prod, cap + 1);
    if (space > cap) throw Error(ErrorKind::SizeBound, "functor search space exceeds candidate cap");
    for (std::size_t i = n_ob; i-- > 0;) {
      if (++obs[i].value < d.object_count()) break;
      obs[i].value = 0;
    }
  }

  // Composition constraints become checkable once all three morphisms are assigned.
  struct Constraint {
    MorId g, f, h;
  };
  std::vector<std::vector<Constraint>> due(n_mor);
  for (MorId g : c.morphisms()) {
    for (MorId f : c.morphisms()) {
      if (!c.composable(g, f)) continue;
      const MorId h = c.compose(g, f);
      due[std::max({g.value, f.value, h.value})].push_back({g, f, h});
    }
  }

  std::vector<FinFunctor> out;
  FinFunctor cur{cp, dp, std::vector<ObId>(n_ob), std::vector<MorId>(n_mor)};

  auto assign_mor = [&](auto&& self, std::size_t k) -> void {
    if (k == n_mor) {
      out.push_back(cur);
      return;
    }
    const MorId f{static_cast<std::uint32_t>(k)};
    auto consistent = [&] {
      for (const auto& con : due[k]) {
        if (cur(con.h) != d.compose(cur(con.g), cur(con.f))) return false;
      }
      return true;
    };
    if (c.is_identity(f)) {
      cur.mor_map[k] = d.identity(cur(c.dom(f)));
      if (consistent()) self(self, k + 1);
      return;
    }
    for (MorId cand : d.hom(cur(c.dom(f)), cur(c.cod(f)))) {
      cur.mor_map[k] = cand;
      if (consistent()) self(self, k + 1);
    }
  };
  auto assign_ob = [&](auto&& self, std::size_t i) -> void {
    if (i == n_ob) {
      assign_mor(assign_mor, 0);
      return;
    }
    for (std::uint32_t y = 0; y < d.object_count(); ++y) {
      cur.ob_map[i] = ObId{y};
      self(self, i + 1);
    }
  };
  assign_ob(assign_ob, 0);
  return out;
}

NatIsoVerdict check_nat_iso(const NatIso& t) {
  NatIsoVerdict v;
  auto fail = [&](std::string s) {
    v.ok = false;
    v.failures.push_back(std::move(s));
  };
  const FinFunctor& F = t.source;
  const FinFunctor& G = t.target;
  if (!(*F.source == *G.source) || !(*F.target == *G.target)) {
    fail("functors do not share source and target");
    return v;
  }
  const FinCat& c = *F.source;
  const FinCat& d = *F.target;
  if (t.components.size() != c.object_count()) {
    fail("component table has the wrong size");
    return v;
  }
  bool typed = true;
  for (ObId x : c.objects()) {
    const MorId a = t.components[x.value];
    if (d.dom(a) != F(x) || d.cod(a) != G(x)) {
      fail("component at " + c.name(x) + " is not a morphism F(x)→G(x)");
      typed = false;
    } else if (!d.is_iso(a)) {
      fail("component at " + c.name(x) + " (" + d.name(a) + ") is not invertible");
    }
  }
  if (!typed) return v;
  for (MorId f : c.morphisms()) {
    const MorId left = d.compose(G(f), t.components[c.dom(f).value]);
    const MorId right = d.compose(t.components[c.cod(f).value], F(f));
    if (left != right) {
      fail("naturality square for " + c.name(f) + ": G(f)∘t = " + d.name(left) + " but t∘F(f) = " +
           d.name(right));
    }
  }
  return v;
}

}  // namespace enrichkit
