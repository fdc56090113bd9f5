#include "enrichkit/presheaf.hpp"

#include <algorithm>

namespace enrichkit {

namespace {

class SearchBudget {
 public:
  explicit SearchBudget(std::size_t cap) : cap_(cap) {}
  void tick() {
    if (++used_ > cap_) throw Error(ErrorKind::SizeBound, "search exceeds candidate cap " + std::to_string(cap_));
  }

 private:
  std::size_t cap_;
  std::size_t used_ = 0;
};

std::vector<std::vector<MorId>> enumerate_presheaf_mors(const MCat& a, const FinPresheaf& f,
                                                        const FinPresheaf& g, SearchBudget& budget) {
  const MonStr& m = *a.base;
  const std::size_t n = a.size();
  std::vector<std::vector<MorId>> out;
  std::vector<MorId> cur(n);
  auto square = [&](std::size_t x, std::size_t y) {
    return m.compose(g.action(x, y), m.tensor(cur[y], m.identity(a.hom(x, y)))) ==
           m.compose(cur[x], f.action(x, y));
  };
  auto assign = [&](auto&& self, std::size_t k) -> void {
    if (k == n) {
      out.push_back(cur);
      return;
    }
    for (MorId cand : m.hom(f.values[k], g.values[k])) {
      budget.tick();
      cur[k] = cand;
      bool ok = true;
      for (std::size_t j = 0; j <= k && ok; ++j) ok = square(j, k) && square(k, j);
      if (ok) self(self, k + 1);
    }
  };
  assign(assign, 0);
  return out;
}

}  // namespace

std::vector<FinPresheaf> enumerate_presheaf_objects(const MCat& a, UnitLaw unit, const Limits& limits) {
  const MonStr& m = *a.base;
  const std::size_t n = a.size();
  SearchBudget budget(limits.max_candidates);

  std::vector<std::vector<std::array<std::size_t, 3>>> due(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        due[std::max({x * n + y, y * n + z, x * n + z})].push_back({x, y, z});
      }
    }
  }

  std::vector<FinPresheaf> out;
  FinPresheaf cur{std::vector<ObId>(n), std::vector<MorId>(n * n)};
  auto ok_at = [&](std::size_t k) {
    for (const auto& [x, y, z] : due[k]) {
      const MorId left = m.compose(cur.action(x, y), m.tensor(cur.action(y, z), m.identity(a.hom(x, y))));
      const MorId right = m.compose(cur.action(x, z), m.tensor(m.identity(cur.values[z]), a.comp(x, y, z)));
      if (left != right) return false;
    }
    const std::size_t x = k / n;
    if (unit == UnitLaw::enforce && k % n == x) {
      const MorId u = m.compose(cur.action(x, x), m.tensor(m.identity(cur.values[x]), a.unit(x)));
      if (u != m.identity(cur.values[x])) return false;
    }
    return true;
  };
  auto assign_action = [&](auto&& self, std::size_t k) -> void {
    if (k == n * n) {
      out.push_back(cur);
      return;
    }
    const std::size_t x = k / n;
    const std::size_t y = k % n;
    for (MorId cand : m.hom(m.tensor(cur.values[y], a.hom(x, y)), cur.values[x])) {
      budget.tick();
      cur.actions[k] = cand;
      if (ok_at(k)) self(self, k + 1);
    }
  };
  auto assign_value = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      assign_action(assign_action, 0);
      return;
    }
    for (ObId v : m.objects()) {
      budget.tick();
      cur.values[i] = v;
      self(self, i + 1);
    }
  };
  assign_value(assign_value, 0);
  return out;
}

PresheafCategory PresheafCategory::enumerate(const MCatPtr& ap, const Limits& limits) {
  const MCat& a = *ap;
  const MonStr& m = *a.base;
  PresheafCategory p;
  p.source_ = ap;
  p.presheaves_ = enumerate_presheaf_objects(a, UnitLaw::enforce, limits);
  const std::size_t count = p.presheaves_.size();
  if (count > limits.max_objects) {
    throw Error(ErrorKind::SizeBound, std::to_string(count) + " presheaves exceed the object cap");
  }
  for (std::size_t i = 0; i < count; ++i) p.presheaf_index_.emplace(p.presheaves_[i], i);

  SearchBudget budget(limits.max_candidates);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      for (auto& c : enumerate_presheaf_mors(a, p.presheaves_[i], p.presheaves_[j], budget)) {
        p.arrow_index_.emplace(std::tuple{i, j, c}, p.arrows_.size());
        p.arrows_.push_back({i, j, std::move(c)});
        if (p.arrows_.size() > limits.max_morphisms) {
          throw Error(ErrorKind::SizeBound, "presheaf morphisms exceed the morphism cap");
        }
      }
    }
  }

  RawCategory raw;
  for (std::size_t i = 0; i < count; ++i) raw.objects.push_back("P" + std::to_string(i));
  for (std::size_t k = 0; k < p.arrows_.size(); ++k) {
    raw.morphisms.push_back(
        {"a" + std::to_string(k), raw.objects[p.arrows_[k].source], raw.objects[p.arrows_[k].target]});
  }
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<MorId> ids;
    for (ObId v : p.presheaves_[i].values) ids.push_back(m.identity(v));
    const auto k = p.find(i, i, ids);
    if (!k) throw Error(ErrorKind::InternalError, "identity presheaf morphism missing");
    raw.identities.emplace_back(raw.objects[i], raw.morphisms[k->value].name);
  }
  for (std::size_t g = 0; g < p.arrows_.size(); ++g) {
    for (std::size_t f = 0; f < p.arrows_.size(); ++f) {
      const auto& ag = p.arrows_[g];
      const auto& af = p.arrows_[f];
      if (ag.source != af.target) continue;
      std::vector<MorId> comp;
      for (std::size_t x = 0; x < a.size(); ++x) comp.push_back(m.compose(ag.components[x], af.components[x]));
      const auto k = p.find(af.source, ag.target, comp);
      if (!k) throw Error(ErrorKind::InternalError, "composite presheaf morphism missing");
      raw.compose.push_back({raw.morphisms[g].name, raw.morphisms[f].name, raw.morphisms[k->value].name});
    }
  }
  p.category_ = std::make_shared<const FinCat>(FinCat::validate(raw, limits));

  // Left-tensoring m ⊗ f; closure of the enumeration under it is checked here.
  std::vector<ObId> act_ob;
  for (ObId mo : m.objects()) {
    for (const auto& f : p.presheaves_) {
      const auto idx = p.find(tensor_presheaf(a, mo, f));
      if (!idx) throw Error(ErrorKind::InternalError, "m⊗f missing from the enumeration");
      act_ob.push_back(*idx);
    }
  }
  std::vector<MorId> act_mor;
  for (MorId g : m.morphisms()) {
    for (const auto& arrow : p.arrows_) {
      const std::size_t src = act_ob[m.dom(g).value * count + arrow.source].value;
      const std::size_t tgt = act_ob[m.cod(g).value * count + arrow.target].value;
      std::vector<MorId> comps;
      for (MorId c : arrow.components) comps.push_back(m.tensor(g, c));
      const auto k = p.find(src, tgt, comps);
      if (!k) throw Error(ErrorKind::InternalError, "g⊗α missing from the enumeration");
      act_mor.push_back(*k);
    }
  }
  p.tensored_ = std::make_shared<const LTensored>(
      LTensored::from_tables(a.base, p.category_, std::move(act_ob), std::move(act_mor)));
  return p;
}

std::optional<ObId> PresheafCategory::find(const FinPresheaf& f) const {
  const auto it = presheaf_index_.find(f);
  if (it == presheaf_index_.end()) return std::nullopt;
  return ObId{static_cast<std::uint32_t>(it->second)};
}

std::optional<MorId> PresheafCategory::find(std::size_t source, std::size_t target,
                                            const std::vector<MorId>& components) const {
  const auto it = arrow_index_.find(std::tuple{source, target, components});
  if (it == arrow_index_.end()) return std::nullopt;
  return MorId{static_cast<std::uint32_t>(it->second)};
}

MFunctorET<LTensored> yoneda(const PresheafCategory& p) {
  const MCat& a = p.source();
  const LTensored& t = p.tensored();
  const std::size_t n = a.size();
  MFunctorET<LTensored> y{p.source_ptr(), p.tensored_ptr(), {}, {}};
  for (std::size_t z = 0; z < n; ++z) {
    const auto idx = p.find(representable(a, z));
    if (!idx) throw Error(ErrorKind::InternalError, "Y(" + a.objects[z] + ") missing from the enumeration");
    y.ob_map.push_back(*idx);
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t yy = 0; yy < n; ++yy) {
      const ObId src = t.act(a.hom(x, yy), y.ob_map[x]);
      std::vector<MorId> comps;
      for (std::size_t w = 0; w < n; ++w) comps.push_back(a.comp(w, x, yy));
      const auto k = p.find(src.value, y.ob_map[yy].value, comps);
      if (!k) throw Error(ErrorKind::InternalError, "Yoneda action map missing from the enumeration");
      y.phi.push_back(*k);
    }
  }
  validate_mfun_et(y);
  return y;
}

BijectionReport check_yoneda_lemma(const PresheafCategory& p) {
  const MCat& a = p.source();
  const MonStr& m = *a.base;
  const LTensored& t = p.tensored();
  const FinCat& pc = p.category();
  const std::size_t n = a.size();
  BijectionReport r;

  std::vector<ObId> y_of(n);
  for (std::size_t x = 0; x < n; ++x) y_of[x] = *p.find(representable(a, x));

  for (std::size_t fi = 0; fi < p.presheaves().size(); ++fi) {
    const FinPresheaf& f = p.presheaves()[fi];
    for (std::size_t x = 0; x < n; ++x) {
      for (ObId mo : m.objects()) {
        ++r.cases;
        const ObId src = t.act(mo, y_of[x]);
        const auto left = m.hom(mo, f.values[x]);
        const auto right = pc.hom(src, ObId{static_cast<std::uint32_t>(fi)});
        r.elements += left.size() + right.size();
        auto fail = [&](const std::string& why) {
          ++r.failures;
          r.witnesses.push_back("F=" + pc.name(ObId{static_cast<std::uint32_t>(fi)}) + ", x=" + a.objects[x] +
                                ", m=" + m.describe(mo) + ": " + why);
        };

        auto inverse = [&](MorId beta) {
          return m.compose(p.arrows()[beta.value].components[x], m.tensor(m.identity(mo), a.unit(x)));
        };
        std::vector<MorId> images;
        bool ok = true;
        for (MorId alpha : left) {
          std::vector<MorId> comps;
          for (std::size_t z = 0; z < n; ++z) {
            comps.push_back(m.compose(f.action(z, x), m.tensor(alpha, m.identity(a.hom(z, x)))));
          }
          const auto k = p.find(src.value, fi, comps);
          if (!k) {
            fail("image of " + m.describe(alpha) + " is not a presheaf morphism m⊗Y(x)→F");
            ok = false;
            break;
          }
          if (inverse(*k) != alpha) {
            fail("round trip fails on " + m.describe(alpha));
            ok = false;
            break;
          }
          images.push_back(*k);
        }
        if (!ok) continue;
        if (left.size() != right.size()) {
          fail("hom-set sizes " + std::to_string(left.size()) + " and " + std::to_string(right.size()));
          continue;
        }
        for (MorId beta : right) {
          const MorId back = inverse(beta);
          if (std::find(left.begin(), left.end(), back) == left.end()) {
            fail("inverse image of " + pc.name(beta) + " has the wrong type");
            ok = false;
            break;
          }
          const auto pos = std::find(left.begin(), left.end(), back) - left.begin();
          if (images[static_cast<std::size_t>(pos)] != beta) {
            fail("round trip fails on " + pc.name(beta));
            ok = false;
            break;
          }
        }
        if (ok) ++r.bijections;
      }
    }
  }
  return r;
}

BijectionReport check_fully_faithful(const PresheafCategory& p) {
  const MCat& a = p.source();
  const MonStr& m = *a.base;
  const LTensored& t = p.tensored();
  const FinCat& pc = p.category();
  const std::size_t n = a.size();
  BijectionReport r;
  const auto y = yoneda(p);

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t z = 0; z < n; ++z) {
      const MorId canonical = y.action(x, z);
      auto fail = [&](const std::string& why) {
        ++r.failures;
        r.witnesses.push_back("x=" + a.objects[x] + ", y=" + a.objects[z] + ": " + why);
      };
      for (ObId mo : m.objects()) {
        ++r.cases;
        const auto left = m.hom(mo, a.hom(x, z));
        const auto right = pc.hom(t.act(mo, y.ob_map[x]), y.ob_map[z]);
        r.elements += left.size() + right.size();
        std::vector<MorId> images;
        bool ok = left.size() == right.size();
        if (!ok) fail("m=" + m.describe(mo) + ": hom-set sizes differ");
        for (MorId u : left) {
          if (!ok) break;
          const MorId image = t.compose(canonical, t.act(u, t.identity(y.ob_map[x])));
          // Independent route: the components written out directly.
          std::vector<MorId> comps;
          for (std::size_t w = 0; w < n; ++w) {
            comps.push_back(m.compose(a.comp(w, x, z), m.tensor(u, m.identity(a.hom(w, x)))));
          }
          if (p.arrows()[image.value].components != comps) {
            fail("m=" + m.describe(mo) + ": canonical map disagrees with its components at " + m.describe(u));
            ok = false;
          } else if (std::find(images.begin(), images.end(), image) != images.end()) {
            fail("m=" + m.describe(mo) + ": not injective");
            ok = false;
          }
          images.push_back(image);
        }
        if (ok) ++r.bijections;
      }

      const Representation expected{a.hom(x, z), canonical};
      if (!is_universal(t, y.ob_map[x], y.ob_map[z], expected)) {
        fail("hom(x,y) with the composition map is not universal");
        continue;
      }
      const auto found = hom_object(t, y.ob_map[x], y.ob_map[z]);
      if (!found.first) {
        fail("hom-object search found no representing object");
      } else if (found.first->object != a.hom(x, z) &&
                 !find_isomorphism(m, found.first->object, a.hom(x, z))) {
        fail("hom-object search found " + m.describe(found.first->object) + ", not isomorphic to hom(x,y)");
      } else if (std::find(found.all.begin(), found.all.end(), expected) == found.all.end()) {
        fail("hom-object search missed the canonical representation");
      }
    }
  }
  return r;
}

MFunctorET<LTensored> presheaf_to_op_functor(const FinPresheaf& f, const MCatPtr& op_source,
                                             const LTensoredPtr& op_target) {
  const std::size_t n = f.size();
  MFunctorET<LTensored> g{op_source, op_target, f.values, std::vector<MorId>(n * n)};
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) g.action(x, y) = f.action(y, x);
  }
  return g;
}

FinPresheaf op_functor_to_presheaf(const MFunctorET<LTensored>& g) {
  const std::size_t n = g.size();
  FinPresheaf f{g.ob_map, std::vector<MorId>(n * n)};
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) f.action(x, y) = g.action(y, x);
  }
  return f;
}

}  // namespace enrichkit
