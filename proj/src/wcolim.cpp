#include "enrichkit/wcolim.hpp"

#include <algorithm>

#include "enrichkit/random.hpp"

namespace enrichkit {

namespace {

SkMap id(SkSet s) { return SkMap::identity(s); }

// The map ⊔_p dom(maps[p]) → cod determined by the parts; unlike
// Coproduct::copair it takes the codomain explicitly, so it works with no parts.
SkMap copair_into(const Coproduct& c, SkSet cod, const std::vector<SkMap>& maps) {
  std::vector<std::size_t> t(c.total.card);
  for (std::size_t p = 0; p < maps.size(); ++p) {
    for (std::size_t i = 0; i < maps[p].dom.card; ++i) t[c.offsets[p] + i] = maps[p](i);
  }
  return SkMap::make(c.total, cod, std::move(t));
}

}  // namespace

void Tally::merge(const Tally& other, const std::string& prefix) {
  checks += other.checks;
  failures += other.failures;
  for (const auto& w : other.witnesses) witnesses.push_back(prefix + w);
}

std::size_t SetCategory::local(MorId f) const {
  const auto h = ordinary->hom(ordinary->dom(f), ordinary->cod(f));
  return static_cast<std::size_t>(std::find(h.begin(), h.end(), f) - h.begin());
}

MorId SetCategory::global(std::size_t x, std::size_t y, std::size_t i) const {
  return ordinary->hom(ObId{static_cast<std::uint32_t>(x)}, ObId{static_cast<std::uint32_t>(y)})[i];
}

SetCategory enrich_over_sets(FinCatPtr c) {
  const FinCat& cat = *c;
  const std::size_t n = cat.object_count();
  auto base = std::make_shared<const FinSetMonoidal>();
  auto a = std::make_shared<SetMCat>();
  a->base = base;
  for (ObId x : cat.objects()) a->objects.push_back(cat.name(x));
  auto ob = [](std::size_t x) { return ObId{static_cast<std::uint32_t>(x)}; };
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) a->homs.push_back(SkSet{cat.hom(ob(x), ob(y)).size()});
  }
  SetCategory sc{c, nullptr, std::make_shared<const FinSetModule>()};
  for (std::size_t x = 0; x < n; ++x) {
    const auto h = cat.hom(ob(x), ob(x));
    const auto pos = std::find(h.begin(), h.end(), cat.identity(ob(x))) - h.begin();
    a->units.push_back(SkMap::constant(SkSet{1}, a->hom(x, x), static_cast<std::size_t>(pos)));
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const auto fs = cat.hom(ob(x), ob(y));
        const auto gs = cat.hom(ob(y), ob(z));
        const auto hs = cat.hom(ob(x), ob(z));
        std::vector<std::size_t> t;
        for (MorId g : gs) {
          for (MorId f : fs) {
            const MorId gf = cat.compose(g, f);
            t.push_back(static_cast<std::size_t>(std::find(hs.begin(), hs.end(), gf) - hs.begin()));
          }
        }
        a->comps.push_back(SkMap::make(SkSet{gs.size() * fs.size()}, SkSet{hs.size()}, std::move(t)));
      }
    }
  }
  validate_mcat(*a);
  sc.enriched = std::move(a);
  return sc;
}

SetPresheaf set_presheaf(const SetCategory& c, const std::vector<std::size_t>& cards,
                         const std::vector<SkMap>& maps) {
  const SetMCat& a = *c.enriched;
  const std::size_t n = a.size();
  if (cards.size() != n || maps.size() != c.ordinary->morphism_count()) {
    throw Error(ErrorKind::SchemaViolation, "presheaf data has the wrong size");
  }
  SetPresheaf w;
  for (std::size_t v : cards) w.values.push_back(SkSet{v});
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const SkSet h = a.hom(x, y);
      std::vector<std::size_t> t(w.values[y].card * h.card);
      for (std::size_t i = 0; i < h.card; ++i) {
        const SkMap& m = maps[c.global(x, y, i).value];
        if (m.dom != w.values[y] || m.cod != w.values[x]) {
          throw Error(ErrorKind::TypeMismatch, "map for " + c.ordinary->name(c.global(x, y, i)) + " has the wrong type");
        }
        for (std::size_t e = 0; e < w.values[y].card; ++e) t[pair(h, e, i)] = m(e);
      }
      w.actions.push_back(SkMap::make(SkSet{t.size()}, w.values[x], t));
    }
  }
  validate_presheaf(a, w);
  return w;
}

SetFunctor set_functor(const SetCategory& c, const std::vector<std::size_t>& cards,
                       const std::vector<SkMap>& maps) {
  const SetMCat& a = *c.enriched;
  const std::size_t n = a.size();
  if (cards.size() != n || maps.size() != c.ordinary->morphism_count()) {
    throw Error(ErrorKind::SchemaViolation, "functor data has the wrong size");
  }
  SetFunctor f{c.enriched, c.sets, {}, {}};
  for (std::size_t v : cards) f.ob_map.push_back(SkSet{v});
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const SkSet h = a.hom(x, y);
      const SkSet fx = f.ob_map[x];
      std::vector<std::size_t> t(h.card * fx.card);
      for (std::size_t i = 0; i < h.card; ++i) {
        const SkMap& m = maps[c.global(x, y, i).value];
        if (m.dom != fx || m.cod != f.ob_map[y]) {
          throw Error(ErrorKind::TypeMismatch, "map for " + c.ordinary->name(c.global(x, y, i)) + " has the wrong type");
        }
        for (std::size_t e = 0; e < fx.card; ++e) t[pair(fx, i, e)] = m(e);
      }
      f.phi.push_back(SkMap::make(SkSet{t.size()}, f.ob_map[y], t));
    }
  }
  validate_mfun_et(f);
  return f;
}

SkMap presheaf_map(const SetCategory& c, const SetPresheaf& w, MorId f) {
  const std::size_t x = c.ordinary->dom(f).value;
  const std::size_t y = c.ordinary->cod(f).value;
  const SkSet h = c.enriched->hom(x, y);
  const std::size_t i = c.local(f);
  std::vector<std::size_t> t;
  for (std::size_t e = 0; e < w.values[y].card; ++e) t.push_back(w.action(x, y)(pair(h, e, i)));
  return SkMap::make(w.values[y], w.values[x], std::move(t));
}

SkMap functor_map(const SetCategory& c, const SetFunctor& f, MorId g) {
  const std::size_t x = c.ordinary->dom(g).value;
  const std::size_t y = c.ordinary->cod(g).value;
  const std::size_t i = c.local(g);
  std::vector<std::size_t> t;
  for (std::size_t e = 0; e < f.ob_map[x].card; ++e) t.push_back(f.action(x, y)(pair(f.ob_map[x], i, e)));
  return SkMap::make(f.ob_map[x], f.ob_map[y], std::move(t));
}

SetFunctor corepresentable(const SetCategory& c, std::size_t w) {
  const SetMCat& a = *c.enriched;
  SetFunctor f{c.enriched, c.sets, {}, {}};
  for (std::size_t x = 0; x < a.size(); ++x) f.ob_map.push_back(a.hom(w, x));
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = 0; y < a.size(); ++y) f.phi.push_back(a.comp(w, x, y));
  }
  validate_mfun_et(f);
  return f;
}

WColimit weighted_colimit(const SetPresheaf& w, const SetFunctor& f, std::size_t max_card) {
  const SetMCat& a = *f.source;
  const std::size_t n = a.size();
  if (w.size() != n) throw Error(ErrorKind::ShapeMismatch, "weight and diagram have different sources");

  std::vector<SkSet> target_parts;
  for (std::size_t x = 0; x < n; ++x) target_parts.push_back(product(w.values[x], f.ob_map[x], max_card));
  Coproduct target = coproduct(target_parts, max_card);

  std::vector<SkSet> source_parts;
  std::vector<SkMap> w_side;
  std::vector<SkMap> f_side;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const SkSet wh = product(w.values[y], a.hom(x, y), max_card);
      source_parts.push_back(product(wh, f.ob_map[x], max_card));
      // W(y)×hom(x,y)×F(x) → W(x)×F(x), into summand x.
      w_side.push_back(compose(target.injection(x), product(w.action(x, y), id(f.ob_map[x]), max_card)));
      // W(y)×hom(x,y)×F(x) → W(y)×F(y), into summand y.
      SkMap fs = product(id(w.values[y]), f.action(x, y), max_card);
      fs.dom = source_parts.back();
      f_side.push_back(compose(target.injection(y), fs));
    }
  }
  const Coproduct source = coproduct(source_parts, max_card);
  const SkMap left = copair_into(source, target.total, w_side);
  const SkMap right = copair_into(source, target.total, f_side);

  WColimit wc{w, f, std::move(target), coequalizer(left, right), {}, {}};
  wc.apex = wc.coeq.quotient;
  for (std::size_t x = 0; x < n; ++x) wc.legs.push_back(compose(wc.coeq.projection, wc.summands.injection(x)));
  return wc;
}

std::optional<std::string> cocone_failure(const SetPresheaf& w, const SetFunctor& f, SkSet apex,
                                          const std::vector<SkMap>& legs) {
  const SetMCat& a = *f.source;
  const std::size_t n = a.size();
  if (legs.size() != n) return "wrong number of legs";
  for (std::size_t x = 0; x < n; ++x) {
    if (legs[x].dom != product(w.values[x], f.ob_map[x]) || legs[x].cod != apex) {
      return "leg at " + a.objects[x] + " has the wrong type";
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const SkMap lhs = compose(legs[x], product(w.action(x, y), id(f.ob_map[x])));
      SkMap fs = product(id(w.values[y]), f.action(x, y));
      fs.dom = lhs.dom;
      const SkMap rhs = compose(legs[y], fs);
      if (lhs != rhs) return "square at " + detail::names(a, {x, y});
    }
  }
  return std::nullopt;
}

std::optional<SkMap> mediator(const WColimit& wc, SkSet apex, const std::vector<SkMap>& legs) {
  if (legs.size() != wc.legs.size()) return std::nullopt;
  for (std::size_t x = 0; x < legs.size(); ++x) {
    if (legs[x].dom != wc.legs[x].dom || legs[x].cod != apex) return std::nullopt;
  }
  std::vector<std::size_t> t;
  for (std::size_t rep : wc.coeq.representatives) {
    const auto [x, local] = wc.summands.locate(rep);
    t.push_back(legs[x](local));
  }
  SkMap u = SkMap::make(wc.apex, apex, std::move(t));
  for (std::size_t x = 0; x < legs.size(); ++x) {
    if (compose(u, wc.legs[x]) != legs[x]) return std::nullopt;
  }
  return u;
}

std::vector<Probe> standard_probes(const WColimit& wc, Rng& rng, std::size_t random_count) {
  std::vector<Probe> probes;
  probes.push_back({"own cocone", wc.apex, wc.legs, id(wc.apex)});
  {
    const SkMap bang = SkMap::constant(wc.apex, SkSet{1}, 0);
    Probe p{"collapse to 1", SkSet{1}, {}, bang};
    for (const auto& leg : wc.legs) p.legs.push_back(compose(bang, leg));
    probes.push_back(std::move(p));
  }
  for (std::size_t k = 0; k < random_count; ++k) {
    const SkSet cod{rng.between(1, 4)};
    std::vector<std::size_t> t;
    for (std::size_t i = 0; i < wc.apex.card; ++i) t.push_back(rng.below(cod.card));
    const SkMap g = SkMap::make(wc.apex, cod, std::move(t));
    Probe p{"random g#" + std::to_string(k), cod, {}, g};
    for (const auto& leg : wc.legs) p.legs.push_back(compose(g, leg));
    probes.push_back(std::move(p));
  }
  return probes;
}

Tally check_universal(const WColimit& wc, const std::vector<Probe>& probes) {
  Tally t;
  std::vector<bool> hit(wc.apex.card, false);
  for (const auto& leg : wc.legs) {
    for (std::size_t v : leg.table) hit[v] = true;
  }
  t.expect(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }), "legs are not jointly surjective");
  if (auto why = cocone_failure(wc.weight, wc.diagram, wc.apex, wc.legs)) t.fail("colimit cocone: " + *why);
  for (const auto& p : probes) {
    if (auto why = cocone_failure(wc.weight, wc.diagram, p.apex, p.legs)) {
      t.fail(p.label + ": probe is not a cocone (" + *why + ")");
      continue;
    }
    const auto u = mediator(wc, p.apex, p.legs);
    if (!u) {
      t.fail(p.label + ": no mediating map");
    } else if (p.expected && *u != *p.expected) {
      t.fail(p.label + ": mediator " + describe(*u) + " differs from " + describe(*p.expected));
    } else {
      t.pass();
    }
  }
  return t;
}

Presentation canonical_presentation(const SetCategory& c, const SetPresheaf& f) {
  const SetMCat& a = *c.enriched;
  const std::size_t n = a.size();
  Presentation out;
  std::vector<WColimit> points;
  for (std::size_t w = 0; w < n; ++w) {
    points.push_back(weighted_colimit(f, corepresentable(c, w)));
    out.colimit.values.push_back(points.back().apex);
  }
  // Action of the colimit presheaf: [a, h] · g = [a, h∘g], defined on
  // representatives and checked on every element of every class.
  for (std::size_t w = 0; w < n; ++w) {
    for (std::size_t v = 0; v < n; ++v) {
      const WColimit& zv = points[v];
      const WColimit& zw = points[w];
      const SkSet g_set = a.hom(w, v);
      auto image = [&](std::size_t element, std::size_t g) {
        const auto [x, local] = zv.summands.locate(element);
        const SkSet hvx = a.hom(v, x);
        const std::size_t e = first(hvx, local);
        const std::size_t h = second(hvx, local);
        const std::size_t hg = a.comp(w, v, x)(pair(g_set, h, g));
        return zw.legs[x](pair(a.hom(w, x), e, hg));
      };
      std::vector<std::size_t> t(zv.apex.card * g_set.card);
      for (std::size_t cls = 0; cls < zv.apex.card; ++cls) {
        for (std::size_t g = 0; g < g_set.card; ++g) t[pair(g_set, cls, g)] = image(zv.coeq.representatives[cls], g);
      }
      for (std::size_t element = 0; element < zv.summands.total.card && !out.failure; ++element) {
        for (std::size_t g = 0; g < g_set.card; ++g) {
          if (t[pair(g_set, zv.coeq.projection(element), g)] != image(element, g)) {
            out.failure = "action on colim_F(Y) is not well defined at " + detail::names(a, {w, v});
            break;
          }
        }
      }
      out.colimit.actions.push_back(SkMap::make(SkSet{t.size()}, zw.apex, t));
    }
  }
  if (out.failure) return out;
  if (auto e = presheaf_failure(a, out.colimit)) {
    out.failure = "colim_F(Y) is not a presheaf: " + e->witness();
    return out;
  }
  for (std::size_t w = 0; w < n; ++w) {
    // The legs into F(w) are the actions F(x)×hom(w,x) → F(w).
    std::vector<SkMap> legs;
    for (std::size_t x = 0; x < n; ++x) legs.push_back(f.action(w, x));
    const auto u = mediator(points[w], f.values[w], legs);
    if (!u) {
      out.failure = "no comparison map at " + a.objects[w];
      return out;
    }
    if (!u->bijective()) {
      out.failure = "comparison at " + a.objects[w] + " is " + describe(*u) + ", not a bijection";
      return out;
    }
    out.comparison.push_back(*u);
  }
  if (auto why = presheaf_mor_failure(a, out.colimit, f, out.comparison)) {
    out.failure = "comparison is not natural: " + *why;
  }
  return out;
}

SkMap Ext::operator()(const WColimit& w1, const WColimit& w2, const SetPresheafMor& alpha) const {
  std::vector<SkMap> legs;
  for (std::size_t x = 0; x < alpha.size(); ++x) {
    legs.push_back(compose(w2.legs[x], product(alpha[x], id(f_.ob_map[x]), max_card_)));
  }
  auto u = mediator(w1, w2.apex, legs);
  if (!u) throw Error(ErrorKind::InternalError, "weight morphism does not induce a cocone");
  return *u;
}

SkMap Ext::tensor_comparison(SkSet m, const SetPresheaf& w) const {
  const WColimit z = (*this)(w);
  const WColimit zm = (*this)(tensor_presheaf(source(), m, w));
  std::vector<SkMap> legs;
  for (std::size_t x = 0; x < z.legs.size(); ++x) {
    SkMap leg = product(id(m), z.legs[x], max_card_);
    leg.dom = zm.legs[x].dom;
    legs.push_back(std::move(leg));
  }
  const SkSet target = product(m, z.apex, max_card_);
  const auto u = mediator(zm, target, legs);
  if (!u || !u->bijective()) {
    throw Error(ErrorKind::InternalError, "tensor comparison for m=" + std::to_string(m.card) + " is not a bijection");
  }
  return inverse(*u);
}

SetFunctor res(const Ext& g) {
  const SetMCat& a = g.source();
  const std::size_t n = a.size();
  const SetFunctor& f = g.diagram();
  SetFunctor r{f.source, f.target, {}, {}};
  std::vector<SetPresheaf> ys;
  std::vector<WColimit> zs;
  for (std::size_t x = 0; x < n; ++x) {
    ys.push_back(representable(a, x));
    zs.push_back(g(ys.back()));
    r.ob_map.push_back(zs.back().apex);
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const SkSet h = a.hom(x, y);
      // hom(x,y)⊗Y(x) → Y(y), componentwise composition.
      SetPresheafMor structure;
      for (std::size_t w = 0; w < n; ++w) structure.push_back(a.comp(w, x, y));
      const WColimit zh = g(tensor_presheaf(a, h, ys[x]));
      r.phi.push_back(compose(g(zh, zs[y], structure), g.tensor_comparison(h, ys[x])));
    }
  }
  validate_mfun_et(r);
  return r;
}

UnitIso ext_unit(const Ext& g, const SetFunctor& restricted) {
  const SetMCat& a = g.source();
  const SetFunctor& f = g.diagram();
  UnitIso iso;
  for (std::size_t x = 0; x < a.size(); ++x) {
    const WColimit z = g(representable(a, x));
    if (z.apex != restricted.ob_map[x]) throw Error(ErrorKind::InternalError, "res(ext F) differs from Ext(F)(Y(x))");
    // a ↦ [id_x, a]
    SkMap fwd = compose(z.legs[x], product(a.unit(x), id(f.ob_map[x])));
    fwd.dom = f.ob_map[x];
    // [h, a] ↦ F(h)(a)
    std::vector<SkMap> legs;
    for (std::size_t w = 0; w < a.size(); ++w) legs.push_back(f.action(w, x));
    const auto back = mediator(z, f.ob_map[x], legs);
    if (!back) throw Error(ErrorKind::InternalError, "evaluation does not factor through Ext(F)(Y(x))");
    iso.forward.push_back(std::move(fwd));
    iso.backward.push_back(*back);
  }
  return iso;
}

PresheafCoproduct coproduct_presheaf(const SetMCat& a, const SetPresheaf& w1, const SetPresheaf& w2) {
  const std::size_t n = a.size();
  PresheafCoproduct out;
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t c1 = w1.values[x].card;
    const std::size_t c2 = w2.values[x].card;
    out.sum.values.push_back(SkSet{c1 + c2});
    std::vector<std::size_t> i1(c1), i2(c2);
    for (std::size_t i = 0; i < c1; ++i) i1[i] = i;
    for (std::size_t i = 0; i < c2; ++i) i2[i] = c1 + i;
    out.first.push_back(SkMap::make(w1.values[x], out.sum.values[x], std::move(i1)));
    out.second.push_back(SkMap::make(w2.values[x], out.sum.values[x], std::move(i2)));
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const SkSet h = a.hom(x, y);
      const std::size_t c1 = w1.values[y].card;
      std::vector<std::size_t> t(out.sum.values[y].card * h.card);
      for (std::size_t e = 0; e < out.sum.values[y].card; ++e) {
        for (std::size_t k = 0; k < h.card; ++k) {
          t[pair(h, e, k)] = e < c1 ? w1.action(x, y)(pair(h, e, k))
                                    : w1.values[x].card + w2.action(x, y)(pair(h, e - c1, k));
        }
      }
      out.sum.actions.push_back(SkMap::make(SkSet{t.size()}, out.sum.values[x], t));
    }
  }
  validate_presheaf(a, out.sum);
  return out;
}

PresheafCoequalizer coequalizer_presheaf(const SetMCat& a, const SetPresheaf& w, const SetPresheafMor& alpha,
                                         const SetPresheafMor& beta) {
  const std::size_t n = a.size();
  std::vector<Coequalizer> q;
  PresheafCoequalizer out;
  for (std::size_t x = 0; x < n; ++x) {
    q.push_back(coequalizer(alpha[x], beta[x]));
    out.quotient.values.push_back(q.back().quotient);
    out.projection.push_back(q.back().projection);
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const SkSet h = a.hom(x, y);
      // Factor proj_x ∘ action through proj_y × id.
      const SkMap act = compose(q[x].projection, w.action(x, y));
      std::vector<std::size_t> t(q[y].quotient.card * h.card);
      for (std::size_t c = 0; c < q[y].quotient.card; ++c) {
        for (std::size_t k = 0; k < h.card; ++k) t[pair(h, c, k)] = act(pair(h, q[y].representatives[c], k));
      }
      SkMap induced = SkMap::make(SkSet{t.size()}, q[x].quotient, t);
      SkMap down = product(q[y].projection, id(h));
      if (compose(induced, down) != act) {
        throw Error(ErrorKind::InternalError, "quotient action is not well defined at " + detail::names(a, {x, y}));
      }
      out.quotient.actions.push_back(std::move(induced));
    }
  }
  validate_presheaf(a, out.quotient);
  return out;
}

SetPresheafMor yoneda_element(const SetMCat& a, const SetPresheaf& w, std::size_t x, std::size_t e) {
  SetPresheafMor out;
  for (std::size_t v = 0; v < a.size(); ++v) {
    const SkSet h = a.hom(v, x);
    std::vector<std::size_t> t;
    for (std::size_t k = 0; k < h.card; ++k) t.push_back(w.action(v, x)(pair(h, e, k)));
    out.push_back(SkMap::make(h, w.values[v], std::move(t)));
  }
  return out;
}

SetPresheafMor compose(const SetPresheafMor& beta, const SetPresheafMor& alpha) {
  SetPresheafMor out;
  for (std::size_t x = 0; x < alpha.size(); ++x) out.push_back(compose(beta[x], alpha[x]));
  return out;
}

SetPresheafMor identity_mor(const SetPresheaf& w) {
  SetPresheafMor out;
  for (SkSet v : w.values) out.push_back(id(v));
  return out;
}

Tally check_equivalence(const EquivalenceInstance& inst) {
  const SetMCat& a = *inst.category.enriched;
  const std::size_t n = a.size();
  const Ext g(inst.diagram);
  const SetFunctor& f = inst.diagram;
  Tally t;

  // res ∘ ext ≅ id.
  const SetFunctor r = res(g);
  const UnitIso eta = ext_unit(g, r);
  for (std::size_t x = 0; x < n; ++x) {
    t.expect(compose(eta.backward[x], eta.forward[x]) == id(f.ob_map[x]) &&
                 compose(eta.forward[x], eta.backward[x]) == id(r.ob_map[x]),
             "unit at " + a.objects[x] + " is not invertible");
  }
  if (auto why = mfun_mor_failure(f, r, eta.forward)) t.fail("unit F → res ext F: " + *why); else t.pass();
  if (auto why = mfun_mor_failure(r, f, eta.backward)) t.fail("inverse unit: " + *why); else t.pass();

  // Ext(F) and Ext(res ext F) agree on weights, naturally.
  const Ext g2(r);
  std::vector<SetPresheaf> weights = inst.weights;
  for (std::size_t x = 0; x < n; ++x) weights.push_back(representable(a, x));
  std::vector<WColimit> z1, z2;
  std::vector<SkMap> theta;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    z1.push_back(g(weights[i]));
    z2.push_back(g2(weights[i]));
    std::vector<SkMap> legs;
    for (std::size_t x = 0; x < n; ++x) {
      legs.push_back(compose(z2.back().legs[x], product(id(weights[i].values[x]), eta.forward[x])));
    }
    const auto u = mediator(z1.back(), z2.back().apex, legs);
    if (!u || !u->bijective()) {
      t.fail("weight #" + std::to_string(i) + ": Ext(F)(W) → Ext(res ext F)(W) is not a bijection");
      theta.push_back(id(z1.back().apex));
    } else {
      t.pass();
      theta.push_back(*u);
    }
  }

  // Weight morphisms to exercise naturality and functoriality: every
  // Yoneda element Y(x) → W.
  struct WeightMor {
    std::size_t source, target;
    SetPresheafMor alpha;
  };
  std::vector<WeightMor> mors;
  for (std::size_t i = 0; i < inst.weights.size(); ++i) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t e = 0; e < weights[i].values[x].card; ++e) {
        mors.push_back({inst.weights.size() + x, i, yoneda_element(a, weights[i], x, e)});
      }
    }
  }
  for (const auto& m : mors) {
    const SkMap e1 = g(z1[m.source], z1[m.target], m.alpha);
    const SkMap e2 = g2(z2[m.source], z2[m.target], m.alpha);
    t.expect(compose(theta[m.target], e1) == compose(e2, theta[m.source]),
             "Ext(F)(W) ≅ Ext(res ext F)(W) is not natural along a Yoneda element");
  }

  // Functoriality in the weight.
  for (std::size_t i = 0; i < weights.size(); ++i) {
    t.expect(g(z1[i], z1[i], identity_mor(weights[i])) == id(z1[i].apex), "Ext(F)(id) is not the identity");
  }
  for (std::size_t i = 0; i < inst.weights.size(); ++i) {
    for (std::size_t j = 0; j < inst.weights.size(); ++j) {
      if (i == j) continue;
      const auto sum = coproduct_presheaf(a, weights[i], weights[j]);
      const WColimit zs = g(sum.sum);
      // Composable chain Y(x) → W_i → W_i ⊔ W_j.
      for (const auto& m : mors) {
        if (m.target != i) continue;
        const SkMap whole = g(z1[m.source], zs, compose(sum.first, m.alpha));
        const SkMap parts = compose(g(z1[i], zs, sum.first), g(z1[m.source], z1[i], m.alpha));
        t.expect(whole == parts, "Ext(F) does not preserve composition of weight morphisms");
      }
      // Coproducts of weights go to coproducts.
      const SkSet parts[] = {z1[i].apex, z1[j].apex};
      const Coproduct cp = coproduct(parts);
      const SkMap cmp = copair_into(cp, zs.apex, {g(z1[i], zs, sum.first), g(z1[j], zs, sum.second)});
      t.expect(cmp.bijective(), "Ext(F) does not preserve the coproduct of weights #" + std::to_string(i) +
                                    " and #" + std::to_string(j));
    }
  }

  // Coequalizers of pairs of Yoneda elements Y(x) ⇉ W.
  for (std::size_t i = 0; i < inst.weights.size(); ++i) {
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t card = weights[i].values[x].card;
      if (card < 2) continue;
      const auto alpha = yoneda_element(a, weights[i], x, 0);
      const auto beta = yoneda_element(a, weights[i], x, card - 1);
      const auto q = coequalizer_presheaf(a, weights[i], alpha, beta);
      const WColimit zq = g(q.quotient);
      const WColimit& zy = z1[inst.weights.size() + x];
      const Coequalizer k = coequalizer(g(zy, z1[i], alpha), g(zy, z1[i], beta));
      try {
        const SkMap cmp = k.factor(g(z1[i], zq, q.projection));
        t.expect(cmp.bijective(), "Ext(F) does not preserve the coequalizer at weight #" + std::to_string(i));
      } catch (const Error&) {
        t.fail("Ext(F) of the quotient map does not coequalize at weight #" + std::to_string(i));
      }
    }
  }

  // Tensoring the weight.
  for (std::size_t i = 0; i < weights.size(); ++i) {
    for (std::size_t m = 0; m <= 2; ++m) {
      try {
        g.tensor_comparison(SkSet{m}, weights[i]);
        t.pass();
      } catch (const Error& e) {
        t.fail(e.witness());
      }
    }
  }
  return t;
}

}  // namespace enrichkit
