#include "enrichkit/mfunctor.hpp"

#include <algorithm>
#include <map>

namespace enrichkit {

void validate_mfun_tt(const MFunctorTT& f) {
  const LTensored& s = *f.source;
  const LTensored& t = *f.target;
  const MonStr& m = s.base();
  if (!same_base(m, t.base())) throw Error(ErrorKind::TypeMismatch, "source and target have different bases");
  if (!(*f.functor.source == s.carrier()) || !(*f.functor.target == t.carrier())) {
    throw Error(ErrorKind::TypeMismatch, "underlying functor does not run between the carriers");
  }
  if (auto why = functor_failure(f.functor)) throw Error(ErrorKind::TypeMismatch, "underlying functor: " + *why);
  if (f.sigma.size() != m.carrier().object_count() * s.carrier().object_count()) {
    throw Error(ErrorKind::SchemaViolation, "sigma table has the wrong size");
  }
  const FinFunctor& F = f.functor;
  auto pair_name = [&](ObId p, ObId a) { return "(" + m.describe(p) + ", " + s.describe(a) + ")"; };

  for (ObId p : m.objects()) {
    for (ObId a : s.objects()) {
      const MorId sg = f.structure(p, a);
      if (t.dom(sg) != F(s.act(p, a)) || t.cod(sg) != t.act(p, F(a))) {
        throw Error(ErrorKind::NaturalityViolation,
                    "(m, a) = " + pair_name(p, a) + ": f(act(m, a)) = " + t.describe(F(s.act(p, a))) +
                        " and act(m, f(a)) = " + t.describe(t.act(p, F(a))) + " but sigma is " +
                        t.describe(sg));
      }
      if (!t.carrier().is_iso(sg)) {
        throw Error(ErrorKind::NaturalityViolation, "(m, a) = " + pair_name(p, a) + ": sigma not invertible");
      }
    }
  }
  for (MorId u : m.morphisms()) {
    for (MorId alpha : s.carrier().morphisms()) {
      const MorId left = t.compose(t.act(u, F(alpha)), f.structure(m.dom(u), s.dom(alpha)));
      const MorId right = t.compose(f.structure(m.cod(u), s.cod(alpha)), F(s.act(u, alpha)));
      if (left != right) {
        throw Error(ErrorKind::NaturalityViolation,
                    "(u, α) = (" + m.describe(u) + ", " + s.describe(alpha) + ")");
      }
    }
  }
  for (ObId p : m.objects()) {
    for (ObId q : m.objects()) {
      for (ObId a : s.objects()) {
        const MorId left = f.structure(m.tensor(p, q), a);
        const MorId right = t.compose(t.act(m.identity(p), f.structure(q, a)), f.structure(p, s.act(q, a)));
        if (left != right) {
          throw Error(ErrorKind::CocycleViolation, "(m, n, a) = (" + m.describe(p) + ", " + m.describe(q) +
                                                       ", " + s.describe(a) + "): " + t.describe(left) +
                                                       " vs " + t.describe(right));
        }
      }
    }
  }
}

MFunctorTT identity_mfun_tt(const LTensoredPtr& b) {
  MFunctorTT f{b, b, identity_functor(b->carrier_ptr()), {}};
  for (ObId p : b->base().objects()) {
    for (ObId a : b->objects()) f.sigma.push_back(b->identity(b->act(p, a)));
  }
  return f;
}

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

}  // namespace

std::vector<MFunctorET<LTensored>> enumerate_mfun_et_objects(const MCatPtr& ap, const LTensoredPtr& bp,
                                                             UnitLaw unit, const Limits& limits) {
  const MCat& a = *ap;
  const LTensored& b = *bp;
  const MonStr& m = b.base();
  if (!same_base(*a.base, m)) throw Error(ErrorKind::TypeMismatch, "source and target have different bases");
  const std::size_t n = a.size();
  SearchBudget budget(limits.max_candidates);

  // Triples (x, y, z) become checkable once phi(x,y), phi(y,z), phi(x,z) are set.
  std::vector<std::vector<std::array<std::size_t, 3>>> due(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        due[std::max({x * n + y, y * n + z, x * n + z})].push_back({x, y, z});
      }
    }
  }

  std::vector<MFunctorET<LTensored>> out;
  MFunctorET<LTensored> cur{ap, bp, std::vector<ObId>(n), std::vector<MorId>(n * n)};

  auto ok_at = [&](std::size_t k) {
    for (const auto& [x, y, z] : due[k]) {
      const MorId left = b.compose(cur.action(y, z), b.act(m.identity(a.hom(y, z)), cur.action(x, y)));
      const MorId right = b.compose(cur.action(x, z), b.act(a.comp(x, y, z), b.identity(cur.ob_map[x])));
      if (left != right) return false;
    }
    const std::size_t x = k / n;
    if (unit == UnitLaw::enforce && k % n == x) {
      const MorId u = b.compose(cur.action(x, x), b.act(a.unit(x), b.identity(cur.ob_map[x])));
      if (u != b.identity(cur.ob_map[x])) return false;
    }
    return true;
  };
  auto assign_phi = [&](auto&& self, std::size_t k) -> void {
    if (k == n * n) {
      out.push_back(cur);
      return;
    }
    const std::size_t x = k / n;
    const std::size_t y = k % n;
    for (MorId cand : b.hom(b.act(a.hom(x, y), cur.ob_map[x]), cur.ob_map[y])) {
      budget.tick();
      cur.phi[k] = cand;
      if (ok_at(k)) self(self, k + 1);
    }
  };
  auto assign_ob = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      assign_phi(assign_phi, 0);
      return;
    }
    for (ObId y : b.objects()) {
      budget.tick();
      cur.ob_map[i] = y;
      self(self, i + 1);
    }
  };
  assign_ob(assign_ob, 0);
  return out;
}

std::vector<std::vector<MorId>> enumerate_mfun_mors(const MFunctorET<LTensored>& f,
                                                    const MFunctorET<LTensored>& g, const Limits& limits) {
  const MCat& a = *f.source;
  const LTensored& b = *f.target;
  const MonStr& m = b.base();
  const std::size_t n = a.size();
  SearchBudget budget(limits.max_candidates);
  std::vector<std::vector<MorId>> out;
  std::vector<MorId> cur(n);
  auto square = [&](std::size_t x, std::size_t y) {
    return b.compose(g.action(x, y), b.act(m.identity(a.hom(x, y)), cur[x])) ==
           b.compose(cur[y], f.action(x, y));
  };
  auto assign = [&](auto&& self, std::size_t k) -> void {
    if (k == n) {
      out.push_back(cur);
      return;
    }
    for (MorId cand : b.hom(f.ob_map[k], g.ob_map[k])) {
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

MFunCategory enumerate_mfun_et(const MCatPtr& a, const LTensoredPtr& b, const Limits& limits) {
  MFunCategory result;
  result.functors = enumerate_mfun_et_objects(a, b, UnitLaw::enforce, limits);
  const LTensored& t = *b;
  const std::size_t count = result.functors.size();
  std::map<std::tuple<std::size_t, std::size_t, std::vector<MorId>>, std::size_t> index;
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      for (auto& c : enumerate_mfun_mors(result.functors[i], result.functors[j], limits)) {
        index.emplace(std::tuple{i, j, c}, result.arrows.size());
        result.arrows.push_back({i, j, std::move(c)});
        if (result.arrows.size() > limits.max_morphisms) {
          throw Error(ErrorKind::SizeBound, "functor category exceeds morphism cap");
        }
      }
    }
  }

  RawCategory raw;
  for (std::size_t i = 0; i < count; ++i) raw.objects.push_back("F" + std::to_string(i));
  for (std::size_t k = 0; k < result.arrows.size(); ++k) {
    const auto& arrow = result.arrows[k];
    raw.morphisms.push_back({"t" + std::to_string(k), raw.objects[arrow.source], raw.objects[arrow.target]});
  }
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<MorId> ids;
    for (ObId x : result.functors[i].ob_map) ids.push_back(t.identity(x));
    const auto it = index.find(std::tuple{i, i, ids});
    if (it == index.end()) throw Error(ErrorKind::InternalError, "identity M-functor morphism not enumerated");
    raw.identities.emplace_back(raw.objects[i], raw.morphisms[it->second].name);
  }
  for (std::size_t g = 0; g < result.arrows.size(); ++g) {
    for (std::size_t f = 0; f < result.arrows.size(); ++f) {
      const auto& ag = result.arrows[g];
      const auto& af = result.arrows[f];
      if (ag.source != af.target) continue;
      std::vector<MorId> comp;
      for (std::size_t x = 0; x < ag.components.size(); ++x) {
        comp.push_back(t.compose(ag.components[x], af.components[x]));
      }
      const auto it = index.find(std::tuple{af.source, ag.target, comp});
      if (it == index.end()) throw Error(ErrorKind::InternalError, "composite M-functor morphism not enumerated");
      raw.compose.push_back({raw.morphisms[g].name, raw.morphisms[f].name, raw.morphisms[it->second].name});
    }
  }
  Limits cat_limits = limits;
  cat_limits.max_objects = std::max(cat_limits.max_objects, count);
  result.category = std::make_shared<const FinCat>(FinCat::validate(raw, cat_limits));
  return result;
}

UnitAutomatism measure_unit_automatism(const MCatPtr& a, const LTensoredPtr& b, const Limits& limits) {
  UnitAutomatism r;
  for (const auto& f : enumerate_mfun_et_objects(a, b, UnitLaw::skip, limits)) {
    ++r.compatible;
    if (auto e = mfun_et_failure(f, UnitLaw::enforce)) {
      ++r.unit_failures;
      if (r.examples.size() < 3) r.examples.push_back(e->witness());
    }
  }
  return r;
}

}  // namespace enrichkit
