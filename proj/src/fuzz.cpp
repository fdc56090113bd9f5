#include "enrichkit/fuzz.hpp"

#include <algorithm>
#include <set>

namespace enrichkit {

namespace {

void absorb(BijectionReport& into, const BijectionReport& from, const std::string& prefix) {
  into.cases += from.cases;
  into.bijections += from.bijections;
  into.failures += from.failures;
  into.elements += from.elements;
  for (const auto& w : from.witnesses) into.witnesses.push_back(prefix + w);
}

void absorb(UnitAutomatism& into, const UnitAutomatism& from, const std::string& prefix) {
  into.compatible += from.compatible;
  into.unit_failures += from.unit_failures;
  for (const auto& e : from.examples) {
    if (into.examples.size() < 3) into.examples.push_back(prefix + "unit law fails at " + e);
  }
}

}  // namespace

Tally check_op_dictionary(const PresheafCategory& p, const Limits& limits) {
  Tally t;
  const MCat& a = p.source();
  const auto op = std::make_shared<const MCat>(opposite_mcat(a));
  const auto target = self_module(op->base);
  std::set<FinPresheaf> translated;
  for (std::size_t i = 0; i < p.presheaves().size(); ++i) {
    const FinPresheaf& f = p.presheaves()[i];
    const auto g = presheaf_to_op_functor(f, op, target);
    if (auto e = mfun_et_failure(g)) {
      t.fail("P" + std::to_string(i) + " is not an op-side MFunctor: " + e->witness());
      continue;
    }
    t.expect(op_functor_to_presheaf(g) == f, "P" + std::to_string(i) + " does not round-trip");
    translated.insert(f);
  }
  std::set<FinPresheaf> enumerated;
  for (const auto& g : enumerate_mfun_et_objects(op, target, UnitLaw::enforce, limits)) {
    enumerated.insert(op_functor_to_presheaf(g));
  }
  t.expect(enumerated == translated, "op-side MFunctors (" + std::to_string(enumerated.size()) +
                                         ") differ from the presheaves (" + std::to_string(translated.size()) + ")");
  return t;
}

PresheafFuzz fuzz_presheaves(std::uint64_t seed, std::size_t instances, std::size_t max_objects,
                             const Limits& limits) {
  PresheafFuzz out;
  Rng rng(seed);
  const std::size_t max_draws = instances * 10 + 10;
  for (std::size_t draw = 0; out.instances < instances && draw < max_draws; ++draw) {
    const RandomBase b = random_base(rng, out.stats);
    std::size_t n = rng.between(1, std::max<std::size_t>(max_objects, 1));
    MCatPtr a;
    // Smaller instances when the composition search keeps failing.
    for (; n >= 1 && !(a = random_mcat(b.base, n, rng, out.stats)); --n) {
    }
    if (!a) continue;
    const std::string label = "#" + std::to_string(draw) + " (" + b.family + ", " + std::to_string(n) + " objects): ";
    try {
      const PresheafCategory p = PresheafCategory::enumerate(a, limits);
      absorb(out.yoneda, check_yoneda_lemma(p), label);
      absorb(out.fully_faithful, check_fully_faithful(p), label);
      out.op_dictionary.merge(check_op_dictionary(p, limits), label);
      absorb(out.functors, measure_unit_automatism(a, self_module(a->base), limits), label);
      UnitAutomatism pre;
      for (const auto& f : enumerate_presheaf_objects(*a, UnitLaw::skip, limits)) {
        ++pre.compatible;
        if (auto e = presheaf_failure(*a, f)) {
          ++pre.unit_failures;
          if (pre.examples.size() < 3) pre.examples.push_back(e->witness());
        }
      }
      absorb(out.presheaves_without_unit, pre, label);
      out.presheaves += p.presheaves().size();
      ++out.families[b.family];
      ++out.instances;
    } catch (const Error& e) {
      if (!is_resource_error(e.kind())) throw;
      ++out.skipped;
      out.skip_reasons.push_back(label + e.what());
    }
  }
  return out;
}

ColimitFuzz fuzz_colimits(std::uint64_t seed, std::size_t instances, std::size_t probes_per_colimit) {
  ColimitFuzz out;
  Rng rng(seed);
  for (std::size_t i = 0; i < instances; ++i) {
    const SetCategory c = random_set_category(rng, out.stats);
    const SetFunctor f = random_set_functor(c, rng, out.stats);
    const SetPresheaf w1 = random_set_presheaf(c, rng, out.stats);
    const SetPresheaf w2 = random_set_presheaf(c, rng, out.stats);
    const SetMCat& a = *c.enriched;
    const std::string label = "#" + std::to_string(i) + ": ";

    const Ext ext(f);
    const SetFunctor r = res(ext);
    const UnitIso eta = ext_unit(ext, r);
    for (std::size_t x = 0; x < a.size(); ++x) {
      out.coyoneda.expect(eta.forward[x].bijective() && compose(eta.backward[x], eta.forward[x]) == SkMap::identity(f.ob_map[x]),
                          label + "Ext(F)(Y(" + a.objects[x] + ")) is not F(" + a.objects[x] + ")");
    }
    std::vector<SetPresheaf> weights{w1, w2, terminal_presheaf(c)};
    for (std::size_t x = 0; x < a.size(); ++x) weights.push_back(representable(a, x));
    for (const auto& w : weights) {
      const WColimit wc = weighted_colimit(w, f);
      const auto probes = standard_probes(wc, rng, probes_per_colimit);
      out.probes += probes.size();
      out.universal.merge(check_universal(wc, probes), label);
    }
    for (const auto& w : {w1, w2}) {
      const Presentation pr = canonical_presentation(c, w);
      out.presentation.expect(!pr.failure, label + pr.failure.value_or(""));
    }
    out.equivalence.merge(check_equivalence({"random", c, f, {w1, w2, terminal_presheaf(c)}}), label);
    ++out.instances;
  }
  return out;
}

}  // namespace enrichkit
