#include "enrichkit/tensored.hpp"

#include <algorithm>

#include "enrichkit/laws.hpp"

namespace enrichkit {

namespace {

constexpr std::uint32_t kUnset = ~std::uint32_t{0};

}  // namespace

LTensored LTensored::validate(MonStrPtr base, FinCatPtr carrier, const RawModule& raw) {
  const FinCat& mc = base->carrier();
  const FinCat& c = *carrier;
  auto base_ob = [&](const std::string& s) {
    if (auto x = mc.find_object(s)) return *x;
    throw Error(ErrorKind::UnresolvedReference, "base has no object '" + s + "'");
  };
  auto base_mor = [&](const std::string& s) {
    if (auto f = mc.find_morphism(s)) return *f;
    throw Error(ErrorKind::UnresolvedReference, "base has no morphism '" + s + "'");
  };
  auto ob = [&](const std::string& s) {
    if (auto x = c.find_object(s)) return *x;
    throw Error(ErrorKind::UnresolvedReference, "carrier has no object '" + s + "'");
  };
  auto mor = [&](const std::string& s) {
    if (auto f = c.find_morphism(s)) return *f;
    throw Error(ErrorKind::UnresolvedReference, "carrier has no morphism '" + s + "'");
  };

  const std::size_t n_ob = c.object_count();
  const std::size_t n_mor = c.morphism_count();
  std::vector<ObId> act_ob(mc.object_count() * n_ob, ObId{kUnset});
  for (const auto& [m, b, mb] : raw.act_ob) act_ob[base_ob(m).value * n_ob + ob(b).value] = ob(mb);
  for (ObId m : mc.objects()) {
    for (ObId b : c.objects()) {
      auto& cell = act_ob[m.value * n_ob + b.value];
      if (cell.value != kUnset) continue;
      if (m != base->unit_object()) {
        throw Error(ErrorKind::SchemaViolation, "missing act_ob entry (" + mc.name(m) + ", " + c.name(b) + ")");
      }
      cell = b;
    }
  }

  std::vector<MorId> act_mor(mc.morphism_count() * n_mor, MorId{kUnset});
  for (const auto& [g, f, gf] : raw.act_mor) act_mor[base_mor(g).value * n_mor + mor(f).value] = mor(gf);
  for (MorId g : mc.morphisms()) {
    for (MorId f : c.morphisms()) {
      auto& cell = act_mor[g.value * n_mor + f.value];
      if (cell.value != kUnset) continue;
      const ObId dom = act_ob[mc.dom(g).value * n_ob + c.dom(f).value];
      const ObId cod = act_ob[mc.cod(g).value * n_ob + c.cod(f).value];
      const auto candidates = c.hom(dom, cod);
      if (g == mc.identity(base->unit_object()) && dom == c.dom(f) && cod == c.cod(f)) {
        cell = f;  // the unit acts trivially; otherwise the unit law check reports it
      } else if (mc.is_identity(g) && c.is_identity(f) && dom == cod) {
        cell = c.identity(dom);
      } else if (candidates.size() == 1) {
        cell = candidates.front();
      } else if (candidates.empty()) {
        throw Error(ErrorKind::TypeMismatch,
                    "no carrier morphism of the required type for act(" + mc.name(g) + ", " + c.name(f) + ")");
      } else {
        throw Error(ErrorKind::SchemaViolation,
                    "missing act_mor entry (" + mc.name(g) + ", " + c.name(f) + ")");
      }
    }
  }
  return from_tables(std::move(base), std::move(carrier), std::move(act_ob), std::move(act_mor));
}

LTensored LTensored::from_tables(MonStrPtr base, FinCatPtr carrier, std::vector<ObId> act_ob,
                                 std::vector<MorId> act_mor) {
  LTensored b;
  b.base_ = std::move(base);
  b.carrier_ = std::move(carrier);
  b.act_ob_ = std::move(act_ob);
  b.act_mor_ = std::move(act_mor);
  const auto base_obs = b.base_->objects();
  const auto base_mors = b.base_->morphisms();
  const auto obs = b.carrier_->objects();
  const auto mors = b.carrier_->morphisms();
  if (b.act_ob_.size() != base_obs.size() * obs.size() ||
      b.act_mor_.size() != base_mors.size() * mors.size()) {
    throw Error(ErrorKind::SchemaViolation, "action tables have the wrong size");
  }
  for (ObId x : b.act_ob_) {
    if (x.value >= obs.size()) throw Error(ErrorKind::DanglingReference, "act_ob entry out of range");
  }
  for (MorId f : b.act_mor_) {
    if (f.value >= mors.size()) throw Error(ErrorKind::DanglingReference, "act_mor entry out of range");
  }
  laws::check_module_laws(b, std::span<const ObId>(base_obs), std::span<const MorId>(base_mors),
                          std::span<const ObId>(obs), std::span<const MorId>(mors));
  return b;
}

RawModule LTensored::to_raw() const {
  RawModule raw;
  const FinCat& mc = base_->carrier();
  const FinCat& c = *carrier_;
  for (ObId m : mc.objects()) {
    for (ObId b : c.objects()) raw.act_ob.push_back({mc.name(m), c.name(b), c.name(act(m, b))});
  }
  for (MorId g : mc.morphisms()) {
    for (MorId f : c.morphisms()) raw.act_mor.push_back({mc.name(g), c.name(f), c.name(act(g, f))});
  }
  return raw;
}

LTensoredPtr self_module(const MonStrPtr& base) {
  const auto obs = base->objects();
  const auto mors = base->morphisms();
  std::vector<ObId> act_ob;
  std::vector<MorId> act_mor;
  for (ObId m : obs) {
    for (ObId b : obs) act_ob.push_back(base->tensor(m, b));
  }
  for (MorId g : mors) {
    for (MorId f : mors) act_mor.push_back(base->tensor(g, f));
  }
  return std::make_shared<const LTensored>(
      LTensored::from_tables(base, base->carrier_ptr(), std::move(act_ob), std::move(act_mor)));
}

void validate_on_probes(const FinSetModule& b, std::size_t max_probe_card) {
  std::vector<SkSet> obs;
  for (std::size_t a = 0; a <= max_probe_card; ++a) obs.push_back(SkSet{a});
  const auto mors = probe_maps(max_probe_card);
  laws::check_module_laws(b, std::span<const SkSet>(obs), std::span<const SkMap>(mors),
                          std::span<const SkSet>(obs), std::span<const SkMap>(mors));
}

bool is_universal(const LTensored& b, ObId x, ObId y, const Representation& rep) {
  const MonStr& m = b.base();
  for (ObId s : m.objects()) {
    const auto left = m.hom(s, rep.object);
    const auto right = b.hom(b.act(s, x), y);
    if (left.size() != right.size()) return false;
    std::vector<MorId> images;
    for (MorId u : left) {
      const MorId image = b.compose(rep.universal, b.act(u, b.identity(x)));
      if (std::find(images.begin(), images.end(), image) != images.end()) return false;
      images.push_back(image);
    }
  }
  return true;
}

bool representation_is_natural(const LTensored& b, ObId x, const Representation& rep) {
  const MonStr& m = b.base();
  const MorId id_x = b.identity(x);
  for (MorId v : m.morphisms()) {
    for (MorId u : m.hom(m.cod(v), rep.object)) {
      const MorId left = b.compose(rep.universal, b.act(m.compose(u, v), id_x));
      const MorId right =
          b.compose(b.compose(rep.universal, b.act(u, id_x)), b.act(v, id_x));
      if (left != right) return false;
    }
  }
  return true;
}

HomObjectResult hom_object(const LTensored& b, ObId x, ObId y) {
  HomObjectResult result;
  for (ObId h : b.base().objects()) {
    for (MorId eps : b.hom(b.act(h, x), y)) {
      const Representation rep{h, eps};
      if (is_universal(b, x, y, rep)) result.all.push_back(rep);
    }
  }
  if (!result.all.empty()) result.first = result.all.front();
  return result;
}

std::optional<std::pair<MorId, MorId>> find_isomorphism(const MonStr& m, ObId a, ObId b) {
  for (MorId f : m.hom(a, b)) {
    for (MorId g : m.hom(b, a)) {
      if (m.compose(g, f) == m.identity(a) && m.compose(f, g) == m.identity(b)) return std::pair{f, g};
    }
  }
  return std::nullopt;
}

}  // namespace enrichkit
