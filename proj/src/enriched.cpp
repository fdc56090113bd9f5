#include "enrichkit/enriched.hpp"

#include <map>

namespace enrichkit {

namespace {

constexpr std::uint32_t kUnset = ~std::uint32_t{0};

}  // namespace

MCat make_mcat(MonStrPtr base, const RawEnriched& raw) {
  const MonStr& m = *base;
  const FinCat& c = m.carrier();
  MCat a;
  a.base = base;
  a.objects = raw.objects;
  const std::size_t n = a.objects.size();

  std::map<std::string, std::size_t, std::less<>> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!index.emplace(a.objects[i], i).second) {
      throw Error(ErrorKind::SchemaViolation, "duplicate object '" + a.objects[i] + "'");
    }
  }
  auto obj = [&](const std::string& s) {
    auto it = index.find(s);
    if (it == index.end()) throw Error(ErrorKind::UnresolvedReference, "undeclared object '" + s + "'");
    return it->second;
  };
  auto base_ob = [&](const std::string& s) {
    if (auto x = c.find_object(s)) return *x;
    throw Error(ErrorKind::UnresolvedReference, "base has no object '" + s + "'");
  };
  auto base_mor = [&](const std::string& s) {
    if (auto f = c.find_morphism(s)) return *f;
    throw Error(ErrorKind::UnresolvedReference, "base has no morphism '" + s + "'");
  };

  a.homs.assign(n * n, ObId{kUnset});
  for (const auto& [x, y, h] : raw.hom) a.homs[obj(x) * n + obj(y)] = base_ob(h);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (a.hom(x, y).value == kUnset) {
        throw Error(ErrorKind::SchemaViolation,
                    "missing hom entry (" + a.objects[x] + ", " + a.objects[y] + ")");
      }
    }
  }

  auto forced = [&](ObId dom, ObId cod, const std::string& what) {
    const auto candidates = c.hom(dom, cod);
    if (candidates.size() == 1) return candidates.front();
    if (candidates.empty()) {
      throw Error(ErrorKind::TypeMismatch, what + ": no base morphism " + c.name(dom) + "→" + c.name(cod));
    }
    throw Error(ErrorKind::SchemaViolation, what + " is ambiguous and must be given");
  };

  a.units.assign(n, MorId{kUnset});
  for (const auto& [x, f] : raw.unit) a.units[obj(x)] = base_mor(f);
  for (std::size_t x = 0; x < n; ++x) {
    if (a.units[x].value == kUnset) {
      a.units[x] = forced(m.unit_object(), a.hom(x, x), "unit of " + a.objects[x]);
    }
  }
  a.comps.assign(n * n * n, MorId{kUnset});
  for (const auto& [x, y, z, f] : raw.comp) a.comp(obj(x), obj(y), obj(z)) = base_mor(f);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (a.comp(x, y, z).value != kUnset) continue;
        a.comp(x, y, z) = forced(m.tensor(a.hom(y, z), a.hom(x, y)), a.hom(x, z),
                                 "comp at " + detail::names(a, {x, y, z}));
      }
    }
  }
  validate_mcat(a);
  return a;
}

RawEnriched to_raw(const MCat& a) {
  const MonStr& m = *a.base;
  RawEnriched raw;
  raw.objects = a.objects;
  const std::size_t n = a.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      raw.hom.push_back({a.objects[x], a.objects[y], m.describe(a.hom(x, y))});
    }
  }
  for (std::size_t x = 0; x < n; ++x) raw.unit.push_back({a.objects[x], m.describe(a.unit(x))});
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        raw.comp.push_back({a.objects[x], a.objects[y], a.objects[z], m.describe(a.comp(x, y, z))});
      }
    }
  }
  return raw;
}

MCat opposite_mcat(const MCat& a) {
  MCat op;
  op.base = std::make_shared<const MonStr>(a.base->opposite());
  op.objects = a.objects;
  const std::size_t n = a.size();
  op.homs.resize(n * n);
  op.units = a.units;
  op.comps.resize(n * n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      op.homs[x * n + y] = a.hom(y, x);
      for (std::size_t z = 0; z < n; ++z) op.comp(x, y, z) = a.comp(z, y, x);
    }
  }
  validate_mcat(op);
  return op;
}

}  // namespace enrichkit
