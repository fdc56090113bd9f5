#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "enrichkit/error.hpp"
#include "enrichkit/monoidal.hpp"

namespace enrichkit {

/// A category enriched over a strict monoidal base: hom-objects in the base,
/// units 𝟏→hom(x,x) and compositions hom(y,z)⊗hom(x,y)→hom(x,z).
///
/// Objects of the enriched category are plain indices into `objects`.
template <class Base>
struct EnrichedCategory {
  using Object = typename Base::Object;
  using Morphism = typename Base::Morphism;

  std::shared_ptr<const Base> base;
  std::vector<std::string> objects;
  std::vector<Object> homs;      // [x][y]
  std::vector<Morphism> units;   // [x]
  std::vector<Morphism> comps;   // [x][y][z]

  std::size_t size() const { return objects.size(); }
  const Object& hom(std::size_t x, std::size_t y) const { return homs[x * size() + y]; }
  const Morphism& unit(std::size_t x) const { return units[x]; }
  const Morphism& comp(std::size_t x, std::size_t y, std::size_t z) const {
    return comps[(x * size() + y) * size() + z];
  }
  Morphism& comp(std::size_t x, std::size_t y, std::size_t z) {
    return comps[(x * size() + y) * size() + z];
  }

  friend bool operator==(const EnrichedCategory& a, const EnrichedCategory& b) {
    return *a.base == *b.base && a.objects == b.objects && a.homs == b.homs &&
           a.units == b.units && a.comps == b.comps;
  }
};

using MCat = EnrichedCategory<MonStr>;
using MCatPtr = std::shared_ptr<const MCat>;

namespace detail {

template <class Base>
std::string names(const EnrichedCategory<Base>& a, std::initializer_list<std::size_t> xs) {
  std::string s = "(";
  bool first = true;
  for (std::size_t x : xs) {
    if (!first) s += ", ";
    s += a.objects[x];
    first = false;
  }
  return s + ")";
}

}  // namespace detail

/// Exhaustive check over all triples and quadruples. Throws TypeMismatch,
/// EnrichedAssociativityViolation (witness quadruple (w, x, y, z)) or
/// EnrichedUnitViolation (witness pair (x, y)).
template <class Base>
void validate_mcat(const EnrichedCategory<Base>& a) {
  const Base& m = *a.base;
  const std::size_t n = a.size();
  if (a.homs.size() != n * n || a.units.size() != n || a.comps.size() != n * n * n) {
    throw Error(ErrorKind::SchemaViolation, "enriched tables have the wrong size");
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (m.dom(a.unit(x)) != m.unit_object() || m.cod(a.unit(x)) != a.hom(x, x)) {
      throw Error(ErrorKind::TypeMismatch, "unit of " + a.objects[x] + " is " +
                                               m.describe(a.unit(x)) + ", not a map 𝟏→hom(x,x)");
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const auto& c = a.comp(x, y, z);
        if (m.dom(c) != m.tensor(a.hom(y, z), a.hom(x, y)) || m.cod(c) != a.hom(x, z)) {
          throw Error(ErrorKind::TypeMismatch, "comp at " + detail::names(a, {x, y, z}) + " is " +
                                                   m.describe(c) +
                                                   ", not a map hom(y,z)⊗hom(x,y)→hom(x,z)");
        }
      }
    }
  }
  for (std::size_t w = 0; w < n; ++w) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          const auto left = m.compose(a.comp(w, x, z), m.tensor(a.comp(x, y, z), m.identity(a.hom(w, x))));
          const auto right = m.compose(a.comp(w, y, z), m.tensor(m.identity(a.hom(y, z)), a.comp(w, x, y)));
          if (left != right) {
            throw Error(ErrorKind::EnrichedAssociativityViolation,
                        detail::names(a, {w, x, y, z}) + ": " + m.describe(left) + " vs " +
                            m.describe(right));
          }
        }
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto id = m.identity(a.hom(x, y));
      const auto left = m.compose(a.comp(x, y, y), m.tensor(a.unit(y), id));
      const auto right = m.compose(a.comp(x, x, y), m.tensor(id, a.unit(x)));
      if (left != id || right != id) {
        throw Error(ErrorKind::EnrichedUnitViolation, detail::names(a, {x, y}));
      }
    }
  }
}

/// Tables by name over a finite base. Unit and comp entries may be omitted
/// when exactly one base morphism has the required type; if none has, the
/// structure is ill-typed and TypeMismatch is raised.
struct RawEnriched {
  std::vector<std::string> objects;
  std::vector<std::array<std::string, 3>> hom;   // x, y, object
  std::vector<std::array<std::string, 2>> unit;  // x, morphism
  std::vector<std::array<std::string, 4>> comp;  // x, y, z, morphism
};

/// Resolves names, fills forced entries and runs validate_mcat.
MCat make_mcat(MonStrPtr base, const RawEnriched& raw);

RawEnriched to_raw(const MCat& a);

/// A^op over M_op: hom_op(x, y) = hom(y, x), comp_op(x, y, z) = comp(z, y, x).
/// The result is revalidated.
MCat opposite_mcat(const MCat& a);

}  // namespace enrichkit
