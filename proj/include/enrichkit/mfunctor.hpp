#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "enrichkit/enriched.hpp"
#include "enrichkit/fincat.hpp"
#include "enrichkit/tensored.hpp"

namespace enrichkit {

inline bool same_base(const MonStr& a, const MonStr& b) { return &a == &b || a == b; }
inline bool same_base(const FinSetMonoidal& a, const FinSetMonoidal& b) { return a.kind() == b.kind(); }

/// An M-functor from an enriched category into a left-tensored one: an
/// object map and action maps phi(x, y): act(hom(x,y), f(x)) → f(y).
template <class Module>
struct MFunctorET {
  using Base = typename Module::Base;
  using Object = typename Module::Object;
  using Morphism = typename Module::Morphism;

  std::shared_ptr<const EnrichedCategory<Base>> source;
  std::shared_ptr<const Module> target;
  std::vector<Object> ob_map;
  std::vector<Morphism> phi;  // [x][y]

  std::size_t size() const { return ob_map.size(); }
  const Morphism& action(std::size_t x, std::size_t y) const { return phi[x * size() + y]; }
  Morphism& action(std::size_t x, std::size_t y) { return phi[x * size() + y]; }

  friend bool operator==(const MFunctorET& a, const MFunctorET& b) {
    return a.ob_map == b.ob_map && a.phi == b.phi;
  }
};

/// Which checks an M-functor must pass. The unit-action law is enforced by
/// default; dropping it is how the unit-automatism experiment counts
/// candidates that satisfy only the composition square.
enum class UnitLaw { enforce, skip };

/// First failure of an MFunctorET, or nullopt. Checks typing
/// (TypeMismatch), the composition square for every triple
/// (CompatibilityViolation) and, unless skipped, the unit action for every
/// object (UnitActionViolation).
template <class Module>
std::optional<Error> mfun_et_failure(const MFunctorET<Module>& f, UnitLaw unit = UnitLaw::enforce) {
  const auto& a = *f.source;
  const Module& b = *f.target;
  const auto& m = b.base();
  const std::size_t n = a.size();
  if (!same_base(*a.base, m)) return Error(ErrorKind::TypeMismatch, "source and target have different bases");
  if (f.ob_map.size() != n || f.phi.size() != n * n) {
    return Error(ErrorKind::SchemaViolation, "functor tables have the wrong size");
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto& p = f.action(x, y);
      if (b.dom(p) != b.act(a.hom(x, y), f.ob_map[x]) || b.cod(p) != f.ob_map[y]) {
        return Error(ErrorKind::TypeMismatch, "phi at " + detail::names(a, {x, y}) + " is " + b.describe(p));
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const auto left = b.compose(f.action(y, z), b.act(m.identity(a.hom(y, z)), f.action(x, y)));
        const auto right = b.compose(f.action(x, z), b.act(a.comp(x, y, z), b.identity(f.ob_map[x])));
        if (left != right) {
          return Error(ErrorKind::CompatibilityViolation,
                       detail::names(a, {x, y, z}) + ": " + b.describe(left) + " vs " + b.describe(right));
        }
      }
    }
  }
  if (unit == UnitLaw::enforce) {
    for (std::size_t x = 0; x < n; ++x) {
      const auto u = b.compose(f.action(x, x), b.act(a.unit(x), b.identity(f.ob_map[x])));
      if (u != b.identity(f.ob_map[x])) {
        return Error(ErrorKind::UnitActionViolation, a.objects[x] + ": " + b.describe(u));
      }
    }
  }
  return std::nullopt;
}

template <class Module>
void validate_mfun_et(const MFunctorET<Module>& f) {
  if (auto e = mfun_et_failure(f)) throw *e;
}

/// Failure of a family of components c(x): f(x) → g(x) to be a morphism of
/// M-functors: g.phi(x,y) ∘ act(id, c(x)) = c(y) ∘ f.phi(x,y).
template <class Module>
std::optional<std::string> mfun_mor_failure(const MFunctorET<Module>& f, const MFunctorET<Module>& g,
                                            const std::vector<typename Module::Morphism>& c) {
  const auto& a = *f.source;
  const Module& b = *f.target;
  const auto& m = b.base();
  const std::size_t n = a.size();
  if (c.size() != n) return "component table has the wrong size";
  for (std::size_t x = 0; x < n; ++x) {
    if (b.dom(c[x]) != f.ob_map[x] || b.cod(c[x]) != g.ob_map[x]) {
      return "component at " + a.objects[x] + " has the wrong type";
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto left = b.compose(g.action(x, y), b.act(m.identity(a.hom(x, y)), c[x]));
      const auto right = b.compose(c[y], f.action(x, y));
      if (left != right) return "square at " + detail::names(a, {x, y});
    }
  }
  return std::nullopt;
}

/// An M-functor between left-tensored categories: a functor on carriers with
/// structure isomorphisms sigma(m, a): f(act(m, a)) → act(m, f(a)).
struct MFunctorTT {
  LTensoredPtr source;
  LTensoredPtr target;
  FinFunctor functor;
  std::vector<MorId> sigma;  // [base object][source object]

  MorId structure(ObId m, ObId a) const { return sigma[m.value * source->carrier().object_count() + a.value]; }
};

/// Throws TypeMismatch (underlying functor), NaturalityViolation (typing,
/// invertibility or naturality of sigma; witness (m, a) or (u, α)) or
/// CocycleViolation (witness (m, n, a)).
void validate_mfun_tt(const MFunctorTT& f);

/// The identity M-functor with identity structure maps.
MFunctorTT identity_mfun_tt(const LTensoredPtr& b);

/// All M-functors A → B, in lexicographic order of (ob_map, phi), with all
/// morphisms between them assembled into a validated FinCat.
struct MFunCategory {
  struct Arrow {
    std::size_t source;
    std::size_t target;
    std::vector<MorId> components;
  };
  std::vector<MFunctorET<LTensored>> functors;
  std::vector<Arrow> arrows;
  FinCatPtr category;  // objects indexed like functors, morphisms like arrows
};

/// Object list only. Throws SizeBound when the search visits more than
/// limits.max_candidates partial assignments.
std::vector<MFunctorET<LTensored>> enumerate_mfun_et_objects(const MCatPtr& a, const LTensoredPtr& b,
                                                             UnitLaw unit = UnitLaw::enforce,
                                                             const Limits& limits = {});

/// All morphisms f → g, in lexicographic order of components.
std::vector<std::vector<MorId>> enumerate_mfun_mors(const MFunctorET<LTensored>& f,
                                                    const MFunctorET<LTensored>& g,
                                                    const Limits& limits = {});

MFunCategory enumerate_mfun_et(const MCatPtr& a, const LTensoredPtr& b, const Limits& limits = {});

/// Outcome of dropping the unit-action law: how many candidates satisfy the
/// composition square only, and how many of those violate the unit law.
struct UnitAutomatism {
  std::size_t compatible = 0;
  std::size_t unit_failures = 0;
  std::vector<std::string> examples;  // up to three counterexamples
};

UnitAutomatism measure_unit_automatism(const MCatPtr& a, const LTensoredPtr& b,
                                       const Limits& limits = {});

}  // namespace enrichkit
