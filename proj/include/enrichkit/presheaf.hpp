#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "enrichkit/enriched.hpp"
#include "enrichkit/mfunctor.hpp"
#include "enrichkit/tensored.hpp"

namespace enrichkit {

/// An M-presheaf on A in unfolded form: values f(x) in the base and action
/// maps f(y)⊗hom(x,y) → f(x).
template <class Base>
struct Presheaf {
  using Object = typename Base::Object;
  using Morphism = typename Base::Morphism;

  std::vector<Object> values;
  std::vector<Morphism> actions;  // [x][y]

  std::size_t size() const { return values.size(); }
  const Morphism& action(std::size_t x, std::size_t y) const { return actions[x * size() + y]; }
  Morphism& action(std::size_t x, std::size_t y) { return actions[x * size() + y]; }

  friend auto operator<=>(const Presheaf&, const Presheaf&) = default;
  friend bool operator==(const Presheaf&, const Presheaf&) = default;
};

/// First failure of a presheaf: typing, the compatibility square
/// f(z)⊗hom(y,z)⊗hom(x,y) → f(x) for every triple, and (unless skipped)
/// the unit action.
template <class Base>
std::optional<Error> presheaf_failure(const EnrichedCategory<Base>& a, const Presheaf<Base>& f,
                                      UnitLaw unit = UnitLaw::enforce) {
  const Base& m = *a.base;
  const std::size_t n = a.size();
  if (f.values.size() != n || f.actions.size() != n * n) {
    return Error(ErrorKind::SchemaViolation, "presheaf tables have the wrong size");
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto& p = f.action(x, y);
      if (m.dom(p) != m.tensor(f.values[y], a.hom(x, y)) || m.cod(p) != f.values[x]) {
        return Error(ErrorKind::TypeMismatch, "action at " + detail::names(a, {x, y}) + " is " + m.describe(p));
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const auto left = m.compose(f.action(x, y), m.tensor(f.action(y, z), m.identity(a.hom(x, y))));
        const auto right = m.compose(f.action(x, z), m.tensor(m.identity(f.values[z]), a.comp(x, y, z)));
        if (left != right) {
          return Error(ErrorKind::CompatibilityViolation,
                       detail::names(a, {x, y, z}) + ": " + m.describe(left) + " vs " + m.describe(right));
        }
      }
    }
  }
  if (unit == UnitLaw::enforce) {
    for (std::size_t x = 0; x < n; ++x) {
      const auto u = m.compose(f.action(x, x), m.tensor(m.identity(f.values[x]), a.unit(x)));
      if (u != m.identity(f.values[x])) {
        return Error(ErrorKind::UnitActionViolation, a.objects[x] + ": " + m.describe(u));
      }
    }
  }
  return std::nullopt;
}

template <class Base>
void validate_presheaf(const EnrichedCategory<Base>& a, const Presheaf<Base>& f) {
  if (auto e = presheaf_failure(a, f)) throw *e;
}

/// Failure of components c(x): f(x) → g(x) to form a presheaf morphism:
/// g.action(x,y) ∘ (c(y) ⊗ id) = c(x) ∘ f.action(x,y).
template <class Base>
std::optional<std::string> presheaf_mor_failure(const EnrichedCategory<Base>& a, const Presheaf<Base>& f,
                                                const Presheaf<Base>& g,
                                                const std::vector<typename Base::Morphism>& c) {
  const Base& m = *a.base;
  const std::size_t n = a.size();
  if (c.size() != n) return "component table has the wrong size";
  for (std::size_t x = 0; x < n; ++x) {
    if (m.dom(c[x]) != f.values[x] || m.cod(c[x]) != g.values[x]) {
      return "component at " + a.objects[x] + " has the wrong type";
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto left = m.compose(g.action(x, y), m.tensor(c[y], m.identity(a.hom(x, y))));
      const auto right = m.compose(c[x], f.action(x, y));
      if (left != right) return "square at " + detail::names(a, {x, y});
    }
  }
  return std::nullopt;
}

/// m ⊗ f: values m⊗f(x), actions id_m ⊗ f.action.
template <class Base>
Presheaf<Base> tensor_presheaf(const EnrichedCategory<Base>& a, const typename Base::Object& mo,
                               const Presheaf<Base>& f) {
  const Base& m = *a.base;
  Presheaf<Base> out;
  for (const auto& v : f.values) out.values.push_back(m.tensor(mo, v));
  const auto id = m.identity(mo);
  for (const auto& p : f.actions) out.actions.push_back(m.tensor(id, p));
  return out;
}

/// Y(z): values hom(x, z), actions comp(x, y, z).
template <class Base>
Presheaf<Base> representable(const EnrichedCategory<Base>& a, std::size_t z) {
  Presheaf<Base> out;
  const std::size_t n = a.size();
  for (std::size_t x = 0; x < n; ++x) out.values.push_back(a.hom(x, z));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) out.actions.push_back(a.comp(x, y, z));
  }
  return out;
}

using FinPresheaf = Presheaf<MonStr>;

/// P_M(A) over a finite base: every presheaf, every presheaf morphism,
/// assembled into a validated FinCat, and the left-tensoring by M as a
/// validated LTensored on that FinCat.
class PresheafCategory {
 public:
  struct Arrow {
    std::size_t source;
    std::size_t target;
    std::vector<MorId> components;
  };

  static PresheafCategory enumerate(const MCatPtr& a, const Limits& limits = {});

  const MCat& source() const { return *source_; }
  const MCatPtr& source_ptr() const { return source_; }
  const std::vector<FinPresheaf>& presheaves() const { return presheaves_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const FinCat& category() const { return *category_; }
  const FinCatPtr& category_ptr() const { return category_; }
  const LTensored& tensored() const { return *tensored_; }
  const LTensoredPtr& tensored_ptr() const { return tensored_; }

  std::optional<ObId> find(const FinPresheaf& f) const;
  std::optional<MorId> find(std::size_t source, std::size_t target, const std::vector<MorId>& components) const;

 private:
  PresheafCategory() = default;

  MCatPtr source_;
  std::vector<FinPresheaf> presheaves_;
  std::vector<Arrow> arrows_;
  std::map<FinPresheaf, std::size_t> presheaf_index_;
  std::map<std::tuple<std::size_t, std::size_t, std::vector<MorId>>, std::size_t> arrow_index_;
  FinCatPtr category_;
  LTensoredPtr tensored_;
};

/// All presheaves on A (value maps × action choices passing the invariants),
/// in lexicographic order of (values, actions).
std::vector<FinPresheaf> enumerate_presheaf_objects(const MCat& a, UnitLaw unit = UnitLaw::enforce,
                                                    const Limits& limits = {});

/// The Yoneda embedding z ↦ Y(z) as an M-functor A → P_M(A) with phi given by
/// composition. Throws InternalError if some Y(z) or phi is missing from the
/// enumeration, and the validator's error if the result is not an M-functor.
MFunctorET<LTensored> yoneda(const PresheafCategory& p);

/// Counts for the representability checks. A failure falsifies the
/// implementation; witnesses describe each failing (F, x, m) or (x, y, m).
struct BijectionReport {
  std::size_t cases = 0;
  std::size_t bijections = 0;
  std::size_t failures = 0;
  std::size_t elements = 0;  // total size of the compared hom-sets
  std::vector<std::string> witnesses;
};

/// For every presheaf F, object x and base object m, checks that
/// α ↦ F.action ∘ (α ⊗ id) is a bijection Hom(m, F(x)) → Hom_P(m⊗Y(x), F)
/// whose inverse is β ↦ β_x ∘ (id_m ⊗ unit(x)).
BijectionReport check_yoneda_lemma(const PresheafCategory& p);

/// For every x, y, m, checks that u ↦ comp ∘ (u ⊗ id) is a bijection
/// Hom(m, hom(x,y)) → Hom_P(m⊗Y(x), Y(y)), and that the hom-object search on
/// P_M(A) finds hom(x,y) (up to the first representing object in
/// declaration order being isomorphic to it).
BijectionReport check_fully_faithful(const PresheafCategory& p);

/// A presheaf on A is an M_op-functor A^op → M, with M a left M_op-module by
/// acting on the right. `op_source` must be opposite_mcat(A) and `op_target`
/// self_module(M_op) acting on M's carrier.
MFunctorET<LTensored> presheaf_to_op_functor(const FinPresheaf& f, const MCatPtr& op_source,
                                             const LTensoredPtr& op_target);
FinPresheaf op_functor_to_presheaf(const MFunctorET<LTensored>& f);

}  // namespace enrichkit
