#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "enrichkit/error.hpp"

namespace enrichkit {

/// Dense index of an object inside one category.
struct ObId {
  std::uint32_t value = 0;
  friend auto operator<=>(const ObId&, const ObId&) = default;
};

/// Dense index of a morphism inside one category.
struct MorId {
  std::uint32_t value = 0;
  friend auto operator<=>(const MorId&, const MorId&) = default;
};

struct MorphismDecl {
  std::string name;
  std::string dom;
  std::string cod;
};

/// Tables as they arrive from a spec file or a test. Identities may be
/// declared; if not, an object's identity is inferred (its only endomorphism,
/// or the endomorphism acting as a two-sided unit in the declared table).
/// Composites with identities, and composites landing in a one-element
/// hom-set, may be omitted.
struct RawCategory {
  std::vector<std::string> objects;
  std::vector<MorphismDecl> morphisms;
  std::vector<std::pair<std::string, std::string>> identities;  // object, morphism
  std::vector<std::array<std::string, 3>> compose;              // g, f, g∘f
};

/// A validated finite category. Immutable; all invariants (typing, unit
/// laws, associativity) hold for every instance.
class FinCat {
 public:
  /// Builds and exhaustively checks a category. Throws Error with
  /// DanglingReference, MissingComposite, UnitViolation or
  /// AssociativityViolation (first offending triple in index order).
  static FinCat validate(const RawCategory& raw, const Limits& limits = {});

  std::size_t object_count() const { return object_names_.size(); }
  std::size_t morphism_count() const { return mor_names_.size(); }

  const std::string& name(ObId x) const { return object_names_[x.value]; }
  const std::string& name(MorId f) const { return mor_names_[f.value]; }
  std::optional<ObId> find_object(std::string_view name) const;
  std::optional<MorId> find_morphism(std::string_view name) const;

  ObId dom(MorId f) const { return dom_[f.value]; }
  ObId cod(MorId f) const { return cod_[f.value]; }
  MorId identity(ObId x) const { return identity_[x.value]; }
  bool is_identity(MorId f) const { return identity(dom(f)) == f; }

  /// g∘f. Precondition: dom(g) == cod(f).
  MorId compose(MorId g, MorId f) const {
    return MorId{compose_[g.value * morphism_count() + f.value]};
  }
  bool composable(MorId g, MorId f) const { return dom(g) == cod(f); }

  /// Morphisms a→b in declaration order.
  std::span<const MorId> hom(ObId a, ObId b) const {
    return hom_[a.value * object_count() + b.value];
  }

  std::optional<MorId> inverse(MorId f) const;
  bool is_iso(MorId f) const { return inverse(f).has_value(); }

  std::vector<ObId> objects() const;
  std::vector<MorId> morphisms() const;

  RawCategory to_raw() const;

  friend bool operator==(const FinCat& a, const FinCat& b) {
    return a.object_names_ == b.object_names_ && a.mor_names_ == b.mor_names_ &&
           a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.compose_ == b.compose_;
  }

 private:
  FinCat() = default;

  std::vector<std::string> object_names_;
  std::vector<std::string> mor_names_;
  std::vector<ObId> dom_;
  std::vector<ObId> cod_;
  std::vector<MorId> identity_;
  std::vector<std::uint32_t> compose_;  // dense, row g, column f
  std::vector<std::vector<MorId>> hom_;
};

using FinCatPtr = std::shared_ptr<const FinCat>;

struct FinFunctor {
  FinCatPtr source;
  FinCatPtr target;
  std::vector<ObId> ob_map;
  std::vector<MorId> mor_map;

  ObId operator()(ObId x) const { return ob_map[x.value]; }
  MorId operator()(MorId f) const { return mor_map[f.value]; }

  friend bool operator==(const FinFunctor& a, const FinFunctor& b) {
    return a.ob_map == b.ob_map && a.mor_map == b.mor_map;
  }
};

/// Returns a description of the first functoriality failure, if any.
std::optional<std::string> functor_failure(const FinFunctor& f);

FinFunctor identity_functor(FinCatPtr c);

/// g∘f. Precondition: f.target and g.source describe the same category.
FinFunctor compose(const FinFunctor& g, const FinFunctor& f);

/// Every functor C→D, duplicate-free, in lexicographic order of
/// (ob_map, mor_map). Throws SizeBound when the typed candidate space
/// exceeds limits.max_candidates.
std::vector<FinFunctor> enumerate_functors(const FinCatPtr& c, const FinCatPtr& d,
                                           const Limits& limits = {});

struct NatIso {
  FinFunctor source;
  FinFunctor target;
  std::vector<MorId> components;  // indexed by objects of the common source
};

struct NatIsoVerdict {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Checks typing, invertibility of each component and every naturality
/// square. Failures are listed, not thrown.
NatIsoVerdict check_nat_iso(const NatIso& t);

}  // namespace enrichkit
