#pragma once

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "enrichkit/monoidal.hpp"

namespace enrichkit {

/// act_ob / act_mor by name. Missing act_mor entries are filled when the
/// target hom-set of the carrier has exactly one element.
struct RawModule {
  std::vector<std::array<std::string, 3>> act_ob;   // m, b, act(m, b)
  std::vector<std::array<std::string, 3>> act_mor;  // g, f, act(g, f)
};

/// A finite category with a strict left action of a finite strict monoidal
/// base: act(m, act(n, b)) = act(m⊗n, b) and act(𝟏, −) = id on the nose.
class LTensored {
 public:
  using Base = MonStr;
  using Object = ObId;
  using Morphism = MorId;

  /// Throws ModuleLawViolation, UnitActionViolation,
  /// BifunctorialityViolation, TypeMismatch with the first witness.
  static LTensored validate(MonStrPtr base, FinCatPtr carrier, const RawModule& raw);

  /// Same checks from index tables ([base ob][carrier ob], [base mor][carrier mor]).
  static LTensored from_tables(MonStrPtr base, FinCatPtr carrier, std::vector<ObId> act_ob,
                               std::vector<MorId> act_mor);

  const MonStr& base() const { return *base_; }
  const MonStrPtr& base_ptr() const { return base_; }
  const FinCat& carrier() const { return *carrier_; }
  const FinCatPtr& carrier_ptr() const { return carrier_; }

  ObId act(ObId m, ObId b) const { return act_ob_[m.value * carrier_->object_count() + b.value]; }
  MorId act(MorId g, MorId f) const { return act_mor_[g.value * carrier_->morphism_count() + f.value]; }

  MorId compose(MorId g, MorId f) const { return carrier_->compose(g, f); }
  MorId identity(ObId x) const { return carrier_->identity(x); }
  ObId dom(MorId f) const { return carrier_->dom(f); }
  ObId cod(MorId f) const { return carrier_->cod(f); }
  std::span<const MorId> hom(ObId a, ObId b) const { return carrier_->hom(a, b); }
  std::string describe(ObId x) const { return carrier_->name(x); }
  std::string describe(MorId f) const { return carrier_->name(f); }
  std::vector<ObId> objects() const { return carrier_->objects(); }

  RawModule to_raw() const;

 private:
  LTensored() = default;

  MonStrPtr base_;
  FinCatPtr carrier_;
  std::vector<ObId> act_ob_;
  std::vector<MorId> act_mor_;
};

using LTensoredPtr = std::shared_ptr<const LTensored>;

/// The base acting on itself by its tensor. Over opposite() of a base this is
/// the base acting on itself from the right, as a left module over M_op.
LTensoredPtr self_module(const MonStrPtr& base);

/// Skeletal finite sets acting on themselves by their chosen tensor.
class FinSetModule {
 public:
  using Base = FinSetMonoidal;
  using Object = SkSet;
  using Morphism = SkMap;

  explicit FinSetModule(FinSetMonoidal base = FinSetMonoidal{}) : base_(base) {}

  const FinSetMonoidal& base() const { return base_; }
  SkSet act(SkSet m, SkSet b) const { return base_.tensor(m, b); }
  SkMap act(const SkMap& g, const SkMap& f) const { return base_.tensor(g, f); }
  SkMap compose(const SkMap& g, const SkMap& f) const { return base_.compose(g, f); }
  SkMap identity(SkSet x) const { return SkMap::identity(x); }
  SkSet dom(const SkMap& f) const { return f.dom; }
  SkSet cod(const SkMap& f) const { return f.cod; }
  std::string describe(SkSet x) const { return base_.describe(x); }
  std::string describe(const SkMap& f) const { return base_.describe(f); }

 private:
  FinSetMonoidal base_;
};

/// Module laws of a finite-sets module on probe cards ≤ max_probe_card.
void validate_on_probes(const FinSetModule& b, std::size_t max_probe_card);

/// An object h of the base with a universal map act(h, x) → y.
struct Representation {
  ObId object;
  MorId universal;
  friend bool operator==(const Representation&, const Representation&) = default;
};

struct HomObjectResult {
  std::optional<Representation> first;  // least object in declaration order
  std::vector<Representation> all;
};

/// Searches for an object representing m ↦ Hom(act(m, x), y).
HomObjectResult hom_object(const LTensored& b, ObId x, ObId y);

/// True iff, for every base object m, u ↦ rep.universal ∘ act(u, id_x) is a
/// bijection Hom(m, rep.object) → Hom(act(m, x), y).
bool is_universal(const LTensored& b, ObId x, ObId y, const Representation& rep);

/// Checks that the bijections of a representation are natural in m: for
/// every v: m'→m and u: m→h, rep∘act(u∘v, id) = (rep∘act(u, id))∘act(v, id).
bool representation_is_natural(const LTensored& b, ObId x, const Representation& rep);

/// Mutually inverse morphisms between two base objects, if any.
std::optional<std::pair<MorId, MorId>> find_isomorphism(const MonStr& m, ObId a, ObId b);

}  // namespace enrichkit
