#pragma once

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "enrichkit/fincat.hpp"
#include "enrichkit/finset.hpp"

namespace enrichkit {

/// Tensor tables by name. Missing tensor_mor entries are filled when the
/// target hom-set has exactly one element (identities of discrete carriers,
/// posets).
struct RawMonoidal {
  std::string unit;
  std::vector<std::array<std::string, 3>> tensor_ob;   // a, b, a⊗b
  std::vector<std::array<std::string, 3>> tensor_mor;  // g, f, g⊗f
};

/// A strict monoidal structure on a finite category.
///
/// Together with FinSetMonoidal this is one of the two models of the "base"
/// interface that the generic templates are written against:
/// Object/Morphism types, unit_object, tensor, compose, identity, dom, cod,
/// describe.
class MonStr {
 public:
  using Object = ObId;
  using Morphism = MorId;

  /// Exhaustive check of bifunctoriality, strict associativity and strict
  /// unitality. Throws BifunctorialityViolation, AssociativityViolation,
  /// UnitViolation, TypeMismatch, DanglingReference, MissingComposite.
  static MonStr validate(FinCatPtr carrier, const RawMonoidal& raw);

  /// Same checks, from index tables (row-major, first argument major).
  static MonStr from_tables(FinCatPtr carrier, ObId unit, std::vector<ObId> tensor_ob,
                            std::vector<MorId> tensor_mor);

  const FinCat& carrier() const { return *carrier_; }
  const FinCatPtr& carrier_ptr() const { return carrier_; }

  ObId unit_object() const { return unit_; }
  ObId tensor(ObId a, ObId b) const { return tensor_ob_[a.value * carrier_->object_count() + b.value]; }
  MorId tensor(MorId g, MorId f) const {
    return tensor_mor_[g.value * carrier_->morphism_count() + f.value];
  }

  MorId compose(MorId g, MorId f) const { return carrier_->compose(g, f); }
  MorId identity(ObId x) const { return carrier_->identity(x); }
  ObId dom(MorId f) const { return carrier_->dom(f); }
  ObId cod(MorId f) const { return carrier_->cod(f); }
  std::span<const MorId> hom(ObId a, ObId b) const { return carrier_->hom(a, b); }
  std::string describe(ObId x) const { return carrier_->name(x); }
  std::string describe(MorId f) const { return carrier_->name(f); }

  std::vector<ObId> objects() const { return carrier_->objects(); }
  std::vector<MorId> morphisms() const { return carrier_->morphisms(); }

  /// Same carrier, tensor_op(a, b) = tensor(b, a).
  MonStr opposite() const;

  bool is_commutative_on_objects() const;
  RawMonoidal to_raw() const;

  friend bool operator==(const MonStr& a, const MonStr& b) {
    return *a.carrier_ == *b.carrier_ && a.unit_ == b.unit_ && a.tensor_ob_ == b.tensor_ob_ &&
           a.tensor_mor_ == b.tensor_mor_;
  }

 private:
  MonStr() = default;
  void check() const;

  FinCatPtr carrier_;
  ObId unit_;
  std::vector<ObId> tensor_ob_;
  std::vector<MorId> tensor_mor_;
};

using MonStrPtr = std::shared_ptr<const MonStr>;

/// Skeletal finite sets with a chosen strict tensor: cartesian product with
/// the lexicographic pairing, or coproduct with offset injections.
class FinSetMonoidal {
 public:
  using Object = SkSet;
  using Morphism = SkMap;
  enum class Kind { cartesian, cocartesian };

  explicit FinSetMonoidal(Kind kind = Kind::cartesian, std::size_t max_card = Limits{}.max_card)
      : kind_(kind), max_card_(max_card) {}

  Kind kind() const { return kind_; }
  std::size_t max_card() const { return max_card_; }

  SkSet unit_object() const { return SkSet{kind_ == Kind::cartesian ? 1u : 0u}; }
  SkSet tensor(SkSet a, SkSet b) const;
  SkMap tensor(const SkMap& g, const SkMap& f) const;
  SkMap compose(const SkMap& g, const SkMap& f) const { return enrichkit::compose(g, f); }
  SkMap identity(SkSet x) const { return SkMap::identity(x); }
  SkSet dom(const SkMap& f) const { return f.dom; }
  SkSet cod(const SkMap& f) const { return f.cod; }
  std::string describe(SkSet x) const { return std::to_string(x.card); }
  std::string describe(const SkMap& f) const { return enrichkit::describe(f); }

  friend bool operator==(const FinSetMonoidal&, const FinSetMonoidal&) = default;

 private:
  Kind kind_;
  std::size_t max_card_;
};

/// Checks the monoidal laws of a finite-sets structure on probe objects of
/// card ≤ max_probe_card: all maps between cards ≤ 2, plus a deterministic
/// family of maps between larger probe cards. Throws on the first violation.
void validate_on_probes(const FinSetMonoidal& m, std::size_t max_probe_card);

/// Probe maps used by validate_on_probes.
std::vector<SkMap> probe_maps(std::size_t max_probe_card);

// Shipped base instances.

/// {0 ≤ 1} with tensor ∧ and unit 1. Morphisms: id0, id1, le.
MonStrPtr boolean_base();

/// Discrete category on the elements of a monoid, tensor = multiplication.
/// `product[i][j]` is the index of elements[i]·elements[j].
MonStrPtr discrete_monoid(std::vector<std::string> elements, std::size_t unit,
                          std::vector<std::vector<std::size_t>> product);

/// The symmetric group S3 with elements e,(12),(13),(23),(123),(132);
/// composition is right-to-left (apply the right factor first).
MonStrPtr symmetric_group_s3();

/// The cyclic group of order 3: e, c, c2.
MonStrPtr cyclic_group_c3();

/// One object whose endomorphism monoid is commutative (given by table);
/// tensor on morphisms is composition.
MonStrPtr one_object_commutative(std::vector<std::string> elements,
                                 std::size_t unit, std::vector<std::vector<std::size_t>> product);

namespace s3 {
// Element indices in symmetric_group_s3().
inline constexpr std::uint32_t e = 0, t12 = 1, t13 = 2, t23 = 3, c123 = 4, c132 = 5;
}  // namespace s3

}  // namespace enrichkit
