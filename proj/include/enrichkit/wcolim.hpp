#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "enrichkit/enriched.hpp"
#include "enrichkit/fincat.hpp"
#include "enrichkit/finset.hpp"
#include "enrichkit/mfunctor.hpp"
#include "enrichkit/presheaf.hpp"
#include "enrichkit/tensored.hpp"

namespace enrichkit {

class Rng;

// Everything here is over skeletal finite sets with the cartesian product.
// Element encodings follow the pairing of finset.hpp: an element of
// A×B is a*|B| + b, and strictness makes (A×B)×C and A×(B×C) coincide.

using SetMCat = EnrichedCategory<FinSetMonoidal>;
using SetPresheaf = Presheaf<FinSetMonoidal>;
using SetFunctor = MFunctorET<FinSetModule>;
using SetPresheafMor = std::vector<SkMap>;  // components indexed by object

/// A locally finite ordinary category viewed as enriched in finite sets.
/// hom(x,y) has card |C(x,y)|; element i is the i-th morphism of C.hom(x,y).
struct SetCategory {
  FinCatPtr ordinary;
  std::shared_ptr<const SetMCat> enriched;
  std::shared_ptr<const FinSetModule> sets;

  std::size_t size() const { return enriched->size(); }
  std::size_t local(MorId f) const;
  MorId global(std::size_t x, std::size_t y, std::size_t i) const;
};

SetCategory enrich_over_sets(FinCatPtr c);

/// A presheaf from cards and, for every morphism f: x→y of the ordinary
/// category, a map F(f): F(y) → F(x). Throws if the result fails the
/// presheaf laws.
SetPresheaf set_presheaf(const SetCategory& c, const std::vector<std::size_t>& cards,
                         const std::vector<SkMap>& maps);

/// A covariant functor into finite sets from cards and maps F(f): F(x) → F(y).
SetFunctor set_functor(const SetCategory& c, const std::vector<std::size_t>& cards,
                       const std::vector<SkMap>& maps);

/// W(f): W(y) → W(x) read back from the action table.
SkMap presheaf_map(const SetCategory& c, const SetPresheaf& w, MorId f);
/// F(f): F(x) → F(y) read back from phi.
SkMap functor_map(const SetCategory& c, const SetFunctor& f, MorId g);

/// x ↦ hom(w, x) with phi given by composition.
SetFunctor corepresentable(const SetCategory& c, std::size_t w);

/// The weighted colimit colim_W(F), presented as the coequalizer of
///   ⊔_{x,y} W(y)×hom(x,y)×F(x) ⇉ ⊔_x W(x)×F(x)
/// with the W-action on one side and phi on the other.
struct WColimit {
  SetPresheaf weight;
  SetFunctor diagram;
  Coproduct summands;  // ⊔_x W(x)×F(x)
  Coequalizer coeq;
  SkSet apex;
  std::vector<SkMap> legs;  // W(x)×F(x) → apex
};

WColimit weighted_colimit(const SetPresheaf& w, const SetFunctor& f, std::size_t max_card = Limits{}.max_card);

/// First failing square of a would-be cocone, or nullopt.
std::optional<std::string> cocone_failure(const SetPresheaf& w, const SetFunctor& f, SkSet apex,
                                          const std::vector<SkMap>& legs);

/// The mediating map colim → apex, read off the class representatives and
/// then checked against every leg. nullopt if no such map exists.
std::optional<SkMap> mediator(const WColimit& wc, SkSet apex, const std::vector<SkMap>& legs);

struct Probe {
  std::string label;
  SkSet apex;
  std::vector<SkMap> legs;
  std::optional<SkMap> expected;  // the mediator, when known in advance
};

/// The colimit's own cocone, its collapse onto 1, and `random_count`
/// cocones g∘legs for random g out of the apex.
std::vector<Probe> standard_probes(const WColimit& wc, Rng& rng, std::size_t random_count);

/// Pass/fail counts with witnesses for failing cases.
struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> witnesses;

  void pass() { ++checks; }
  void fail(std::string why) {
    ++checks;
    ++failures;
    witnesses.push_back(std::move(why));
  }
  void expect(bool ok, const std::string& why) { ok ? pass() : fail(why); }
  void merge(const Tally& other, const std::string& prefix = "");
};

/// Joint surjectivity of the legs, then one mediator per probe.
Tally check_universal(const WColimit& wc, const std::vector<Probe>& probes);

struct Presentation {
  std::optional<std::string> failure;
  SetPresheaf colimit;             // w ↦ colim_F(hom(w, −))
  std::vector<SkMap> comparison;   // colimit(w) → F(w)
};

/// Computes colim_F(Y) pointwise and checks that the evident comparison
/// [a, h] ↦ F(h)(a) is a natural isomorphism onto F.
Presentation canonical_presentation(const SetCategory& c, const SetPresheaf& f);

/// The colimit-preserving extension of F along the Yoneda embedding, kept in
/// the intensional form W ↦ colim_W(F).
class Ext {
 public:
  Ext(SetFunctor f, std::size_t max_card = Limits{}.max_card) : f_(std::move(f)), max_card_(max_card) {}

  const SetFunctor& diagram() const { return f_; }
  const SetMCat& source() const { return *f_.source; }

  WColimit operator()(const SetPresheaf& w) const { return weighted_colimit(w, f_, max_card_); }
  /// The mediator Ext(W1) → Ext(W2) induced by α. Throws InternalError if α
  /// does not induce a cocone.
  SkMap operator()(const WColimit& w1, const WColimit& w2, const SetPresheafMor& alpha) const;
  SkMap operator()(const SetPresheaf& w1, const SetPresheaf& w2, const SetPresheafMor& alpha) const {
    return (*this)((*this)(w1), (*this)(w2), alpha);
  }
  /// The canonical comparison m×Ext(W) → Ext(m⊗W). Throws InternalError
  /// unless it is a bijection.
  SkMap tensor_comparison(SkSet m, const SetPresheaf& w) const;

 private:
  SetFunctor f_;
  std::size_t max_card_;
};

/// Restriction along Yoneda: x ↦ G(Y(x)), phi(x,y) = G(comp) ∘ comparison.
SetFunctor res(const Ext& g);

/// The unit F → res(ext F) and its inverse, componentwise.
struct UnitIso {
  std::vector<SkMap> forward;
  std::vector<SkMap> backward;
};

UnitIso ext_unit(const Ext& g, const SetFunctor& restricted);

/// W1 ⊔ W2 computed pointwise, with its two injections.
struct PresheafCoproduct {
  SetPresheaf sum;
  SetPresheafMor first;
  SetPresheafMor second;
};
PresheafCoproduct coproduct_presheaf(const SetMCat& a, const SetPresheaf& w1, const SetPresheaf& w2);

/// The coequalizer of two presheaf morphisms into `w`, computed pointwise.
struct PresheafCoequalizer {
  SetPresheaf quotient;
  SetPresheafMor projection;
};
PresheafCoequalizer coequalizer_presheaf(const SetMCat& a, const SetPresheaf& w, const SetPresheafMor& alpha,
                                         const SetPresheafMor& beta);

/// The morphism Y(x) → W classifying the element e ∈ W(x).
SetPresheafMor yoneda_element(const SetMCat& a, const SetPresheaf& w, std::size_t x, std::size_t e);

SetPresheafMor compose(const SetPresheafMor& beta, const SetPresheafMor& alpha);
SetPresheafMor identity_mor(const SetPresheaf& w);

/// One instance of the equivalence check: a diagram and the weights to try.
struct EquivalenceInstance {
  std::string name;
  SetCategory category;
  SetFunctor diagram;
  std::vector<SetPresheaf> weights;
};

/// res∘ext ≅ id via explicit inverse MFunctor morphisms; Ext(F)(W) ≅
/// Ext(res ext F)(W) naturally in W; preservation of coproducts of weights
/// and of coequalizers of Yoneda-element pairs; functoriality in the weight
/// and the tensor comparison.
Tally check_equivalence(const EquivalenceInstance& inst);

}  // namespace enrichkit
