#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "enrichkit/corpus.hpp"
#include "enrichkit/mfunctor.hpp"
#include "enrichkit/presheaf.hpp"
#include "enrichkit/wcolim.hpp"

namespace enrichkit {

/// Yoneda-side checks over a seeded random corpus of (M, A).
struct PresheafFuzz {
  std::size_t instances = 0;  // instances fully checked
  std::size_t skipped = 0;    // draws abandoned on SizeBound
  std::map<std::string, std::size_t> families;
  std::size_t presheaves = 0;  // summed over instances
  BijectionReport yoneda;
  BijectionReport fully_faithful;
  Tally op_dictionary;
  /// Candidates satisfying the composition square only, and how many of
  /// them break the unit law: MFunctors A → M and presheaves on A.
  UnitAutomatism functors;
  UnitAutomatism presheaves_without_unit;
  SamplerStats stats;
  std::vector<std::string> skip_reasons;
};

/// Draws until `instances` instances with at most `max_objects` objects have
/// been checked. An instance whose presheaf category exceeds `limits` is
/// skipped and counted, and another one is drawn.
PresheafFuzz fuzz_presheaves(std::uint64_t seed, std::size_t instances, std::size_t max_objects,
                             const Limits& limits = {});

/// Op-dictionary on one instance: every presheaf translates to a valid
/// MFunctor A^op → M over M_op and back bit-exactly, and the MFunctors
/// enumerated on the op side are exactly the translated presheaves.
Tally check_op_dictionary(const PresheafCategory& p, const Limits& limits = {});

/// Finite-set side over a seeded random corpus of (A, F, W).
struct ColimitFuzz {
  std::size_t instances = 0;
  Tally coyoneda;      // Ext(F)(Y(x)) ≅ F(x) through the explicit unit
  Tally universal;     // check_universal on every colimit computed
  Tally presentation;  // canonical_presentation of each random weight
  Tally equivalence;   // check_equivalence
  std::size_t probes = 0;
  SamplerStats stats;
};

ColimitFuzz fuzz_colimits(std::uint64_t seed, std::size_t instances, std::size_t probes_per_colimit = 20);

}  // namespace enrichkit
