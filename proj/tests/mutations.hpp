#pragma once

// Single-cell mutations of valid instances, one per axiom, each paired with
// an oracle that recomputes every violating cell from plain integer tables.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "enrichkit/error.hpp"

namespace testkit {

using Tuple = std::vector<std::string>;

struct MutationResult {
  std::string axiom;
  enrichkit::ErrorKind expected;
  std::optional<enrichkit::ErrorKind> caught;
  std::string witness;
  std::set<Tuple> violations;  // oracle: every cell where the two sides differ
  bool original_valid = false;  // the unmutated instance passes its validator

  /// The tuple named in the witness, e.g. "(x, y, z): …" or "(m, n, a) = (…)".
  Tuple witness_tuple() const;
  bool witness_correct() const { return violations.count(witness_tuple()) > 0; }
  bool ok() const { return original_valid && caught == expected && witness_correct(); }
};

/// Splits the first parenthesised tuple of a witness, respecting names that
/// themselves contain parentheses such as "(12)".
Tuple parse_tuple(const std::string& witness);

MutationResult category_associativity();
MutationResult monoidal_bifunctoriality();
MutationResult enriched_associativity();
MutationResult module_law();
MutationResult structure_cocycle();
MutationResult functor_square();

std::vector<MutationResult> all_mutations();

/// S3 as permutations of {0,1,2}, composed right to left, in the element
/// order e, (12), (13), (23), (123), (132).
std::vector<std::vector<std::size_t>> s3_product();
extern const std::vector<std::string> s3_names;

}  // namespace testkit
