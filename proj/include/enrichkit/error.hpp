#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace enrichkit {

enum class ErrorKind {
  // fincat
  MissingComposite,
  AssociativityViolation,
  UnitViolation,
  DanglingReference,
  // resources
  SizeBound,
  Overflow,
  // finset
  ShapeMismatch,
  // monoidal / tensored
  BifunctorialityViolation,
  ModuleLawViolation,
  UnitActionViolation,
  // enriched
  EnrichedAssociativityViolation,
  EnrichedUnitViolation,
  TypeMismatch,
  // mfunctor
  NaturalityViolation,
  CocycleViolation,
  CompatibilityViolation,
  // front end
  ParseError,
  UnresolvedReference,
  SchemaViolation,
  InternalError,
};

std::string_view to_string(ErrorKind kind);

/// True for errors caused by a configured resource cap rather than bad input.
bool is_resource_error(ErrorKind kind);

/// Every validator in the library throws this. `witness` names the offending
/// cell (triple, pair, object) in terms of the declared identifiers.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string witness);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::string witness_;
};

/// Resource caps. Everything downstream is exhaustive, so every search and
/// every constructed object is bounded.
struct Limits {
  std::size_t max_objects = 64;
  std::size_t max_morphisms = 4096;
  std::size_t max_candidates = 10'000'000;
  std::size_t max_card = 1'000'000;
};

}  // namespace enrichkit
