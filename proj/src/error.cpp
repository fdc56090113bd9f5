#include "enrichkit/error.hpp"

namespace enrichkit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MissingComposite: return "MissingComposite";
    case ErrorKind::AssociativityViolation: return "AssociativityViolation";
    case ErrorKind::UnitViolation: return "UnitViolation";
    case ErrorKind::DanglingReference: return "DanglingReference";
    case ErrorKind::SizeBound: return "SizeBound";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::BifunctorialityViolation: return "BifunctorialityViolation";
    case ErrorKind::ModuleLawViolation: return "ModuleLawViolation";
    case ErrorKind::UnitActionViolation: return "UnitActionViolation";
    case ErrorKind::EnrichedAssociativityViolation: return "EnrichedAssociativityViolation";
    case ErrorKind::EnrichedUnitViolation: return "EnrichedUnitViolation";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::NaturalityViolation: return "NaturalityViolation";
    case ErrorKind::CocycleViolation: return "CocycleViolation";
    case ErrorKind::CompatibilityViolation: return "CompatibilityViolation";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnresolvedReference: return "UnresolvedReference";
    case ErrorKind::SchemaViolation: return "SchemaViolation";
    case ErrorKind::InternalError: return "InternalError";
  }
  return "Unknown";
}

bool is_resource_error(ErrorKind kind) {
  return kind == ErrorKind::SizeBound || kind == ErrorKind::Overflow;
}

Error::Error(ErrorKind kind, std::string witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + witness),
      kind_(kind),
      witness_(std::move(witness)) {}

}  // namespace enrichkit
