#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "enrichkit/enriched.hpp"
#include "enrichkit/fincat.hpp"
#include "enrichkit/monoidal.hpp"
#include "enrichkit/tensored.hpp"

namespace enrichkit {

/// A parsed specification file. Declarations keep their file order within
/// each section and every cross-reference has been resolved by name; the
/// laws themselves are checked later, when the declarations are built.
struct SpecFile {
  struct Monoidal {
    std::string builtin;   // "boolean", "s3", "c3" or empty
    std::string category;  // carrier, when not builtin
    RawMonoidal raw;
  };
  struct Module {
    std::string base;
    std::string category;
    RawModule raw;
  };
  struct Enriched {
    std::string base;
    RawEnriched raw;
  };
  /// MFunctor from an enriched category into a module (or into a base acting
  /// on itself). Omitted phi entries are filled when forced.
  struct MFunctor {
    std::string source;
    std::string target;
    std::vector<std::array<std::string, 2>> ob_map;
    std::vector<std::array<std::string, 3>> phi;
  };
  struct Presheaf {
    std::string source;
    std::vector<std::array<std::string, 2>> values;
    std::vector<std::array<std::string, 3>> action;
  };
  /// Finite-set data on an ordinary category: cards per object and a function
  /// table per non-identity morphism (covariant for diagrams, contravariant
  /// for weights). A weight may instead be `representable` or `terminal`.
  struct SetData {
    std::string category;
    std::map<std::string, std::size_t> cards;
    std::map<std::string, std::vector<std::size_t>> maps;
    std::string representable;
    bool terminal = false;
  };

  std::string path;
  std::vector<std::pair<std::string, RawCategory>> categories;
  std::vector<std::pair<std::string, Monoidal>> monoidal;
  std::vector<std::pair<std::string, Module>> modules;
  std::vector<std::pair<std::string, Enriched>> enriched;
  std::vector<std::pair<std::string, MFunctor>> mfunctors;
  std::vector<std::pair<std::string, Presheaf>> presheaves;
  std::vector<std::pair<std::string, SetData>> diagrams;
  std::vector<std::pair<std::string, SetData>> weights;
};

/// Throws ParseError (with line:column), SchemaViolation or
/// UnresolvedReference.
SpecFile parse_spec_text(const std::string& text, const std::string& path = "<string>");
SpecFile parse_spec(const std::string& path);

/// The carrier of a builtin base, or nullptr for an unknown name.
MonStrPtr builtin_base(const std::string& name);

}  // namespace enrichkit
