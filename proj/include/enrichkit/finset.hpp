#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "enrichkit/error.hpp"

namespace enrichkit {

/// The skeletal finite set {0, …, card-1}.
struct SkSet {
  std::size_t card = 0;
  friend auto operator<=>(const SkSet&, const SkSet&) = default;
};

/// A total function between skeletal finite sets.
struct SkMap {
  SkSet dom;
  SkSet cod;
  std::vector<std::size_t> table;

  /// Throws ShapeMismatch unless the table is total with entries below cod.
  static SkMap make(SkSet dom, SkSet cod, std::vector<std::size_t> table);
  static SkMap identity(SkSet s);
  /// The unique map out of 0, or the constant map into a one-element set.
  static SkMap constant(SkSet dom, SkSet cod, std::size_t value);

  std::size_t operator()(std::size_t i) const { return table[i]; }
  bool injective() const;
  bool surjective() const;
  bool bijective() const { return injective() && surjective(); }

  friend bool operator==(const SkMap&, const SkMap&) = default;
};

/// g∘f. Throws ShapeMismatch if cod f != dom g.
SkMap compose(const SkMap& g, const SkMap& f);

/// Inverse of a bijection. Throws ShapeMismatch otherwise.
SkMap inverse(const SkMap& f);

std::string describe(const SkMap& f);

// Cartesian structure: pair(i, j) = i * |Y| + j. Strictly associative and
// unital with unit 1 under this encoding.

SkSet product(SkSet x, SkSet y, std::size_t max_card = Limits{}.max_card);
inline std::size_t pair(SkSet y, std::size_t i, std::size_t j) { return i * y.card + j; }
inline std::size_t first(SkSet y, std::size_t p) { return p / y.card; }
inline std::size_t second(SkSet y, std::size_t p) { return p % y.card; }

/// f × g under the pairing encoding.
SkMap product(const SkMap& f, const SkMap& g, std::size_t max_card = Limits{}.max_card);

/// Coproduct with injection offsets. Part p occupies
/// [offsets[p], offsets[p] + parts[p].card).
struct Coproduct {
  SkSet total;
  std::vector<SkSet> parts;
  std::vector<std::size_t> offsets;

  SkMap injection(std::size_t p) const;
  /// Summand index and local element of a global element.
  std::pair<std::size_t, std::size_t> locate(std::size_t element) const;
  /// The unique map out of the coproduct restricting to maps[p] on part p.
  SkMap copair(std::span<const SkMap> maps) const;
};

Coproduct coproduct(std::span<const SkSet> parts, std::size_t max_card = Limits{}.max_card);

/// f ⊔ g: acts on the first summand by f and on the second by g.
SkMap coproduct(const SkMap& f, const SkMap& g, std::size_t max_card = Limits{}.max_card);

/// Canonical coequalizer. Classes are numbered in increasing order of their
/// minimal element.
struct Coequalizer {
  SkSet quotient;
  SkMap projection;
  std::vector<std::size_t> representatives;  // minimal element of each class

  /// The unique u with u∘projection = h. Throws ShapeMismatch if h does not
  /// coequalize (is not constant on classes).
  SkMap factor(const SkMap& h) const;
};

Coequalizer coequalizer(const SkMap& f, const SkMap& g);

/// Disjoint sets over {0..n-1}; the root of every class is its minimal element.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);
  std::size_t find(std::size_t x);
  void unite(std::size_t a, std::size_t b);

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace enrichkit
