#pragma once

// Law checkers shared by the finite (exhaustive) and finite-sets (probe)
// models of a monoidal base and of a left module over it. Each throws Error
// naming the first witness in probe order.

#include <span>
#include <string>
#include <vector>

#include "enrichkit/error.hpp"

namespace enrichkit::laws {

template <class Cat, class Mor>
std::vector<std::pair<Mor, Mor>> composable_pairs(const Cat& c, std::span<const Mor> mors) {
  std::vector<std::pair<Mor, Mor>> out;
  for (const Mor& g : mors) {
    for (const Mor& f : mors) {
      if (c.dom(g) == c.cod(f)) out.emplace_back(g, f);
    }
  }
  return out;
}

template <class Base>
void check_monoidal_laws(const Base& m, std::span<const typename Base::Object> obs,
                         std::span<const typename Base::Morphism> mors) {
  using Ob = typename Base::Object;
  using Mor = typename Base::Morphism;
  auto d = [&](const auto& v) { return m.describe(v); };

  for (const Mor& g : mors) {
    for (const Mor& f : mors) {
      const Mor t = m.tensor(g, f);
      if (m.dom(t) != m.tensor(m.dom(g), m.dom(f)) || m.cod(t) != m.tensor(m.cod(g), m.cod(f))) {
        throw Error(ErrorKind::TypeMismatch, d(g) + "⊗" + d(f) + " = " + d(t) + " has the wrong type");
      }
    }
  }
  for (const Ob& a : obs) {
    for (const Ob& b : obs) {
      if (m.tensor(m.identity(a), m.identity(b)) != m.identity(m.tensor(a, b))) {
        throw Error(ErrorKind::BifunctorialityViolation,
                    "id_" + d(a) + "⊗id_" + d(b) + " is not an identity");
      }
    }
  }
  const auto pairs = composable_pairs(m, mors);
  for (const auto& [g, g2] : pairs) {
    for (const auto& [f, f2] : pairs) {
      const Mor left = m.tensor(m.compose(g, g2), m.compose(f, f2));
      const Mor right = m.compose(m.tensor(g, f), m.tensor(g2, f2));
      if (left != right) {
        throw Error(ErrorKind::BifunctorialityViolation,
                    "(g, g', f, f') = (" + d(g) + ", " + d(g2) + ", " + d(f) + ", " + d(f2) +
                        "): (g∘g')⊗(f∘f') = " + d(left) + " but (g⊗f)∘(g'⊗f') = " + d(right));
      }
    }
  }
  for (const Ob& a : obs) {
    for (const Ob& b : obs) {
      for (const Ob& c : obs) {
        if (m.tensor(m.tensor(a, b), c) != m.tensor(a, m.tensor(b, c))) {
          throw Error(ErrorKind::AssociativityViolation,
                      "objects (" + d(a) + ", " + d(b) + ", " + d(c) + ")");
        }
      }
    }
  }
  for (const Mor& f : mors) {
    for (const Mor& g : mors) {
      for (const Mor& h : mors) {
        if (m.tensor(m.tensor(f, g), h) != m.tensor(f, m.tensor(g, h))) {
          throw Error(ErrorKind::AssociativityViolation,
                      "morphisms (" + d(f) + ", " + d(g) + ", " + d(h) + ")");
        }
      }
    }
  }
  const Ob unit = m.unit_object();
  for (const Ob& a : obs) {
    if (m.tensor(unit, a) != a || m.tensor(a, unit) != a) {
      throw Error(ErrorKind::UnitViolation, "object " + d(a));
    }
  }
  const Mor id_unit = m.identity(unit);
  for (const Mor& f : mors) {
    if (m.tensor(id_unit, f) != f || m.tensor(f, id_unit) != f) {
      throw Error(ErrorKind::UnitViolation, "morphism " + d(f));
    }
  }
}

/// Module laws of a left action. Module provides base() plus carrier
/// operations and act() on objects and morphisms.
template <class Module>
void check_module_laws(const Module& b,
                       std::span<const typename Module::Base::Object> base_obs,
                       std::span<const typename Module::Base::Morphism> base_mors,
                       std::span<const typename Module::Object> obs,
                       std::span<const typename Module::Morphism> mors) {
  using BMor = typename Module::Base::Morphism;
  using Mor = typename Module::Morphism;
  const auto& m = b.base();
  auto d = [&](const auto& v) { return b.describe(v); };
  auto dm = [&](const auto& v) { return m.describe(v); };

  for (const BMor& g : base_mors) {
    for (const Mor& f : mors) {
      const Mor t = b.act(g, f);
      if (b.dom(t) != b.act(m.dom(g), b.dom(f)) || b.cod(t) != b.act(m.cod(g), b.cod(f))) {
        throw Error(ErrorKind::TypeMismatch,
                    "act(" + dm(g) + ", " + d(f) + ") = " + d(t) + " has the wrong type");
      }
    }
  }
  for (const auto& a : base_obs) {
    for (const auto& x : obs) {
      if (b.act(m.identity(a), b.identity(x)) != b.identity(b.act(a, x))) {
        throw Error(ErrorKind::BifunctorialityViolation,
                    "act(id_" + dm(a) + ", id_" + d(x) + ") is not an identity");
      }
    }
  }
  const auto base_pairs = composable_pairs(m, base_mors);
  const auto pairs = composable_pairs(b, mors);
  for (const auto& [g, g2] : base_pairs) {
    for (const auto& [f, f2] : pairs) {
      const Mor left = b.act(m.compose(g, g2), b.compose(f, f2));
      const Mor right = b.compose(b.act(g, f), b.act(g2, f2));
      if (left != right) {
        throw Error(ErrorKind::BifunctorialityViolation,
                    "(g, g', f, f') = (" + dm(g) + ", " + dm(g2) + ", " + d(f) + ", " + d(f2) + ")");
      }
    }
  }
  for (const auto& p : base_obs) {
    for (const auto& q : base_obs) {
      for (const auto& x : obs) {
        const auto left = b.act(p, b.act(q, x));
        const auto right = b.act(m.tensor(p, q), x);
        if (left != right) {
          throw Error(ErrorKind::ModuleLawViolation,
                      "(m, n, b) = (" + dm(p) + ", " + dm(q) + ", " + d(x) + "): act(m, act(n, b)) = " +
                          d(left) + " but act(m⊗n, b) = " + d(right));
        }
      }
    }
  }
  for (const BMor& g : base_mors) {
    for (const BMor& h : base_mors) {
      for (const Mor& f : mors) {
        if (b.act(g, b.act(h, f)) != b.act(m.tensor(g, h), f)) {
          throw Error(ErrorKind::ModuleLawViolation,
                      "morphisms (" + dm(g) + ", " + dm(h) + ", " + d(f) + ")");
        }
      }
    }
  }
  const auto unit = m.unit_object();
  for (const auto& x : obs) {
    if (b.act(unit, x) != x) throw Error(ErrorKind::UnitActionViolation, "object " + d(x));
  }
  for (const Mor& f : mors) {
    if (b.act(m.identity(unit), f) != f) {
      throw Error(ErrorKind::UnitActionViolation, "morphism " + d(f));
    }
  }
}

}  // namespace enrichkit::laws
