#include "enrichkit/monoidal.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "enrichkit/laws.hpp"

namespace enrichkit {

namespace {

ObId need_object(const FinCat& c, const std::string& name, std::string_view context) {
  if (auto x = c.find_object(name)) return *x;
  throw Error(ErrorKind::DanglingReference, "undeclared object '" + name + "' in " + std::string(context));
}

MorId need_morphism(const FinCat& c, const std::string& name, std::string_view context) {
  if (auto f = c.find_morphism(name)) return *f;
  throw Error(ErrorKind::DanglingReference,
              "undeclared morphism '" + name + "' in " + std::string(context));
}

constexpr std::uint32_t kUnset = ~std::uint32_t{0};

}  // namespace

MonStr MonStr::validate(FinCatPtr carrier, const RawMonoidal& raw) {
  const FinCat& c = *carrier;
  const std::size_t n_ob = c.object_count();
  const std::size_t n_mor = c.morphism_count();
  const ObId unit = need_object(c, raw.unit, "monoidal unit");

  std::vector<ObId> tob(n_ob * n_ob, ObId{kUnset});
  for (const auto& [a, b, ab] : raw.tensor_ob) {
    const ObId x = need_object(c, a, "tensor_ob");
    const ObId y = need_object(c, b, "tensor_ob");
    auto& cell = tob[x.value * n_ob + y.value];
    const ObId v = need_object(c, ab, "tensor_ob");
    if (cell.value != kUnset && cell != v) {
      throw Error(ErrorKind::SchemaViolation, "conflicting tensor_ob entries for (" + a + ", " + b + ")");
    }
    cell = v;
  }
  for (ObId x : c.objects()) {
    for (ObId y : c.objects()) {
      if (tob[x.value * n_ob + y.value].value != kUnset) continue;
      // Strict unitality forces the unit rows.
      if (x == unit) {
        tob[x.value * n_ob + y.value] = y;
      } else if (y == unit) {
        tob[x.value * n_ob + y.value] = x;
      } else {
        throw Error(ErrorKind::SchemaViolation,
                    "missing tensor_ob entry (" + c.name(x) + ", " + c.name(y) + ")");
      }
    }
  }

  std::vector<MorId> tmor(n_mor * n_mor, MorId{kUnset});
  for (const auto& [g, f, gf] : raw.tensor_mor) {
    const MorId x = need_morphism(c, g, "tensor_mor");
    const MorId y = need_morphism(c, f, "tensor_mor");
    const MorId v = need_morphism(c, gf, "tensor_mor");
    auto& cell = tmor[x.value * n_mor + y.value];
    if (cell.value != kUnset && cell != v) {
      throw Error(ErrorKind::SchemaViolation, "conflicting tensor_mor entries for (" + g + ", " + f + ")");
    }
    cell = v;
  }
  for (MorId g : c.morphisms()) {
    for (MorId f : c.morphisms()) {
      auto& cell = tmor[g.value * n_mor + f.value];
      if (cell.value != kUnset) continue;
      const ObId dom = tob[c.dom(g).value * n_ob + c.dom(f).value];
      const ObId cod = tob[c.cod(g).value * n_ob + c.cod(f).value];
      const auto candidates = c.hom(dom, cod);
      if (c.is_identity(g) && c.is_identity(f) && dom == cod) {
        cell = c.identity(dom);
      } else if (candidates.size() == 1) {
        cell = candidates.front();
      } else if (candidates.empty()) {
        throw Error(ErrorKind::TypeMismatch,
                    "no morphism of the required type for " + c.name(g) + "⊗" + c.name(f));
      } else {
        throw Error(ErrorKind::SchemaViolation,
                    "missing tensor_mor entry (" + c.name(g) + ", " + c.name(f) + ")");
      }
    }
  }
  return from_tables(std::move(carrier), unit, std::move(tob), std::move(tmor));
}

MonStr MonStr::from_tables(FinCatPtr carrier, ObId unit, std::vector<ObId> tensor_ob,
                           std::vector<MorId> tensor_mor) {
  MonStr m;
  m.carrier_ = std::move(carrier);
  m.unit_ = unit;
  m.tensor_ob_ = std::move(tensor_ob);
  m.tensor_mor_ = std::move(tensor_mor);
  const std::size_t n_ob = m.carrier_->object_count();
  const std::size_t n_mor = m.carrier_->morphism_count();
  if (m.tensor_ob_.size() != n_ob * n_ob || m.tensor_mor_.size() != n_mor * n_mor ||
      unit.value >= n_ob) {
    throw Error(ErrorKind::SchemaViolation, "tensor tables have the wrong size");
  }
  for (ObId x : m.tensor_ob_) {
    if (x.value >= n_ob) throw Error(ErrorKind::DanglingReference, "tensor_ob entry out of range");
  }
  for (MorId f : m.tensor_mor_) {
    if (f.value >= n_mor) throw Error(ErrorKind::DanglingReference, "tensor_mor entry out of range");
  }
  m.check();
  return m;
}

void MonStr::check() const {
  const auto obs = objects();
  const auto mors = morphisms();
  laws::check_monoidal_laws(*this, std::span<const ObId>(obs), std::span<const MorId>(mors));
}

MonStr MonStr::opposite() const {
  MonStr m = *this;
  const std::size_t n_ob = carrier_->object_count();
  const std::size_t n_mor = carrier_->morphism_count();
  for (std::size_t a = 0; a < n_ob; ++a) {
    for (std::size_t b = 0; b < n_ob; ++b) m.tensor_ob_[a * n_ob + b] = tensor_ob_[b * n_ob + a];
  }
  for (std::size_t g = 0; g < n_mor; ++g) {
    for (std::size_t f = 0; f < n_mor; ++f) m.tensor_mor_[g * n_mor + f] = tensor_mor_[f * n_mor + g];
  }
  m.check();
  return m;
}

bool MonStr::is_commutative_on_objects() const {
  for (ObId a : objects()) {
    for (ObId b : objects()) {
      if (tensor(a, b) != tensor(b, a)) return false;
    }
  }
  return true;
}

RawMonoidal MonStr::to_raw() const {
  RawMonoidal raw;
  const FinCat& c = *carrier_;
  raw.unit = c.name(unit_);
  for (ObId a : objects()) {
    for (ObId b : objects()) raw.tensor_ob.push_back({c.name(a), c.name(b), c.name(tensor(a, b))});
  }
  for (MorId g : morphisms()) {
    for (MorId f : morphisms()) raw.tensor_mor.push_back({c.name(g), c.name(f), c.name(tensor(g, f))});
  }
  return raw;
}

SkSet FinSetMonoidal::tensor(SkSet a, SkSet b) const {
  if (kind_ == Kind::cartesian) return product(a, b, max_card_);
  const std::array<SkSet, 2> parts{a, b};
  return coproduct(std::span<const SkSet>(parts), max_card_).total;
}

SkMap FinSetMonoidal::tensor(const SkMap& g, const SkMap& f) const {
  if (kind_ == Kind::cartesian) return product(g, f, max_card_);
  return coproduct(g, f, max_card_);
}

std::vector<SkMap> probe_maps(std::size_t max_probe_card) {
  std::vector<SkMap> out;
  // Every map between cards ≤ 2.
  const std::size_t small = std::min<std::size_t>(max_probe_card, 2);
  for (std::size_t a = 0; a <= small; ++a) {
    for (std::size_t b = 0; b <= small; ++b) {
      std::size_t count = 1;
      for (std::size_t i = 0; i < a; ++i) count *= b;
      for (std::size_t k = 0; k < count; ++k) {
        std::vector<std::size_t> t(a);
        std::size_t code = k;
        for (std::size_t i = 0; i < a; ++i) {
          t[i] = code % b;
          code /= b;
        }
        out.push_back(SkMap::make(SkSet{a}, SkSet{b}, std::move(t)));
      }
    }
  }
  // A few permutations and a fold on the larger probe cards.
  for (std::size_t a = 3; a <= max_probe_card; ++a) {
    std::vector<std::size_t> shift(a), rev(a), fold(a);
    for (std::size_t i = 0; i < a; ++i) {
      shift[i] = (i + 1) % a;
      rev[i] = a - 1 - i;
      fold[i] = i / 2;
    }
    out.push_back(SkMap::identity(SkSet{a}));
    out.push_back(SkMap::make(SkSet{a}, SkSet{a}, shift));
    out.push_back(SkMap::make(SkSet{a}, SkSet{a}, rev));
    out.push_back(SkMap::make(SkSet{a}, SkSet{a}, fold));
    out.push_back(SkMap::constant(SkSet{a}, SkSet{1}, 0));
    out.push_back(SkMap::constant(SkSet{1}, SkSet{a}, a - 1));
  }
  return out;
}

void validate_on_probes(const FinSetMonoidal& m, std::size_t max_probe_card) {
  std::vector<SkSet> obs;
  for (std::size_t a = 0; a <= max_probe_card; ++a) obs.push_back(SkSet{a});
  const auto mors = probe_maps(max_probe_card);
  laws::check_monoidal_laws(m, std::span<const SkSet>(obs), std::span<const SkMap>(mors));
}

MonStrPtr boolean_base() {
  RawCategory cat;
  cat.objects = {"0", "1"};
  cat.morphisms = {{"id0", "0", "0"}, {"id1", "1", "1"}, {"le", "0", "1"}};
  auto carrier = std::make_shared<const FinCat>(FinCat::validate(cat));
  RawMonoidal raw;
  raw.unit = "1";
  raw.tensor_ob = {{"0", "0", "0"}, {"0", "1", "0"}, {"1", "0", "0"}, {"1", "1", "1"}};
  return std::make_shared<const MonStr>(MonStr::validate(carrier, raw));
}

MonStrPtr discrete_monoid(std::vector<std::string> elements, std::size_t unit,
                          std::vector<std::vector<std::size_t>> product) {
  RawCategory cat;
  cat.objects = elements;
  for (const auto& e : elements) cat.morphisms.push_back({"id_" + e, e, e});
  auto carrier = std::make_shared<const FinCat>(FinCat::validate(cat));
  RawMonoidal raw;
  raw.unit = elements.at(unit);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      raw.tensor_ob.push_back({elements[i], elements[j], elements.at(product.at(i).at(j))});
    }
  }
  return std::make_shared<const MonStr>(MonStr::validate(carrier, raw));
}

MonStrPtr symmetric_group_s3() {
  // Permutations of {0,1,2} as images; index order matches namespace s3.
  const std::vector<std::array<int, 3>> perms = {
      {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  const std::vector<std::string> names = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
  std::vector<std::vector<std::size_t>> product(6, std::vector<std::size_t>(6));
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      std::array<int, 3> p{};
      for (int k = 0; k < 3; ++k) p[k] = perms[i][perms[j][k]];
      product[i][j] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), p) - perms.begin());
    }
  }
  return discrete_monoid(names, 0, std::move(product));
}

MonStrPtr cyclic_group_c3() {
  return discrete_monoid({"e", "c", "c2"}, 0, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
}

MonStrPtr one_object_commutative(std::vector<std::string> elements,
                                 std::size_t unit, std::vector<std::vector<std::size_t>> product) {
  RawCategory cat;
  cat.objects = {"*"};
  for (const auto& e : elements) cat.morphisms.push_back({e, "*", "*"});
  cat.identities = {{"*", elements.at(unit)}};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      cat.compose.push_back({elements[i], elements[j], elements.at(product.at(i).at(j))});
    }
  }
  auto carrier = std::make_shared<const FinCat>(FinCat::validate(cat));
  RawMonoidal raw;
  raw.unit = "*";
  raw.tensor_ob = {{"*", "*", "*"}};
  for (const auto& g : elements) {
    for (const auto& f : elements) {
      raw.tensor_mor.push_back({g, f, carrier->name(carrier->compose(*carrier->find_morphism(g),
                                                                      *carrier->find_morphism(f)))});
    }
  }
  return std::make_shared<const MonStr>(MonStr::validate(carrier, raw));
}

}  // namespace enrichkit
