#include "mutations.hpp"

#include <array>
#include <memory>

#include "enrichkit/enriched.hpp"
#include "enrichkit/fincat.hpp"
#include "enrichkit/mfunctor.hpp"
#include "enrichkit/monoidal.hpp"
#include "enrichkit/tensored.hpp"

namespace testkit {

using namespace enrichkit;

const std::vector<std::string> s3_names = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};

std::vector<std::vector<std::size_t>> s3_product() {
  // images of 0, 1, 2
  const std::vector<std::array<std::size_t, 3>> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                                                         {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t p = 0; p < 6; ++p) {
    for (std::size_t q = 0; q < 6; ++q) {
      const std::array<std::size_t, 3> pq = {perms[p][perms[q][0]], perms[p][perms[q][1]], perms[p][perms[q][2]]};
      for (std::size_t r = 0; r < 6; ++r) {
        if (perms[r] == pq) t[p][q] = r;
      }
    }
  }
  return t;
}

Tuple parse_tuple(const std::string& witness) {
  const auto eq = witness.find(" = (");
  std::size_t i = eq == std::string::npos ? witness.find('(') : eq + 3;
  Tuple out;
  if (i == std::string::npos) return out;
  std::string cur;
  int depth = 0;
  for (; i < witness.size(); ++i) {
    const char ch = witness[i];
    if (ch == '(' && depth++ == 0) continue;
    if (ch == ')' && --depth == 0) break;
    if (ch == ',' && depth == 1) {
      out.push_back(cur);
      cur.clear();
      continue;
    }
    if (ch == ' ' && depth == 1 && cur.empty()) continue;
    cur += ch;
  }
  out.push_back(cur);
  return out;
}

Tuple MutationResult::witness_tuple() const { return parse_tuple(witness); }

namespace {

template <class Build>
void attempt(MutationResult& r, Build&& build) {
  try {
    build();
  } catch (const Error& e) {
    r.caught = e.kind();
    r.witness = e.witness();
  }
}

template <class Build>
bool passes(Build&& build) {
  try {
    build();
    return true;
  } catch (const Error&) {
    return false;
  }
}

// Z/2 = {e, s} under xor, index 0 and 1.
const std::vector<std::string> z2 = {"e", "s"};

MonStrPtr z2_base() { return one_object_commutative(z2, 0, {{0, 1}, {1, 0}}); }

}  // namespace

MutationResult category_associativity() {
  MutationResult r{"category associativity", ErrorKind::AssociativityViolation, {}, {}, {}, false};
  const std::vector<std::string> names = {"e", "c", "c2"};
  std::vector<std::vector<std::size_t>> comp(3, std::vector<std::size_t>(3));
  for (std::size_t g = 0; g < 3; ++g) {
    for (std::size_t f = 0; f < 3; ++f) comp[g][f] = (g + f) % 3;
  }
  auto raw_of = [&](const std::vector<std::vector<std::size_t>>& t) {
    RawCategory raw{{"*"}, {}, {{"*", "e"}}, {}};
    for (const auto& n : names) raw.morphisms.push_back({n, "*", "*"});
    for (std::size_t g = 0; g < 3; ++g) {
      for (std::size_t f = 0; f < 3; ++f) raw.compose.push_back({names[g], names[f], names[t[g][f]]});
    }
    return raw;
  };
  r.original_valid = passes([&] { FinCat::validate(raw_of(comp)); });
  comp[1][2] = 1;  // c∘c2 := c
  for (std::size_t h = 0; h < 3; ++h) {
    for (std::size_t g = 0; g < 3; ++g) {
      for (std::size_t f = 0; f < 3; ++f) {
        if (comp[h][comp[g][f]] != comp[comp[h][g]][f]) r.violations.insert({names[h], names[g], names[f]});
      }
    }
  }
  attempt(r, [&] { FinCat::validate(raw_of(comp)); });
  return r;
}

MutationResult monoidal_bifunctoriality() {
  MutationResult r{"monoidal bifunctoriality", ErrorKind::BifunctorialityViolation, {}, {}, {}, false};
  RawCategory c{{"*"}, {{"e", "*", "*"}, {"s", "*", "*"}}, {{"*", "e"}}, {}};
  for (std::size_t g = 0; g < 2; ++g) {
    for (std::size_t f = 0; f < 2; ++f) c.compose.push_back({z2[g], z2[f], z2[g ^ f]});
  }
  const auto carrier = std::make_shared<const FinCat>(FinCat::validate(c));
  std::vector<std::vector<std::size_t>> tensor = {{0, 1}, {1, 0}};
  auto raw_of = [&] {
    RawMonoidal raw;
    raw.unit = "*";
    raw.tensor_ob = {{"*", "*", "*"}};
    for (std::size_t g = 0; g < 2; ++g) {
      for (std::size_t f = 0; f < 2; ++f) raw.tensor_mor.push_back({z2[g], z2[f], z2[tensor[g][f]]});
    }
    return raw;
  };
  r.original_valid = passes([&] { MonStr::validate(carrier, raw_of()); });
  tensor[1][0] = 0;  // s⊗e := e
  for (std::size_t g = 0; g < 2; ++g) {
    for (std::size_t g2 = 0; g2 < 2; ++g2) {
      for (std::size_t f = 0; f < 2; ++f) {
        for (std::size_t f2 = 0; f2 < 2; ++f2) {
          if (tensor[g ^ g2][f ^ f2] != (tensor[g][f] ^ tensor[g2][f2])) {
            r.violations.insert({z2[g], z2[g2], z2[f], z2[f2]});
          }
        }
      }
    }
  }
  attempt(r, [&] { MonStr::validate(carrier, raw_of()); });
  return r;
}

MutationResult enriched_associativity() {
  MutationResult r{"enriched associativity", ErrorKind::EnrichedAssociativityViolation, {}, {}, {}, false};
  const std::vector<std::string> obs = {"a", "b", "c"};
  std::size_t comp[3][3][3] = {};
  auto raw_of = [&] {
    RawEnriched raw;
    raw.objects = obs;
    for (const auto& x : obs) {
      raw.unit.push_back({x, "e"});
      for (const auto& y : obs) raw.hom.push_back({x, y, "*"});
    }
    for (std::size_t x = 0; x < 3; ++x) {
      for (std::size_t y = 0; y < 3; ++y) {
        for (std::size_t z = 0; z < 3; ++z) raw.comp.push_back({obs[x], obs[y], obs[z], z2[comp[x][y][z]]});
      }
    }
    return raw;
  };
  const auto base = z2_base();
  r.original_valid = passes([&] { make_mcat(base, raw_of()); });
  comp[0][1][2] = 1;  // comp(a, b, c) := s
  for (std::size_t w = 0; w < 3; ++w) {
    for (std::size_t x = 0; x < 3; ++x) {
      for (std::size_t y = 0; y < 3; ++y) {
        for (std::size_t z = 0; z < 3; ++z) {
          if ((comp[w][x][z] ^ comp[x][y][z]) != (comp[w][y][z] ^ comp[w][x][y])) {
            r.violations.insert({obs[w], obs[x], obs[y], obs[z]});
          }
        }
      }
    }
  }
  attempt(r, [&] { make_mcat(base, raw_of()); });
  return r;
}

MutationResult module_law() {
  MutationResult r{"module law", ErrorKind::ModuleLawViolation, {}, {}, {}, false};
  const auto prod = s3_product();
  auto act = prod;
  const auto base = symmetric_group_s3();
  auto raw_of = [&] {
    RawModule raw;
    for (std::size_t m = 0; m < 6; ++m) {
      for (std::size_t b = 0; b < 6; ++b) raw.act_ob.push_back({s3_names[m], s3_names[b], s3_names[act[m][b]]});
    }
    return raw;
  };
  r.original_valid = passes([&] { LTensored::validate(base, base->carrier_ptr(), raw_of()); });
  act[1][0] = 2;  // act((12), e) := (13)
  for (std::size_t m = 0; m < 6; ++m) {
    for (std::size_t n = 0; n < 6; ++n) {
      for (std::size_t b = 0; b < 6; ++b) {
        if (act[m][act[n][b]] != act[prod[m][n]][b]) r.violations.insert({s3_names[m], s3_names[n], s3_names[b]});
      }
    }
  }
  attempt(r, [&] { LTensored::validate(base, base->carrier_ptr(), raw_of()); });
  return r;
}

MutationResult structure_cocycle() {
  MutationResult r{"structure cocycle", ErrorKind::CocycleViolation, {}, {}, {}, false};
  const auto module = self_module(z2_base());
  MFunctorTT f = identity_mfun_tt(module);
  r.original_valid = passes([&] { validate_mfun_tt(f); });
  const std::size_t sigma = 1;  // the only structure map := s
  f.sigma[0] = *module->carrier().find_morphism("s");
  // One object, so act(id, σ) is σ and the cocycle reads σ = σ∘σ.
  if (sigma != (sigma ^ sigma)) r.violations.insert({"*", "*", "*"});
  attempt(r, [&] { validate_mfun_tt(f); });
  return r;
}

MutationResult functor_square() {
  MutationResult r{"enriched functor square", ErrorKind::CompatibilityViolation, {}, {}, {}, false};
  const auto base = z2_base();
  RawEnriched raw;
  raw.objects = {"a", "b"};
  for (const auto& x : raw.objects) {
    raw.unit.push_back({x, "e"});
    for (const auto& y : raw.objects) {
      raw.hom.push_back({x, y, "*"});
      for (const auto& z : raw.objects) raw.comp.push_back({x, y, z, "e"});
    }
  }
  const auto a = std::make_shared<const MCat>(make_mcat(base, raw));
  const auto target = self_module(base);
  const ObId star = *target->carrier().find_object("*");
  const MorId e = *target->carrier().find_morphism("e");
  const MorId s = *target->carrier().find_morphism("s");
  MFunctorET<LTensored> f{a, target, {star, star}, {e, e, e, e}};
  r.original_valid = !mfun_et_failure(f);
  std::size_t phi[2][2] = {};
  phi[0][1] = 1;  // phi(a, b) := s
  f.action(0, 1) = s;
  // comp is e everywhere, so the square reduces to phi(y,z)·phi(x,y) = phi(x,z).
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t y = 0; y < 2; ++y) {
      for (std::size_t z = 0; z < 2; ++z) {
        if ((phi[y][z] ^ phi[x][y]) != phi[x][z]) r.violations.insert({raw.objects[x], raw.objects[y], raw.objects[z]});
      }
    }
  }
  if (auto err = mfun_et_failure(f)) {
    r.caught = err->kind();
    r.witness = err->witness();
  }
  return r;
}

std::vector<MutationResult> all_mutations() {
  return {category_associativity(), monoidal_bifunctoriality(), enriched_associativity(),
          module_law(),             structure_cocycle(),        functor_square()};
}

}  // namespace testkit
