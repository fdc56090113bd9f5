#include "enrichkit/spec.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace enrichkit {

namespace {

using json = nlohmann::ordered_json;

struct Names {
  std::set<std::string> objects;
  std::set<std::string> morphisms;
};

[[noreturn]] void schema(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::SchemaViolation, where + ": " + what);
}

const json& field(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) schema(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) schema(where, "missing field '" + key + "'");
  return *it;
}

std::string string_of(const json& j, const std::string& where) {
  if (!j.is_string()) schema(where, "expected a string");
  return j.get<std::string>();
}

std::size_t count_of(const json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    schema(where, "expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

std::vector<std::string> strings(const json& j, const std::string& where) {
  if (!j.is_array()) schema(where, "expected an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(string_of(e, where));
  return out;
}

template <std::size_t N>
std::vector<std::array<std::string, N>> tuples(const json& parent, const std::string& key, const std::string& where,
                                               bool required = false) {
  std::vector<std::array<std::string, N>> out;
  const auto it = parent.find(key);
  if (it == parent.end()) {
    if (required) schema(where, "missing field '" + key + "'");
    return out;
  }
  const std::string at = where + "." + key;
  if (!it->is_array()) schema(at, "expected an array of " + std::to_string(N) + "-element arrays");
  for (const auto& row : *it) {
    if (!row.is_array() || row.size() != N) schema(at, "expected " + std::to_string(N) + "-element arrays");
    std::array<std::string, N> t;
    for (std::size_t i = 0; i < N; ++i) t[i] = string_of(row[i], at);
    out.push_back(std::move(t));
  }
  return out;
}

void check_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!j.is_object()) schema(where, "expected an object");
  for (const auto& [k, v] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || k == a;
    if (!ok) schema(where, "unknown field '" + k + "'");
  }
}

void resolve(const std::set<std::string>& names, const std::string& name, const std::string& what,
             const std::string& where) {
  if (!names.count(name)) throw Error(ErrorKind::UnresolvedReference, where + ": no " + what + " named '" + name + "'");
}

template <class T>
const T& lookup(const std::map<std::string, T>& m, const std::string& name, const std::string& what,
                const std::string& where) {
  const auto it = m.find(name);
  if (it == m.end()) throw Error(ErrorKind::UnresolvedReference, where + ": no " + what + " named '" + name + "'");
  return it->second;
}

Names names_of(const FinCat& c) {
  Names n;
  for (ObId x : c.objects()) n.objects.insert(c.name(x));
  for (MorId f : c.morphisms()) n.morphisms.insert(c.name(f));
  return n;
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

RawCategory parse_category(const json& j, const std::string& where) {
  check_keys(j, {"objects", "morphisms", "identities", "compose"}, where);
  RawCategory raw;
  raw.objects = strings(field(j, "objects", where), where + ".objects");
  if (const auto it = j.find("morphisms"); it != j.end()) {
    if (!it->is_array()) schema(where + ".morphisms", "expected an array");
    for (const auto& m : *it) {
      const std::string at = where + ".morphisms";
      check_keys(m, {"name", "dom", "cod"}, at);
      raw.morphisms.push_back({string_of(field(m, "name", at), at), string_of(field(m, "dom", at), at),
                               string_of(field(m, "cod", at), at)});
    }
  }
  for (const auto& [x, f] : tuples<2>(j, "identities", where)) raw.identities.emplace_back(x, f);
  raw.compose = tuples<3>(j, "compose", where);

  const std::set<std::string> obs(raw.objects.begin(), raw.objects.end());
  std::set<std::string> mors;
  for (const auto& m : raw.morphisms) {
    resolve(obs, m.dom, "object", where + ".morphisms." + m.name);
    resolve(obs, m.cod, "object", where + ".morphisms." + m.name);
    mors.insert(m.name);
  }
  for (const auto& [x, f] : raw.identities) {
    resolve(obs, x, "object", where + ".identities");
    resolve(mors, f, "morphism", where + ".identities");
  }
  for (const auto& row : raw.compose) {
    for (const auto& f : row) resolve(mors, f, "morphism", where + ".compose");
  }
  return raw;
}

SpecFile::SetData parse_set_data(const json& j, const std::string& where, bool weight,
                                 const std::map<std::string, Names>& categories) {
  check_keys(j, {"category", "cards", "maps", "representable", "terminal"}, where);
  SpecFile::SetData d;
  d.category = string_of(field(j, "category", where), where + ".category");
  const Names& names = lookup(categories, d.category, "category", where);
  if (weight && j.contains("representable")) {
    d.representable = string_of(j["representable"], where + ".representable");
    resolve(names.objects, d.representable, "object", where + ".representable");
    return d;
  }
  if (weight && j.contains("terminal")) {
    if (!j["terminal"].is_boolean()) schema(where + ".terminal", "expected a boolean");
    d.terminal = j["terminal"].get<bool>();
    if (d.terminal) return d;
  }
  if (!weight && (j.contains("representable") || j.contains("terminal"))) {
    schema(where, "diagrams are given by cards and maps");
  }
  const json& cards = field(j, "cards", where);
  if (!cards.is_object()) schema(where + ".cards", "expected an object");
  for (const auto& [x, n] : cards.items()) {
    resolve(names.objects, x, "object", where + ".cards");
    d.cards[x] = count_of(n, where + ".cards." + x);
  }
  if (const auto it = j.find("maps"); it != j.end()) {
    if (!it->is_object()) schema(where + ".maps", "expected an object");
    for (const auto& [f, t] : it->items()) {
      resolve(names.morphisms, f, "morphism", where + ".maps");
      if (!t.is_array()) schema(where + ".maps." + f, "expected an array");
      std::vector<std::size_t> table;
      for (const auto& v : t) table.push_back(count_of(v, where + ".maps." + f));
      d.maps[f] = std::move(table);
    }
  }
  return d;
}

}  // namespace

MonStrPtr builtin_base(const std::string& name) {
  if (name == "boolean") return boolean_base();
  if (name == "s3") return symmetric_group_s3();
  if (name == "c3") return cyclic_group_c3();
  return nullptr;
}

SpecFile parse_spec_text(const std::string& text, const std::string& path) {
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
    schema(path, "empty file; missing required field 'enrichkit-spec'");
  }
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte);
    std::string msg = e.what();
    if (const auto pos = msg.find("]: "); pos != std::string::npos) msg = msg.substr(pos + 3);
    throw Error(ErrorKind::ParseError, path + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + msg);
  }
  if (!doc.is_object()) schema(path, "top level must be an object");
  const auto version = doc.find("enrichkit-spec");
  if (version == doc.end()) schema(path, "missing required field 'enrichkit-spec'");
  if (!version->is_number_integer() || version->get<int>() != 1) schema(path, "unsupported enrichkit-spec version");
  check_keys(doc,
             {"enrichkit-spec", "description", "categories", "monoidal", "modules", "enriched", "mfunctors",
              "presheaves", "diagrams", "weights"},
             path);

  SpecFile spec;
  spec.path = path;
  std::map<std::string, Names> categories;
  std::map<std::string, Names> bases;      // carrier names of each monoidal declaration
  std::map<std::string, std::string> module_category;
  std::map<std::string, std::vector<std::string>> enriched_objects;
  std::map<std::string, std::string> enriched_base;
  std::set<std::string> used;

  auto section = [&](const char* key, auto&& each) {
    const auto it = doc.find(key);
    if (it == doc.end()) return;
    if (!it->is_object()) schema(key, "section must be an object keyed by name");
    for (const auto& [name, body] : it->items()) {
      if (!used.insert(name).second) schema(std::string(key) + "." + name, "name already declared");
      each(name, body, std::string(key) + "." + name);
    }
  };

  section("categories", [&](const std::string& name, const json& body, const std::string& where) {
    RawCategory raw = parse_category(body, where);
    Names n;
    n.objects.insert(raw.objects.begin(), raw.objects.end());
    for (const auto& m : raw.morphisms) n.morphisms.insert(m.name);
    categories[name] = std::move(n);
    spec.categories.emplace_back(name, std::move(raw));
  });

  section("monoidal", [&](const std::string& name, const json& body, const std::string& where) {
    check_keys(body, {"builtin", "category", "unit", "tensor_ob", "tensor_mor"}, where);
    SpecFile::Monoidal m;
    if (body.contains("builtin")) {
      m.builtin = string_of(body["builtin"], where + ".builtin");
      const MonStrPtr b = builtin_base(m.builtin);
      if (!b) throw Error(ErrorKind::UnresolvedReference, where + ": no builtin base named '" + m.builtin + "'");
      bases[name] = names_of(b->carrier());
    } else {
      m.category = string_of(field(body, "category", where), where + ".category");
      const Names& c = lookup(categories, m.category, "category", where);
      m.raw.unit = string_of(field(body, "unit", where), where + ".unit");
      resolve(c.objects, m.raw.unit, "object", where + ".unit");
      m.raw.tensor_ob = tuples<3>(body, "tensor_ob", where, true);
      m.raw.tensor_mor = tuples<3>(body, "tensor_mor", where);
      for (const auto& row : m.raw.tensor_ob) {
        for (const auto& x : row) resolve(c.objects, x, "object", where + ".tensor_ob");
      }
      for (const auto& row : m.raw.tensor_mor) {
        for (const auto& f : row) resolve(c.morphisms, f, "morphism", where + ".tensor_mor");
      }
      bases[name] = c;
    }
    spec.monoidal.emplace_back(name, std::move(m));
  });

  section("modules", [&](const std::string& name, const json& body, const std::string& where) {
    check_keys(body, {"base", "category", "act_ob", "act_mor"}, where);
    SpecFile::Module m;
    m.base = string_of(field(body, "base", where), where + ".base");
    m.category = string_of(field(body, "category", where), where + ".category");
    const Names& b = lookup(bases, m.base, "monoidal base", where);
    const Names& c = lookup(categories, m.category, "category", where);
    m.raw.act_ob = tuples<3>(body, "act_ob", where);
    m.raw.act_mor = tuples<3>(body, "act_mor", where);
    for (const auto& [p, x, px] : m.raw.act_ob) {
      resolve(b.objects, p, "base object", where + ".act_ob");
      resolve(c.objects, x, "object", where + ".act_ob");
      resolve(c.objects, px, "object", where + ".act_ob");
    }
    for (const auto& [g, f, gf] : m.raw.act_mor) {
      resolve(b.morphisms, g, "base morphism", where + ".act_mor");
      resolve(c.morphisms, f, "morphism", where + ".act_mor");
      resolve(c.morphisms, gf, "morphism", where + ".act_mor");
    }
    module_category[name] = m.category;
    spec.modules.emplace_back(name, std::move(m));
  });

  section("enriched", [&](const std::string& name, const json& body, const std::string& where) {
    check_keys(body, {"base", "objects", "hom", "unit", "comp"}, where);
    SpecFile::Enriched e;
    e.base = string_of(field(body, "base", where), where + ".base");
    const Names& b = lookup(bases, e.base, "monoidal base", where);
    e.raw.objects = strings(field(body, "objects", where), where + ".objects");
    const std::set<std::string> obs(e.raw.objects.begin(), e.raw.objects.end());
    e.raw.hom = tuples<3>(body, "hom", where, true);
    e.raw.unit = tuples<2>(body, "unit", where);
    e.raw.comp = tuples<4>(body, "comp", where);
    for (const auto& [x, y, h] : e.raw.hom) {
      resolve(obs, x, "object", where + ".hom");
      resolve(obs, y, "object", where + ".hom");
      resolve(b.objects, h, "base object", where + ".hom");
    }
    for (const auto& [x, u] : e.raw.unit) {
      resolve(obs, x, "object", where + ".unit");
      resolve(b.morphisms, u, "base morphism", where + ".unit");
    }
    for (const auto& [x, y, z, c] : e.raw.comp) {
      for (const auto& o : {x, y, z}) resolve(obs, o, "object", where + ".comp");
      resolve(b.morphisms, c, "base morphism", where + ".comp");
    }
    enriched_objects[name] = e.raw.objects;
    enriched_base[name] = e.base;
    spec.enriched.emplace_back(name, std::move(e));
  });

  section("mfunctors", [&](const std::string& name, const json& body, const std::string& where) {
    check_keys(body, {"source", "target", "ob_map", "phi"}, where);
    SpecFile::MFunctor f;
    f.source = string_of(field(body, "source", where), where + ".source");
    f.target = string_of(field(body, "target", where), where + ".target");
    const auto& src = lookup(enriched_objects, f.source, "enriched category", where);
    const std::set<std::string> obs(src.begin(), src.end());
    const Names* target = nullptr;
    if (const auto it = module_category.find(f.target); it != module_category.end()) {
      target = &categories.at(it->second);
    } else {
      target = &lookup(bases, f.target, "module or monoidal base", where);
    }
    f.ob_map = tuples<2>(body, "ob_map", where, true);
    f.phi = tuples<3>(body, "phi", where);
    for (const auto& [x, y] : f.ob_map) {
      resolve(obs, x, "object", where + ".ob_map");
      resolve(target->objects, y, "target object", where + ".ob_map");
    }
    for (const auto& [x, y, p] : f.phi) {
      resolve(obs, x, "object", where + ".phi");
      resolve(obs, y, "object", where + ".phi");
      resolve(target->morphisms, p, "target morphism", where + ".phi");
    }
    spec.mfunctors.emplace_back(name, std::move(f));
  });

  section("presheaves", [&](const std::string& name, const json& body, const std::string& where) {
    check_keys(body, {"source", "values", "action"}, where);
    SpecFile::Presheaf p;
    p.source = string_of(field(body, "source", where), where + ".source");
    const auto& src = lookup(enriched_objects, p.source, "enriched category", where);
    const std::set<std::string> obs(src.begin(), src.end());
    const Names& b = bases.at(enriched_base.at(p.source));
    p.values = tuples<2>(body, "values", where, true);
    p.action = tuples<3>(body, "action", where);
    for (const auto& [x, v] : p.values) {
      resolve(obs, x, "object", where + ".values");
      resolve(b.objects, v, "base object", where + ".values");
    }
    for (const auto& [x, y, a] : p.action) {
      resolve(obs, x, "object", where + ".action");
      resolve(obs, y, "object", where + ".action");
      resolve(b.morphisms, a, "base morphism", where + ".action");
    }
    spec.presheaves.emplace_back(name, std::move(p));
  });

  section("diagrams", [&](const std::string& name, const json& body, const std::string& where) {
    spec.diagrams.emplace_back(name, parse_set_data(body, where, false, categories));
  });
  section("weights", [&](const std::string& name, const json& body, const std::string& where) {
    spec.weights.emplace_back(name, parse_set_data(body, where, true, categories));
  });
  return spec;
}

SpecFile parse_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_spec_text(ss.str(), path);
}

}  // namespace enrichkit
