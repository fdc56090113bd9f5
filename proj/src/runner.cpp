#include "enrichkit/runner.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "enrichkit/corpus.hpp"
#include "enrichkit/fuzz.hpp"
#include "enrichkit/mfunctor.hpp"
#include "enrichkit/presheaf.hpp"
#include "enrichkit/tensored.hpp"
#include "enrichkit/wcolim.hpp"

namespace enrichkit {

using json = nlohmann::ordered_json;

namespace {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::error:
      return "error";
  }
  return "error";
}

/// Runs `body` into a fresh record and appends it. Validator errors make the
/// record fail; resource caps and anything unexpected make it an error.
void record(Report& report, const std::string& check, const std::string& instance,
            const std::function<void(CheckRecord&)>& body) {
  CheckRecord rec;
  rec.check = check;
  rec.instance = instance;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(rec);
  } catch (const Error& e) {
    rec.verdict = is_resource_error(e.kind()) || e.kind() == ErrorKind::InternalError ? Verdict::error : Verdict::fail;
    rec.error = e.kind();
    rec.witnesses.push_back(e.witness());
  } catch (const std::exception& e) {
    rec.verdict = Verdict::error;
    rec.error = ErrorKind::InternalError;
    rec.witnesses.push_back(e.what());
  }
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report.records.push_back(std::move(rec));
}

void add_witnesses(CheckRecord& rec, const std::vector<std::string>& witnesses, std::size_t limit = 10) {
  for (std::size_t i = 0; i < witnesses.size() && i < limit; ++i) rec.witnesses.push_back(witnesses[i]);
  if (witnesses.size() > limit) rec.witnesses.push_back("… and " + std::to_string(witnesses.size() - limit) + " more");
}

void tally_into(CheckRecord& rec, const Tally& t) {
  rec.details["checks"] = t.checks;
  rec.details["failures"] = t.failures;
  if (t.failures) rec.verdict = Verdict::fail;
  add_witnesses(rec, t.witnesses);
}

void bijections_into(CheckRecord& rec, const BijectionReport& b) {
  rec.details["cases"] = b.cases;
  rec.details["bijections"] = b.bijections;
  rec.details["failures"] = b.failures;
  rec.details["hom_set_elements"] = b.elements;
  if (b.failures) rec.verdict = Verdict::fail;
  add_witnesses(rec, b.witnesses);
}

// Every declaration of a spec file, built in file order.
struct Workspace {
  std::map<std::string, FinCatPtr> categories;
  std::map<std::string, MonStrPtr> bases;
  std::map<std::string, LTensoredPtr> modules;
  std::map<std::string, MCatPtr> enriched;
  std::map<std::string, MFunctorET<LTensored>> mfunctors;
  std::map<std::string, FinPresheaf> presheaves;
  std::map<std::string, SetCategory> set_categories;
  std::map<std::string, SetFunctor> diagrams;
  std::map<std::string, SetPresheaf> weights;
  std::vector<std::string> enriched_order, diagram_order, weight_order;
};

[[noreturn]] void broken_dependency(const std::string& name) {
  throw Error(ErrorKind::UnresolvedReference, "depends on '" + name + "', which failed validation");
}

template <class T>
const T& need(const std::map<std::string, T>& m, const std::string& name) {
  const auto it = m.find(name);
  if (it == m.end()) broken_dependency(name);
  return it->second;
}

ObId object_named(const FinCat& c, const std::string& name) {
  if (auto x = c.find_object(name)) return *x;
  throw Error(ErrorKind::UnresolvedReference, "no object '" + name + "'");
}

MorId morphism_named(const FinCat& c, const std::string& name) {
  if (auto f = c.find_morphism(name)) return *f;
  throw Error(ErrorKind::UnresolvedReference, "no morphism '" + name + "'");
}

std::size_t index_of(const std::vector<std::string>& names, const std::string& name) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return i;
  }
  throw Error(ErrorKind::UnresolvedReference, "no object '" + name + "'");
}

// Entry (x, y) of a table whose omitted entries are filled when exactly one
// morphism has the required type.
MorId forced(std::span<const MorId> candidates, const std::string& what) {
  if (candidates.size() == 1) return candidates.front();
  if (candidates.empty()) throw Error(ErrorKind::TypeMismatch, "no morphism of the required type for " + what);
  throw Error(ErrorKind::SchemaViolation, "missing entry " + what);
}

MFunctorET<LTensored> build_mfunctor(const Workspace& ws, const SpecFile::MFunctor& d) {
  const MCatPtr& a = need(ws.enriched, d.source);
  LTensoredPtr target;
  if (ws.modules.count(d.target)) {
    target = ws.modules.at(d.target);
  } else {
    target = self_module(need(ws.bases, d.target));
  }
  const FinCat& c = target->carrier();
  const std::size_t n = a->size();
  constexpr std::uint32_t unset = ~std::uint32_t{0};
  MFunctorET<LTensored> f{a, target, std::vector<ObId>(n, ObId{unset}), std::vector<MorId>(n * n, MorId{unset})};
  for (const auto& [x, y] : d.ob_map) f.ob_map[index_of(a->objects, x)] = object_named(c, y);
  for (std::size_t x = 0; x < n; ++x) {
    if (f.ob_map[x].value == unset) throw Error(ErrorKind::SchemaViolation, "ob_map misses " + a->objects[x]);
  }
  for (const auto& [x, y, p] : d.phi) f.action(index_of(a->objects, x), index_of(a->objects, y)) = morphism_named(c, p);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      auto& cell = f.action(x, y);
      if (cell.value != unset) continue;
      cell = forced(target->hom(target->act(a->hom(x, y), f.ob_map[x]), f.ob_map[y]),
                    "phi(" + a->objects[x] + ", " + a->objects[y] + ")");
    }
  }
  validate_mfun_et(f);
  return f;
}

FinPresheaf build_presheaf(const Workspace& ws, const SpecFile::Presheaf& d) {
  const MCatPtr& a = need(ws.enriched, d.source);
  const MonStr& m = *a->base;
  const FinCat& c = m.carrier();
  const std::size_t n = a->size();
  constexpr std::uint32_t unset = ~std::uint32_t{0};
  FinPresheaf f{std::vector<ObId>(n, ObId{unset}), std::vector<MorId>(n * n, MorId{unset})};
  for (const auto& [x, v] : d.values) f.values[index_of(a->objects, x)] = object_named(c, v);
  for (std::size_t x = 0; x < n; ++x) {
    if (f.values[x].value == unset) throw Error(ErrorKind::SchemaViolation, "values miss " + a->objects[x]);
  }
  for (const auto& [x, y, p] : d.action) f.action(index_of(a->objects, x), index_of(a->objects, y)) = morphism_named(c, p);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      auto& cell = f.action(x, y);
      if (cell.value != unset) continue;
      cell = forced(m.hom(m.tensor(f.values[y], a->hom(x, y)), f.values[x]),
                    "action(" + a->objects[x] + ", " + a->objects[y] + ")");
    }
  }
  validate_presheaf(*a, f);
  return f;
}

const SetCategory& set_category(Workspace& ws, const std::string& name) {
  if (auto it = ws.set_categories.find(name); it != ws.set_categories.end()) return it->second;
  return ws.set_categories.emplace(name, enrich_over_sets(need(ws.categories, name))).first->second;
}

// Cards and maps of a diagram or weight. Identity maps may be omitted.
std::pair<std::vector<std::size_t>, std::vector<SkMap>> set_data(const SetCategory& c, const SpecFile::SetData& d,
                                                                 bool contravariant) {
  const FinCat& cat = *c.ordinary;
  std::vector<std::size_t> cards(cat.object_count());
  for (ObId x : cat.objects()) {
    const auto it = d.cards.find(cat.name(x));
    if (it == d.cards.end()) throw Error(ErrorKind::SchemaViolation, "cards miss " + cat.name(x));
    cards[x.value] = it->second;
  }
  std::vector<SkMap> maps;
  for (MorId f : cat.morphisms()) {
    SkSet dom{cards[cat.dom(f).value]}, cod{cards[cat.cod(f).value]};
    if (contravariant) std::swap(dom, cod);
    const auto it = d.maps.find(cat.name(f));
    if (it != d.maps.end()) {
      maps.push_back(SkMap::make(dom, cod, it->second));
    } else if (cat.is_identity(f)) {
      maps.push_back(SkMap::identity(dom));
    } else {
      throw Error(ErrorKind::SchemaViolation, "maps miss " + cat.name(f));
    }
  }
  return {cards, maps};
}

Workspace build(const SpecFile& spec, Report& report, bool record_successes) {
  Workspace ws;
  auto step = [&](const std::string& section, const std::string& name, const std::function<void(CheckRecord&)>& body) {
    const std::size_t before = report.records.size();
    record(report, "validate", section + ":" + name, body);
    if (!record_successes && report.records.back().verdict == Verdict::pass) report.records.resize(before);
  };
  for (const auto& [name, raw] : spec.categories) {
    step("category", name, [&](CheckRecord& rec) {
      auto c = std::make_shared<const FinCat>(FinCat::validate(raw));
      rec.details["objects"] = c->object_count();
      rec.details["morphisms"] = c->morphism_count();
      ws.categories[name] = std::move(c);
    });
  }
  for (const auto& [name, d] : spec.monoidal) {
    step("monoidal", name, [&](CheckRecord& rec) {
      MonStrPtr m = d.builtin.empty() ? std::make_shared<const MonStr>(MonStr::validate(need(ws.categories, d.category), d.raw))
                                      : builtin_base(d.builtin);
      rec.details["objects"] = m->carrier().object_count();
      rec.details["morphisms"] = m->carrier().morphism_count();
      ws.bases[name] = std::move(m);
    });
  }
  for (const auto& [name, d] : spec.modules) {
    step("module", name, [&](CheckRecord& rec) {
      auto b = std::make_shared<const LTensored>(
          LTensored::validate(need(ws.bases, d.base), need(ws.categories, d.category), d.raw));
      rec.details["objects"] = b->carrier().object_count();
      ws.modules[name] = std::move(b);
    });
  }
  for (const auto& [name, d] : spec.enriched) {
    step("enriched", name, [&](CheckRecord& rec) {
      auto a = std::make_shared<const MCat>(make_mcat(need(ws.bases, d.base), d.raw));
      rec.details["objects"] = a->size();
      ws.enriched[name] = std::move(a);
      ws.enriched_order.push_back(name);
    });
  }
  for (const auto& [name, d] : spec.mfunctors) {
    step("mfunctor", name, [&](CheckRecord&) { ws.mfunctors.emplace(name, build_mfunctor(ws, d)); });
  }
  for (const auto& [name, d] : spec.presheaves) {
    step("presheaf", name, [&](CheckRecord&) { ws.presheaves.emplace(name, build_presheaf(ws, d)); });
  }
  for (const auto& [name, d] : spec.diagrams) {
    step("diagram", name, [&](CheckRecord& rec) {
      const SetCategory& c = set_category(ws, d.category);
      const auto [cards, maps] = set_data(c, d, false);
      ws.diagrams.emplace(name, set_functor(c, cards, maps));
      rec.details["cards"] = cards;
      ws.diagram_order.push_back(name);
    });
  }
  for (const auto& [name, d] : spec.weights) {
    step("weight", name, [&](CheckRecord& rec) {
      const SetCategory& c = set_category(ws, d.category);
      SetPresheaf w;
      if (!d.representable.empty()) {
        w = representable(*c.enriched, index_of(c.enriched->objects, d.representable));
      } else if (d.terminal) {
        w = terminal_presheaf(c);
      } else {
        const auto [cards, maps] = set_data(c, d, true);
        w = set_presheaf(c, cards, maps);
      }
      std::vector<std::size_t> cards;
      for (SkSet v : w.values) cards.push_back(v.card);
      rec.details["cards"] = cards;
      ws.weights.emplace(name, std::move(w));
      ws.weight_order.push_back(name);
    });
  }
  return ws;
}

std::string values_of(const MCat& a, const FinPresheaf& f) {
  std::string s;
  for (std::size_t x = 0; x < a.size(); ++x) {
    s += (x ? ", " : "") + a.objects[x] + "=" + a.base->describe(f.values[x]);
  }
  return "(" + s + ")";
}

const std::string& category_of(const SpecFile& spec, const std::string& weight_or_diagram) {
  for (const auto& [n, d] : spec.diagrams) {
    if (n == weight_or_diagram) return d.category;
  }
  for (const auto& [n, d] : spec.weights) {
    if (n == weight_or_diagram) return d.category;
  }
  throw Error(ErrorKind::InternalError, "unknown declaration " + weight_or_diagram);
}

void cmd_presheaves(const Workspace& ws, Report& report) {
  for (const auto& name : ws.enriched_order) {
    record(report, "presheaves", name, [&](CheckRecord& rec) {
      const MCatPtr& a = ws.enriched.at(name);
      const PresheafCategory p = PresheafCategory::enumerate(a);
      rec.details["presheaves"] = p.presheaves().size();
      rec.details["morphisms"] = p.arrows().size();
      json list = json::array();
      for (const auto& f : p.presheaves()) list.push_back(values_of(*a, f));
      rec.details["values"] = list;
      const auto y = yoneda(p);
      json ys = json::object();
      for (std::size_t x = 0; x < a->size(); ++x) ys[a->objects[x]] = "P" + std::to_string(y.ob_map[x].value);
      rec.details["yoneda"] = ys;
    });
  }
}

void cmd_yoneda(const Workspace& ws, Report& report) {
  for (const auto& name : ws.enriched_order) {
    const MCatPtr& a = ws.enriched.at(name);
    std::optional<PresheafCategory> p;
    record(report, "yoneda-lemma", name, [&](CheckRecord& rec) {
      p.emplace(PresheafCategory::enumerate(a));
      rec.details["presheaves"] = p->presheaves().size();
      bijections_into(rec, check_yoneda_lemma(*p));
    });
    if (!p) continue;
    record(report, "fully-faithful", name, [&](CheckRecord& rec) {
      const BijectionReport b = check_fully_faithful(*p);
      bijections_into(rec, b);
      const auto y = yoneda(*p);
      json homs = json::object();
      for (std::size_t x = 0; x < a->size(); ++x) {
        for (std::size_t z = 0; z < a->size(); ++z) {
          const auto found = hom_object(p->tensored(), y.ob_map[x], y.ob_map[z]);
          homs[a->objects[x] + "," + a->objects[z]] = found.first ? a->base->describe(found.first->object) : "none";
        }
      }
      rec.details["hom_objects"] = homs;
    });
    record(report, "op-dictionary", name, [&](CheckRecord& rec) { tally_into(rec, check_op_dictionary(*p)); });
  }
}

void cmd_wcolim(const SpecFile& spec, const Workspace& ws, Report& report, const RunOptions& options) {
  Rng rng(options.seed);
  for (const auto& dn : ws.diagram_order) {
    for (const auto& wn : ws.weight_order) {
      if (category_of(spec, dn) != category_of(spec, wn)) continue;
      record(report, "weighted-colimit", wn + " * " + dn, [&](CheckRecord& rec) {
        const WColimit wc = weighted_colimit(ws.weights.at(wn), ws.diagrams.at(dn));
        rec.details["apex"] = wc.apex.card;
        json legs = json::array();
        for (const auto& leg : wc.legs) legs.push_back(leg.table);
        rec.details["legs"] = legs;
        const auto probes = standard_probes(wc, rng, options.probes);
        rec.details["probes"] = probes.size();
        tally_into(rec, check_universal(wc, probes));
      });
    }
  }
}

void cmd_universal(const SpecFile& spec, Workspace& ws, Report& report) {
  for (const auto& wn : ws.weight_order) {
    record(report, "canonical-presentation", wn, [&](CheckRecord& rec) {
      const Presentation p = canonical_presentation(set_category(ws, category_of(spec, wn)), ws.weights.at(wn));
      json cards = json::array();
      for (SkSet v : p.colimit.values) cards.push_back(v.card);
      rec.details["colimit_cards"] = cards;
      if (p.failure) {
        rec.verdict = Verdict::fail;
        rec.witnesses.push_back(*p.failure);
      }
    });
  }
  for (const auto& dn : ws.diagram_order) {
    record(report, "equivalence", dn, [&](CheckRecord& rec) {
      const std::string& cat = category_of(spec, dn);
      EquivalenceInstance inst{dn, set_category(ws, cat), ws.diagrams.at(dn), {}};
      json used = json::array();
      for (const auto& wn : ws.weight_order) {
        if (category_of(spec, wn) != cat) continue;
        inst.weights.push_back(ws.weights.at(wn));
        used.push_back(wn);
      }
      rec.details["weights"] = used;
      const Ext ext(inst.diagram);
      const SetFunctor r = res(ext);
      json ob = json::array();
      for (SkSet v : r.ob_map) ob.push_back(v.card);
      rec.details["res_ext_cards"] = ob;
      tally_into(rec, check_equivalence(inst));
    });
  }
}

json stats_json(const SamplerStats& s) {
  json j;
  j["bases"] = std::to_string(s.base_accepted) + "/" + std::to_string(s.base_attempts);
  j["mcats"] = std::to_string(s.mcat_accepted) + "/" + std::to_string(s.mcat_attempts);
  j["set_categories"] = std::to_string(s.category_accepted) + "/" + std::to_string(s.category_attempts);
  j["diagram_fallbacks"] = s.diagram_fallbacks;
  return j;
}

void cmd_fuzz(Report& report, const RunOptions& options) {
  std::optional<PresheafFuzz> pf;
  const std::string corpus = "random seed " + std::to_string(options.seed);
  record(report, "fuzz-yoneda-lemma", corpus, [&](CheckRecord& rec) {
    pf.emplace(fuzz_presheaves(options.seed, options.fuzz_instances, options.max_size));
    rec.details["instances"] = pf->instances;
    rec.details["skipped"] = pf->skipped;
    json fam = json::object();
    for (const auto& [k, v] : pf->families) fam[k] = v;
    rec.details["families"] = fam;
    rec.details["presheaves"] = pf->presheaves;
    rec.details["acceptance"] = stats_json(pf->stats);
    bijections_into(rec, pf->yoneda);
    add_witnesses(rec, pf->skip_reasons, 5);
    if (pf->instances < options.fuzz_instances) {
      rec.verdict = Verdict::fail;
      rec.witnesses.push_back("only " + std::to_string(pf->instances) + " instances could be checked");
    }
  });
  if (pf) {
    record(report, "fuzz-fully-faithful", corpus, [&](CheckRecord& rec) { bijections_into(rec, pf->fully_faithful); });
    record(report, "fuzz-op-dictionary", corpus, [&](CheckRecord& rec) { tally_into(rec, pf->op_dictionary); });
    record(report, "unit-automatism", corpus, [&](CheckRecord& rec) {
      // An experiment: the counts are the result, there is no threshold.
      rec.details["mfunctor_candidates"] = pf->functors.compatible;
      rec.details["mfunctor_unit_violations"] = pf->functors.unit_failures;
      rec.details["presheaf_candidates"] = pf->presheaves_without_unit.compatible;
      rec.details["presheaf_unit_violations"] = pf->presheaves_without_unit.unit_failures;
      add_witnesses(rec, pf->functors.examples, 3);
    });
  }
  std::optional<ColimitFuzz> cf;
  record(report, "fuzz-coyoneda", corpus, [&](CheckRecord& rec) {
    cf.emplace(fuzz_colimits(options.seed, options.fuzz_colimits, options.probes));
    rec.details["instances"] = cf->instances;
    rec.details["acceptance"] = stats_json(cf->stats);
    tally_into(rec, cf->coyoneda);
  });
  if (cf) {
    record(report, "fuzz-universal", corpus, [&](CheckRecord& rec) {
      rec.details["probes"] = cf->probes;
      tally_into(rec, cf->universal);
    });
    record(report, "fuzz-canonical-presentation", corpus, [&](CheckRecord& rec) { tally_into(rec, cf->presentation); });
    record(report, "fuzz-equivalence", corpus, [&](CheckRecord& rec) { tally_into(rec, cf->equivalence); });
  }
}

}  // namespace

std::size_t Report::count(Verdict v) const {
  std::size_t n = 0;
  for (const auto& r : records) n += r.verdict == v;
  return n;
}

bool Report::resource_error() const {
  for (const auto& r : records) {
    if (r.error && is_resource_error(*r.error)) return true;
  }
  return false;
}

int Report::exit_code() const {
  if (resource_error()) return 3;
  return count(Verdict::pass) == records.size() ? 0 : 1;
}

std::string Report::machine() const {
  json j;
  j["enrichkit-report"] = 1;
  j["command"] = command;
  j["spec"] = spec;
  j["seed"] = seed;
  json recs = json::array();
  for (const auto& r : records) {
    json e;
    e["check"] = r.check;
    e["instance"] = r.instance;
    e["verdict"] = verdict_name(r.verdict);
    if (r.error) e["error"] = to_string(*r.error);
    e["details"] = r.details;
    e["witnesses"] = r.witnesses;
    recs.push_back(std::move(e));
  }
  j["records"] = std::move(recs);
  j["summary"] = {{"checks", records.size()},
                  {"passed", count(Verdict::pass)},
                  {"failed", count(Verdict::fail)},
                  {"errors", count(Verdict::error)}};
  return j.dump(2) + "\n";
}

std::string Report::human() const {
  std::ostringstream out;
  out << "enrichkit " << command;
  if (!spec.empty()) out << " on " << spec;
  out << " (seed " << seed << ")\n";
  for (const auto& r : records) {
    std::string tag(verdict_name(r.verdict));
    for (auto& ch : tag) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    out << tag << "  " << r.check << "  " << r.instance;
    char buf[32];
    std::snprintf(buf, sizeof buf, "  [%.3f s]", r.seconds);
    out << buf << "\n";
    if (r.error) out << "      " << to_string(*r.error) << "\n";
    if (!r.details.empty()) out << "      " << r.details.dump() << "\n";
    for (const auto& w : r.witnesses) out << "      - " << w << "\n";
  }
  out << count(Verdict::pass) << " passed, " << count(Verdict::fail) << " failed, " << count(Verdict::error)
      << " errors\n";
  return out.str();
}

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = {"validate", "presheaves", "yoneda", "wcolim", "universal", "fuzz"};
  return names;
}

Report run(const std::string& command, const SpecFile* spec, const RunOptions& options) {
  Report report;
  report.command = command;
  report.seed = options.seed;
  if (spec) report.spec = spec->path;
  if (command == "fuzz") {
    cmd_fuzz(report, options);
    return report;
  }
  if (std::find(commands().begin(), commands().end(), command) == commands().end()) {
    throw Error(ErrorKind::SchemaViolation, "unknown command '" + command + "'");
  }
  if (!spec) throw Error(ErrorKind::SchemaViolation, "command '" + command + "' needs a spec file");
  Workspace ws = build(*spec, report, command == "validate");
  if (command == "presheaves") cmd_presheaves(ws, report);
  if (command == "yoneda") cmd_yoneda(ws, report);
  if (command == "wcolim") cmd_wcolim(*spec, ws, report, options);
  if (command == "universal") cmd_universal(*spec, ws, report);
  return report;
}

}  // namespace enrichkit
