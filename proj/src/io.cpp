#include "io_json.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "lvdual/error.hpp"

namespace lvd {

namespace fs = std::filesystem;
using io::Json;

namespace {

constexpr int kMaxReferenceDepth = 16;

[[noreturn]] void schema(const std::string& msg) { throw Error(ErrorKind::SchemaError, msg); }

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) schema(where + ": missing field '" + key + "'");
  return obj[key];
}

std::string str(const Json& j, const std::string& what) {
  if (!j.is_string()) schema(what + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> str_list(const Json& j, const std::string& what) {
  if (!j.is_array()) schema(what + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(str(e, what + " entry"));
  return out;
}

const Json& object(const Json& j, const std::string& what) {
  if (!j.is_object()) schema(what + " must be an object");
  return j;
}

Value element(const Lattice& l, const Json& j, const std::string& what) {
  auto s = str(j, what);
  auto v = l.find(s);
  if (!v) schema(what + ": '" + s + "' is not an element of the lattice");
  return *v;
}

std::size_t index_in(const std::vector<std::string>& names, const std::string& s, const std::string& what) {
  auto it = std::find(names.begin(), names.end(), s);
  if (it == names.end()) schema(what + ": unknown name '" + s + "'");
  return static_cast<std::size_t>(it - names.begin());
}

Index carrier_index(const Algebra& a, const Json& j, const std::string& what) {
  auto s = str(j, what);
  auto i = a.find(s);
  if (!i) schema(what + ": '" + s + "' is not a carrier element");
  return *i;
}

Relation relation(const Json& j, const std::vector<std::string>& names, const std::string& what) {
  if (!j.is_array()) schema(what + " must be an array of pairs");
  Relation r(names.size());
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) schema(what + " entries must be pairs");
    r.set(index_in(names, str(pair[0], what), what), index_in(names, str(pair[1], what), what));
  }
  return r;
}

Json relation_json(const Relation& r, const std::vector<std::string>& names) {
  auto out = Json::array();
  for (auto [x, y] : r.pairs()) out.push_back({names[x], names[y]});
  return out;
}

void check_unique(const std::vector<std::string>& names, const std::string& what) {
  std::set<std::string> seen(names.begin(), names.end());
  if (seen.size() != names.size()) schema(what + " contains duplicates");
}

/// Carrier indices in identifier order, the order from_tables canonicalises to.
std::vector<Index> name_order(const Algebra& a) {
  std::vector<Index> order(a.size());
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(), [&](Index x, Index y) { return a.element_name(x) < a.element_name(y); });
  return order;
}

class Loader {
 public:
  Document document(const Json& j, const fs::path& base, std::optional<DocumentKind> expected) {
    if (++depth_ > kMaxReferenceDepth) schema("references nested too deeply");
    object(j, "document");
    DocumentKind kind;
    if (j.contains("kind")) {
      kind = parse_kind(str(j["kind"], "kind"));
      if (expected && kind != *expected) {
        schema("expected a " + std::string(to_string(*expected)) + " document, found " + std::string(to_string(kind)));
      }
    } else if (expected) {
      kind = *expected;
    } else {
      schema("document: missing field 'kind'");
    }
    Document d{kind, nullptr, nullptr, nullptr, nullptr, std::nullopt, std::nullopt};
    switch (kind) {
      case DocumentKind::Lattice: d.lattice = lattice(j); break;
      case DocumentKind::Algebra:
        d.algebra = algebra(j, base);
        d.lattice = d.algebra->lattice_ptr();
        break;
      case DocumentKind::System:
        d.system = system(j, base);
        d.algebra = d.system->algebra;
        d.lattice = d.algebra->lattice_ptr();
        break;
      case DocumentKind::Space:
        d.space = space(j, base);
        d.lattice = d.space->lattice_ptr();
        break;
      case DocumentKind::Morphism: d.morphism = morphism(j, base, d.lattice); break;
      case DocumentKind::FormulaJob:
        d.job = job(j, base);
        d.lattice = d.job->lattice;
        break;
    }
    --depth_;
    return d;
  }

 private:
  static DocumentKind parse_kind(const std::string& s) {
    for (auto k : {DocumentKind::Lattice, DocumentKind::Algebra, DocumentKind::System, DocumentKind::Space,
                   DocumentKind::Morphism, DocumentKind::FormulaJob}) {
      if (s == to_string(k)) return k;
    }
    schema("unknown document kind '" + s + "'");
  }

  Document resolve(const Json& ref, const fs::path& base, DocumentKind kind) {
    if (ref.is_object()) return document(ref, base, kind);
    auto name = str(ref, std::string(to_string(kind)) + " reference");
    auto path = base / name;
    if (!fs::is_regular_file(path)) {
      throw Error(ErrorKind::DanglingReference, "reference '" + name + "' does not resolve to a file");
    }
    return document(io::read_json(path), path.parent_path(), kind);
  }

  LatticePtr lattice_ref(const Json& ref, const fs::path& base) {
    if (ref.is_string()) {
      if (auto l = builtin_lattice(ref.get<std::string>())) return l;
    }
    return resolve(ref, base, DocumentKind::Lattice).lattice;
  }

  AlgebraPtr algebra_ref(const Json& ref, const fs::path& base) { return resolve(ref, base, DocumentKind::Algebra).algebra; }

  static LatticePtr lattice(const Json& j) {
    std::string name = j.contains("name") ? str(j["name"], "lattice name") : std::string{};
    auto elements = str_list(field(j, "elements", "lattice"), "lattice elements");
    std::vector<std::pair<std::string, std::string>> leq;
    const auto& pairs = field(j, "leq", "lattice");
    if (!pairs.is_array()) schema("lattice leq must be an array of pairs");
    for (const auto& p : pairs) {
      if (!p.is_array() || p.size() != 2) schema("lattice leq entries must be pairs");
      auto a = str(p[0], "leq entry"), b = str(p[1], "leq entry");
      index_in(elements, a, "lattice leq");
      index_in(elements, b, "lattice leq");
      leq.emplace_back(a, b);
    }
    return build_lattice(std::move(elements), leq, std::move(name));
  }

  AlgebraPtr algebra(const Json& j, const fs::path& base) {
    auto l = lattice_ref(field(j, "lattice", "algebra"), base);
    if (j.contains("generators")) {
      if (j.contains("carrier")) schema("algebra: give either generators or tables, not both");
      auto points = str_list(field(j, "points", "algebra"), "algebra points");
      check_unique(points, "algebra points");
      std::vector<Function> gens;
      const auto& gj = j["generators"];
      if (!gj.is_array()) schema("algebra generators must be an array");
      for (const auto& g : gj) {
        object(g, "generator");
        Function f(points.size());
        if (g.size() != points.size()) schema("every generator must give one value per point");
        for (std::size_t p = 0; p < points.size(); ++p) {
          f[p] = element(*l, field(g, points[p].c_str(), "generator"), "generator value");
        }
        gens.push_back(std::move(f));
      }
      std::optional<Relation> rel;
      if (j.contains("box_relation")) rel = relation(j["box_relation"], points, "box_relation");
      return functional_algebra(l, points, gens, rel);
    }
    AlgebraTables t;
    t.carrier = str_list(field(j, "carrier", "algebra"), "algebra carrier");
    check_unique(t.carrier, "algebra carrier");
    auto n = t.carrier.size();
    auto idx = [&](const Json& e, const std::string& what) {
      return static_cast<Index>(index_in(t.carrier, str(e, what), what));
    };
    auto binary = [&](const char* key) {
      const auto& rows = field(j, key, "algebra");
      if (!rows.is_array() || rows.size() != n) schema(std::string("algebra ") + key + " must have one row per element");
      std::vector<Index> out;
      for (const auto& row : rows) {
        if (!row.is_array() || row.size() != n) schema(std::string("algebra ") + key + " rows must have one entry per element");
        for (const auto& e : row) out.push_back(idx(e, key));
      }
      return out;
    };
    auto unary = [&](const Json& row, const std::string& what) {
      if (!row.is_array() || row.size() != n) schema(what + " must have one entry per element");
      std::vector<Index> out;
      for (const auto& e : row) out.push_back(idx(e, what));
      return out;
    };
    t.meet = binary("meet");
    t.join = binary("join");
    t.imp = binary("imp");
    const auto& tj = object(field(j, "T", "algebra"), "algebra T");
    if (tj.size() != l->size()) schema("algebra T must have one table per lattice element");
    for (const auto& r : l->elements()) t.truth.push_back(unary(field(tj, r.c_str(), "algebra T"), "T[" + r + "]"));
    if (j.contains("box")) t.box = unary(j["box"], "box");
    t.bottom = idx(field(j, "bot", "algebra"), "bot");
    t.top = idx(field(j, "top", "algebra"), "top");
    return Algebra::from_tables(l, std::move(t));
  }

  SystemPtr system(const Json& j, const fs::path& base) {
    auto l = lattice_ref(field(j, "lattice", "system"), base);
    auto a = algebra_ref(field(j, "algebra", "system"), base);
    if (!same_lattice(*l, a->lattice())) schema("system: the algebra lives over a different lattice");
    auto points = str_list(field(j, "points", "system"), "system points");
    check_unique(points, "system points");
    const auto& sj = object(field(j, "sat", "system"), "system sat");
    if (sj.size() != points.size()) schema("system sat must have one row per point");
    std::vector<Value> sat(points.size() * a->size());
    for (std::size_t x = 0; x < points.size(); ++x) {
      const auto& row = object(field(sj, points[x].c_str(), "system sat"), "system sat row");
      if (row.size() != a->size()) schema("system sat row '" + points[x] + "' must cover the carrier");
      for (auto it = row.begin(); it != row.end(); ++it) {
        auto e = a->find(it.key());
        if (!e) schema("system sat: '" + it.key() + "' is not a carrier element");
        sat[x * a->size() + *e] = element(*l, it.value(), "system sat value");
      }
    }
    std::optional<Relation> rel;
    if (j.contains("relation")) rel = relation(j["relation"], points, "system relation");
    return make_system(points, a, std::move(sat), rel);
  }

  SpacePtr space(const Json& j, const fs::path& base) {
    auto l = lattice_ref(field(j, "lattice", "space"), base);
    auto carrier = str_list(field(j, "carrier", "space"), "space carrier");
    check_unique(carrier, "space carrier");
    SubalgebraFamily family(l);
    std::vector<std::vector<bool>> phi(family.size(), std::vector<bool>(carrier.size(), false));
    const auto& pj = object(field(j, "phi", "space"), "space phi");
    for (auto it = pj.begin(); it != pj.end(); ++it) {
      auto m = family.find_key(it.key());
      if (!m) schema("space phi: '" + it.key() + "' is not a subalgebra key");
      for (const auto& s : str_list(it.value(), "space phi entry")) phi[*m][index_in(carrier, s, "space phi")] = true;
    }
    std::optional<Relation> rel;
    if (j.contains("relation")) rel = relation(j["relation"], carrier, "space relation");
    return make_space(l, carrier, std::move(phi), rel);
  }

  MorphismDocument morphism(const Json& j, const fs::path& base, LatticePtr& lattice_out) {
    auto type = str(field(j, "type", "morphism"), "morphism type");
    const auto& src = field(j, "source", "morphism");
    const auto& tgt = field(j, "target", "morphism");
    if (type == to_string(MorphismType::SystemMap)) {
      auto s1 = resolve(src, base, DocumentKind::System).system;
      auto s2 = resolve(tgt, base, DocumentKind::System).system;
      SystemMap m{s1, s2, std::vector<std::size_t>(s1->size()), std::vector<Index>(s2->algebra->size())};
      const auto& pm = object(field(j, "point_map", "morphism"), "point_map");
      if (pm.size() != s1->size()) schema("point_map must cover the source points");
      for (std::size_t x = 0; x < s1->size(); ++x) {
        m.point_map[x] = index_in(s2->points, str(field(pm, s1->points[x].c_str(), "point_map"), "point_map"), "point_map");
      }
      const auto& am = object(field(j, "algebra_map", "morphism"), "algebra_map");
      if (am.size() != s2->algebra->size()) schema("algebra_map must cover the target carrier");
      for (auto it = am.begin(); it != am.end(); ++it) {
        auto b = s2->algebra->find(it.key());
        if (!b) schema("algebra_map: '" + it.key() + "' is not a target carrier element");
        m.algebra_map[*b] = carrier_index(*s1->algebra, it.value(), "algebra_map value");
      }
      lattice_out = s1->algebra->lattice_ptr();
      return {MorphismType::SystemMap, m, std::nullopt, std::nullopt};
    }
    if (type == to_string(MorphismType::SpaceMap)) {
      auto sp1 = resolve(src, base, DocumentKind::Space).space;
      auto sp2 = resolve(tgt, base, DocumentKind::Space).space;
      SpaceMap m{sp1, sp2, std::vector<std::size_t>(sp1->size())};
      const auto& mj = object(field(j, "map", "morphism"), "map");
      if (mj.size() != sp1->size()) schema("map must cover the source carrier");
      for (std::size_t s = 0; s < sp1->size(); ++s) {
        m.map[s] = index_in(sp2->carrier, str(field(mj, sp1->carrier[s].c_str(), "map"), "map"), "map");
      }
      lattice_out = sp1->lattice_ptr();
      return {MorphismType::SpaceMap, std::nullopt, m, std::nullopt};
    }
    if (type == to_string(MorphismType::Homomorphism)) {
      auto a = algebra_ref(src, base);
      auto b = algebra_ref(tgt, base);
      bool modal = j.contains("modal") && j["modal"].is_boolean() && j["modal"].get<bool>();
      Homomorphism h{a, b, std::vector<Index>(a->size()), modal};
      const auto& mj = object(field(j, "map", "morphism"), "map");
      if (mj.size() != a->size()) schema("map must cover the source carrier");
      for (auto it = mj.begin(); it != mj.end(); ++it) {
        auto x = a->find(it.key());
        if (!x) schema("map: '" + it.key() + "' is not a source carrier element");
        h.map[*x] = carrier_index(*b, it.value(), "map value");
      }
      lattice_out = a->lattice_ptr();
      return {MorphismType::Homomorphism, std::nullopt, std::nullopt, h};
    }
    schema("unknown morphism type '" + type + "'");
  }

  FormulaJob job(const Json& j, const fs::path& base) {
    FormulaJob job;
    if (j.contains("algebra")) {
      job.algebra = algebra_ref(j["algebra"], base);
      job.lattice = job.algebra->lattice_ptr();
    }
    if (j.contains("lattice")) {
      auto l = lattice_ref(j["lattice"], base);
      if (job.lattice && !same_lattice(*l, *job.lattice)) schema("formula-job: lattice and algebra disagree");
      if (!job.lattice) job.lattice = l;
    }
    if (!job.lattice) schema("formula-job: needs a lattice or an algebra");
    job.text = str(field(j, "formula", "formula-job"), "formula");
    job.formula = parse(job.text, *job.lattice);
    if (j.contains("model")) {
      if (job.algebra) schema("formula-job: give a model or an algebra, not both");
      const auto& mj = object(j["model"], "model");
      auto worlds = str_list(field(mj, "worlds", "model"), "model worlds");
      check_unique(worlds, "model worlds");
      Relation rel = mj.contains("relation") ? relation(mj["relation"], worlds, "model relation") : Relation(worlds.size());
      const auto& vj = object(field(mj, "valuation", "model"), "model valuation");
      std::set<std::string> vars;
      for (auto it = vj.begin(); it != vj.end(); ++it) {
        index_in(worlds, it.key(), "model valuation");
        for (auto v = object(it.value(), "valuation row").begin(); v != it.value().end(); ++v) vars.insert(v.key());
      }
      KripkeModel m{job.lattice, worlds, rel, {vars.begin(), vars.end()}, {}};
      m.valuation.assign(worlds.size(), std::vector<Value>(m.variables.size()));
      for (std::size_t w = 0; w < worlds.size(); ++w) {
        const auto& row = field(vj, worlds[w].c_str(), "model valuation");
        for (std::size_t v = 0; v < m.variables.size(); ++v) {
          m.valuation[w][v] = element(*job.lattice, field(row, m.variables[v].c_str(), "valuation of " + worlds[w]),
                                      "valuation value");
        }
      }
      job.model = std::move(m);
    }
    if (j.contains("world")) {
      if (!job.model) schema("formula-job: 'world' needs a model");
      job.world = index_in(job.model->worlds, str(j["world"], "world"), "world");
    }
    if (j.contains("assignment")) {
      if (job.model) schema("formula-job: 'assignment' does not apply to a model");
      auto target = job.algebra ? job.algebra : lattice_algebra(job.lattice);
      Assignment sigma;
      const auto& aj = object(j["assignment"], "assignment");
      for (auto it = aj.begin(); it != aj.end(); ++it) sigma[it.key()] = carrier_index(*target, it.value(), "assignment value");
      job.assignment = std::move(sigma);
    }
    return job;
  }

  int depth_ = 0;
};

}  // namespace

std::string_view to_string(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::Lattice: return "lattice";
    case DocumentKind::Algebra: return "algebra";
    case DocumentKind::System: return "system";
    case DocumentKind::Space: return "space";
    case DocumentKind::Morphism: return "morphism";
    case DocumentKind::FormulaJob: return "formula-job";
  }
  return "?";
}

std::string_view to_string(MorphismType type) {
  switch (type) {
    case MorphismType::SystemMap: return "system_map";
    case MorphismType::SpaceMap: return "space_map";
    case MorphismType::Homomorphism: return "homomorphism";
  }
  return "?";
}

LatticePtr builtin_lattice(std::string_view name) {
  if (name == "L2") return lattices::chain2();
  if (name == "L3") return lattices::chain3();
  if (name == "L4") return lattices::chain4();
  if (name == "diamond") return lattices::diamond();
  return nullptr;
}

namespace io {

Json read_json(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::UsageError, "cannot read '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return Json::parse(text.str());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, path.filename().string() + ": " + e.what());
  }
}

Json lattice_ref(const Lattice& l) {
  if (auto b = builtin_lattice(l.name()); b && same_lattice(*b, l)) return l.name();
  return to_json(l);
}

Json to_json(const Lattice& l) {
  Json j;
  j["kind"] = "lattice";
  j["name"] = l.name();
  j["elements"] = l.elements();
  auto leq = Json::array();
  for (auto [a, b] : l.covers()) leq.push_back({l.element_name(a), l.element_name(b)});
  j["leq"] = leq;
  return j;
}

Json to_json(const Algebra& a) {
  const auto& l = a.lattice();
  auto order = name_order(a);
  auto name = [&](Index i) { return a.element_name(i); };
  auto binary = [&](auto op) {
    auto rows = Json::array();
    for (auto x : order) {
      auto row = Json::array();
      for (auto y : order) row.push_back(name(op(x, y)));
      rows.push_back(row);
    }
    return rows;
  };
  Json j;
  j["kind"] = "algebra";
  j["lattice"] = lattice_ref(l);
  auto carrier = Json::array();
  for (auto x : order) carrier.push_back(name(x));
  j["carrier"] = carrier;
  j["meet"] = binary([&](Index x, Index y) { return a.meet(x, y); });
  j["join"] = binary([&](Index x, Index y) { return a.join(x, y); });
  j["imp"] = binary([&](Index x, Index y) { return a.imp(x, y); });
  Json t = Json::object();
  for (std::size_t r = 0; r < l.size(); ++r) {
    auto row = Json::array();
    for (auto x : order) row.push_back(name(a.truth(static_cast<Value>(r), x)));
    t[l.element_name(static_cast<Value>(r))] = row;
  }
  j["T"] = t;
  if (a.is_modal()) {
    auto row = Json::array();
    for (auto x : order) row.push_back(name(a.box(x)));
    j["box"] = row;
  }
  j["bot"] = name(a.bottom());
  j["top"] = name(a.top());
  return j;
}

Json to_json(const System& s) {
  const auto& a = *s.algebra;
  auto order = name_order(a);
  Json j;
  j["kind"] = "system";
  j["lattice"] = lattice_ref(a.lattice());
  j["algebra"] = to_json(a);
  j["points"] = s.points;
  Json sat = Json::object();
  for (std::size_t x = 0; x < s.size(); ++x) {
    Json row = Json::object();
    for (auto e : order) row[a.element_name(e)] = a.lattice().element_name(s(x, e));
    sat[s.points[x]] = row;
  }
  j["sat"] = sat;
  if (s.relation) j["relation"] = relation_json(*s.relation, s.points);
  return j;
}

Json to_json(const Space& sp) {
  Json j;
  j["kind"] = "space";
  j["lattice"] = lattice_ref(sp.lattice());
  j["carrier"] = sp.carrier;
  Json phi = Json::object();
  for (std::size_t m = 0; m < sp.family.size(); ++m) {
    auto members = Json::array();
    for (std::size_t s = 0; s < sp.size(); ++s) {
      if (sp.in_phi(m, s)) members.push_back(sp.carrier[s]);
    }
    phi[sp.family.key(m)] = members;
  }
  j["phi"] = phi;
  if (sp.relation) j["relation"] = relation_json(*sp.relation, sp.carrier);
  return j;
}

Json to_json(const FormulaJob& job) {
  const auto& l = *job.lattice;
  Json j;
  j["kind"] = "formula-job";
  j["formula"] = print(job.formula, l);
  j["lattice"] = lattice_ref(l);
  if (job.model) {
    const auto& m = *job.model;
    Json mj;
    mj["worlds"] = m.worlds;
    mj["relation"] = relation_json(m.relation, m.worlds);
    Json val = Json::object();
    for (std::size_t w = 0; w < m.worlds.size(); ++w) {
      Json row = Json::object();
      for (std::size_t v = 0; v < m.variables.size(); ++v) row[m.variables[v]] = l.element_name(m.valuation[w][v]);
      val[m.worlds[w]] = row;
    }
    mj["valuation"] = val;
    j["model"] = mj;
  }
  if (job.algebra) j["algebra"] = to_json(*job.algebra);
  if (job.world) j["world"] = job.model->worlds.at(*job.world);
  if (job.assignment) {
    auto target = job.algebra ? job.algebra : lattice_algebra(job.lattice);
    Json aj = Json::object();
    for (const auto& [v, e] : *job.assignment) aj[v] = target->element_name(e);
    j["assignment"] = aj;
  }
  return j;
}

Document from_json(const Json& json, const fs::path& base_dir) {
  Loader loader;
  return loader.document(json, base_dir, std::nullopt);
}

}  // namespace io

Document load(const fs::path& path) {
  auto j = io::read_json(path);
  return io::from_json(j, path.parent_path().empty() ? fs::path(".") : path.parent_path());
}

Document load_text(std::string_view text, const fs::path& base_dir) {
  io::Json j;
  try {
    j = io::Json::parse(text);
  } catch (const io::Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return io::from_json(j, base_dir);
}

std::string serialize(const Lattice& l) { return io::to_json(l).dump(2) + "\n"; }
std::string serialize(const Algebra& a) { return io::to_json(a).dump(2) + "\n"; }
std::string serialize(const System& s) { return io::to_json(s).dump(2) + "\n"; }
std::string serialize(const Space& s) { return io::to_json(s).dump(2) + "\n"; }
std::string serialize(const FormulaJob& j) { return io::to_json(j).dump(2) + "\n"; }

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace lvd
