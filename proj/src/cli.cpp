#include "lvdual/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "io_json.hpp"
#include "lvdual/corpus.hpp"
#include "lvdual/error.hpp"
#include "lvdual/functors.hpp"
#include "lvdual/spectra.hpp"

namespace lvd {

namespace fs = std::filesystem;
using io::Json;

namespace {

struct Report {
  std::string command;
  std::vector<std::string> arguments;
  std::uint64_t digest = fnv1a({});
  std::vector<Verdict> verdicts;
  Json result = Json::object();
  std::optional<Error> error;

  void digest_bytes(std::string_view label, std::string_view bytes) {
    digest = fnv1a(label, digest);
    digest = fnv1a(std::string_view("\0", 1), digest);
    digest = fnv1a(bytes, digest);
    digest = fnv1a(std::string_view("\0", 1), digest);
  }

  void digest_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream text;
    if (in) text << in.rdbuf();
    digest_bytes(path.filename().string(), text.str());
  }

  void add(Verdict v) { verdicts.push_back(std::move(v)); }
  void add(const std::string& label, Verdict v) {
    v.check = label + ":" + v.check;
    verdicts.push_back(std::move(v));
  }
};

bool is_input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAPoset:
    case ErrorKind::NotALattice:
    case ErrorKind::NotDistributive:
    case ErrorKind::InvalidSystem:
    case ErrorKind::InvalidSpace:
    case ErrorKind::InvalidAlgebra:
    case ErrorKind::NotInCont:
    case ErrorKind::NotPrime:
    case ErrorKind::NoWitness: return false;
    default: return true;
  }
}

[[noreturn]] void usage(const std::string& msg) { throw Error(ErrorKind::UsageError, msg); }

Json verdict_json(const Verdict& v) {
  Json j;
  j["check"] = v.check;
  j["status"] = v.passed ? "pass" : "fail";
  if (v.counterexample) {
    Json w = Json::object();
    for (const auto& [k, val] : *v.counterexample) w[k] = val;
    j["counterexample"] = w;
  }
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

Document load_input(Report& r, const std::string& path) {
  r.digest_file(path);
  return load(path);
}

Document expect_kind(Document d, DocumentKind kind, const std::string& what) {
  if (d.kind != kind) usage(what + " needs a " + std::string(to_string(kind)) + " document, got " + std::string(to_string(d.kind)));
  return d;
}

Verdict validate_algebra(const Algebra& a) { return a.is_modal() ? validate_ml(a) : validate_vl(a); }

std::string presentation(const Algebra& a) { return a.functional() ? "functional" : "admissible (checked equations only)"; }

// check

void cmd_check(Report& r, const std::string& path) {
  auto d = load_input(r, path);
  r.result["kind"] = std::string(to_string(d.kind));
  switch (d.kind) {
    case DocumentKind::Lattice:
      r.add(Verdict::pass("lattice", std::to_string(d.lattice->size()) + " elements, distributive"));
      r.result["elements"] = d.lattice->elements();
      r.result["subalgebras"] = SubalgebraFamily(d.lattice).size();
      break;
    case DocumentKind::Algebra:
      r.add(validate_algebra(*d.algebra));
      r.result["size"] = d.algebra->size();
      r.result["modal"] = d.algebra->is_modal();
      r.result["presentation"] = presentation(*d.algebra);
      break;
    case DocumentKind::System:
      r.add(validate_system(*d.system));
      r.result["points"] = d.system->size();
      r.result["carrier"] = d.algebra->size();
      r.result["relational"] = d.system->is_relational();
      break;
    case DocumentKind::Space:
      r.add(validate_space(*d.space));
      r.result["points"] = d.space->size();
      r.result["relational"] = d.space->is_relational();
      break;
    case DocumentKind::Morphism: {
      const auto& m = *d.morphism;
      r.result["type"] = std::string(to_string(m.type));
      if (m.system_map) {
        r.add("source", validate_system(*m.system_map->source));
        r.add("target", validate_system(*m.system_map->target));
        r.add(is_continuous(*m.system_map));
      } else if (m.space_map) {
        r.add("source", validate_space(*m.space_map->source));
        r.add("target", validate_space(*m.space_map->target));
        r.add(is_space_morphism(*m.space_map));
      } else {
        const auto& h = *m.homomorphism;
        r.add(is_homomorphism(h.map, *h.source, *h.target, h.modal));
      }
      break;
    }
    case DocumentKind::FormulaJob: {
      const auto& job = *d.job;
      r.add(Verdict::pass("formula", print(job.formula, *job.lattice)));
      if (job.model) {
        for (const auto& v : variables(job.formula)) job.model->variable_index(v);
      }
      break;
    }
  }
}

// spec

Json hom_json(const Homomorphism& h) {
  Json j = Json::object();
  for (Index a = 0; a < h.source->size(); ++a) j[h.source->element_name(a)] = h.target->element_name(h.map[a]);
  return j;
}

void cmd_spec(Report& r, const std::string& path, const std::string& sub) {
  auto d = expect_kind(load_input(r, path), DocumentKind::Algebra, "spec");
  const auto& A = d.algebra;
  SubalgebraFamily family(d.lattice);
  std::size_t member = family.full_index();
  if (!sub.empty()) {
    auto m = family.find_key(sub);
    if (!m) usage("'" + sub + "' is not a subalgebra key of the lattice");
    member = *m;
  }
  auto valid = validate_algebra(*A);
  r.add(valid);
  if (!valid.passed) return;
  auto homs = spec(A, family, member);
  r.result["target"] = family.key(member);
  auto hj = Json::array();
  for (const auto& h : homs) hj.push_back(hom_json(h));
  r.result["homomorphisms"] = hj;

  std::vector<Verdict> parts;
  for (std::size_t i = 0; i < homs.size(); ++i) {
    auto v = is_homomorphism(homs[i].map, *homs[i].source, *homs[i].target, false);
    if (!v.passed) parts.push_back(Verdict::fail("spec.homomorphism", {{"index", std::to_string(i)}}));
  }
  r.add(combine("spec.homomorphisms", parts));
  if (member != family.full_index()) return;

  auto filters = prime_filters(A);
  auto fj = Json::array();
  for (const auto& f : filters) {
    auto names = Json::array();
    for (auto a : f.members) names.push_back(A->element_name(a));
    fj.push_back(names);
  }
  r.result["prime_filters"] = fj;
  if (filters.size() != homs.size()) {
    r.add(Verdict::fail("spec.count", {{"prime_filters", std::to_string(filters.size())},
                                       {"homomorphisms", std::to_string(homs.size())}}));
  } else {
    r.add(Verdict::pass("spec.count", std::to_string(homs.size()) + " points"));
  }
  parts.clear();
  for (std::size_t i = 0; i < filters.size() && parts.empty(); ++i) {
    if (!(hom_to_filter(filter_to_hom(filters[i])) == filters[i])) {
      parts.push_back(Verdict::fail("filter_roundtrip", {{"filter", std::to_string(i)}}));
    }
  }
  for (std::size_t i = 0; i < homs.size() && parts.empty(); ++i) {
    if (lattice_values(filter_to_hom(hom_to_filter(homs[i]))) != lattice_values(homs[i])) {
      parts.push_back(Verdict::fail("hom_roundtrip", {{"homomorphism", std::to_string(i)}}));
    }
  }
  r.add(combine("spec.bijection", parts));
}

// canonical

void cmd_canonical(Report& r, const std::string& path) {
  auto d = expect_kind(load_input(r, path), DocumentKind::Algebra, "canonical");
  if (!d.algebra->is_modal()) throw Error(ErrorKind::BoxNotAvailable, "canonical needs an algebra with a box table");
  auto valid = validate_ml(*d.algebra);
  r.add(valid);
  if (!valid.passed) return;
  auto cm = canonical_model(d.algebra);
  const auto& l = *d.lattice;
  std::vector<std::string> names;
  auto worlds = Json::object();
  for (std::size_t w = 0; w < cm.worlds.size(); ++w) {
    names.push_back("f" + std::to_string(w));
    Json row = Json::object();
    for (Index a = 0; a < d.algebra->size(); ++a) row[d.algebra->element_name(a)] = l.element_name(cm.worlds[w][a]);
    worlds[names.back()] = row;
  }
  r.result["worlds"] = worlds;
  auto rel = Json::array();
  for (auto [x, y] : cm.relation.pairs()) rel.push_back({names[x], names[y]});
  r.result["relation"] = rel;
  r.result["relation_is_identity"] = cm.relation == Relation::identity(cm.worlds.size());
  r.add(check_kripke_property(cm));
}

// functor

void cmd_functor(Report& r, const std::string& name_text, const std::string& path, const std::string& out_path) {
  auto name = parse_functor_name(name_text);
  if (!name) usage("unknown functor '" + name_text + "'");
  auto tag = functor_tag(*name);
  bool star = is_starred(*name);
  auto d = load_input(r, path);
  r.result["functor"] = std::string(to_string(*name));
  r.result["source_category"] = std::string(to_string(tag.source));
  r.result["target_category"] = std::string(to_string(tag.target));
  Json doc;
  switch (*name) {
    case FunctorName::Ext:
    case FunctorName::ExtStar:
    case FunctorName::Q:
    case FunctorName::QStar: {
      expect_kind(d, DocumentKind::System, name_text);
      if (star && !d.system->is_relational()) usage(name_text + " needs a relational system");
      auto v = validate_system(*d.system);
      r.add("input", v);
      if (!v.passed) return;
      if (*name == FunctorName::Ext || *name == FunctorName::ExtStar) {
        auto sp = star ? ext_star(d.system, false) : ext_functor(d.system, false);
        r.add("output", validate_space(*sp));
        doc = io::to_json(*sp);
      } else {
        auto a = q_functor(d.system);
        if (!star && a->is_modal()) a = a->without_box();
        r.add("output", validate_algebra(*a));
        doc = io::to_json(*a);
      }
      break;
    }
    case FunctorName::P:
    case FunctorName::PStar: {
      expect_kind(d, DocumentKind::Space, name_text);
      if (star && !d.space->is_relational()) usage(name_text + " needs a relational space");
      auto v = validate_space(*d.space);
      r.add("input", v);
      if (!v.passed) return;
      auto s = star ? p_star(d.space, false) : p_functor(d.space, false);
      r.add("output", validate_system(*s));
      doc = io::to_json(*s);
      break;
    }
    case FunctorName::R:
    case FunctorName::RStar: {
      expect_kind(d, DocumentKind::Algebra, name_text);
      if (star && !d.algebra->is_modal()) usage(name_text + " needs an algebra with a box table");
      auto a = star ? d.algebra : (d.algebra->is_modal() ? d.algebra->without_box() : d.algebra);
      auto v = validate_algebra(*a);
      r.add("input", v);
      if (!v.passed) return;
      auto s = star ? r_star(a, false) : r_functor(a, false);
      r.add("output", validate_system(*s));
      doc = io::to_json(*s);
      break;
    }
  }
  r.result["document"] = doc;
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) usage("cannot write '" + out_path + "'");
    out << doc.dump(2) << "\n";
    r.result["written"] = out_path;
  }
}

// duality

void cmd_duality(Report& r, const std::string& path, const std::string& suite) {
  auto d = load_input(r, path);
  r.result["suite"] = suite;
  if (suite == "vl" || suite == "ml") {
    bool modal = suite == "ml";
    expect_kind(d, DocumentKind::Algebra, "--suite " + suite);
    if (modal && !d.algebra->is_modal()) usage("--suite ml needs an algebra with a box table");
    auto a = modal || !d.algebra->is_modal() ? d.algebra : d.algebra->without_box();
    auto valid = validate_algebra(*a);
    r.add(valid);
    if (!valid.passed) return;
    r.result["size"] = a->size();
    r.add(verify_duality_roundtrip(a, modal));
    r.add("counit", is_algebra_iso(counit_alg(a)));
    auto s = modal ? r_star(a, false) : r_functor(a, false);
    r.result["points"] = s->size();
    r.add("unit", is_system_iso(unit_system_alg(s, modal)));
  } else if (suite == "systems") {
    expect_kind(d, DocumentKind::System, "--suite systems");
    auto valid = validate_system(*d.system);
    r.add(valid);
    if (!valid.passed) return;
    bool modal = d.system->is_relational();
    r.add("xi", is_system_iso(counit_system(d.system, modal)));
    r.add("unit", is_system_iso(unit_system_alg(d.system, modal)));
  } else if (suite == "spaces") {
    expect_kind(d, DocumentKind::Space, "--suite spaces");
    auto valid = validate_space(*d.space);
    r.add(valid);
    if (!valid.passed) return;
    r.add("eta", is_space_iso(unit_space(d.space, d.space->is_relational())));
  } else {
    usage("unknown suite '" + suite + "' (expected vl, ml, systems or spaces)");
  }
}

// adjunction

struct CorpusEntry {
  std::string file;
  Document doc;
};

void cmd_adjunction(Report& r, const std::string& pair, const std::string& dir) {
  auto adj = parse_adjunction(pair);
  if (!adj) usage("unknown adjunction '" + pair + "' (expected Ext-P, Q-R, Ext*-P*, Q*-R*)");
  if (!fs::is_directory(dir)) usage("'" + dir + "' is not a directory");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file()) files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  bool modal = is_starred(*adj);
  std::vector<CorpusEntry> spaces, systems, algebras;
  auto skipped = Json::array();
  for (const auto& f : files) {
    r.digest_file(f);
    auto doc = load(f);
    auto name = f.filename().string();
    bool keep = false;
    if (doc.kind == DocumentKind::Space && doc.space->is_relational() == modal) {
      keep = validate_space(*doc.space).passed;
      if (keep) spaces.push_back({name, doc});
    } else if (doc.kind == DocumentKind::System && doc.system->is_relational() == modal) {
      keep = validate_system(*doc.system).passed;
      if (keep) systems.push_back({name, doc});
    } else if (doc.kind == DocumentKind::Algebra && doc.algebra->is_modal() == modal) {
      keep = validate_algebra(*doc.algebra).passed;
      if (keep) algebras.push_back({name, doc});
    } else {
      continue;
    }
    if (!keep) skipped.push_back(name);
  }
  std::size_t arrows_total = 0, pairs = 0;
  bool ext = *adj == Adjunction::ExtP || *adj == Adjunction::ExtPStar;
  const auto& left = ext ? spaces : systems;
  const auto& right = ext ? systems : algebras;
  for (const auto& a : left) {
    for (const auto& b : right) {
      if (!same_lattice(*a.doc.lattice, *b.doc.lattice)) continue;
      ++pairs;
      auto arrows = ext ? ext_test_arrows(a.doc.space, b.doc.system, modal)
                        : q_test_arrows(a.doc.system, b.doc.algebra, modal);
      std::vector<Verdict> parts;
      for (const auto& arrow : arrows) {
        parts.push_back(ext ? verify_couniversal(*adj, a.doc.space, arrow) : verify_couniversal(*adj, arrow));
      }
      arrows_total += arrows.size();
      auto v = combine("couniversal", parts);
      if (v.passed) v.note = std::to_string(arrows.size()) + " test arrows";
      r.add(std::string(to_string(*adj)) + "[" + a.file + " -> " + b.file + "]", v);
    }
  }
  r.result["adjunction"] = std::string(to_string(*adj));
  r.result["pairs"] = pairs;
  r.result["arrows"] = arrows_total;
  r.result["skipped_invalid"] = skipped;
}

// eval

void cmd_eval(Report& r, const std::string& path) {
  auto d = expect_kind(load_input(r, path), DocumentKind::FormulaJob, "eval");
  const auto& job = *d.job;
  const auto& l = *job.lattice;
  r.result["formula"] = print(job.formula, l);
  if (job.model) {
    Json values = Json::object();
    for (std::size_t w = 0; w < job.model->worlds.size(); ++w) {
      if (job.world && *job.world != w) continue;
      values[job.model->worlds[w]] = l.element_name(eval_kripke(job.formula, *job.model, w));
    }
    r.result["values"] = values;
    r.add(Verdict::pass("eval"));
    return;
  }
  auto a = job.algebra ? job.algebra : lattice_algebra(job.lattice);
  if (job.assignment) {
    r.result["value"] = a->element_name(eval_algebra(job.formula, *a, *job.assignment));
    r.add(Verdict::pass("eval"));
    return;
  }
  auto v = check_validity(job.formula, *a);
  r.result["valid"] = v.passed;
  r.add(v);
}

// corpus generate

template <class T>
std::vector<T> sample(std::vector<T> items, std::size_t count, std::mt19937_64& rng) {
  if (items.size() <= count) return items;
  std::set<std::size_t> picked;
  while (picked.size() < count) picked.insert(static_cast<std::size_t>(rng() % items.size()));
  std::vector<T> out;
  for (auto i : picked) out.push_back(std::move(items[i]));
  return out;
}

void cmd_corpus_generate(Report& r, const std::string& lattice_arg, std::size_t max_points, std::uint64_t seed,
                         const std::string& out_dir, std::size_t count) {
  LatticePtr l = builtin_lattice(lattice_arg);
  if (l) {
    r.digest_bytes("lattice", lattice_arg);
  } else {
    l = expect_kind(load_input(r, lattice_arg), DocumentKind::Lattice, "--lattice").lattice;
  }
  if (max_points == 0 || max_points > 3) usage("--max-points must be 1, 2 or 3");
  std::mt19937_64 rng(seed);
  fs::create_directories(out_dir);
  auto files = Json::array();
  auto write = [&](const std::string& name, const std::string& text) {
    std::ofstream out(fs::path(out_dir) / name, std::ios::binary);
    if (!out) usage("cannot write into '" + out_dir + "'");
    out << text;
    files.push_back(name);
  };
  auto numbered = [](const char* prefix, std::size_t i) {
    std::ostringstream s;
    s << prefix << '-' << std::setw(2) << std::setfill('0') << i << ".json";
    return s.str();
  };
  write("lattice.json", serialize(*l));

  std::vector<Verdict> parts;
  auto algebras = sample(vl_corpus(l, max_points), count, rng);
  for (std::size_t i = 0; i < algebras.size(); ++i) {
    parts.push_back(validate_vl(*algebras[i]));
    write(numbered("alg", i), serialize(*algebras[i]));
  }
  r.add(combine("algebras", parts));

  parts.clear();
  auto modal = sample(ml_corpus(l, max_points), count, rng);
  for (std::size_t i = 0; i < modal.size(); ++i) {
    parts.push_back(validate_ml(*modal[i].algebra));
    write(numbered("malg", i), serialize(*modal[i].algebra));
  }
  r.add(combine("modal_algebras", parts));

  for (bool rel : {false, true}) {
    parts.clear();
    auto systems = sample(system_corpus(l, max_points, rel), count, rng);
    for (std::size_t i = 0; i < systems.size(); ++i) {
      parts.push_back(validate_system(*systems[i]));
      write(numbered(rel ? "rsys" : "sys", i), serialize(*systems[i]));
    }
    r.add(combine(rel ? "relational_systems" : "systems", parts));

    parts.clear();
    auto spaces = sample(space_corpus(l, max_points, rel), count, rng);
    for (std::size_t i = 0; i < spaces.size(); ++i) {
      parts.push_back(validate_space(*spaces[i]));
      write(numbered(rel ? "rspc" : "spc", i), serialize(*spaces[i]));
    }
    r.add(combine(rel ? "relational_spaces" : "spaces", parts));
  }

  std::vector<std::string> vars{"p", "q"};
  for (std::size_t i = 0; i < count; ++i) {
    FormulaJob job;
    job.lattice = l;
    job.model = random_model(rng, l, 1 + static_cast<std::size_t>(rng() % max_points), vars);
    job.formula = random_formula(rng, *l, vars, 4);
    job.text = print(job.formula, *l);
    write(numbered("job", i), serialize(job));
  }
  r.result["directory"] = out_dir;
  r.result["files"] = files;
}

std::string render(const Report& r, double millis) {
  Json j;
  j["tool"] = "lvdual";
  j["version"] = std::string(kToolVersion);
  j["command"] = r.command;
  j["arguments"] = r.arguments;
  std::ostringstream digest;
  digest << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << r.digest;
  j["input_digest"] = digest.str();
  auto vs = Json::array();
  for (const auto& v : r.verdicts) vs.push_back(verdict_json(v));
  j["verdicts"] = vs;
  j["result"] = r.result;
  if (r.error) {
    j["status"] = is_input_error(r.error->kind()) ? "error" : "fail";
    j["error"] = {{"kind", std::string(to_string(r.error->kind()))}, {"message", r.error->what()}};
  } else {
    j["status"] = all_passed(r.verdicts) ? "pass" : "fail";
  }
  j["timing_ms"] = std::round(millis * 1000.0) / 1000.0;
  return j.dump(2) + "\n";
}

}  // namespace

std::string strip_timing(std::string_view report) {
  auto j = Json::parse(report);
  j.erase("timing_ms");
  return j.dump(2) + "\n";
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const RunOptions& options) {
  auto start = std::chrono::steady_clock::now();
  Report report;
  report.arguments = args;

  CLI::App app{"Finite verifier for lattice-valued Stone and Jonsson-Tarski dualities", "lvdual"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  std::string file, sub, name, out_path, suite, pair, corpus_dir, lattice_arg;
  std::size_t max_points = 2, count = 6;
  std::uint64_t seed = 0;

  auto* check = app.add_subcommand("check", "Validate a document of any kind");
  check->add_option("file", file, "Input document")->required();

  auto* spec_cmd = app.add_subcommand("spec", "List Spec(A), the prime filters and their bijection");
  spec_cmd->add_option("file", file, "Algebra document")->required();
  spec_cmd->add_option("--sub", sub, "Subalgebra key of the lattice, e.g. 0|1");

  auto* canonical = app.add_subcommand("canonical", "Canonical Kripke model of a modal algebra");
  canonical->add_option("file", file, "Algebra document with a box table")->required();

  auto* functor = app.add_subcommand("functor", "Apply Ext, P, Q, R or a starred variant");
  functor->add_option("name", name, "Functor name")->required();
  functor->add_option("file", file, "Input document")->required();
  functor->add_option("--out", out_path, "Also write the resulting document here");

  auto* duality = app.add_subcommand("duality", "Roundtrip isomorphism checks");
  duality->add_option("file", file, "Input document")->required();
  duality->add_option("--suite", suite, "vl, ml, systems or spaces")->required();

  auto* adjunction = app.add_subcommand("adjunction", "Triangle and uniqueness checks over a corpus directory");
  adjunction->add_option("pair", pair, "Ext-P, Q-R, Ext*-P* or Q*-R*")->required();
  adjunction->add_option("--corpus", corpus_dir, "Directory of documents")->required();

  auto* eval = app.add_subcommand("eval", "Evaluate a formula job");
  eval->add_option("file", file, "Formula-job document")->required();

  auto* corpus = app.add_subcommand("corpus", "Corpus tools");
  auto* generate = corpus->add_subcommand("generate", "Write a seeded sample of corpus instances");
  corpus->require_subcommand(1);
  generate->add_option("--lattice", lattice_arg, "Lattice document or built-in name (L2, L3, L4, diamond)")->required();
  generate->add_option("--max-points", max_points, "Largest point count (1-3)")->required();
  generate->add_option("--seed", seed, "Random seed")->required();
  generate->add_option("--out", corpus_dir, "Output directory")->required();
  generate->add_option("--count", count, "Instances per kind")->capture_default_str();

  int code = 0;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    report.error = Error(ErrorKind::UsageError, e.what());
  }

  if (!report.error) {
    try {
      if (*check) {
        report.command = "check";
        cmd_check(report, file);
      } else if (*spec_cmd) {
        report.command = "spec";
        cmd_spec(report, file, sub);
      } else if (*canonical) {
        report.command = "canonical";
        cmd_canonical(report, file);
      } else if (*functor) {
        report.command = "functor";
        cmd_functor(report, name, file, out_path);
      } else if (*duality) {
        report.command = "duality";
        cmd_duality(report, file, suite);
      } else if (*adjunction) {
        report.command = "adjunction";
        cmd_adjunction(report, pair, corpus_dir);
      } else if (*eval) {
        report.command = "eval";
        cmd_eval(report, file);
      } else if (*generate) {
        report.command = "corpus generate";
        cmd_corpus_generate(report, lattice_arg, max_points, seed, corpus_dir, count);
      }
    } catch (const Error& e) {
      report.error = e;
    } catch (const fs::filesystem_error& e) {
      report.error = Error(ErrorKind::UsageError, e.what());
    }
  }

  if (report.error) {
    code = is_input_error(report.error->kind()) ? 2 : 1;
    if (code == 1) {
      report.add(Verdict::fail(std::string(to_string(report.error->kind())), {{"message", report.error->what()}}));
    }
  } else {
    code = all_passed(report.verdicts) ? 0 : 1;
  }

  double millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  out << render(report, millis);
  out.flush();

  const char* label = code == 0 ? "pass" : code == 1 ? "fail" : "error";
  const char* colour = code == 0 ? "\033[32m" : code == 1 ? "\033[31m" : "\033[33m";
  std::string summary = "lvdual " + (report.command.empty() ? std::string("?") : report.command) + ": " + label;
  if (report.error) summary += " (" + std::string(to_string(report.error->kind())) + ": " + report.error->what() + ")";
  if (options.color) {
    err << colour << summary << "\033[0m\n";
  } else {
    err << summary << "\n";
  }
  return code;
}

}  // namespace lvd
