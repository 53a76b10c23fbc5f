// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Usage: acceptance [--update-golden] [--only N]
// Must run from the source root so corpus/ and tests/golden/ resolve.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "fixtures.hpp"
#include "lvdual/cli.hpp"
#include "lvdual/corpus.hpp"
#include "lvdual/functors.hpp"
#include "lvdual/logic.hpp"
#include "lvdual/spectra.hpp"
#include "oracles.hpp"

using namespace lvd;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string failure;

  void fail(const std::string& why) {
    if (pass) failure = why;
    pass = false;
  }
};

std::vector<LatticePtr> corpus_lattices() { return {lattices::chain2(), lattices::chain3(), lattices::diamond()}; }

std::string describe(const Verdict& v) {
  std::string out = v.check;
  if (v.counterexample) {
    for (const auto& [k, val] : *v.counterexample) out += " " + k + "=" + val;
  }
  return out;
}

/// Ordered pairs (i, j) drawn without repetition from n x n.
std::vector<std::pair<std::size_t, std::size_t>> sample_pairs(std::size_t n, std::size_t count, std::mt19937_64& rng) {
  std::set<std::pair<std::size_t, std::size_t>> picked;
  if (n * n <= count) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) picked.insert({i, j});
    }
  } else {
    while (picked.size() < count) picked.insert({rng() % n, rng() % n});
  }
  return {picked.begin(), picked.end()};
}

std::string num(std::size_t n) { return std::to_string(n); }

// 1

Outcome vl_duality() {
  Outcome o;
  std::size_t count = 0;
  for (const auto& l : corpus_lattices()) {
    for (const auto& a : vl_corpus(l, 3)) {
      ++count;
      if (auto v = verify_duality_roundtrip(a, false); !v.passed) o.fail(l->name() + " " + describe(v));
    }
  }
  o.detail = num(count) + " algebras";
  return o;
}

// 2

Outcome system_space_equivalence() {
  Outcome o;
  std::mt19937_64 rng(2);
  std::size_t objects = 0, morphisms = 0;
  for (const auto& l : corpus_lattices()) {
    for (bool modal : {false, true}) {
      auto systems = system_corpus(l, 3, modal);
      std::vector<SystemMap> smaps;
      for (auto [i, j] : sample_pairs(systems.size(), 60, rng)) {
        for (auto& m : enumerate_system_maps(systems[i], systems[j])) smaps.push_back(std::move(m));
      }
      auto v = verify_natural_iso(modal ? Transformation::XiStar : Transformation::Xi, systems, smaps);
      if (!v.passed) o.fail(l->name() + " " + describe(v));

      auto spaces = space_corpus(l, 3, modal);
      std::vector<SpaceMap> pmaps;
      for (auto [i, j] : sample_pairs(spaces.size(), 60, rng)) {
        for (auto& m : enumerate_space_maps(spaces[i], spaces[j])) pmaps.push_back(std::move(m));
      }
      auto w = verify_natural_iso(modal ? Transformation::EtaStar : Transformation::Eta, spaces, pmaps);
      if (!w.passed) o.fail(l->name() + " " + describe(w));
      objects += systems.size() + spaces.size();
      morphisms += smaps.size() + pmaps.size();
    }
  }
  o.detail = num(objects) + " systems/spaces, " + num(morphisms) + " morphisms";
  return o;
}

// 3

Outcome ml_duality() {
  Outcome o;
  std::size_t count = 0;
  for (const auto& l : corpus_lattices()) {
    for (const auto& inst : ml_corpus(l, 3)) {
      ++count;
      if (auto v = verify_duality_roundtrip(inst.algebra, true); !v.passed) o.fail(l->name() + " " + describe(v));
    }
  }
  o.detail = num(count) + " modal algebras";
  return o;
}

// 4

Outcome canonical_property() {
  Outcome o;
  std::size_t count = 0;
  for (const auto& l : corpus_lattices()) {
    for (const auto& inst : ml_corpus(l, 3)) {
      ++count;
      auto cm = canonical_model(inst.algebra);
      if (auto v = check_kripke_property(cm); !v.passed) o.fail(l->name() + " " + describe(v));
      // independent restatement: f(box a) is the meet of g(a) over f R g
      const auto& A = *inst.algebra;
      for (std::size_t f = 0; f < cm.worlds.size(); ++f) {
        for (Index a = 0; a < A.size(); ++a) {
          Value m = l->top();
          for (std::size_t g = 0; g < cm.worlds.size(); ++g) {
            if (cm.relation.holds(f, g)) m = l->meet(m, cm.worlds[g][a]);
          }
          if (cm.worlds[f][A.box(a)] != m) o.fail(l->name() + " world " + num(f) + " element " + A.element_name(a));
        }
      }
    }
  }
  o.detail = num(count) + " modal algebras";
  return o;
}

// 5, 6 and 8 run over the VL corpus: every modal corpus algebra has the same
// carrier and non-modal operations as some VL corpus algebra.

Outcome filter_hom_bijection() {
  Outcome o;
  std::size_t count = 0;
  for (const auto& l : corpus_lattices()) {
    for (const auto& a : vl_corpus(l, 3)) {
      ++count;
      auto filters = prime_filters(a);
      auto homs = spec(a);
      if (filters.size() != homs.size()) o.fail(l->name() + " count mismatch on " + num(a->size()) + "-element algebra");
      for (const auto& p : filters) {
        if (!(hom_to_filter(filter_to_hom(p)) == p)) o.fail(l->name() + " filter roundtrip");
      }
      for (const auto& h : homs) {
        if (lattice_values(filter_to_hom(hom_to_filter(h))) != lattice_values(h)) o.fail(l->name() + " hom roundtrip");
      }
    }
  }
  o.detail = num(count) + " algebras";
  return o;
}

Outcome separation() {
  Outcome o;
  std::size_t pairs = 0;
  for (const auto& l : corpus_lattices()) {
    for (const auto& a : vl_corpus(l, 3)) {
      for (Index x = 0; x < a->size(); ++x) {
        for (Index y = 0; y < a->size(); ++y) {
          if (x == y) continue;
          ++pairs;
          try {
            auto w = separating_witness(a, x, y);
            if (!w.filter.contains(a->truth(w.r, x)) || w.filter.contains(a->truth(w.r, y))) {
              o.fail(l->name() + " witness does not separate");
            }
          } catch (const std::exception& e) {
            o.fail(l->name() + " " + e.what());
          }
        }
      }
    }
  }
  o.detail = num(pairs) + " ordered pairs";
  return o;
}

// 7

Outcome adjunctions() {
  Outcome o;
  std::mt19937_64 rng(7);
  std::size_t arrows = 0;
  auto check = [&](const Verdict& v, const std::string& where) {
    ++arrows;
    if (!v.passed) o.fail(where + " " + describe(v));
  };
  for (const auto& l : corpus_lattices()) {
    for (bool modal : {false, true}) {
      auto ext_adj = modal ? Adjunction::ExtPStar : Adjunction::ExtP;
      auto q_adj = modal ? Adjunction::QRStar : Adjunction::QR;
      for (std::size_t points : {2u, 3u}) {
        auto systems = system_corpus(l, points, modal);
        auto spaces = space_corpus(l, points, modal);
        std::vector<AlgebraPtr> algebras;
        if (modal) {
          for (const auto& inst : ml_corpus(l, points)) algebras.push_back(inst.algebra);
        } else {
          algebras = vl_corpus(l, points);
        }
        // exhaustive on the 2-point corpus, sampled on the 3-point one
        std::size_t budget = points == 2 ? 400 : 40;
        for (auto [i, j] : sample_pairs(std::max(spaces.size(), systems.size()), budget, rng)) {
          if (i >= spaces.size() || j >= systems.size()) continue;
          for (const auto& arrow : ext_test_arrows(spaces[i], systems[j], modal)) {
            check(verify_couniversal(ext_adj, spaces[i], arrow), l->name() + " Ext-P");
          }
        }
        for (auto [i, j] : sample_pairs(std::max(systems.size(), algebras.size()), budget, rng)) {
          if (i >= systems.size() || j >= algebras.size()) continue;
          for (const auto& arrow : q_test_arrows(systems[i], algebras[j], modal)) {
            check(verify_couniversal(q_adj, arrow), l->name() + " Q-R");
          }
        }
      }
    }
  }
  if (arrows == 0) o.fail("no test arrows generated");
  o.detail = num(arrows) + " test arrows";
  return o;
}

// 8

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t instances = 0;
  for (const auto& l : {lattices::chain2(), lattices::chain3(), lattices::chain4(), lattices::diamond()}) {
    auto fam = subalgebras(l);
    auto expected = oracle::subalgebras_by_subsets(*l);
    std::set<std::vector<Value>> got(fam.members().begin(), fam.members().end());
    if (got != std::set<std::vector<Value>>(expected.begin(), expected.end())) o.fail(l->name() + " subalgebras");
    ++instances;
  }
  for (const auto& l : corpus_lattices()) {
    std::vector<std::pair<AlgebraPtr, bool>> small;
    for (const auto& a : vl_corpus(l, 3)) {
      if (a->size() <= 8) small.push_back({a, false});
    }
    for (const auto& inst : ml_corpus(l, 3)) {
      if (inst.algebra->size() <= 8) small.push_back({inst.algebra, true});
    }
    auto target = lattice_algebra(l);
    auto target_box = with_identity_box(target);
    for (const auto& [a, modal] : small) {
      ++instances;
      auto filters = prime_filters(a);
      std::vector<std::vector<Index>> members;
      for (const auto& f : filters) members.push_back(f.members);
      auto expected = oracle::prime_filters_by_subsets(*a);
      std::sort(members.begin(), members.end());
      std::sort(expected.begin(), expected.end());
      if (members != expected) o.fail(l->name() + " prime filters");

      auto t = modal ? target_box : target;
      std::vector<std::vector<Index>> homs;
      for (const auto& h : enumerate_homs(a, t, modal)) homs.push_back(h.map);
      if (homs != oracle::homs_by_all_functions(*a, *t, modal)) o.fail(l->name() + " homs into the lattice");
    }
    // algebra-to-algebra homs where brute force stays small: every VL pair,
    // a seeded sample of modal pairs
    auto compare = [&](const AlgebraPtr& a, const AlgebraPtr& b, bool modal) {
      if (std::pow(static_cast<double>(b->size()), static_cast<double>(a->size())) > 4096) return;
      ++instances;
      std::vector<std::vector<Index>> homs;
      for (const auto& h : enumerate_homs(a, b, modal)) homs.push_back(h.map);
      if (homs != oracle::homs_by_all_functions(*a, *b, modal)) o.fail(l->name() + " homs between corpus algebras");
    };
    std::vector<AlgebraPtr> vl, ml;
    for (const auto& [a, modal] : small) (modal ? ml : vl).push_back(a);
    for (const auto& a : vl) {
      for (const auto& b : vl) compare(a, b, false);
    }
    std::mt19937_64 rng(8);
    for (auto [i, j] : sample_pairs(ml.size(), 3000, rng)) compare(ml[i], ml[j], true);
  }
  o.detail = num(instances) + " instances";
  return o;
}

// 9

Outcome logic_coincidence() {
  Outcome o;
  std::mt19937_64 rng(9);
  std::size_t formulas = 0, models = 0;
  const std::vector<std::string> vars{"p", "q", "r"};
  for (const auto& l : corpus_lattices()) {
    for (std::size_t k = 0; k < 4; ++k) {
      auto model = random_model(rng, l, 1 + k % 3, vars);
      ++models;
      // the relational system of the full function algebra, with sat(w, f) = f(w)
      auto full = functional_algebra(l, model.worlds, fixtures::all_functions(*l, model.worlds.size()), model.relation);
      auto system = function_system(full, model.relation);
      Assignment sigma;
      for (std::size_t v = 0; v < vars.size(); ++v) {
        Function f(model.worlds.size());
        for (std::size_t w = 0; w < f.size(); ++w) f[w] = model.valuation[w][v];
        sigma[vars[v]] = *full->find_function(f);
      }
      for (int i = 0; i < 50; ++i) {
        auto phi = random_formula(rng, *l, vars, 4);
        ++formulas;
        auto a = eval_algebra(phi, *full, sigma);
        for (std::size_t w = 0; w < model.worlds.size(); ++w) {
          if (eval_kripke(phi, model, w) != (*system)(w, a)) o.fail(l->name() + " " + print(phi, *l));
        }
      }
    }
  }
  if (formulas < 500 || models < 10) o.fail("corpus too small");
  o.detail = num(formulas) + " formulas over " + num(models) + " models";
  return o;
}

// 10

Outcome cli_determinism(bool update) {
  Outcome o;
  const fs::path golden = "tests/golden";
  std::ifstream manifest(golden / "commands.json");
  if (!manifest) {
    o.fail("tests/golden/commands.json not found (run from the source root)");
    return o;
  }
  auto commands = nlohmann::json::parse(manifest);
  std::size_t count = 0;
  for (const auto& c : commands) {
    auto name = c["name"].get<std::string>();
    auto args = c["args"].get<std::vector<std::string>>();
    std::string reports[2];
    int codes[2];
    for (int run = 0; run < 2; ++run) {
      std::ostringstream out, err;
      codes[run] = run_command(args, out, err);
      reports[run] = strip_timing(out.str());
    }
    ++count;
    if (reports[0] != reports[1] || codes[0] != codes[1]) o.fail(name + " differs between runs");
    if (codes[0] != c["exit"].get<int>()) o.fail(name + " exit " + std::to_string(codes[0]));
    auto path = golden / (name + ".json");
    if (update) {
      std::ofstream(path, std::ios::binary) << reports[0];
      continue;
    }
    std::ifstream in(path, std::ios::binary);
    std::ostringstream expected;
    expected << in.rdbuf();
    if (!in || expected.str() != reports[0]) o.fail(name + " does not match " + path.string());
  }
  // the shipped sample corpus is regenerated byte for byte from its seed
  auto dir = fs::temp_directory_path() / "lvdual-acceptance-corpus";
  fs::remove_all(dir);
  std::ostringstream out, err;
  run_command({"corpus", "generate", "--lattice", "L3", "--max-points", "2", "--seed", "7", "--count", "3", "--out",
               dir.string()},
              out, err);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator("corpus/l3_sample")) {
    ++files;
    std::ifstream a(e.path(), std::ios::binary), b(dir / e.path().filename(), std::ios::binary);
    std::ostringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    if (!b || sa.str() != sb.str()) o.fail("regenerated " + e.path().filename().string() + " differs");
  }
  fs::remove_all(dir);
  o.detail = num(count) + " commands, " + num(files) + " generated files" + (update ? " (golden files rewritten)" : "");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  bool update = false;
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--update-golden") {
      update = true;
    } else if (arg == "--only" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--update-golden] [--only N]\n";
      return 2;
    }
  }

  struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0 = none
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {1, "VL duality roundtrip", 60, vl_duality},
      {2, "system-space equivalence", 60, system_space_equivalence},
      {3, "ML duality roundtrip", 120, ml_duality},
      {4, "canonical model property", 0, canonical_property},
      {5, "prime filter / hom bijection", 0, filter_hom_bijection},
      {6, "separation", 0, separation},
      {7, "adjunction triangles and uniqueness", 0, adjunctions},
      {8, "oracle equivalence", 0, oracle_equivalence},
      {9, "logic coincidence", 0, logic_coincidence},
      {10, "CLI determinism", 0, [update] { return cli_determinism(update); }},
  };

  bool all = true;
  for (const auto& c : criteria) {
    if (only && c.id != only) continue;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs > c.limit_s) o.fail("over the " + std::to_string(static_cast<int>(c.limit_s)) + " s limit");
    all = all && o.pass;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.name << "  (" << o.detail
              << ", " << timing << ")";
    if (!o.pass) std::cout << "  first failure: " << o.failure;
    std::cout << std::endl;
  }
  return all ? 0 : 1;
}
