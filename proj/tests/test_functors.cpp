#include <doctest.h>

#include "fixtures.hpp"
#include "lvdual/corpus.hpp"
#include "lvdual/error.hpp"
#include "lvdual/functors.hpp"
#include "lvdual/spectra.hpp"

using namespace lvd;
using fixtures::fn;

namespace {

SystemPtr one_point(const LatticePtr& l) {
  auto a = lattice_algebra(l);
  std::vector<Value> sat;
  for (Index i = 0; i < a->size(); ++i) sat.push_back(a->functional()->values[i][0]);
  return make_system({"x"}, a, sat);
}

SystemPtr one_world(bool reflexive) {
  auto l = lattices::chain2();
  auto rel = reflexive ? Relation::identity(1) : Relation(1);
  return function_system(functional_algebra(l, {"w"}, {}, rel), rel);
}

std::vector<Value> sat_row(const System& s, std::size_t x) {
  std::vector<Value> out;
  for (Index a = 0; a < s.algebra->size(); ++a) out.push_back(s(x, a));
  return out;
}

std::vector<LatticePtr> small_lattices() { return {lattices::chain2(), lattices::chain3(), lattices::diamond()}; }

}  // namespace

TEST_CASE("functor tags") {
  CHECK(functor_tag(FunctorName::Q).target == Category::VAop);
  CHECK(functor_tag(FunctorName::RStar).source == Category::MAop);
  CHECK(functor_tag(FunctorName::ExtStar).target == Category::RS);
  CHECK(to_string(functor_tag(FunctorName::P).source) == "BS");
  for (auto n : {FunctorName::Ext, FunctorName::P, FunctorName::Q, FunctorName::R, FunctorName::ExtStar,
                 FunctorName::PStar, FunctorName::QStar, FunctorName::RStar}) {
    CHECK(parse_functor_name(to_string(n)) == n);
  }
  CHECK_FALSE(parse_functor_name("Z"));
  CHECK(parse_adjunction("Q*-R*") == Adjunction::QRStar);
  CHECK(parse_transformation("eta*") == Transformation::EtaStar);
}

TEST_CASE("ext_functor examples") {
  auto l2 = lattices::chain2();
  auto sp = ext_functor(one_point(l2));
  CHECK(sp->carrier == std::vector<std::string>{"x"});
  CHECK(sp->phi == std::vector<std::vector<bool>>{{true}});

  auto fs = function_system(fixtures::boolean4());
  auto e = ext_functor(fs);
  CHECK(e->phi[e->family.full_index()] == std::vector<bool>{true, true});
  CHECK(validate_space(*e).passed);

  auto w = ext_star(one_world(true));
  CHECK(*w->relation == Relation::identity(1));
  CHECK(*ext_star(one_world(false))->relation == Relation(1));

  auto broken = make_system({"x"}, lattice_algebra(l2), {0, 0});
  CHECK_THROWS_AS(ext_functor(broken), Error);
  CHECK_THROWS_AS(ext_star(fs), Error);
}

TEST_CASE("ext_star: pointwise and quantified relations agree, and match R0") {
  for (auto l : small_lattices()) {
    for (const auto& s : system_corpus(l, 2, true)) {
      auto e = ext_star(s);
      CHECK(*e->relation == ext_relation_quantified(*s));
      CHECK(validate_space(*e).passed);
    }
  }
}

TEST_CASE("p_functor examples") {
  auto l2 = lattices::chain2();
  auto one = make_space(l2, {"s"}, {{true}});
  auto ps = p_functor(one);
  CHECK(ps->algebra->size() == 2);
  for (Index v = 0; v < 2; ++v) CHECK((*ps)(0, v) == ps->algebra->functional()->values[v][0]);

  auto full = make_space(l2, {"p", "q"}, {{true, true}});
  auto p2 = p_functor(full);
  CHECK(p2->algebra->size() == 4);
  CHECK(validate_system(*p2).passed);

  auto rel = make_space(l2, {"p", "q"}, {{true, true}}, Relation::from_pairs(2, {{0, 1}}));
  auto pr = p_star(rel);
  auto chi_q = *pr->algebra->find_function(fn(*l2, {"0", "1"}));
  CHECK((*pr)(0, pr->algebra->box(chi_q)) == l2->top());
  CHECK(validate_system(*pr).passed);

  auto bad = make_space(l2, {"p"}, {{false}});
  CHECK_THROWS_AS(p_functor(bad), Error);
}

TEST_CASE("r_functor examples") {
  auto l2 = lattices::chain2();
  auto r1 = r_functor(lattice_algebra(l2));
  CHECK(r1->size() == 1);
  for (Index a = 0; a < r1->algebra->size(); ++a) CHECK((*r1)(0, a) == r1->algebra->functional()->values[a][0]);

  auto r2 = r_functor(fixtures::boolean4());
  CHECK(r2->size() == 2);
  CHECK(validate_system(*r2).passed);

  auto rs = r_star(fixtures::boolean4(Relation::identity(2)));
  CHECK(*rs->relation == Relation::identity(2));
  CHECK(validate_system(*rs).passed);
  CHECK(q_functor(rs) == rs->algebra);
  CHECK_THROWS_AS(r_star(fixtures::boolean4()), Error);
}

TEST_CASE("counit and unit components") {
  auto l2 = lattices::chain2();
  auto fs = function_system(fixtures::boolean4());
  auto xi = counit_system(fs, false);
  CHECK(xi.point_map == std::vector<std::size_t>{0, 1});
  for (Index a = 0; a < fs->algebra->size(); ++a) {
    CHECK(xi.source->algebra->functional()->values[xi.algebra_map[a]] == extent(*fs, a));
  }
  CHECK(is_system_iso(xi).passed);

  auto one = counit_system(one_point(l2), false);
  CHECK(is_system_iso(one).passed);

  auto l3 = lattices::chain3();
  auto sp = space_from_minimal(l3, {"p", "q"}, {0, 1});
  auto eta = unit_space(sp, false);
  CHECK(eta.map == std::vector<std::size_t>{0, 1});
  CHECK(is_space_morphism(eta).passed);
  CHECK(eta.target->phi == sp->phi);

  auto sys_unit = unit_system_alg(fs, false);
  CHECK(sys_unit.algebra_map == identity_hom(fs->algebra).map);
  for (std::size_t x = 0; x < fs->size(); ++x) {
    CHECK(sat_row(*sys_unit.target, sys_unit.point_map[x]) == sat_row(*fs, x));
  }
  CHECK(is_system_iso(sys_unit).passed);
  CHECK(counit_alg(fs->algebra).map == identity_hom(fs->algebra).map);

  auto single = unit_system_alg(one_point(l2), false);
  CHECK(single.point_map == std::vector<std::size_t>{0});
}

TEST_CASE("arrows: functoriality on identities and composites") {
  for (auto l : small_lattices()) {
    auto spaces = space_corpus(l, 2, true);
    std::size_t checked = 0;
    for (std::size_t i = 0; i < spaces.size() && checked < 200; i += 7) {
      auto maps = enumerate_space_maps(spaces[i], spaces[i]);
      CHECK(p_arrow(identity_map(spaces[i]), true) == identity_map(p_star(spaces[i])));
      for (const auto& f : maps) {
        for (const auto& g : maps) {
          CHECK(p_arrow(compose(g, f), true) == compose(p_arrow(g, true), p_arrow(f, true)));
          ++checked;
        }
      }
    }
    auto systems = system_corpus(l, 2, false);
    for (const auto& s1 : systems) {
      for (const auto& s2 : systems) {
        for (const auto& m : enumerate_system_maps(s1, s2)) {
          CHECK(is_space_morphism(ext_arrow(m, false)).passed);
          auto h = q_arrow(m);
          CHECK(r_arrow(h, false).algebra_map == m.algebra_map);
          CHECK(is_continuous(r_arrow(h, false)).passed);
        }
      }
    }
    CHECK(ext_arrow(identity_map(systems.back()), false) == identity_map(ext_functor(systems.back())));
  }
}

TEST_CASE("space morphisms are exactly the maps whose lifted pair is continuous") {
  for (auto l : small_lattices()) {
    auto spaces = space_corpus(l, 2, true);
    for (std::size_t i = 0; i < spaces.size(); i += 5) {
      for (std::size_t j = 0; j < spaces.size(); j += 11) {
        const auto& a = spaces[i];
        const auto& b = spaces[j];
        std::vector<std::size_t> digits(a->size(), 0);
        while (true) {
          SpaceMap f{a, b, digits};
          bool lifted_ok = false;
          try {
            lifted_ok = is_continuous(p_arrow(f, true)).passed;
          } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::PreconditionViolation);
          }
          CHECK(is_space_morphism(f).passed == lifted_ok);
          std::size_t k = digits.size();
          while (k > 0 && ++digits[k - 1] == b->size()) digits[--k] = 0;
          if (k == 0) break;
        }
      }
    }
  }
}

TEST_CASE("verify_couniversal: Ext ⊣ P and Ext* ⊣ P*") {
  auto l2 = lattices::chain2();
  auto one_sp = make_space(l2, {"s"}, {{true}});
  auto sys = one_point(l2);
  auto arrows = ext_test_arrows(one_sp, sys, false);
  REQUIRE(arrows.size() == 1);
  auto v = verify_couniversal(Adjunction::ExtP, one_sp, arrows[0]);
  CHECK(v.passed);
  CHECK(v.note == "1 factorization(s) among 1 candidate morphisms");

  for (auto l : small_lattices()) {
    auto spaces = space_corpus(l, 2, false);
    auto systems = system_corpus(l, 2, false);
    for (const auto& sp : spaces) {
      for (const auto& s : systems) {
        for (const auto& arrow : ext_test_arrows(sp, s, false)) {
          CHECK(verify_couniversal(Adjunction::ExtP, sp, arrow).passed);
        }
      }
    }
    auto rspaces = space_corpus(l, 2, true);
    auto rsystems = system_corpus(l, 2, true);
    for (std::size_t i = 0; i < rspaces.size(); i += 9) {
      for (std::size_t j = 0; j < rsystems.size(); j += 13) {
        for (const auto& arrow : ext_test_arrows(rspaces[i], rsystems[j], true)) {
          CHECK(verify_couniversal(Adjunction::ExtPStar, rspaces[i], arrow).passed);
        }
      }
    }
  }
  CHECK_THROWS_AS(verify_couniversal(Adjunction::ExtP, make_space(l2, {"a", "b"}, {{true, true}}), arrows[0]),
                  Error);
}

TEST_CASE("verify_couniversal: triangle failure is reported") {
  auto l2 = lattices::chain2();
  auto sp = make_space(l2, {"p", "q"}, {{true, true}});
  auto s = function_system(fixtures::boolean4());
  auto arrows = ext_test_arrows(sp, s, false);
  REQUIRE_FALSE(arrows.empty());
  auto tampered = arrows[0];
  std::swap(tampered.algebra_map[1], tampered.algebra_map[2]);
  auto v = verify_couniversal(Adjunction::ExtP, sp, tampered);
  CHECK_FALSE(v.passed);
}

TEST_CASE("verify_couniversal: Q ⊣ R and Q* ⊣ R*") {
  for (auto l : small_lattices()) {
    auto systems = system_corpus(l, 2, false);
    auto algebras = vl_corpus(l, 2);
    for (const auto& s : systems) {
      for (const auto& b : algebras) {
        for (const auto& arrow : q_test_arrows(s, b, false)) {
          auto v = verify_couniversal(Adjunction::QR, arrow);
          CHECK(v.passed);
        }
      }
    }
    auto rsystems = system_corpus(l, 2, true);
    auto ml = ml_corpus(l, 2);
    for (std::size_t i = 0; i < rsystems.size(); i += 11) {
      for (std::size_t j = 0; j < ml.size(); j += 17) {
        for (const auto& arrow : q_test_arrows(rsystems[i], ml[j].algebra, true)) {
          CHECK(verify_couniversal(Adjunction::QRStar, arrow).passed);
        }
      }
    }
  }
}

TEST_CASE("verify_natural_iso examples") {
  auto l2 = lattices::chain2();
  auto one = one_point(l2);
  CHECK(verify_natural_iso(Transformation::Xi, std::vector<SystemPtr>{one}, std::vector<SystemMap>{}).passed);

  auto rsp = make_space(l2, {"p", "q"}, {{true, true}}, Relation::identity(2));
  auto v = verify_natural_iso(Transformation::EtaStar, std::vector<SpacePtr>{rsp},
                              enumerate_space_maps(rsp, rsp));
  CHECK(v.passed);

  auto b4 = fixtures::boolean4();
  std::vector<Value> sat;
  for (Index a = 0; a < b4->size(); ++a) sat.push_back(b4->functional()->values[a][0]);
  auto corrupted = make_system({"p"}, b4, sat);
  auto bad = verify_natural_iso(Transformation::Xi, std::vector<SystemPtr>{corrupted}, std::vector<SystemMap>{});
  CHECK_FALSE(bad.passed);
  REQUIRE(bad.counterexample);
  bool mentions = false;
  for (const auto& [k, val] : *bad.counterexample) mentions = mentions || val == "algebra_bijective";
  CHECK(mentions);

  CHECK_THROWS_AS(verify_natural_iso(Transformation::Eta, std::vector<SystemPtr>{one}, std::vector<SystemMap>{}),
                  Error);
}

TEST_CASE("natural isomorphisms over the two-point corpus") {
  for (auto l : small_lattices()) {
    auto systems = system_corpus(l, 2, false);
    std::vector<SystemMap> maps;
    for (const auto& a : systems) {
      for (const auto& b : systems) {
        for (auto& m : enumerate_system_maps(a, b)) maps.push_back(std::move(m));
      }
    }
    CHECK(verify_natural_iso(Transformation::Xi, systems, maps).passed);
    CHECK(verify_natural_iso(Transformation::UnitAlg, systems, maps).passed);

    auto spaces = space_corpus(l, 2, false);
    std::vector<SpaceMap> smaps;
    for (const auto& a : spaces) {
      for (const auto& b : spaces) {
        for (auto& f : enumerate_space_maps(a, b)) smaps.push_back(std::move(f));
      }
    }
    CHECK(verify_natural_iso(Transformation::Eta, spaces, smaps).passed);

    auto algebras = vl_corpus(l, 2);
    std::vector<Homomorphism> homs;
    for (const auto& a : algebras) {
      for (const auto& b : algebras) {
        for (auto& h : enumerate_homs(a, b, false)) homs.push_back(std::move(h));
      }
    }
    CHECK(verify_natural_iso(Transformation::CounitAlg, algebras, homs).passed);
  }
}

TEST_CASE("duality roundtrip and canonical relation coherence") {
  for (auto l : small_lattices()) {
    for (const auto& a : vl_corpus(l, 2)) CHECK(verify_duality_roundtrip(a, false).passed);
    for (const auto& inst : ml_corpus(l, 2)) {
      CHECK(verify_duality_roundtrip(inst.algebra, true).passed);
      auto model = canonical_model(inst.algebra);
      CHECK(*ext_star(r_star(inst.algebra))->relation == model.relation);
    }
  }
}
