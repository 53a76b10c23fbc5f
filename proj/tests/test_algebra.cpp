#include <doctest.h>

#include "fixtures.hpp"
#include "lvdual/algebra.hpp"
#include "lvdual/error.hpp"
#include "oracles.hpp"

using namespace lvd;
using fixtures::fn;

TEST_CASE("functional algebra closure sizes") {
  auto l2 = lattices::chain2();
  CHECK(functional_algebra(l2, {"p"}, {})->size() == 2);
  auto b4 = fixtures::boolean4();
  CHECK(b4->size() == 4);
  // T_0 acts as complement on a two-valued algebra.
  auto chi_p = *b4->find_function(fn(*l2, {"1", "0"}));
  auto chi_q = *b4->find_function(fn(*l2, {"0", "1"}));
  CHECK(b4->truth(l2->index_of("0"), chi_p) == chi_q);

  auto boxed = functional_algebra(l2, {"w"}, {}, Relation(1));
  CHECK(boxed->box(boxed->bottom()) == boxed->top());

  auto l3 = lattices::chain3();
  CHECK_THROWS_AS(functional_algebra(l3, fixtures::point_names(3), fixtures::all_functions(*l3, 3), std::nullopt, 20),
                  Error);
  try {
    functional_algebra(l3, fixtures::point_names(3), fixtures::all_functions(*l3, 3), std::nullopt, 20);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ClosureTooLarge);
  }
}

TEST_CASE("functional algebras pass the validators") {
  for (auto l : {lattices::chain2(), lattices::chain3(), lattices::diamond()}) {
    auto all = functional_algebra(l, fixtures::point_names(2), fixtures::all_functions(*l, 2));
    CHECK(all->size() == l->size() * l->size());
    CHECK(validate_vl(*all).passed);
    Relation rel = Relation::from_pairs(2, {{0, 1}, {1, 1}});
    auto modal = functional_algebra(l, fixtures::point_names(2), fixtures::all_functions(*l, 2), rel);
    CHECK(validate_ml(*modal).passed);
  }
  CHECK(validate_vl(*lattice_algebra(lattices::chain2())).passed);
  CHECK(validate_ml(*fixtures::boolean4(Relation::identity(2))).passed);
  // box = constant top is the box of the empty relation; the U-commutation holds trivially.
  auto const_top = fixtures::boolean4(Relation(2));
  for (Index a = 0; a < const_top->size(); ++a) CHECK(const_top->box(a) == const_top->top());
  CHECK(validate_ml(*const_top).passed);
}

TEST_CASE("table validators catch broken tables") {
  auto l2 = lattices::chain2();
  auto tables = lattice_algebra(l2)->tables();
  tables.truth[0][0] = tables.truth[0][1];  // T_0 constant
  auto broken = Algebra::from_tables(l2, tables);
  CHECK_FALSE(validate_vl(*broken).passed);

  auto b4 = fixtures::boolean4()->tables();
  b4.box = std::vector<Index>(4, 0);  // box = constant bottom breaks box 1 = 1
  auto bad_box = Algebra::from_tables(l2, b4);
  auto verdict = validate_ml(*bad_box);
  CHECK_FALSE(verdict.passed);
  REQUIRE(verdict.counterexample);
  CHECK(verdict.counterexample->front().second == "box 1 = 1");
}

TEST_CASE("is_homomorphism") {
  auto l2 = lattices::chain2();
  auto a2 = lattice_algebra(l2);
  auto id = identity_hom(a2);
  CHECK(is_homomorphism(id.map, *a2, *a2, false).passed);
  std::vector<Index> to_top(a2->size(), a2->top());
  CHECK_FALSE(is_homomorphism(to_top, *a2, *a2, false).passed);

  auto b4 = fixtures::boolean4();
  std::vector<Index> proj_p(b4->size());
  for (Index a = 0; a < b4->size(); ++a) proj_p[a] = *a2->find_function({b4->functional()->values[a][0]});
  CHECK(is_homomorphism(proj_p, *b4, *a2, false).passed);

  CHECK_THROWS_AS(is_homomorphism(id.map, *a2, *lattice_algebra(lattices::chain3()), false), Error);
}

TEST_CASE("enumerate_homs examples") {
  auto l2 = lattices::chain2();
  auto a2 = lattice_algebra(l2);
  auto homs = enumerate_homs(a2, a2, false);
  REQUIRE(homs.size() == 1);
  CHECK(homs[0].map == identity_hom(a2).map);

  auto b4 = fixtures::boolean4();
  CHECK(enumerate_homs(b4, a2, false).size() == 2);
  CHECK(oracle::homs_by_all_functions(*b4, *a2, false).size() == 2);

  auto a3 = lattice_algebra(lattices::chain3());
  auto h3 = enumerate_homs(a3, a3, false);
  REQUIRE(h3.size() == 1);
  CHECK(h3[0].map == identity_hom(a3).map);
}

TEST_CASE("enumerate_homs agrees with brute force on small carriers") {
  for (auto l : {lattices::chain2(), lattices::chain3(), lattices::diamond()}) {
    auto target = lattice_algebra(l);
    auto modal_target = with_identity_box(target);
    for (std::size_t pts = 1; pts <= 2; ++pts) {
      auto all = fixtures::all_functions(*l, pts);
      for (std::size_t g = 0; g < all.size(); ++g) {
        auto alg = functional_algebra(l, fixtures::point_names(pts), {all[g]});
        if (alg->size() > 8) continue;
        std::vector<std::vector<Index>> got;
        for (const auto& h : enumerate_homs(alg, target, false)) got.push_back(h.map);
        CHECK(got == oracle::homs_by_all_functions(*alg, *target, false));
        // algebra -> algebra as well
        std::vector<std::vector<Index>> self;
        for (const auto& h : enumerate_homs(alg, alg, false)) self.push_back(h.map);
        CHECK(self == oracle::homs_by_all_functions(*alg, *alg, false));
      }
    }
    auto rel = Relation::from_pairs(2, {{0, 1}});
    auto modal = functional_algebra(l, fixtures::point_names(2), {}, rel);
    std::vector<std::vector<Index>> got;
    for (const auto& h : enumerate_homs(modal, modal, true)) got.push_back(h.map);
    CHECK(got == oracle::homs_by_all_functions(*modal, *modal, true));
    (void)modal_target;
  }
}

TEST_CASE("full function algebras have one hom per point and homs compose") {
  for (auto l : {lattices::chain2(), lattices::chain3(), lattices::diamond()}) {
    for (std::size_t pts = 1; pts <= 3; ++pts) {
      auto alg = functional_algebra(l, fixtures::point_names(pts), fixtures::all_functions(*l, pts));
      auto homs = enumerate_homs(alg, lattice_algebra(l), false);
      CHECK(homs.size() == pts);
    }
    auto alg = functional_algebra(l, fixtures::point_names(2), fixtures::all_functions(*l, 2));
    auto endos = enumerate_homs(alg, alg, false);
    auto to_l = enumerate_homs(alg, lattice_algebra(l), false);
    for (const auto& f : endos) {
      for (const auto& g : endos) CHECK(is_homomorphism(compose(g, f).map, *alg, *alg, false).passed);
      for (const auto& g : to_l) CHECK(is_homomorphism(compose(g, f).map, *alg, *g.target, false).passed);
    }
  }
}

TEST_CASE("from_tables canonicalises carrier order") {
  auto l2 = lattices::chain2();
  AlgebraTables t;
  t.carrier = {"top", "bot"};
  t.meet = {0, 1, 1, 1};
  t.join = {0, 0, 0, 1};
  t.imp = {0, 1, 0, 0};
  t.truth = {{1, 0}, {0, 1}};  // T_0(top)=bot, T_0(bot)=top; T_1 identity
  t.bottom = 1;
  t.top = 0;
  auto a = Algebra::from_tables(l2, t);
  CHECK(a->element_name(0) == "bot");
  CHECK(a->bottom() == 0);
  CHECK(a->top() == 1);
  CHECK(validate_vl(*a).passed);
  auto homs = enumerate_homs(a, lattice_algebra(l2), false);
  CHECK(homs.size() == 1);

  t.meet.pop_back();
  CHECK_THROWS_AS(Algebra::from_tables(l2, t), Error);
}
