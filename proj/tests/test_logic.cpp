#include <doctest.h>

#include "fixtures.hpp"
#include "lvdual/corpus.hpp"
#include "lvdual/error.hpp"
#include "lvdual/logic.hpp"
#include "lvdual/spectra.hpp"

using namespace lvd;

namespace {

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::UsageError;
}

KripkeModel one_world(const LatticePtr& l, bool reflexive, const char* p) {
  KripkeModel m{l, {"w"}, Relation(1), {"p"}, {{l->index_of(p)}}};
  m.relation.set(0, 0, reflexive);
  return m;
}

}  // namespace

TEST_CASE("parse precedence and associativity") {
  auto l3 = lattices::chain3();
  auto m = l3->index_of("m");
  CHECK(equal(parse("T[m] p -> box q", *l3), implies(truth(m, var("p")), box(var("q")))));
  CHECK(equal(parse("p & q | r", *l3), disj(conj(var("p"), var("q")), var("r"))));
  CHECK(equal(parse("p -> q -> r", *l3), implies(var("p"), implies(var("q"), var("r")))));
  CHECK(equal(parse("p & q & r", *l3), conj(conj(var("p"), var("q")), var("r"))));
  CHECK(equal(parse("box p & q", *l3), conj(box(var("p")), var("q"))));
  CHECK(equal(parse("U[ m ](const(1))", *l3), up(m, constant(l3->top()))));
  CHECK(equal(parse("T", *l3), var("T")));
}

TEST_CASE("parse errors") {
  auto l3 = lattices::chain3();
  CHECK(kind_of([&] { parse("T[z] p", *l3); }) == ErrorKind::UnknownLatticeElement);
  CHECK(kind_of([&] { parse("const(z)", *l3); }) == ErrorKind::UnknownLatticeElement);
  try {
    parse("p & ", *l3);
    FAIL("accepted");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 4);
  }
  try {
    parse("(p | q", *l3);
    FAIL("accepted");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 6);
  }
  CHECK(kind_of([&] { parse("p q", *l3); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([&] { parse("", *l3); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([&] { parse("const p", *l3); }) == ErrorKind::SyntaxError);
}

TEST_CASE("print then parse is the identity on random formulas") {
  std::mt19937_64 rng(7);
  for (const auto& l : {lattices::chain2(), lattices::chain3(), lattices::diamond()}) {
    for (int i = 0; i < 300; ++i) {
      auto f = random_formula(rng, *l, {"p", "q", "r"}, 4);
      CHECK(depth(f) <= 4);
      auto text = print(f, *l);
      CAPTURE(text);
      CHECK(equal(parse(text, *l), f));
      CHECK(print(parse(text, *l), *l) == text);
    }
  }
}

TEST_CASE("variables and box usage") {
  auto l2 = lattices::chain2();
  auto f = parse("q -> box (p & q)", *l2);
  CHECK(variables(f) == std::vector<std::string>{"p", "q"});
  CHECK(uses_box(f));
  CHECK_FALSE(uses_box(parse("T[1] p", *l2)));
}

TEST_CASE("eval_kripke examples") {
  auto l3 = lattices::chain3();
  auto bp = parse("box p", *l3);
  CHECK(eval_kripke(bp, one_world(l3, true, "m"), 0) == l3->index_of("m"));
  CHECK(eval_kripke(bp, one_world(l3, false, "m"), 0) == l3->top());

  auto l2 = lattices::chain2();
  KripkeModel two{l2, {"w0", "w1"}, Relation(2), {"p"}, {{l2->top()}, {l2->bottom()}}};
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t y = 0; y < 2; ++y) two.relation.set(x, y, true);
  }
  for (std::size_t w = 0; w < 2; ++w) {
    CHECK(eval_kripke(parse("box p", *l2), two, w) == l2->bottom());
    CHECK(eval_kripke(parse("T[0] box p", *l2), two, w) == l2->top());
  }
  CHECK(kind_of([&] { eval_kripke(parse("q", *l2), two, 0); }) == ErrorKind::UndeclaredVariable);
}

TEST_CASE("eval_algebra examples") {
  auto l3 = lattices::chain3();
  auto a3 = lattice_algebra(l3);
  auto m = *a3->find("m");
  CHECK(eval_algebra(parse("U[m] p", *l3), *a3, {{"p", m}}) == a3->top());
  CHECK(eval_algebra(parse("U[1] p", *l3), *a3, {{"p", m}}) == a3->bottom());
  for (Index a = 0; a < a3->size(); ++a) CHECK(eval_algebra(parse("p -> p", *l3), *a3, {{"p", a}}) == a3->top());
  CHECK(eval_algebra(parse("const(m)", *l3), *a3, {}) == m);

  CHECK(kind_of([&] { eval_algebra(parse("box p", *l3), *a3, {{"p", m}}); }) == ErrorKind::BoxNotAvailable);
  CHECK(kind_of([&] { eval_algebra(parse("p", *l3), *a3, {}); }) == ErrorKind::UndeclaredVariable);

  // the four-element Boolean algebra over L3 has no constant-m function
  auto l3b = functional_algebra(l3, {"p", "q"}, {fixtures::fn(*l3, {"1", "0"})});
  CHECK(kind_of([&] { eval_algebra(parse("const(m)", *l3), *l3b, {}); }) == ErrorKind::ConstantNotAvailable);
}

TEST_CASE("box distributes over meets in modal algebras") {
  auto dist = parse("box (p & q) -> box p & box q", *lattices::chain3());
  auto back = parse("box p & box q -> box (p & q)", *lattices::chain3());
  for (const auto& inst : ml_corpus(lattices::chain3(), 2)) {
    CHECK(check_validity(dist, *inst.algebra).passed);
    CHECK(check_validity(back, *inst.algebra).passed);
  }
}

TEST_CASE("check_validity examples") {
  auto l2 = lattices::chain2();
  auto l3 = lattices::chain3();
  CHECK(check_validity(parse("p | (p -> const(0))", *l2), *lattice_algebra(l2)).passed);

  auto v = check_validity(parse("p | (p -> const(0))", *l3), *lattice_algebra(l3));
  REQUIRE_FALSE(v.passed);
  REQUIRE(v.counterexample);
  REQUIRE(v.counterexample->size() == 2);
  CHECK((*v.counterexample)[0] == std::pair<std::string, std::string>{"p", "m"});
  CHECK((*v.counterexample)[1] == std::pair<std::string, std::string>{"value", "m"});

  for (const auto& a : vl_corpus(lattices::diamond(), 2)) {
    CHECK(check_validity(parse("T[1] const(1)", *lattices::diamond()), *a).passed);
  }
}

TEST_CASE("Kripke evaluation agrees with the model's functional algebra") {
  std::mt19937_64 rng(2024);
  for (const auto& l : {lattices::chain2(), lattices::chain3(), lattices::diamond()}) {
    for (int m = 0; m < 4; ++m) {
      auto model = random_model(rng, l, 1 + m % 3, {"p", "q"});
      auto alg = kripke_algebra(model);
      auto sigma = kripke_assignment(model, *alg);
      const auto& fp = *alg->functional();
      for (int i = 0; i < 60; ++i) {
        auto phi = random_formula(rng, *l, {"p", "q"}, 4);
        auto a = eval_algebra(phi, *alg, sigma);
        for (std::size_t w = 0; w < model.worlds.size(); ++w) {
          CAPTURE(print(phi, *l));
          CHECK(eval_kripke(phi, model, w) == fp.values[a][w]);
        }
      }
    }
  }
}

TEST_CASE("canonical model evaluation matches the algebra") {
  std::mt19937_64 rng(11);
  for (const auto& l : {lattices::chain2(), lattices::chain3()}) {
    for (const auto& inst : ml_corpus(l, 2)) {
      const auto& A = *inst.algebra;
      auto cm = canonical_model(inst.algebra);
      KripkeModel model{l, {}, cm.relation, A.element_names(), cm.worlds};
      for (std::size_t w = 0; w < cm.worlds.size(); ++w) model.worlds.push_back("f" + std::to_string(w));
      Assignment sigma;
      for (Index a = 0; a < A.size(); ++a) sigma[A.element_name(a)] = a;
      for (int i = 0; i < 8; ++i) {
        auto phi = random_formula(rng, *l, A.element_names(), 3);
        Index a;
        try {
          a = eval_algebra(phi, A, sigma);
        } catch (const Error& e) {
          CHECK(e.kind() == ErrorKind::ConstantNotAvailable);
          continue;
        }
        for (std::size_t w = 0; w < cm.worlds.size(); ++w) CHECK(eval_kripke(phi, model, w) == cm.worlds[w][a]);
      }
    }
  }
}
