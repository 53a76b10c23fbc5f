#include "lvdual/logic.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "lvdual/error.hpp"

namespace lvd {

namespace {

Formula node(Op op, std::string name, Value value, Formula lhs, Formula rhs) {
  return std::make_shared<const FormulaNode>(FormulaNode{op, std::move(name), value, std::move(lhs), std::move(rhs)});
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

class Parser {
 public:
  Parser(std::string_view text, const Lattice& lattice) : text_(text), lattice_(lattice) {}

  Formula run() {
    auto f = implication();
    skip();
    if (pos_ != text_.size()) throw SyntaxError(pos_, "unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(std::string_view tok) {
    skip();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view tok) {
    if (!eat(tok)) throw SyntaxError(pos_, "expected '" + std::string(tok) + "'");
  }

  std::string identifier() {
    skip();
    auto start = pos_;
    if (pos_ >= text_.size() || !is_ident_start(text_[pos_])) throw SyntaxError(pos_, "expected a formula");
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  bool next_is(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  /// Reads an element name up to `close` and resolves it.
  Value element(char close) {
    skip();
    auto start = pos_;
    auto end = text_.find(close, pos_);
    if (end == std::string_view::npos) throw SyntaxError(text_.size(), std::string("expected '") + close + "'");
    auto raw = text_.substr(start, end - start);
    while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.back()))) raw.remove_suffix(1);
    pos_ = end + 1;
    if (raw.empty()) throw SyntaxError(start, "empty lattice element");
    auto v = lattice_.find(raw);
    if (!v) throw Error(ErrorKind::UnknownLatticeElement, "unknown lattice element '" + std::string(raw) + "'");
    return *v;
  }

  Formula implication() {
    auto lhs = disjunction();
    if (eat("->")) return implies(lhs, implication());
    return lhs;
  }

  Formula disjunction() {
    auto f = conjunction();
    while (eat("|")) f = disj(f, conjunction());
    return f;
  }

  Formula conjunction() {
    auto f = unary();
    while (eat("&")) f = conj(f, unary());
    return f;
  }

  Formula unary() {
    if (eat("(")) {
      auto f = implication();
      expect(")");
      return f;
    }
    auto at = pos_;
    auto id = identifier();
    if (id == "box") return box(unary());
    if ((id == "T" || id == "U") && next_is('[')) {
      expect("[");
      auto r = element(']');
      auto arg = unary();
      return id == "T" ? truth(r, arg) : up(r, arg);
    }
    if (id == "const") {
      if (!next_is('(')) throw SyntaxError(at, "'const' needs a parenthesised lattice element");
      expect("(");
      return constant(element(')'));
    }
    return var(id);
  }

  std::string_view text_;
  const Lattice& lattice_;
  std::size_t pos_ = 0;
};

void collect(const Formula& f, std::set<std::string>& out) {
  if (!f) return;
  if (f->op == Op::Var) out.insert(f->name);
  collect(f->lhs, out);
  collect(f->rhs, out);
}

}  // namespace

Formula var(std::string name) { return node(Op::Var, std::move(name), 0, nullptr, nullptr); }
Formula constant(Value r) { return node(Op::Const, {}, r, nullptr, nullptr); }
Formula conj(Formula a, Formula b) { return node(Op::And, {}, 0, std::move(a), std::move(b)); }
Formula disj(Formula a, Formula b) { return node(Op::Or, {}, 0, std::move(a), std::move(b)); }
Formula implies(Formula a, Formula b) { return node(Op::Imp, {}, 0, std::move(a), std::move(b)); }
Formula truth(Value r, Formula a) { return node(Op::T, {}, r, std::move(a), nullptr); }
Formula up(Value r, Formula a) { return node(Op::U, {}, r, std::move(a), nullptr); }
Formula box(Formula a) { return node(Op::Box, {}, 0, std::move(a), nullptr); }

bool equal(const Formula& a, const Formula& b) {
  if (!a || !b) return !a && !b;
  return a->op == b->op && a->name == b->name && a->value == b->value && equal(a->lhs, b->lhs) &&
         equal(a->rhs, b->rhs);
}

std::size_t depth(const Formula& f) {
  if (!f) return 0;
  if (f->op == Op::Var || f->op == Op::Const) return 0;
  return 1 + std::max(depth(f->lhs), depth(f->rhs));
}

std::vector<std::string> variables(const Formula& f) {
  std::set<std::string> out;
  collect(f, out);
  return {out.begin(), out.end()};
}

bool uses_box(const Formula& f) {
  if (!f) return false;
  return f->op == Op::Box || uses_box(f->lhs) || uses_box(f->rhs);
}

Formula parse(std::string_view text, const Lattice& lattice) { return Parser(text, lattice).run(); }

std::string print(const Formula& f, const Lattice& l) {
  switch (f->op) {
    case Op::Var: return f->name;
    case Op::Const: return "const(" + l.element_name(f->value) + ")";
    case Op::And: return "(" + print(f->lhs, l) + " & " + print(f->rhs, l) + ")";
    case Op::Or: return "(" + print(f->lhs, l) + " | " + print(f->rhs, l) + ")";
    case Op::Imp: return "(" + print(f->lhs, l) + " -> " + print(f->rhs, l) + ")";
    case Op::T: return "T[" + l.element_name(f->value) + "] " + print(f->lhs, l);
    case Op::U: return "U[" + l.element_name(f->value) + "] " + print(f->lhs, l);
    case Op::Box: return "box " + print(f->lhs, l);
  }
  return {};
}

std::size_t KripkeModel::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (variables[i] == name) return i;
  }
  throw Error(ErrorKind::UndeclaredVariable, "undeclared variable '" + std::string(name) + "'");
}

Value eval_kripke(const Formula& phi, const KripkeModel& m, std::size_t w) {
  const auto& l = *m.lattice;
  switch (phi->op) {
    case Op::Var: return m.valuation.at(w).at(m.variable_index(phi->name));
    case Op::Const: return phi->value;
    case Op::And: return l.meet(eval_kripke(phi->lhs, m, w), eval_kripke(phi->rhs, m, w));
    case Op::Or: return l.join(eval_kripke(phi->lhs, m, w), eval_kripke(phi->rhs, m, w));
    case Op::Imp: return l.imp(eval_kripke(phi->lhs, m, w), eval_kripke(phi->rhs, m, w));
    case Op::T: return l.truth(phi->value, eval_kripke(phi->lhs, m, w));
    case Op::U: return l.up(phi->value, eval_kripke(phi->lhs, m, w));
    case Op::Box: {
      Value out = l.top();
      for (auto v : m.relation.successors(w)) out = l.meet(out, eval_kripke(phi->lhs, m, v));
      return out;
    }
  }
  return l.bottom();
}

Index eval_algebra(const Formula& phi, const Algebra& A, const Assignment& sigma) {
  const auto& l = A.lattice();
  switch (phi->op) {
    case Op::Var: {
      auto it = sigma.find(phi->name);
      if (it == sigma.end()) throw Error(ErrorKind::UndeclaredVariable, "unassigned variable '" + phi->name + "'");
      if (it->second >= A.size()) throw Error(ErrorKind::SchemaError, "assignment outside the carrier");
      return it->second;
    }
    case Op::Const: {
      if (phi->value == l.bottom()) return A.bottom();
      if (phi->value == l.top()) return A.top();
      if (const auto* fp = A.functional()) {
        if (auto a = A.find_function(Function(fp->points.size(), phi->value))) return *a;
      }
      throw Error(ErrorKind::ConstantNotAvailable,
                  "the algebra has no element for const(" + l.element_name(phi->value) + ")");
    }
    case Op::And: return A.meet(eval_algebra(phi->lhs, A, sigma), eval_algebra(phi->rhs, A, sigma));
    case Op::Or: return A.join(eval_algebra(phi->lhs, A, sigma), eval_algebra(phi->rhs, A, sigma));
    case Op::Imp: return A.imp(eval_algebra(phi->lhs, A, sigma), eval_algebra(phi->rhs, A, sigma));
    case Op::T: return A.truth(phi->value, eval_algebra(phi->lhs, A, sigma));
    case Op::U: {
      auto a = eval_algebra(phi->lhs, A, sigma);
      Index out = A.bottom();
      for (std::size_t r1 = 0; r1 < l.size(); ++r1) {
        if (l.leq(phi->value, static_cast<Value>(r1))) out = A.join(out, A.truth(static_cast<Value>(r1), a));
      }
      return out;
    }
    case Op::Box: return A.box(eval_algebra(phi->lhs, A, sigma));
  }
  return A.bottom();
}

Verdict check_validity(const Formula& phi, const Algebra& A) {
  auto vars = variables(phi);
  std::vector<Index> digits(vars.size(), 0);
  Assignment sigma;
  while (true) {
    for (std::size_t i = 0; i < vars.size(); ++i) sigma[vars[i]] = digits[i];
    auto v = eval_algebra(phi, A, sigma);
    if (v != A.top()) {
      Witness w;
      for (std::size_t i = 0; i < vars.size(); ++i) w.emplace_back(vars[i], A.element_name(digits[i]));
      w.emplace_back("value", A.element_name(v));
      return Verdict::fail("validity", w);
    }
    std::size_t i = digits.size();
    while (i > 0 && ++digits[i - 1] == A.size()) digits[--i] = 0;
    if (i == 0) break;
  }
  return Verdict::pass("validity");
}

AlgebraPtr kripke_algebra(const KripkeModel& m) {
  const auto& l = *m.lattice;
  std::vector<Function> gens;
  for (std::size_t v = 0; v < m.variables.size(); ++v) {
    Function f(m.worlds.size());
    for (std::size_t w = 0; w < m.worlds.size(); ++w) f[w] = m.valuation.at(w).at(v);
    gens.push_back(std::move(f));
  }
  for (std::size_t r = 0; r < l.size(); ++r) gens.emplace_back(m.worlds.size(), static_cast<Value>(r));
  return functional_algebra(m.lattice, m.worlds, gens, m.relation);
}

Assignment kripke_assignment(const KripkeModel& m, const Algebra& algebra) {
  Assignment sigma;
  for (std::size_t v = 0; v < m.variables.size(); ++v) {
    Function f(m.worlds.size());
    for (std::size_t w = 0; w < m.worlds.size(); ++w) f[w] = m.valuation.at(w).at(v);
    auto a = algebra.find_function(f);
    if (!a) throw Error(ErrorKind::PreconditionViolation, "valuation missing from the algebra");
    sigma[m.variables[v]] = *a;
  }
  return sigma;
}

Formula random_formula(std::mt19937_64& rng, const Lattice& l, const std::vector<std::string>& vars,
                       std::size_t max_depth, bool with_box) {
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  if (max_depth == 0 || pick(4) == 0) {
    if (vars.empty() || pick(5) == 0) return constant(static_cast<Value>(pick(l.size())));
    return var(vars[pick(vars.size())]);
  }
  const std::size_t kinds = with_box ? 6 : 5;
  switch (pick(kinds)) {
    case 0: {
      auto a = random_formula(rng, l, vars, max_depth - 1, with_box);
      return conj(a, random_formula(rng, l, vars, max_depth - 1, with_box));
    }
    case 1: {
      auto a = random_formula(rng, l, vars, max_depth - 1, with_box);
      return disj(a, random_formula(rng, l, vars, max_depth - 1, with_box));
    }
    case 2: {
      auto a = random_formula(rng, l, vars, max_depth - 1, with_box);
      return implies(a, random_formula(rng, l, vars, max_depth - 1, with_box));
    }
    case 3: {
      auto r = static_cast<Value>(pick(l.size()));
      return truth(r, random_formula(rng, l, vars, max_depth - 1, with_box));
    }
    case 4: {
      auto r = static_cast<Value>(pick(l.size()));
      return up(r, random_formula(rng, l, vars, max_depth - 1, with_box));
    }
    default: return box(random_formula(rng, l, vars, max_depth - 1, with_box));
  }
}

KripkeModel random_model(std::mt19937_64& rng, const LatticePtr& lattice, std::size_t worlds,
                         const std::vector<std::string>& vars) {
  KripkeModel m{lattice, {}, Relation(worlds), vars, {}};
  for (std::size_t w = 0; w < worlds; ++w) m.worlds.push_back("w" + std::to_string(w));
  for (std::size_t x = 0; x < worlds; ++x) {
    for (std::size_t y = 0; y < worlds; ++y) m.relation.set(x, y, rng() % 2 == 0);
  }
  m.valuation.assign(worlds, std::vector<Value>(vars.size()));
  for (auto& row : m.valuation) {
    for (auto& v : row) v = static_cast<Value>(rng() % lattice->size());
  }
  return m;
}

}  // namespace lvd
