#pragma once

#include <map>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "lvdual/algebra.hpp"
#include "lvdual/lattice.hpp"
#include "lvdual/relation.hpp"
#include "lvdual/verdict.hpp"

namespace lvd {

enum class Op { Var, Const, And, Or, Imp, T, U, Box };

struct FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

struct FormulaNode {
  Op op;
  std::string name;  ///< variable name (Var)
  Value value = 0;   ///< lattice element (Const, T, U)
  Formula lhs, rhs;  ///< unary operators use lhs only
};

Formula var(std::string name);
Formula constant(Value r);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula implies(Formula a, Formula b);
Formula truth(Value r, Formula a);
Formula up(Value r, Formula a);
Formula box(Formula a);

bool equal(const Formula& a, const Formula& b);
std::size_t depth(const Formula& f);
/// Sorted, without duplicates.
std::vector<std::string> variables(const Formula& f);
bool uses_box(const Formula& f);

/// Grammar (box, T[r] and U[r] bind tightest, then &, then |, then the
/// right-associative ->):
///   phi ::= var | const(r) | phi & phi | phi | phi | phi -> phi
///         | T[r] phi | U[r] phi | box phi | ( phi )
/// Throws SyntaxError (with byte offset) and UnknownLatticeElement.
Formula parse(std::string_view text, const Lattice& lattice);

/// Fully parenthesised; parse(print(f)) is structurally equal to f.
std::string print(const Formula& f, const Lattice& lattice);

struct KripkeModel {
  LatticePtr lattice;
  std::vector<std::string> worlds;
  Relation relation;
  std::vector<std::string> variables;
  std::vector<std::vector<Value>> valuation;  ///< valuation[world][variable]

  std::size_t variable_index(std::string_view name) const;  ///< throws UndeclaredVariable
};

Value eval_kripke(const Formula& phi, const KripkeModel& model, std::size_t world);

using Assignment = std::map<std::string, Index, std::less<>>;

/// Throws UndeclaredVariable, BoxNotAvailable, and ConstantNotAvailable for
/// const(r) with r not 0 or 1 unless the algebra contains the constant-r function.
Index eval_algebra(const Formula& phi, const Algebra& algebra, const Assignment& assignment);

/// Pass iff phi evaluates to top under every assignment of its variables;
/// otherwise the first failing assignment in lexicographic order.
Verdict check_validity(const Formula& phi, const Algebra& algebra);

/// The functional algebra of the model: generated by every variable's
/// valuation and every constant function, with box along the relation.
AlgebraPtr kripke_algebra(const KripkeModel& model);
/// Each variable mapped to its valuation inside kripke_algebra(model).
Assignment kripke_assignment(const KripkeModel& model, const Algebra& algebra);

/// A random formula of depth at most `max_depth` over `vars`.
Formula random_formula(std::mt19937_64& rng, const Lattice& lattice, const std::vector<std::string>& vars,
                       std::size_t max_depth, bool with_box = true);

/// A random model with `worlds` worlds, a random relation and random valuation.
KripkeModel random_model(std::mt19937_64& rng, const LatticePtr& lattice, std::size_t worlds,
                         const std::vector<std::string>& vars);

}  // namespace lvd
