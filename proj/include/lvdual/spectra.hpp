#pragma once

#include <vector>

#include "lvdual/algebra.hpp"
#include "lvdual/relation.hpp"
#include "lvdual/verdict.hpp"

namespace lvd {

/// An ℓ-filter: nonempty, upward closed, closed under binary meet and T_1.
struct LFilter {
  AlgebraPtr algebra;
  std::vector<Index> members;  ///< ascending

  bool contains(Index a) const;
  friend bool operator==(const LFilter& a, const LFilter& b) { return a.members == b.members; }
};

struct FilterClassification {
  bool l_filter = false;
  bool proper = false;
  bool prime = false;
  bool ultra = false;
  bool maximal = false;
};

FilterClassification classify_filter(const std::vector<Index>& subset, const Algebra& algebra);

/// Every prime ℓ-filter, ordered by member list. Filters of a finite lattice
/// are principal, so the candidates are the up-sets of single elements.
std::vector<LFilter> prime_filters(const AlgebraPtr& algebra);

/// v_P(x) = the unique q with T_q(x) in P. Throws NotPrime when q is not unique.
Homomorphism filter_to_hom(const LFilter& filter);
/// {x : v(x) = 1}; `hom` must map into the lattice (or a subalgebra of it).
LFilter hom_to_filter(const Homomorphism& hom);

/// Homomorphisms A → ℓ₁ for the subalgebra ℓ₁ = family.member(member), in canonical order.
std::vector<Homomorphism> spec(const AlgebraPtr& algebra, const SubalgebraFamily& family, std::size_t member);
/// Homomorphisms A → ℓ.
std::vector<Homomorphism> spec(const AlgebraPtr& algebra);

/// Values in ℓ of a homomorphism into a lattice algebra, one per source element.
std::vector<Value> lattice_values(const Homomorphism& hom);

struct SeparatingWitness {
  Value r;
  LFilter filter;
};

/// Some r and prime P with T_r(x) in P and T_r(y) not in P.
/// Throws PreconditionViolation when x == y and NoWitness when none exists.
SeparatingWitness separating_witness(const AlgebraPtr& algebra, Index x, Index y);

/// The canonical ℓ-valued Kripke model of an ℓ-ML-algebra: worlds are Spec(A),
/// f R g iff g(a) >= f(box a) for every a, and the valuation is e(f, a) = f(a).
struct CanonicalModel {
  AlgebraPtr algebra;
  std::vector<std::vector<Value>> worlds;
  Relation relation;

  Value valuation(std::size_t world, Index a) const { return worlds[world][a]; }
};

CanonicalModel canonical_model(const AlgebraPtr& algebra);

/// f R g iff for all r and a, f(box a) >= r implies g(a) >= r.
Relation canonical_relation_quantified(const Algebra& algebra, const std::vector<std::vector<Value>>& worlds);

/// f(box a) = meet of g(a) over f R g, for every world f and element a.
Verdict check_kripke_property(const CanonicalModel& model);

}  // namespace lvd
