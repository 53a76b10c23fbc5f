#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lvdual/lattice.hpp"
#include "lvdual/relation.hpp"
#include "lvdual/verdict.hpp"

namespace lvd {

/// Index of a carrier element of an algebra, in the algebra's canonical order.
using Index = std::uint32_t;

/// An ℓ-valued function on a finite point set, one value per point.
using Function = std::vector<Value>;

inline constexpr std::size_t kDefaultClosureCap = 4096;

/// Records that an algebra is (isomorphic to) a set of functions points → ℓ
/// with pointwise operations: element a is the function `values[a]`.
struct FunctionalPresentation {
  std::vector<std::string> points;
  std::vector<Function> values;
};

/// Explicit operation tables, as read from a document. Binary tables are
/// row-major (`meet[a * n + b]`); `truth[r][a]` is T_r(a).
struct AlgebraTables {
  std::vector<std::string> carrier;
  std::vector<Index> meet, join, imp;
  std::vector<std::vector<Index>> truth;
  std::optional<std::vector<Index>> box;
  Index bottom = 0, top = 0;
};

/// A finite ℓ-VL-algebra, or an ℓ-ML-algebra when it carries a box table.
class Algebra {
 public:
  /// Canonicalises the carrier to sorted identifier order. Throws SchemaError
  /// on ragged tables or out-of-range entries; does not check any axiom.
  static std::shared_ptr<const Algebra> from_tables(LatticePtr lattice, AlgebraTables tables);

  const Lattice& lattice() const noexcept { return *lattice_; }
  const LatticePtr& lattice_ptr() const noexcept { return lattice_; }

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& element_name(Index a) const { return names_.at(a); }
  const std::vector<std::string>& element_names() const noexcept { return names_; }
  std::optional<Index> find(std::string_view name) const;

  Index bottom() const noexcept { return bottom_; }
  Index top() const noexcept { return top_; }
  Index meet(Index a, Index b) const { return meet_[a * size() + b]; }
  Index join(Index a, Index b) const { return join_[a * size() + b]; }
  Index imp(Index a, Index b) const { return imp_[a * size() + b]; }
  Index biimp(Index a, Index b) const { return meet(imp(a, b), imp(b, a)); }
  Index truth(Value r, Index a) const { return truth_[r * size() + a]; }
  /// U_r(a) = join of T_{r'}(a) over r' >= r.
  Index up(Value r, Index a) const;
  bool leq(Index a, Index b) const { return meet(a, b) == a; }

  bool is_modal() const noexcept { return !box_.empty(); }
  /// Throws BoxNotAvailable on a non-modal algebra.
  Index box(Index a) const;

  const FunctionalPresentation* functional() const noexcept {
    return presentation_ ? &*presentation_ : nullptr;
  }
  /// Only for functional algebras: the element equal to `f`, if present.
  std::optional<Index> find_function(const Function& f) const;

  /// The same algebra with the box table dropped.
  std::shared_ptr<const Algebra> without_box() const;

  AlgebraTables tables() const;

 private:
  friend std::shared_ptr<const Algebra> build_functional(LatticePtr, std::vector<std::string>,
                                                         std::vector<Function>, const std::optional<Relation>&,
                                                         const std::vector<std::string>*);
  friend std::shared_ptr<const Algebra> with_identity_box(const std::shared_ptr<const Algebra>&);

  LatticePtr lattice_;
  std::vector<std::string> names_;
  std::vector<Index> meet_, join_, imp_, truth_, box_;
  Index bottom_ = 0, top_ = 0;
  std::optional<FunctionalPresentation> presentation_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

bool same_lattice(const Lattice& a, const Lattice& b);

/// Pointwise algebra on an already-closed function set; sorts the carrier
/// lexicographically. With `relation`, box f is w ↦ meet of f over successors.
AlgebraPtr make_algebra_from_functions(LatticePtr lattice, std::vector<std::string> points,
                                       std::vector<Function> functions,
                                       const std::optional<Relation>& relation = std::nullopt);

/// Closes `generators` plus the constant 0 and 1 functions under pointwise
/// ∧, ∨, →, T_r (and box when `modal_relation` is given).
/// Throws ClosureTooLarge when more than `cap` elements appear.
AlgebraPtr functional_algebra(const LatticePtr& lattice, std::vector<std::string> points,
                              const std::vector<Function>& generators,
                              const std::optional<Relation>& modal_relation = std::nullopt,
                              std::size_t cap = kDefaultClosureCap);

/// The lattice (or its subalgebra `member` of `family`) viewed as an ℓ-VL-algebra
/// over a single point; carrier names are the lattice element names.
AlgebraPtr lattice_algebra(const LatticePtr& lattice);
AlgebraPtr lattice_algebra(const SubalgebraFamily& family, std::size_t member);

/// The same lattice algebra with box = identity.
AlgebraPtr with_identity_box(const AlgebraPtr& algebra);

struct Homomorphism {
  AlgebraPtr source;
  AlgebraPtr target;
  std::vector<Index> map;
  bool modal = false;

  Index operator()(Index a) const { return map.at(a); }
};

/// Checks preservation of ∧, ∨, →, T_r, 0, 1 (and box when `modal`).
/// Throws MismatchedLattice when the algebras live over different lattices.
Verdict is_homomorphism(std::span<const Index> map, const Algebra& source, const Algebra& target,
                        bool modal);

/// All homomorphisms source → target in lexicographic order of their tables.
std::vector<Homomorphism> enumerate_homs(const AlgebraPtr& source, const AlgebraPtr& target, bool modal);

Homomorphism compose(const Homomorphism& g, const Homomorphism& f);  ///< g ∘ f
Homomorphism identity_hom(const AlgebraPtr& algebra);

Verdict validate_vl(const Algebra& algebra);
Verdict validate_ml(const Algebra& algebra);

/// A small generating set under ∧, ∨, →, T_r (and box when `with_box`),
/// chosen greedily in carrier order.
std::vector<Index> generating_set(const Algebra& algebra, bool with_box = false);

}  // namespace lvd
