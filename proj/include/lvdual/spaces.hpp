#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lvdual/algebra.hpp"
#include "lvdual/lattice.hpp"
#include "lvdual/relation.hpp"
#include "lvdual/verdict.hpp"

namespace lvd {

/// A finite ℓ-Boolean space (S, φ), or an ℓ-relational space when `relation`
/// is present. The topology is discrete, so the data is the carrier and φ.
/// `phi[m][s]` says whether point s lies in φ(family.member(m)).
struct Space {
  SubalgebraFamily family;
  std::vector<std::string> carrier;
  std::vector<std::vector<bool>> phi;
  std::optional<Relation> relation;

  std::size_t size() const noexcept { return carrier.size(); }
  const Lattice& lattice() const { return *family.lattice(); }
  const LatticePtr& lattice_ptr() const { return family.lattice(); }
  bool is_relational() const noexcept { return relation.has_value(); }
  bool in_phi(std::size_t member, std::size_t s) const { return phi[member][s]; }
  /// Values allowed at s: the intersection of every member m with s in φ(m).
  std::vector<Value> allowed(std::size_t s) const;
};

using SpacePtr = std::shared_ptr<const Space>;

/// Checks table shapes only. Throws SchemaError.
SpacePtr make_space(const LatticePtr& lattice, std::vector<std::string> carrier,
                    std::vector<std::vector<bool>> phi, std::optional<Relation> relation = std::nullopt);

/// The space in which every point is assigned the smallest subalgebra
/// `minimal[s]`, i.e. φ(K) = {s : member minimal[s] ⊆ K}.
SpacePtr space_from_minimal(const LatticePtr& lattice, std::vector<std::string> carrier,
                            const std::vector<std::size_t>& minimal, std::optional<Relation> relation = std::nullopt);

bool same_space(const Space& a, const Space& b);

struct SpaceMap {
  SpacePtr source;
  SpacePtr target;
  std::vector<std::size_t> map;

  friend bool operator==(const SpaceMap& a, const SpaceMap& b) { return a.map == b.map; }
};

/// All g: S → ℓ with g(φ(m)) ⊆ m for every m, with pointwise operations,
/// and box = □_R when `with_box` (throws NotInCont if □_R leaves Cont).
/// Throws ClosureTooLarge past `cap` functions.
AlgebraPtr cont(const Space& space, bool with_box = false, std::size_t cap = kDefaultClosureCap);

bool in_cont(const Space& space, const Function& f);

/// (□_R f)(x) = meet of f(y) over x R y. Throws NotInCont when f or the result is not in Cont.
Function box_r(const Space& space, const Function& f);

Verdict validate_space(const Space& space, std::size_t cap = kDefaultClosureCap);
Verdict is_space_morphism(const SpaceMap& map);

SpaceMap compose(const SpaceMap& g, const SpaceMap& f);  ///< g ∘ f
SpaceMap identity_map(const SpacePtr& space);

/// Every morphism sp1 → sp2 in lexicographic order. Throws ClosureTooLarge past `cap` candidates.
std::vector<SpaceMap> enumerate_space_maps(const SpacePtr& sp1, const SpacePtr& sp2, std::size_t cap = 1'000'000);

}  // namespace lvd
