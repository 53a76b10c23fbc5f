#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lvdual/algebra.hpp"
#include "lvdual/relation.hpp"
#include "lvdual/verdict.hpp"

namespace lvd {

/// An ℓ-Boolean system (X, A, ⊨), or an ℓ-relational system when `relation`
/// (R₀ on X) is present. `sat` is row-major: sat[x * |A| + a] = ⊨(x, a).
struct System {
  std::vector<std::string> points;
  AlgebraPtr algebra;
  std::vector<Value> sat;
  std::optional<Relation> relation;

  std::size_t size() const noexcept { return points.size(); }
  const Lattice& lattice() const { return algebra->lattice(); }
  bool is_relational() const noexcept { return relation.has_value(); }
  Value operator()(std::size_t x, Index a) const { return sat[x * algebra->size() + a]; }
};

using SystemPtr = std::shared_ptr<const System>;

/// Checks table shapes only. Throws SchemaError.
SystemPtr make_system(std::vector<std::string> points, AlgebraPtr algebra, std::vector<Value> sat,
                      std::optional<Relation> relation = std::nullopt);

/// ⊨(x, f) = f(x) over a functional algebra.
SystemPtr function_system(const AlgebraPtr& algebra, std::optional<Relation> relation = std::nullopt);

bool same_system(const System& a, const System& b);

/// An arrow S1 → S2: ψ₁ on points forwards, ψ₂ on algebras backwards (A2 → A1).
struct SystemMap {
  SystemPtr source;
  SystemPtr target;
  std::vector<std::size_t> point_map;
  std::vector<Index> algebra_map;

  friend bool operator==(const SystemMap& a, const SystemMap& b) {
    return a.point_map == b.point_map && a.algebra_map == b.algebra_map;
  }
};

Verdict validate_system(const System& system);

/// Homomorphism (modal when both ends are relational) plus
/// ⊨₁(x, ψ₂(b)) = ⊨₂(ψ₁(x), b).
Verdict is_continuous(const SystemMap& map);

/// m2 ∘ m1. Throws TypeMismatch unless m1 ends where m2 starts.
SystemMap compose(const SystemMap& m2, const SystemMap& m1);
SystemMap identity_map(const SystemPtr& system);

/// Every continuous map S1 → S2, ordered by (point map, algebra map).
/// Throws ClosureTooLarge when there are more than `cap` point maps.
std::vector<SystemMap> enumerate_system_maps(const SystemPtr& s1, const SystemPtr& s2,
                                             std::size_t cap = 1'000'000);

/// ext(a)(x) = ⊨(x, a).
Function extent(const System& system, Index a);

/// The functional algebra generated by all extents, with box from R₀ when relational.
AlgebraPtr extent_algebra(const System& system);

}  // namespace lvd
