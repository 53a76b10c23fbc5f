#pragma once

#include <cstdint>
#include <vector>

#include "lvdual/algebra.hpp"
#include "lvdual/spaces.hpp"
#include "lvdual/systems.hpp"

namespace lvd {

/// Point names x0, x1, ...
std::vector<std::string> corpus_points(std::size_t n);

/// Every subalgebra of ℓ^X for |X| = 1..max_points, ordered by point count,
/// then size, then carrier.
std::vector<AlgebraPtr> vl_corpus(const LatticePtr& lattice, std::size_t max_points);

struct ModalInstance {
  AlgebraPtr algebra;
  Relation relation;
};

/// Every subalgebra of ℓ^X closed under □_R, for every relation R on X.
std::vector<ModalInstance> ml_corpus(const LatticePtr& lattice, std::size_t max_points);

/// ⊨(x, f) = f(x) over every point-separating corpus algebra (relational over ml_corpus when `modal`).
std::vector<SystemPtr> system_corpus(const LatticePtr& lattice, std::size_t max_points, bool modal);

/// Every valid space with at most max_points points: one smallest subalgebra
/// per point, and when `modal` every hereditary relation.
std::vector<SpacePtr> space_corpus(const LatticePtr& lattice, std::size_t max_points, bool modal);

}  // namespace lvd
