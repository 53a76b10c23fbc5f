#pragma once

#include <string>
#include <vector>

#include "lvdual/algebra.hpp"
#include "lvdual/lattice.hpp"

namespace lvd::fixtures {

inline Function fn(const Lattice& l, std::initializer_list<const char*> names) {
  Function f;
  for (auto n : names) f.push_back(l.index_of(n));
  return f;
}

/// The four-element Boolean algebra of all functions {p,q} -> 2.
inline AlgebraPtr boolean4(const std::optional<Relation>& box = std::nullopt) {
  auto l = lattices::chain2();
  return functional_algebra(l, {"p", "q"}, {fn(*l, {"1", "0"})}, box);
}

/// All functions points -> lattice, as generators.
inline std::vector<Function> all_functions(const Lattice& l, std::size_t points) {
  std::vector<Function> out{Function(points, 0)};
  for (std::size_t i = 0; i < points; ++i) {
    std::vector<Function> next;
    for (const auto& f : out) {
      for (std::size_t v = 0; v < l.size(); ++v) {
        auto g = f;
        g[i] = static_cast<Value>(v);
        next.push_back(g);
      }
    }
    out = std::move(next);
  }
  return out;
}

inline std::vector<std::string> point_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

}  // namespace lvd::fixtures
