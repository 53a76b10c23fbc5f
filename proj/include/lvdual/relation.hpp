#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace lvd {

/// Binary relation on {0, ..., n-1}, stored as a dense adjacency matrix.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n) : n_(n), adj_(n * n, false) {}

  static Relation identity(std::size_t n);
  static Relation from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

  std::size_t size() const noexcept { return n_; }
  bool holds(std::size_t x, std::size_t y) const { return adj_[x * n_ + y]; }
  void set(std::size_t x, std::size_t y, bool value = true) { adj_[x * n_ + y] = value; }

  std::vector<std::size_t> successors(std::size_t x) const;
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<bool> adj_;
};

}  // namespace lvd
