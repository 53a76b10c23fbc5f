#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lvd {

/// Index of an element of the truth-value lattice, in canonical (sorted identifier) order.
using Value = std::uint8_t;

/// A finite distributive lattice of truth values together with its Heyting
/// implication and the truth-constant detectors T_r and U_r.
///
/// Immutable once built; obtain one through build_lattice().
class Lattice {
 public:
  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name() const noexcept { return label_; }
  const std::vector<std::string>& elements() const noexcept { return names_; }
  const std::string& element_name(Value v) const { return names_.at(v); }

  std::optional<Value> find(std::string_view id) const;
  /// Throws Error{UnknownElement}.
  Value index_of(std::string_view id) const;

  Value bottom() const noexcept { return bottom_; }
  Value top() const noexcept { return top_; }

  bool leq(Value a, Value b) const { return leq_[a * size() + b]; }
  Value meet(Value a, Value b) const { return meet_[a * size() + b]; }
  Value join(Value a, Value b) const { return join_[a * size() + b]; }
  Value imp(Value a, Value b) const { return imp_[a * size() + b]; }
  Value biimp(Value a, Value b) const { return meet(imp(a, b), imp(b, a)); }

  /// T_r(x): top when x == r, bottom otherwise.
  Value truth(Value r, Value x) const { return x == r ? top_ : bottom_; }
  /// U_r(x): join of T_{r'}(x) over r' >= r, i.e. top iff r <= x.
  Value up(Value r, Value x) const;

  Value meet_all(std::span<const Value> xs) const;
  Value join_all(std::span<const Value> xs) const;

  std::vector<std::pair<Value, Value>> covers() const;

 private:
  friend std::shared_ptr<const Lattice> build_lattice(
      std::vector<std::string>, const std::vector<std::pair<std::string, std::string>>&, std::string);

  std::string label_;
  std::vector<std::string> names_;
  std::vector<bool> leq_;
  std::vector<Value> meet_, join_, imp_;
  Value bottom_ = 0, top_ = 0;
};

using LatticePtr = std::shared_ptr<const Lattice>;

/// Builds the lattice whose order is the reflexive-transitive closure of
/// `leq_pairs`. Throws NotAPoset, NotALattice or NotDistributive.
LatticePtr build_lattice(std::vector<std::string> elements,
                         const std::vector<std::pair<std::string, std::string>>& leq_pairs,
                         std::string name = {});

/// Named-element convenience wrappers; both throw UnknownElement.
std::string truth_op(const Lattice& lattice, std::string_view r, std::string_view x);
std::string u_op(const Lattice& lattice, std::string_view r, std::string_view x);

/// The subalgebras of the lattice (subsets containing 0 and 1 closed under
/// meet, join, implication and every T_r), ordered by size and then by
/// member list; the full lattice is always last.
class SubalgebraFamily {
 public:
  SubalgebraFamily() = default;
  explicit SubalgebraFamily(LatticePtr lattice);

  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<Value>& member(std::size_t i) const { return members_.at(i); }
  const std::vector<std::vector<Value>>& members() const noexcept { return members_; }
  bool contains(std::size_t i, Value v) const;
  std::size_t full_index() const noexcept { return members_.size() - 1; }

  /// Sorted element identifiers joined by '|'.
  std::string key(std::size_t i) const;
  std::optional<std::size_t> find_key(std::string_view key) const;
  std::optional<std::size_t> find(const std::vector<Value>& sorted_members) const;

  /// Index of the smallest member containing every value in `values`.
  std::size_t generated_by(std::span<const Value> values) const;

  const LatticePtr& lattice() const noexcept { return lattice_; }

 private:
  LatticePtr lattice_;
  std::vector<std::vector<Value>> members_;
  std::vector<std::vector<bool>> mask_;
};

SubalgebraFamily subalgebras(const LatticePtr& lattice);

/// Whether `subset` contains 0 and 1 and is closed under every lattice-level operation.
bool is_subalgebra(const Lattice& lattice, const std::vector<bool>& subset);

namespace lattices {
LatticePtr chain2();
LatticePtr chain3();  ///< 0 < m < 1
LatticePtr chain4();  ///< 0 < a < b < 1
LatticePtr diamond();  ///< 0 < a, b < 1 with a, b incomparable
}  // namespace lattices

}  // namespace lvd
