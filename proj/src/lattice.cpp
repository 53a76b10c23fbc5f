#include "lvdual/lattice.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "lvdual/error.hpp"

namespace lvd {

std::optional<Value> Lattice::find(std::string_view id) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), id);
  if (it == names_.end() || *it != id) return std::nullopt;
  return static_cast<Value>(it - names_.begin());
}

Value Lattice::index_of(std::string_view id) const {
  if (auto v = find(id)) return *v;
  throw Error(ErrorKind::UnknownElement, "unknown lattice element '" + std::string(id) + "'");
}

Value Lattice::up(Value r, Value x) const {
  Value acc = bottom_;
  for (std::size_t r1 = 0; r1 < size(); ++r1) {
    if (leq(r, static_cast<Value>(r1))) acc = join(acc, truth(static_cast<Value>(r1), x));
  }
  return acc;
}

Value Lattice::meet_all(std::span<const Value> xs) const {
  Value acc = top_;
  for (Value x : xs) acc = meet(acc, x);
  return acc;
}

Value Lattice::join_all(std::span<const Value> xs) const {
  Value acc = bottom_;
  for (Value x : xs) acc = join(acc, x);
  return acc;
}

std::vector<std::pair<Value, Value>> Lattice::covers() const {
  std::vector<std::pair<Value, Value>> out;
  const auto n = size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !leq_[a * n + b]) continue;
      bool direct = true;
      for (std::size_t c = 0; c < n && direct; ++c) {
        if (c != a && c != b && leq_[a * n + c] && leq_[c * n + b]) direct = false;
      }
      if (direct) out.emplace_back(static_cast<Value>(a), static_cast<Value>(b));
    }
  }
  return out;
}

namespace {

// Least element of `candidates` under `leq`, if it is unique and below all of them.
std::optional<std::size_t> least(const std::vector<bool>& leq, std::size_t n,
                                 const std::vector<std::size_t>& candidates) {
  for (auto c : candidates) {
    bool below_all = true;
    for (auto d : candidates) {
      if (!leq[c * n + d]) {
        below_all = false;
        break;
      }
    }
    if (below_all) return c;
  }
  return std::nullopt;
}

}  // namespace

LatticePtr build_lattice(std::vector<std::string> elements,
                         const std::vector<std::pair<std::string, std::string>>& leq_pairs,
                         std::string name) {
  if (elements.empty()) throw Error(ErrorKind::PreconditionViolation, "lattice needs at least one element");
  std::sort(elements.begin(), elements.end());
  if (std::adjacent_find(elements.begin(), elements.end()) != elements.end()) {
    throw Error(ErrorKind::PreconditionViolation, "duplicate lattice element identifier");
  }
  if (elements.size() > std::numeric_limits<Value>::max()) {
    throw Error(ErrorKind::PreconditionViolation, "lattice too large");
  }

  auto lattice = std::make_shared<Lattice>();
  lattice->label_ = std::move(name);
  lattice->names_ = std::move(elements);
  const std::size_t n = lattice->names_.size();
  auto& leq = lattice->leq_;
  leq.assign(n * n, false);
  for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = true;
  for (const auto& [a, b] : leq_pairs) {
    leq[lattice->index_of(a) * n + lattice->index_of(b)] = true;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (leq[k * n + j]) leq[i * n + j] = true;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (leq[i * n + j] && leq[j * n + i]) {
        throw Error(ErrorKind::NotAPoset, "antisymmetry fails for " + lattice->names_[i] + " and " +
                                              lattice->names_[j]);
      }
    }
  }

  std::vector<bool> geq(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) geq[i * n + j] = leq[j * n + i];
  }
  lattice->meet_.assign(n * n, 0);
  lattice->join_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<std::size_t> upper, lower;
      for (std::size_t c = 0; c < n; ++c) {
        if (leq[a * n + c] && leq[b * n + c]) upper.push_back(c);
        if (leq[c * n + a] && leq[c * n + b]) lower.push_back(c);
      }
      auto lub = least(leq, n, upper);
      auto glb = least(geq, n, lower);
      if (!lub || !glb) {
        throw Error(ErrorKind::NotALattice, "no " + std::string(lub ? "greatest lower" : "least upper") +
                                                " bound for " + lattice->names_[a] + " and " +
                                                lattice->names_[b]);
      }
      lattice->join_[a * n + b] = static_cast<Value>(*lub);
      lattice->meet_[a * n + b] = static_cast<Value>(*glb);
    }
  }

  Value bot = 0, top = 0;
  for (std::size_t i = 1; i < n; ++i) {
    bot = lattice->meet_[bot * n + i];
    top = lattice->join_[top * n + i];
  }
  lattice->bottom_ = bot;
  lattice->top_ = top;

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        auto lhs = lattice->meet_[a * n + lattice->join_[b * n + c]];
        auto rhs = lattice->join_[lattice->meet_[a * n + b] * n + lattice->meet_[a * n + c]];
        if (lhs != rhs) {
          throw Error(ErrorKind::NotDistributive, "meet does not distribute over join at (" +
                                                      lattice->names_[a] + ", " + lattice->names_[b] +
                                                      ", " + lattice->names_[c] + ")");
        }
      }
    }
  }

  // In a finite distributive lattice the join of all z with x ∧ z <= y is itself such a z.
  lattice->imp_.assign(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      Value acc = bot;
      for (std::size_t z = 0; z < n; ++z) {
        if (leq[lattice->meet_[x * n + z] * n + y]) acc = lattice->join_[acc * n + z];
      }
      lattice->imp_[x * n + y] = acc;
    }
  }
  return lattice;
}

std::string truth_op(const Lattice& lattice, std::string_view r, std::string_view x) {
  return lattice.element_name(lattice.truth(lattice.index_of(r), lattice.index_of(x)));
}

std::string u_op(const Lattice& lattice, std::string_view r, std::string_view x) {
  return lattice.element_name(lattice.up(lattice.index_of(r), lattice.index_of(x)));
}

bool is_subalgebra(const Lattice& lattice, const std::vector<bool>& subset) {
  const auto n = lattice.size();
  if (!subset[lattice.bottom()] || !subset[lattice.top()]) return false;
  for (std::size_t a = 0; a < n; ++a) {
    if (!subset[a]) continue;
    for (std::size_t r = 0; r < n; ++r) {
      if (!subset[lattice.truth(static_cast<Value>(r), static_cast<Value>(a))]) return false;
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (!subset[b]) continue;
      auto va = static_cast<Value>(a), vb = static_cast<Value>(b);
      if (!subset[lattice.meet(va, vb)] || !subset[lattice.join(va, vb)] || !subset[lattice.imp(va, vb)]) {
        return false;
      }
    }
  }
  return true;
}

SubalgebraFamily::SubalgebraFamily(LatticePtr lattice) : lattice_(std::move(lattice)) {
  const auto& l = *lattice_;
  const auto n = l.size();
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != l.bottom() && i != l.top()) free.push_back(i);
  }
  if (free.size() > 20) throw Error(ErrorKind::PreconditionViolation, "lattice too large for subalgebra enumeration");
  for (std::uint32_t bits = 0; bits < (1u << free.size()); ++bits) {
    std::vector<bool> mask(n, false);
    mask[l.bottom()] = mask[l.top()] = true;
    for (std::size_t k = 0; k < free.size(); ++k) {
      if (bits & (1u << k)) mask[free[k]] = true;
    }
    if (!is_subalgebra(l, mask)) continue;
    std::vector<Value> members;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask[i]) members.push_back(static_cast<Value>(i));
    }
    members_.push_back(std::move(members));
  }
  std::sort(members_.begin(), members_.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  for (const auto& m : members_) {
    std::vector<bool> mask(n, false);
    for (auto v : m) mask[v] = true;
    mask_.push_back(std::move(mask));
  }
}

bool SubalgebraFamily::contains(std::size_t i, Value v) const { return mask_.at(i)[v]; }

std::string SubalgebraFamily::key(std::size_t i) const {
  std::string out;
  for (auto v : members_.at(i)) {
    if (!out.empty()) out += '|';
    out += lattice_->element_name(v);
  }
  return out;
}

std::optional<std::size_t> SubalgebraFamily::find_key(std::string_view key) const {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (this->key(i) == key) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> SubalgebraFamily::find(const std::vector<Value>& sorted_members) const {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] == sorted_members) return i;
  }
  return std::nullopt;
}

std::size_t SubalgebraFamily::generated_by(std::span<const Value> values) const {
  // Members are ordered by size, so the first match is the smallest.
  for (std::size_t i = 0; i < members_.size(); ++i) {
    bool all = true;
    for (auto v : values) all = all && mask_[i][v];
    if (all) return i;
  }
  return full_index();
}

SubalgebraFamily subalgebras(const LatticePtr& lattice) { return SubalgebraFamily(lattice); }

namespace lattices {

LatticePtr chain2() { return build_lattice({"0", "1"}, {{"0", "1"}}, "L2"); }

LatticePtr chain3() { return build_lattice({"0", "m", "1"}, {{"0", "m"}, {"m", "1"}}, "L3"); }

LatticePtr chain4() {
  return build_lattice({"0", "a", "b", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "1"}}, "L4");
}

LatticePtr diamond() {
  return build_lattice({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}}, "diamond");
}

}  // namespace lattices

}  // namespace lvd
