#include "lvdual/algebra.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <limits>
#include <map>
#include <numeric>

#include "lvdual/error.hpp"

namespace lvd {

namespace {

constexpr Index kUnset = std::numeric_limits<Index>::max();

std::string function_name(const Lattice& lattice, const Function& f) {
  std::string out = "(";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ',';
    out += lattice.element_name(f[i]);
  }
  return out + ")";
}

Function constant(std::size_t points, Value v) { return Function(points, v); }

Function apply_binary(const Lattice& l, Value (Lattice::*op)(Value, Value) const, const Function& f,
                      const Function& g) {
  Function out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = (l.*op)(f[i], g[i]);
  return out;
}

Function apply_truth(const Lattice& l, Value r, const Function& f) {
  Function out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = l.truth(r, f[i]);
  return out;
}

Function apply_box(const Lattice& l, const Relation& rel, const Function& f) {
  Function out(f.size());
  for (std::size_t w = 0; w < f.size(); ++w) {
    Value acc = l.top();
    for (std::size_t v = 0; v < f.size(); ++v) {
      if (rel.holds(w, v)) acc = l.meet(acc, f[v]);
    }
    out[w] = acc;
  }
  return out;
}

}  // namespace

bool same_lattice(const Lattice& a, const Lattice& b) {
  if (&a == &b) return true;
  if (a.elements() != b.elements()) return false;
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = 0; y < a.size(); ++y) {
      if (a.leq(static_cast<Value>(x), static_cast<Value>(y)) != b.leq(static_cast<Value>(x), static_cast<Value>(y))) {
        return false;
      }
    }
  }
  return true;
}

std::optional<Index> Algebra::find(std::string_view name) const {
  // Functional carriers are ordered by value, not by name.
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Index>(it - names_.begin());
}

Index Algebra::up(Value r, Index a) const {
  Index acc = bottom_;
  for (std::size_t r1 = 0; r1 < lattice_->size(); ++r1) {
    if (lattice_->leq(r, static_cast<Value>(r1))) acc = join(acc, truth(static_cast<Value>(r1), a));
  }
  return acc;
}

Index Algebra::box(Index a) const {
  if (box_.empty()) throw Error(ErrorKind::BoxNotAvailable, "algebra has no box operation");
  return box_[a];
}

std::optional<Index> Algebra::find_function(const Function& f) const {
  if (!presentation_) return std::nullopt;
  const auto& values = presentation_->values;
  auto it = std::lower_bound(values.begin(), values.end(), f);
  if (it == values.end() || *it != f) return std::nullopt;
  return static_cast<Index>(it - values.begin());
}

std::shared_ptr<const Algebra> Algebra::without_box() const {
  auto copy = std::make_shared<Algebra>(*this);
  copy->box_.clear();
  return copy;
}

AlgebraTables Algebra::tables() const {
  AlgebraTables t;
  t.carrier = names_;
  t.meet = meet_;
  t.join = join_;
  t.imp = imp_;
  const auto n = size();
  for (std::size_t r = 0; r < lattice_->size(); ++r) {
    t.truth.emplace_back(truth_.begin() + static_cast<std::ptrdiff_t>(r * n),
                         truth_.begin() + static_cast<std::ptrdiff_t>((r + 1) * n));
  }
  if (!box_.empty()) t.box = box_;
  t.bottom = bottom_;
  t.top = top_;
  return t;
}

std::shared_ptr<const Algebra> Algebra::from_tables(LatticePtr lattice, AlgebraTables tables) {
  const std::size_t n = tables.carrier.size();
  auto schema = [](const std::string& what) { throw Error(ErrorKind::SchemaError, what); };
  if (n == 0) schema("algebra carrier is empty");
  if (tables.meet.size() != n * n || tables.join.size() != n * n || tables.imp.size() != n * n) {
    schema("binary operation tables must be |carrier| x |carrier|");
  }
  if (tables.truth.size() != lattice->size()) schema("need one T table per lattice element");
  for (const auto& row : tables.truth) {
    if (row.size() != n) schema("T table has wrong length");
  }
  if (tables.box && tables.box->size() != n) schema("box table has wrong length");
  auto in_range = [n](const std::vector<Index>& v) {
    return std::all_of(v.begin(), v.end(), [n](Index x) { return x < n; });
  };
  bool ok = in_range(tables.meet) && in_range(tables.join) && in_range(tables.imp) &&
            tables.bottom < n && tables.top < n && (!tables.box || in_range(*tables.box));
  for (const auto& row : tables.truth) ok = ok && in_range(row);
  if (!ok) schema("operation table entry out of range");

  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(), [&](Index a, Index b) { return tables.carrier[a] < tables.carrier[b]; });
  std::vector<Index> rank(n);
  for (Index i = 0; i < n; ++i) rank[order[i]] = i;
  for (Index i = 1; i < n; ++i) {
    if (tables.carrier[order[i]] == tables.carrier[order[i - 1]]) schema("duplicate carrier identifier");
  }

  auto algebra = std::make_shared<Algebra>();
  algebra->lattice_ = std::move(lattice);
  for (auto i : order) algebra->names_.push_back(tables.carrier[i]);
  auto remap_binary = [&](const std::vector<Index>& src) {
    std::vector<Index> out(n * n);
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) out[rank[a] * n + rank[b]] = rank[src[a * n + b]];
    }
    return out;
  };
  algebra->meet_ = remap_binary(tables.meet);
  algebra->join_ = remap_binary(tables.join);
  algebra->imp_ = remap_binary(tables.imp);
  algebra->truth_.assign(algebra->lattice_->size() * n, 0);
  for (std::size_t r = 0; r < tables.truth.size(); ++r) {
    for (Index a = 0; a < n; ++a) algebra->truth_[r * n + rank[a]] = rank[tables.truth[r][a]];
  }
  if (tables.box) {
    algebra->box_.assign(n, 0);
    for (Index a = 0; a < n; ++a) algebra->box_[rank[a]] = rank[(*tables.box)[a]];
  }
  algebra->bottom_ = rank[tables.bottom];
  algebra->top_ = rank[tables.top];
  return algebra;
}

std::shared_ptr<const Algebra> build_functional(LatticePtr lattice, std::vector<std::string> points,
                                                 std::vector<Function> functions,
                                                 const std::optional<Relation>& relation,
                                                 const std::vector<std::string>* names) {
  const auto& l = *lattice;
  std::sort(functions.begin(), functions.end());
  functions.erase(std::unique(functions.begin(), functions.end()), functions.end());
  const std::size_t n = functions.size();
  const std::size_t k = points.size();
  for (const auto& f : functions) {
    if (f.size() != k) throw Error(ErrorKind::SchemaError, "function length differs from point count");
  }
  auto index_of = [&](const Function& f) -> Index {
    auto it = std::lower_bound(functions.begin(), functions.end(), f);
    if (it == functions.end() || *it != f) {
      throw Error(ErrorKind::InvalidAlgebra, "function set is not closed: missing " + function_name(l, f));
    }
    return static_cast<Index>(it - functions.begin());
  };

  auto algebra = std::make_shared<Algebra>();
  algebra->lattice_ = lattice;
  if (names) {
    algebra->names_ = *names;
  } else {
    for (const auto& f : functions) algebra->names_.push_back(function_name(l, f));
  }
  algebra->meet_.resize(n * n);
  algebra->join_.resize(n * n);
  algebra->imp_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      algebra->meet_[a * n + b] = index_of(apply_binary(l, &Lattice::meet, functions[a], functions[b]));
      algebra->join_[a * n + b] = index_of(apply_binary(l, &Lattice::join, functions[a], functions[b]));
      algebra->imp_[a * n + b] = index_of(apply_binary(l, &Lattice::imp, functions[a], functions[b]));
    }
  }
  algebra->truth_.resize(l.size() * n);
  for (std::size_t r = 0; r < l.size(); ++r) {
    for (std::size_t a = 0; a < n; ++a) {
      algebra->truth_[r * n + a] = index_of(apply_truth(l, static_cast<Value>(r), functions[a]));
    }
  }
  if (relation) {
    if (relation->size() != k) throw Error(ErrorKind::SchemaError, "relation size differs from point count");
    algebra->box_.resize(n);
    for (std::size_t a = 0; a < n; ++a) algebra->box_[a] = index_of(apply_box(l, *relation, functions[a]));
  }
  algebra->bottom_ = index_of(constant(k, l.bottom()));
  algebra->top_ = index_of(constant(k, l.top()));
  algebra->presentation_ = FunctionalPresentation{std::move(points), std::move(functions)};
  return algebra;
}

AlgebraPtr make_algebra_from_functions(LatticePtr lattice, std::vector<std::string> points,
                                       std::vector<Function> functions, const std::optional<Relation>& relation) {
  return build_functional(std::move(lattice), std::move(points), std::move(functions), relation, nullptr);
}

AlgebraPtr functional_algebra(const LatticePtr& lattice, std::vector<std::string> points,
                              const std::vector<Function>& generators, const std::optional<Relation>& modal_relation,
                              std::size_t cap) {
  const auto& l = *lattice;
  const std::size_t k = points.size();
  std::vector<Function> elems;
  std::map<Function, std::size_t> seen;
  auto add = [&](Function f) {
    if (f.size() != k) throw Error(ErrorKind::SchemaError, "generator length differs from point count");
    for (auto v : f) {
      if (v >= l.size()) throw Error(ErrorKind::SchemaError, "generator value outside the lattice");
    }
    if (seen.emplace(f, elems.size()).second) {
      elems.push_back(std::move(f));
      if (elems.size() > cap) {
        throw Error(ErrorKind::ClosureTooLarge, "closure exceeds " + std::to_string(cap) + " elements");
      }
    }
  };
  if (modal_relation && modal_relation->size() != k) {
    throw Error(ErrorKind::SchemaError, "relation size differs from point count");
  }
  add(constant(k, l.bottom()));
  add(constant(k, l.top()));
  for (const auto& g : generators) add(g);

  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t r = 0; r < l.size(); ++r) add(apply_truth(l, static_cast<Value>(r), elems[i]));
    if (modal_relation) add(apply_box(l, *modal_relation, elems[i]));
    for (std::size_t j = 0; j <= i; ++j) {
      // add() may reallocate elems; operate on copies.
      Function fi = elems[i], fj = elems[j];
      add(apply_binary(l, &Lattice::meet, fi, fj));
      add(apply_binary(l, &Lattice::join, fi, fj));
      add(apply_binary(l, &Lattice::imp, fi, fj));
      add(apply_binary(l, &Lattice::imp, fj, fi));
    }
  }
  return make_algebra_from_functions(lattice, std::move(points), std::move(elems), modal_relation);
}

AlgebraPtr lattice_algebra(const LatticePtr& lattice) {
  SubalgebraFamily family(lattice);
  return lattice_algebra(family, family.full_index());
}

AlgebraPtr lattice_algebra(const SubalgebraFamily& family, std::size_t member) {
  const auto& lattice = family.lattice();
  std::vector<Function> functions;
  std::vector<std::string> names;
  // Member values are ascending, which is also the sorted-name order.
  for (auto v : family.member(member)) {
    functions.push_back({v});
    names.push_back(lattice->element_name(v));
  }
  return build_functional(lattice, {"*"}, std::move(functions), std::nullopt, &names);
}

AlgebraPtr with_identity_box(const AlgebraPtr& algebra) {
  auto copy = std::make_shared<Algebra>(*algebra);
  copy->box_.resize(copy->size());
  std::iota(copy->box_.begin(), copy->box_.end(), Index{0});
  return copy;
}

namespace {

std::string ename(const Algebra& a, Index i) { return a.element_name(i); }

Verdict hom_fail(const std::string& equation, const Algebra& src, std::initializer_list<Index> args) {
  Witness w{{"equation", equation}};
  const char* labels[] = {"a", "b"};
  std::size_t i = 0;
  for (auto x : args) w.emplace_back(labels[i++], ename(src, x));
  return Verdict::fail("homomorphism", std::move(w));
}

}  // namespace

Verdict is_homomorphism(std::span<const Index> map, const Algebra& source, const Algebra& target, bool modal) {
  if (!same_lattice(source.lattice(), target.lattice())) {
    throw Error(ErrorKind::MismatchedLattice, "algebras are over different lattices");
  }
  const auto n = source.size();
  if (map.size() != n) throw Error(ErrorKind::TypeMismatch, "map is not total on the source carrier");
  for (auto b : map) {
    if (b >= target.size()) throw Error(ErrorKind::TypeMismatch, "map leaves the target carrier");
  }
  if (modal && (!source.is_modal() || !target.is_modal())) {
    throw Error(ErrorKind::BoxNotAvailable, "modal homomorphism check needs two modal algebras");
  }
  if (map[source.bottom()] != target.bottom()) return hom_fail("h(0) = 0", source, {});
  if (map[source.top()] != target.top()) return hom_fail("h(1) = 1", source, {});
  const auto& l = source.lattice();
  for (Index a = 0; a < n; ++a) {
    for (std::size_t r = 0; r < l.size(); ++r) {
      auto rv = static_cast<Value>(r);
      if (map[source.truth(rv, a)] != target.truth(rv, map[a])) {
        return hom_fail("h(T_" + l.element_name(rv) + "(a)) = T_" + l.element_name(rv) + "(h(a))", source, {a});
      }
    }
    if (modal && map[source.box(a)] != target.box(map[a])) return hom_fail("h(box a) = box h(a)", source, {a});
    for (Index b = 0; b < n; ++b) {
      if (map[source.meet(a, b)] != target.meet(map[a], map[b])) {
        return hom_fail("h(a & b) = h(a) & h(b)", source, {a, b});
      }
      if (map[source.join(a, b)] != target.join(map[a], map[b])) {
        return hom_fail("h(a | b) = h(a) | h(b)", source, {a, b});
      }
      if (map[source.imp(a, b)] != target.imp(map[a], map[b])) {
        return hom_fail("h(a -> b) = h(a) -> h(b)", source, {a, b});
      }
    }
  }
  return Verdict::pass("homomorphism");
}

namespace {

std::vector<bool> close_under_ops(const Algebra& algebra, std::vector<bool> mask, bool with_box) {
  const auto n = algebra.size();
  const auto& l = algebra.lattice();
  std::vector<Index> members;
  for (Index a = 0; a < n; ++a) {
    if (mask[a]) members.push_back(a);
  }
  std::vector<bool> queued = mask;
  auto add = [&](Index x) {
    if (!mask[x]) {
      mask[x] = true;
      members.push_back(x);
    }
  };
  for (std::size_t i = 0; i < members.size(); ++i) {
    Index a = members[i];
    for (std::size_t r = 0; r < l.size(); ++r) add(algebra.truth(static_cast<Value>(r), a));
    if (with_box) add(algebra.box(a));
    for (std::size_t j = 0; j <= i; ++j) {
      Index b = members[j];
      add(algebra.meet(a, b));
      add(algebra.join(a, b));
      add(algebra.imp(a, b));
      add(algebra.imp(b, a));
    }
  }
  return mask;
}

class HomSearch {
 public:
  HomSearch(const Algebra& source, const Algebra& target, bool modal)
      : src_(source), dst_(target), modal_(modal) {}

  std::vector<std::vector<Index>> run() {
    gens_ = generating_set(src_, modal_);
    State state{std::vector<Index>(src_.size(), kUnset), {}};
    if (assign(state, src_.bottom(), dst_.bottom()) && assign(state, src_.top(), dst_.top())) {
      descend(state, 0);
    }
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  struct State {
    std::vector<Index> image;
    std::vector<Index> assigned;
  };

  bool assign(State& s, Index a0, Index b0) {
    std::deque<std::pair<Index, Index>> queue{{a0, b0}};
    const auto& l = src_.lattice();
    while (!queue.empty()) {
      auto [a, b] = queue.front();
      queue.pop_front();
      if (s.image[a] != kUnset) {
        if (s.image[a] != b) return false;
        continue;
      }
      s.image[a] = b;
      s.assigned.push_back(a);
      for (std::size_t r = 0; r < l.size(); ++r) {
        auto rv = static_cast<Value>(r);
        queue.emplace_back(src_.truth(rv, a), dst_.truth(rv, b));
      }
      if (modal_) queue.emplace_back(src_.box(a), dst_.box(b));
      for (Index c : s.assigned) {
        Index bc = s.image[c];
        queue.emplace_back(src_.meet(a, c), dst_.meet(b, bc));
        queue.emplace_back(src_.join(a, c), dst_.join(b, bc));
        queue.emplace_back(src_.imp(a, c), dst_.imp(b, bc));
        queue.emplace_back(src_.imp(c, a), dst_.imp(bc, b));
      }
    }
    return true;
  }

  void descend(const State& s, std::size_t depth) {
    if (depth == gens_.size()) {
      // The generators and constants generate the carrier, so every element is assigned.
      assert(std::find(s.image.begin(), s.image.end(), kUnset) == s.image.end());
      found_.push_back(s.image);
      return;
    }
    Index g = gens_[depth];
    if (s.image[g] != kUnset) {
      descend(s, depth + 1);
      return;
    }
    for (Index b = 0; b < dst_.size(); ++b) {
      State next = s;
      if (assign(next, g, b)) descend(next, depth + 1);
    }
  }

  const Algebra& src_;
  const Algebra& dst_;
  bool modal_;
  std::vector<Index> gens_;
  std::vector<std::vector<Index>> found_;
};

}  // namespace

std::vector<Index> generating_set(const Algebra& algebra, bool with_box) {
  const auto n = algebra.size();
  std::vector<bool> mask(n, false);
  mask[algebra.bottom()] = mask[algebra.top()] = true;
  mask = close_under_ops(algebra, std::move(mask), with_box);
  std::vector<Index> gens;
  for (Index a = 0; a < n; ++a) {
    if (mask[a]) continue;
    gens.push_back(a);
    mask[a] = true;
    mask = close_under_ops(algebra, std::move(mask), with_box);
  }
  return gens;
}

std::vector<Homomorphism> enumerate_homs(const AlgebraPtr& source, const AlgebraPtr& target, bool modal) {
  if (!same_lattice(source->lattice(), target->lattice())) {
    throw Error(ErrorKind::MismatchedLattice, "algebras are over different lattices");
  }
  if (modal && (!source->is_modal() || !target->is_modal())) {
    throw Error(ErrorKind::BoxNotAvailable, "modal homomorphisms need two modal algebras");
  }
  std::vector<Homomorphism> out;
  for (auto& map : HomSearch(*source, *target, modal).run()) {
    out.push_back(Homomorphism{source, target, std::move(map), modal});
  }
  return out;
}

Homomorphism compose(const Homomorphism& g, const Homomorphism& f) {
  if (f.map.size() != f.source->size() || g.map.size() != g.source->size() || f.target->size() != g.source->size()) {
    throw Error(ErrorKind::TypeMismatch, "homomorphisms do not compose");
  }
  Homomorphism out{f.source, g.target, std::vector<Index>(f.map.size()), f.modal && g.modal};
  for (std::size_t a = 0; a < f.map.size(); ++a) out.map[a] = g.map[f.map[a]];
  return out;
}

Homomorphism identity_hom(const AlgebraPtr& algebra) {
  Homomorphism h{algebra, algebra, std::vector<Index>(algebra->size()), algebra->is_modal()};
  std::iota(h.map.begin(), h.map.end(), Index{0});
  return h;
}

namespace {

Verdict law_fail(const std::string& check, const std::string& equation, const Algebra& alg,
                 std::initializer_list<Index> args) {
  Witness w{{"equation", equation}};
  const char* labels[] = {"a", "b", "c"};
  std::size_t i = 0;
  for (auto x : args) w.emplace_back(labels[i++], alg.element_name(x));
  return Verdict::fail(check, std::move(w));
}

constexpr std::size_t kExhaustiveLimit = 128;

}  // namespace

Verdict validate_vl(const Algebra& alg) {
  const std::string check = "vl-algebra";
  const auto n = alg.size();
  const auto& l = alg.lattice();
  const bool exhaustive = alg.functional() == nullptr || n <= kExhaustiveLimit;

  if (const auto* fp = alg.functional()) {
    for (Index a = 0; a < n; ++a) {
      const auto& fa = fp->values[a];
      for (std::size_t x = 0; x < fa.size(); ++x) {
        for (std::size_t r = 0; r < l.size(); ++r) {
          auto rv = static_cast<Value>(r);
          if (fp->values[alg.truth(rv, a)][x] != l.truth(rv, fa[x])) {
            return law_fail(check, "T_" + l.element_name(rv) + " agrees pointwise", alg, {a});
          }
        }
      }
      for (Index b = 0; b < n; ++b) {
        const auto& fb = fp->values[b];
        for (std::size_t x = 0; x < fa.size(); ++x) {
          if (fp->values[alg.meet(a, b)][x] != l.meet(fa[x], fb[x])) return law_fail(check, "meet agrees pointwise", alg, {a, b});
          if (fp->values[alg.join(a, b)][x] != l.join(fa[x], fb[x])) return law_fail(check, "join agrees pointwise", alg, {a, b});
          if (fp->values[alg.imp(a, b)][x] != l.imp(fa[x], fb[x])) return law_fail(check, "imp agrees pointwise", alg, {a, b});
        }
      }
    }
  }

  for (Index a = 0; a < n; ++a) {
    if (alg.meet(a, a) != a || alg.join(a, a) != a) return law_fail(check, "idempotence", alg, {a});
    if (alg.meet(a, alg.bottom()) != alg.bottom()) return law_fail(check, "a & 0 = 0", alg, {a});
    if (alg.join(a, alg.top()) != alg.top()) return law_fail(check, "a | 1 = 1", alg, {a});
    if (alg.meet(a, alg.top()) != a) return law_fail(check, "a & 1 = a", alg, {a});
    if (alg.join(a, alg.bottom()) != a) return law_fail(check, "a | 0 = a", alg, {a});
    Index any = alg.bottom();
    for (std::size_t r = 0; r < l.size(); ++r) any = alg.join(any, alg.truth(static_cast<Value>(r), a));
    if (any != alg.top()) return law_fail(check, "join over r of T_r(a) = 1", alg, {a});
    for (Index b = 0; b < n; ++b) {
      if (alg.meet(a, b) != alg.meet(b, a)) return law_fail(check, "meet commutative", alg, {a, b});
      if (alg.join(a, b) != alg.join(b, a)) return law_fail(check, "join commutative", alg, {a, b});
      if (alg.meet(a, alg.join(a, b)) != a) return law_fail(check, "a & (a | b) = a", alg, {a, b});
      if (alg.join(a, alg.meet(a, b)) != a) return law_fail(check, "a | (a & b) = a", alg, {a, b});
      Index lhs = alg.top();
      for (std::size_t r = 0; r < l.size(); ++r) {
        auto rv = static_cast<Value>(r);
        lhs = alg.meet(lhs, alg.biimp(alg.truth(rv, a), alg.truth(rv, b)));
      }
      if (!alg.leq(lhs, alg.biimp(a, b))) {
        return law_fail(check, "meet over r of (T_r(a) <-> T_r(b)) <= (a <-> b)", alg, {a, b});
      }
      if (!exhaustive) continue;
      for (Index c = 0; c < n; ++c) {
        if (alg.meet(a, alg.meet(b, c)) != alg.meet(alg.meet(a, b), c)) return law_fail(check, "meet associative", alg, {a, b, c});
        if (alg.join(a, alg.join(b, c)) != alg.join(alg.join(a, b), c)) return law_fail(check, "join associative", alg, {a, b, c});
        if (alg.meet(a, alg.join(b, c)) != alg.join(alg.meet(a, b), alg.meet(a, c))) {
          return law_fail(check, "a & (b | c) = (a & b) | (a & c)", alg, {a, b, c});
        }
      }
    }
  }
  return Verdict::pass(check, exhaustive ? "" : "associativity/distributivity inherited from the functional presentation");
}

Verdict validate_ml(const Algebra& alg) {
  if (auto v = validate_vl(alg); !v.passed) return v;
  const std::string check = "ml-algebra";
  if (!alg.is_modal()) return Verdict::fail(check, {{"equation", "box operation present"}});
  const auto n = alg.size();
  const auto& l = alg.lattice();
  if (alg.box(alg.top()) != alg.top()) return law_fail(check, "box 1 = 1", alg, {});
  for (Index a = 0; a < n; ++a) {
    for (std::size_t r = 0; r < l.size(); ++r) {
      auto rv = static_cast<Value>(r);
      if (alg.up(rv, alg.box(a)) != alg.box(alg.up(rv, a))) {
        return law_fail(check, "U_" + l.element_name(rv) + "(box a) = box U_" + l.element_name(rv) + "(a)", alg, {a});
      }
    }
    for (Index b = 0; b < n; ++b) {
      if (alg.box(alg.meet(a, b)) != alg.meet(alg.box(a), alg.box(b))) {
        return law_fail(check, "box(a & b) = box a & box b", alg, {a, b});
      }
    }
  }
  return Verdict::pass(check);
}

}  // namespace lvd
