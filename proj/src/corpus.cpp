#include "lvdual/corpus.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <tuple>

#include "odometer.hpp"

namespace lvd {

namespace {

using FunctionSet = std::vector<Function>;  // sorted

FunctionSet close(const LatticePtr& l, const std::vector<std::string>& points, const FunctionSet& gens) {
  auto a = functional_algebra(l, points, gens);
  return a->functional()->values;
}

std::vector<Function> all_functions(const Lattice& l, std::size_t n) {
  std::vector<Function> out;
  std::vector<std::size_t> digits(n, 0), radix(n, l.size());
  do {
    out.emplace_back(digits.begin(), digits.end());
  } while (detail::advance(digits, radix));
  return out;
}

std::vector<FunctionSet> enumerate_subalgebra_sets(const LatticePtr& l, std::size_t n) {
  auto points = corpus_points(n);
  auto everything = all_functions(*l, n);
  std::set<FunctionSet> seen;
  std::deque<FunctionSet> queue;
  auto start = close(l, points, {});
  seen.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    auto cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& f : everything) {
      if (std::binary_search(cur.begin(), cur.end(), f)) continue;
      auto gens = cur;
      gens.push_back(f);
      auto next = close(l, points, gens);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<FunctionSet> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

std::vector<FunctionSet> subalgebra_sets(const LatticePtr& l, std::size_t n) {
  // keyed by the lattice's order table, which identifies it up to naming
  using Key = std::tuple<std::vector<std::string>, std::vector<std::pair<Value, Value>>, std::size_t>;
  static std::mutex mu;
  static std::map<Key, std::vector<FunctionSet>> cache;
  Key key{l->elements(), l->covers(), n};
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto sets = enumerate_subalgebra_sets(l, n);
  std::lock_guard lock(mu);
  return cache.emplace(std::move(key), std::move(sets)).first->second;
}

bool separates(const FunctionSet& fs, std::size_t n) {
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      bool differ = false;
      for (const auto& f : fs) differ = differ || f[x] != f[y];
      if (!differ) return false;
    }
  }
  return true;
}

Function box_of(const Lattice& l, const Relation& r, const Function& f) {
  Function out(f.size(), l.top());
  for (std::size_t x = 0; x < f.size(); ++x) {
    for (auto y : r.successors(x)) out[x] = l.meet(out[x], f[y]);
  }
  return out;
}

Relation relation_from_bits(std::size_t n, std::uint32_t bits) {
  Relation r(n);
  for (std::size_t b = 0; b < n * n; ++b) r.set(b / n, b % n, (bits >> b) & 1u);
  return r;
}

}  // namespace

std::vector<std::string> corpus_points(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

std::vector<AlgebraPtr> vl_corpus(const LatticePtr& lattice, std::size_t max_points) {
  std::vector<AlgebraPtr> out;
  for (std::size_t n = 1; n <= max_points; ++n) {
    for (auto& fs : subalgebra_sets(lattice, n)) {
      out.push_back(make_algebra_from_functions(lattice, corpus_points(n), std::move(fs)));
    }
  }
  return out;
}

std::vector<ModalInstance> ml_corpus(const LatticePtr& lattice, std::size_t max_points) {
  std::vector<ModalInstance> out;
  const auto& l = *lattice;
  for (std::size_t n = 1; n <= max_points; ++n) {
    auto sets = subalgebra_sets(lattice, n);
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << (n * n)); ++bits) {
      auto rel = relation_from_bits(n, bits);
      for (const auto& fs : sets) {
        bool closed = true;
        for (const auto& f : fs) {
          closed = closed && std::binary_search(fs.begin(), fs.end(), box_of(l, rel, f));
        }
        if (closed) out.push_back({make_algebra_from_functions(lattice, corpus_points(n), fs, rel), rel});
      }
    }
  }
  return out;
}

std::vector<SystemPtr> system_corpus(const LatticePtr& lattice, std::size_t max_points, bool modal) {
  std::vector<SystemPtr> out;
  if (modal) {
    for (const auto& inst : ml_corpus(lattice, max_points)) {
      const auto& fp = *inst.algebra->functional();
      if (separates(fp.values, fp.points.size())) out.push_back(function_system(inst.algebra, inst.relation));
    }
  } else {
    for (const auto& a : vl_corpus(lattice, max_points)) {
      const auto& fp = *a->functional();
      if (separates(fp.values, fp.points.size())) out.push_back(function_system(a));
    }
  }
  return out;
}

std::vector<SpacePtr> space_corpus(const LatticePtr& lattice, std::size_t max_points, bool modal) {
  std::vector<SpacePtr> out;
  SubalgebraFamily family(lattice);
  for (std::size_t n = 1; n <= max_points; ++n) {
    std::vector<std::size_t> minimal(n, 0), radix(n, family.size());
    do {
      if (!modal) {
        out.push_back(space_from_minimal(lattice, corpus_points(n), minimal));
        continue;
      }
      for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << (n * n)); ++bits) {
        auto rel = relation_from_bits(n, bits);
        // heredity: x R y requires the subalgebra of y to lie inside that of x
        bool hereditary = true;
        for (auto [x, y] : rel.pairs()) {
          const auto& mx = family.member(minimal[x]);
          const auto& my = family.member(minimal[y]);
          hereditary = hereditary && std::includes(mx.begin(), mx.end(), my.begin(), my.end());
        }
        if (hereditary) out.push_back(space_from_minimal(lattice, corpus_points(n), minimal, rel));
      }
    } while (detail::advance(minimal, radix));
  }
  return out;
}

}  // namespace lvd
