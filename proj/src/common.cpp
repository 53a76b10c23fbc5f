#include "lvdual/relation.hpp"
#include "lvdual/verdict.hpp"

namespace lvd {

Verdict combine(std::string check, const std::vector<Verdict>& parts) {
  for (const auto& part : parts) {
    if (!part.passed) {
      Witness witness{{"failed_check", part.check}};
      if (part.counterexample) {
        witness.insert(witness.end(), part.counterexample->begin(), part.counterexample->end());
      }
      return Verdict::fail(std::move(check), std::move(witness));
    }
  }
  return Verdict::pass(std::move(check));
}

bool all_passed(const std::vector<Verdict>& verdicts) {
  for (const auto& v : verdicts) {
    if (!v.passed) return false;
  }
  return true;
}

Relation Relation::identity(std::size_t n) {
  Relation r(n);
  for (std::size_t i = 0; i < n; ++i) r.set(i, i);
  return r;
}

Relation Relation::from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  Relation r(n);
  for (auto [x, y] : pairs) r.set(x, y);
  return r;
}

std::vector<std::size_t> Relation::successors(std::size_t x) const {
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < n_; ++y) {
    if (holds(x, y)) out.push_back(y);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Relation::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < n_; ++x) {
    for (std::size_t y = 0; y < n_; ++y) {
      if (holds(x, y)) out.emplace_back(x, y);
    }
  }
  return out;
}

}  // namespace lvd
