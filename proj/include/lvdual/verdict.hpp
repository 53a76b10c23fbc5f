#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lvd {

/// Key/value description of a violated equation or condition.
using Witness = std::vector<std::pair<std::string, std::string>>;

struct Verdict {
  std::string check;
  bool passed = true;
  std::optional<Witness> counterexample;
  std::string note;

  static Verdict pass(std::string check, std::string note = {}) {
    return Verdict{std::move(check), true, std::nullopt, std::move(note)};
  }
  static Verdict fail(std::string check, Witness witness) {
    return Verdict{std::move(check), false, std::move(witness), {}};
  }

  explicit operator bool() const noexcept { return passed; }
};

/// First failing verdict wins; an all-pass list collapses to a pass named `check`.
Verdict combine(std::string check, const std::vector<Verdict>& parts);

bool all_passed(const std::vector<Verdict>& verdicts);

}  // namespace lvd
