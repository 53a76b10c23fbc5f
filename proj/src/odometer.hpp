#pragma once

#include <cstddef>
#include <vector>

namespace lvd::detail {

/// Steps a mixed-radix counter; false once it wraps back to all zeros.
inline bool advance(std::vector<std::size_t>& digits, const std::vector<std::size_t>& radix) {
  for (std::size_t i = digits.size(); i > 0; --i) {
    if (++digits[i - 1] < radix[i - 1]) return true;
    digits[i - 1] = 0;
  }
  return false;
}

}  // namespace lvd::detail
