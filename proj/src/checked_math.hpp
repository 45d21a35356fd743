#pragma once

#include <cassert>
#include <cstdint>

namespace oddpres::detail {

// Overflow is a logic error for every computation in this library; debug builds
// trap on it, release builds keep the plain machine arithmetic.
inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  [[maybe_unused]] bool overflow = __builtin_add_overflow(a, b, &r);
  assert(!overflow);
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  [[maybe_unused]] bool overflow = __builtin_sub_overflow(a, b, &r);
  assert(!overflow);
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  [[maybe_unused]] bool overflow = __builtin_mul_overflow(a, b, &r);
  assert(!overflow);
  return r;
}

}  // namespace oddpres::detail
