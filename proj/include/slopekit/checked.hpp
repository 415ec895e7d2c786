#pragma once

#include <cstdint>
#include <stdexcept>

namespace slopekit {

// Exact 64-bit arithmetic that faults instead of wrapping. All slope math
// goes through these helpers; the documented search windows keep every
// product far below the limits, so a trip here means a caller escaped its
// window and must not be absorbed silently.
class overflow_error : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw overflow_error("64-bit overflow in addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw overflow_error("64-bit overflow in subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw overflow_error("64-bit overflow in multiplication");
  return r;
}

inline std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

inline std::int64_t checked_abs(std::int64_t a) {
  return a < 0 ? checked_neg(a) : a;
}

}  // namespace slopekit
