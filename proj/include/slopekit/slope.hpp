#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "slopekit/checked.hpp"

namespace slopekit {

/// A slope on the torus: an isotopy class of essential simple closed curves,
/// held as a primitive integer pair (p, q) up to sign and written p/q.
///
/// Canonical form: gcd(|p|, |q|) = 1 and q > 0, or p = 1 when q = 0; the
/// meridian is exactly 1/0. Construction canonicalizes, so equal slopes are
/// always componentwise equal, and values are immutable afterwards.
class Slope {
 public:
  Slope() = default;  // the meridian 1/0
  Slope(std::int64_t p, std::int64_t q);

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  bool is_meridian() const { return q_ == 0; }

  friend bool operator==(const Slope&, const Slope&) = default;

  // Canonical order: by denominator, then numerator; the meridian sorts first.
  friend std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
    if (auto c = a.q_ <=> b.q_; c != 0) return c;
    return a.p_ <=> b.p_;
  }

 private:
  std::int64_t p_ = 1;
  std::int64_t q_ = 0;
};

/// Canonical primitive representative of (p, q); rejects (0, 0).
Slope make_slope(std::int64_t p, std::int64_t q);

/// Distance of two slopes, |p1 q2 - p2 q1|: the minimal geometric
/// intersection number of representatives. Zero iff equal; symmetric.
std::int64_t distance(const Slope& a, const Slope& b);

/// A unimodular change of meridian-longitude marking, acting on slopes by
/// (p, q) -> (a p + b q, c p + d q) followed by canonicalization.
/// Determinant -1 realizes the mirror image. Distances are invariant.
class MarkingTransform {
 public:
  MarkingTransform() = default;  // identity
  MarkingTransform(std::int64_t a, std::int64_t b, std::int64_t c,
                   std::int64_t d);

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t c() const { return c_; }
  std::int64_t d() const { return d_; }
  std::int64_t det() const;

  static MarkingTransform identity() { return {}; }
  /// Longitude re-choice (1 n; 0 1): p/q -> (p + n q)/q. Fixes the meridian.
  static MarkingTransform translation(std::int64_t n);
  /// Mirror image (-1 0; 0 1): p/q -> -p/q.
  static MarkingTransform mirror();
  /// Some unimodular transform sending r to the meridian 1/0.
  static MarkingTransform sending_to_meridian(const Slope& r);

  friend bool operator==(const MarkingTransform&,
                         const MarkingTransform&) = default;

 private:
  std::int64_t a_ = 1, b_ = 0, c_ = 0, d_ = 1;
};

Slope apply(const MarkingTransform& t, const Slope& r);

/// Matrix product: apply(compose(s, t), r) == apply(s, apply(t, r)).
MarkingTransform compose(const MarkingTransform& s, const MarkingTransform& t);
MarkingTransform inverse(const MarkingTransform& t);

/// All canonical slopes with 0 <= q <= q_max and |p| <= p_bound, each once,
/// in canonical order (the meridian first). An explicit window is mandatory:
/// already the slopes at distance 1 from the meridian are infinite in number.
std::vector<Slope> enumerate_slopes(std::int64_t q_max, std::int64_t p_bound);

/// Error for malformed textual input; line() is 1-based, 0 when the input
/// has no line structure.
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what, int line = 0)
      : std::runtime_error(what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_ = 0;
};

/// Parses a slope literal "p/q" (optional leading minus on either part).
/// Non-canonical input such as "2/4" or "3/-2" is accepted and canonicalized.
Slope parse_slope(std::string_view text);
std::string format_slope(const Slope& s);
std::ostream& operator<<(std::ostream& os, const Slope& s);

}  // namespace slopekit
