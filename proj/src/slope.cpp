#include "slopekit/slope.hpp"

#include <charconv>
#include <numeric>
#include <ostream>

namespace slopekit {

Slope::Slope(std::int64_t p, std::int64_t q) {
  if (p == 0 && q == 0)
    throw std::invalid_argument("(0, 0) does not represent a slope");
  const std::int64_t g = std::gcd(checked_abs(p), checked_abs(q));
  p /= g;
  q /= g;
  if (q < 0 || (q == 0 && p < 0)) {
    p = checked_neg(p);
    q = checked_neg(q);
  }
  p_ = p;
  q_ = q;
}

Slope make_slope(std::int64_t p, std::int64_t q) { return Slope(p, q); }

std::int64_t distance(const Slope& a, const Slope& b) {
  return checked_abs(
      checked_sub(checked_mul(a.p(), b.q()), checked_mul(b.p(), a.q())));
}

MarkingTransform::MarkingTransform(std::int64_t a, std::int64_t b,
                                   std::int64_t c, std::int64_t d)
    : a_(a), b_(b), c_(c), d_(d) {
  if (checked_abs(det()) != 1)
    throw std::invalid_argument("marking transform must be unimodular");
}

std::int64_t MarkingTransform::det() const {
  return checked_sub(checked_mul(a_, d_), checked_mul(b_, c_));
}

MarkingTransform MarkingTransform::translation(std::int64_t n) {
  return {1, n, 0, 1};
}

MarkingTransform MarkingTransform::mirror() { return {-1, 0, 0, 1}; }

MarkingTransform MarkingTransform::sending_to_meridian(const Slope& r) {
  // Extended Euclid: x p + y q = 1 (r is primitive), then (x y; -q p)
  // maps (p, q) to (1, 0) and has determinant x p + y q = 1.
  std::int64_t old_r = r.p(), new_r = r.q();
  std::int64_t old_x = 1, new_x = 0;
  std::int64_t old_y = 0, new_y = 1;
  while (new_r != 0) {
    const std::int64_t quot = old_r / new_r;
    std::int64_t t = checked_sub(old_r, checked_mul(quot, new_r));
    old_r = new_r;
    new_r = t;
    t = checked_sub(old_x, checked_mul(quot, new_x));
    old_x = new_x;
    new_x = t;
    t = checked_sub(old_y, checked_mul(quot, new_y));
    old_y = new_y;
    new_y = t;
  }
  if (old_r < 0) {
    old_r = checked_neg(old_r);
    old_x = checked_neg(old_x);
    old_y = checked_neg(old_y);
  }
  return {old_x, old_y, checked_neg(r.q()), r.p()};
}

Slope apply(const MarkingTransform& t, const Slope& r) {
  return Slope(
      checked_add(checked_mul(t.a(), r.p()), checked_mul(t.b(), r.q())),
      checked_add(checked_mul(t.c(), r.p()), checked_mul(t.d(), r.q())));
}

MarkingTransform compose(const MarkingTransform& s,
                         const MarkingTransform& t) {
  return {checked_add(checked_mul(s.a(), t.a()), checked_mul(s.b(), t.c())),
          checked_add(checked_mul(s.a(), t.b()), checked_mul(s.b(), t.d())),
          checked_add(checked_mul(s.c(), t.a()), checked_mul(s.d(), t.c())),
          checked_add(checked_mul(s.c(), t.b()), checked_mul(s.d(), t.d()))};
}

MarkingTransform inverse(const MarkingTransform& t) {
  if (t.det() == 1) return {t.d(), checked_neg(t.b()), checked_neg(t.c()), t.a()};
  return {checked_neg(t.d()), t.b(), t.c(), checked_neg(t.a())};
}

std::vector<Slope> enumerate_slopes(std::int64_t q_max, std::int64_t p_bound) {
  if (q_max < 0) throw std::invalid_argument("enumerate_slopes: q_max < 0");
  if (p_bound < 1) throw std::invalid_argument("enumerate_slopes: p_bound < 1");
  std::vector<Slope> out;
  out.emplace_back();  // 1/0
  for (std::int64_t q = 1; q <= q_max; ++q)
    for (std::int64_t p = -p_bound; p <= p_bound; ++p)
      if (std::gcd(checked_abs(p), q) == 1) out.emplace_back(p, q);
  return out;
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    throw parse_error("malformed slope literal '" + std::string(whole) + "'");
  return value;
}

}  // namespace

Slope parse_slope(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos || slash == 0 || slash + 1 == s.size())
    throw parse_error("malformed slope literal '" + std::string(text) + "'");
  const std::int64_t p = parse_int(s.substr(0, slash), text);
  const std::int64_t q = parse_int(s.substr(slash + 1), text);
  if (p == 0 && q == 0)
    throw parse_error("slope literal '" + std::string(text) +
                      "' denotes (0, 0), which is not a slope");
  return Slope(p, q);
}

std::string format_slope(const Slope& s) {
  return std::to_string(s.p()) + "/" + std::to_string(s.q());
}

std::ostream& operator<<(std::ostream& os, const Slope& s) {
  return os << format_slope(s);
}

}  // namespace slopekit
