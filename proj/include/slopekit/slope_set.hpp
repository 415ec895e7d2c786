#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "slopekit/slope.hpp"

namespace slopekit {

/// A finite set of distinct canonical slopes, kept in canonical order.
/// Immutable in spirit: analytics below are pure functions of the set.
class SlopeSet {
 public:
  SlopeSet() = default;
  explicit SlopeSet(std::vector<Slope> slopes);  // sorts and drops duplicates

  bool insert(const Slope& s);  // false if already present
  bool contains(const Slope& s) const;
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const std::vector<Slope>& elements() const { return elements_; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  friend bool operator==(const SlopeSet&, const SlopeSet&) = default;
  friend std::strong_ordering operator<=>(const SlopeSet& a, const SlopeSet& b);

 private:
  std::vector<Slope> elements_;
};

/// Maximum pairwise distance; 0 for sets with fewer than two elements.
std::int64_t diameter(const SlopeSet& s);

/// The first pair (in canonical pair order) realizing the diameter.
/// Requires size >= 2.
std::pair<Slope, Slope> diameter_pair(const SlopeSet& s);

/// Sorted multiset of all pairwise distances. Invariant under any marking
/// transform applied to the whole set.
std::vector<std::int64_t> distance_profile(const SlopeSet& s);

/// Finite enumeration window for center searches.
struct Window {
  std::int64_t q_max = 1;
  std::int64_t p_bound = 1;
};

/// A window guaranteed to contain every slope gamma with
/// max_{r in s} distance(gamma, r) <= k, derived from a diameter-realizing
/// pair: such gamma satisfies |q| <= k (q1 + q2) / D and
/// |p| <= k (|p1| + |p2|) / D by Cramer's rule. For sets of diameter 0 the
/// candidate family is infinite and the window is merely a reasonable
/// neighborhood of the set.
Window default_center_window(const SlopeSet& s, std::int64_t k);

/// All slopes gamma in the window with distance(gamma, r) <= k for every
/// r in s; gamma may itself belong to s. Canonical order.
std::vector<Slope> centers(const SlopeSet& s, std::int64_t k, const Window& w);
std::vector<Slope> centers(const SlopeSet& s, std::int64_t k);

struct Normalization {
  SlopeSet set;
  MarkingTransform transform;
};

/// Deterministic marking normalization: the canonically least element is
/// sent to the meridian 1/0, and the least remaining element's numerator is
/// translated into [0, q). The distance profile is unchanged. Rejects the
/// empty set.
Normalization normalize_set(const SlopeSet& s);

SlopeSet apply(const MarkingTransform& t, const SlopeSet& s);

/// `.slopes` text format: one slope literal per line, `#` starts a comment,
/// blank lines ignored. Duplicates after canonicalization are rejected with
/// the offending line number.
SlopeSet load_set(std::istream& in);
SlopeSet load_set_file(const std::string& path);
void save_set(const SlopeSet& s, std::ostream& out);
void save_set_file(const SlopeSet& s, const std::string& path);

/// The 12-slope set with diameter 8, showing that a diameter bound alone
/// does not force a small cardinality.
SlopeSet paper_example_set();

}  // namespace slopekit
