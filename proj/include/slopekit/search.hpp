#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slopekit/slope_set.hpp"

namespace slopekit {

/// Default cap on the searched diameter bound; the candidate window grows
/// quadratically in it.
inline constexpr std::int64_t kDiameterGuard = 16;

struct SearchConfig {
  std::int64_t diameter_bound = 8;
  /// When set, every accepted set must admit a center slope within this
  /// distance of all elements. The center need not belong to the set.
  std::optional<std::int64_t> center_k;
  /// Fix 1/0 as a set element (a completeness-preserving normalization:
  /// every slope set maps onto one containing 1/0 by a marking transform).
  /// With false, the meridian becomes an optional candidate instead; the
  /// result is provably identical and the flag exists for cross-checking.
  bool assume_meridian = true;
  bool override_guard = false;
  int jobs = 0;  // 0 = one worker per processor
  /// Explore candidates in reverse canonical order. The result must not
  /// depend on it; exposed so tests can assert exactly that.
  bool reverse_branching = false;
};

struct SearchResult {
  std::int64_t max_cardinality = 0;
  /// All maximum-cardinality sets, as normalize_set canonical forms,
  /// deduplicated and sorted.
  std::vector<SlopeSet> witnesses;
  /// DFS nodes visited. Diagnostic only: with several workers the value
  /// depends on pruning races, unlike everything else in the result.
  std::uint64_t nodes_explored = 0;
  /// Plain-text description of the explored window and the reduction
  /// argument, sufficient to re-audit completeness.
  std::string certificate;
};

/// Exact maximum cardinality of a slope set with pairwise distance at most
/// diameter_bound, subject to the optional center constraint, together with
/// every witness up to canonical form.
SearchResult search(const SearchConfig& cfg);

struct VerifyNoLargerResult {
  bool ok = false;
  std::int64_t max_cardinality = 0;
  std::vector<SlopeSet> counterexamples;  // witnesses exceeding the bound
  std::string certificate;
};

/// True iff the exact maximum under cfg is at most bound.
VerifyNoLargerResult verify_no_larger(const SearchConfig& cfg,
                                      std::int64_t bound);

}  // namespace slopekit
