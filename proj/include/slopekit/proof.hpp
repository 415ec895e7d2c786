#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slopekit/slope_set.hpp"

namespace slopekit {

/// Bookkeeping of a slope set around the meridian: every non-meridian
/// element must be integral (an N/1 slope, distance 1 from 1/0) or
/// half-integral (an M/2 slope with M odd, distance 2). classify() rejects
/// anything farther out.
struct ProofClassification {
  Slope gamma;                          // the meridian 1/0
  bool gamma_in_set = false;            // 1/0 was itself an element
  std::vector<std::int64_t> integrals;  // sorted; least is 0 when non-empty
  std::vector<std::int64_t> halves;     // sorted odd numerators of M/2 slopes
  /// Translation applied on top of the input marking to pin the least
  /// integral at 0 (or, with no integrals, the largest half numerator at 1).
  MarkingTransform normalization;

  std::int64_t integral_count() const {
    return static_cast<std::int64_t>(integrals.size());
  }
  std::int64_t half_count() const {
    return static_cast<std::int64_t>(halves.size());
  }
  std::int64_t top_integral() const;  // requires integral_count() >= 1
};

ProofClassification classify(const SlopeSet& s);

/// Outcome of replaying the two-case cardinality argument at a given
/// diameter bound. With no integral elements, distinct half-integral slopes
/// are pairwise at distance >= 4, capping their number directly. With
/// integral elements {0, ..., N}, the instantiated inequalities
/// distance(M_1/2, N/1) <= B and distance(M_l/2, 0/1) <= B confine the half
/// numerators to an odd window, giving the cap
/// (N + 1) + (window size) + 1; at B = 8 this is (N + 1) + (8 - N) + 1 = 10.
struct ProofBound {
  bool hypothesis_ok = true;
  std::int64_t bound = 0;  // meaningful when hypothesis_ok
  std::string failed_inequality;                        // when !hypothesis_ok
  std::optional<std::pair<Slope, Slope>> violating_pair;  // when !hypothesis_ok
  std::vector<std::string> trace;
};

ProofBound proof_bound(const ProofClassification& c,
                       std::int64_t diameter_bound = 8);

/// Re-marks a set so the given center slope becomes the meridian 1/0.
std::pair<SlopeSet, MarkingTransform> mark_center_as_meridian(
    const SlopeSet& s, const Slope& center);

struct WitnessCheck {
  SlopeSet witness;   // canonical form from the search
  Slope center;       // verified center used for re-marking
  std::int64_t size = 0;
  std::int64_t bound = 0;
  bool ok = false;    // hypothesis held and bound >= size
};

struct CrossCheck {
  bool ok = false;
  std::int64_t max_cardinality = 0;
  std::vector<WitnessCheck> rows;
  std::string report;
};

/// Runs the exhaustive search at (diameter_bound, center_k), re-marks every
/// witness by a verified center, and replays the proof on it: the replayed
/// bound must never undercut the witness's actual cardinality, and at
/// (8, 2) the global maximum must equal 10. center_k must be at most 2,
/// the reach of the classification.
CrossCheck exhaustive_cross_check(std::int64_t diameter_bound,
                                  std::int64_t center_k, int jobs = 0);

}  // namespace slopekit
