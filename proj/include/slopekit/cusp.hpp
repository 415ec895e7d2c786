#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "slopekit/slope.hpp"

namespace slopekit {

/// A horotorus: the flat torus spanned by the meridian and longitude
/// translation vectors, in horotorus Euclidean units. A slope p/q is
/// realized by the translation p * meridian + q * longitude; its geodesic
/// representative has minimal length among simple closed curves in its class.
struct CuspTorus {
  Eigen::Vector2d meridian;
  Eigen::Vector2d longitude;
};

/// Validates the translations: finite entries and linear independence
/// (a relative determinant above 1e-12, else the torus is degenerate).
CuspTorus make_cusp_torus(const Eigen::Vector2d& meridian,
                          const Eigen::Vector2d& longitude);

double area(const CuspTorus& t);

Eigen::Vector2d translation_vector(const CuspTorus& t, const Slope& r);

/// Length of the geodesic representative of r: |p * meridian + q * longitude|.
double slope_length(const CuspTorus& t, const Slope& r);

struct ShortestSlope {
  Slope gamma;              // canonically least among the tied minima
  double h = 0;             // its length
  std::vector<Slope> tied;  // all slopes attaining the minimum (incl. gamma)
};

/// The shortest slope, via Lagrange reduction of the lattice basis; the
/// shortest nonzero lattice vector is primitive, hence a slope. Ties (as on
/// the square or hexagonal lattice) are broken by canonical slope order and
/// reported.
ShortestSlope shortest_slope(const CuspTorus& t);

/// w = area / h: the length of the shortest essential arc from the shortest
/// geodesic back to itself. The torus is a cylinder of circumference h and
/// height w.
double width(const CuspTorus& t);

struct SlopeLengthReport {
  Slope slope;
  double length = 0;
  std::int64_t distance_from_shortest = 0;
  bool is_six_candidate = false;  // length <= 6
};

/// All slopes of length at most max_length, sorted by (length, slope).
/// Complete by construction: in reduced coordinates i, j the length of
/// i b1 + j b2 is at least |i| area/|b2| and |j| area/|b1|, so the scan
/// window is finite and provably covers every candidate.
std::vector<SlopeLengthReport> slopes_within_length(const CuspTorus& t,
                                                    double max_length);

/// The slopes not excluded by the 6-theorem: length <= 6.
std::vector<SlopeLengthReport> six_candidates(const CuspTorus& t);

inline constexpr double kComparisonSlack = 1e-9;
inline constexpr double kMarginal = 1e-6;

/// The area threshold 8/sqrt(3) above which every slope of length <= 6 lies
/// within distance 2 of the shortest slope.
double area_threshold();

enum class WidthBranch {
  small_h,  // h <= 4/sqrt(3): w = area/h > (8/sqrt(3))/h >= 2
  large_h,  // h >  4/sqrt(3): w >= h sqrt(3)/2 > 2
};

struct PropositionReport {
  double area_value = 0;
  bool area_hypothesis = false;  // area > 8/sqrt(3)
  bool marginal_area = false;    // within 1e-6 of the threshold
  Slope gamma;
  double h = 0;
  double w = 0;
  std::vector<Slope> tied_shortest;
  WidthBranch branch = WidthBranch::small_h;
  bool marginal_branch = false;  // h within 1e-6 of 4/sqrt(3)
  bool width_exceeds_two = false;
  bool marginal_width = false;   // w within 1e-6 of 2
  std::vector<SlopeLengthReport> candidates;  // the six-candidates
  std::int64_t max_candidate_distance = 0;    // from the chosen gamma
  /// Every candidate within distance 2 of the chosen shortest slope and of
  /// every tied alternative.
  bool all_candidates_within_two = false;
  /// area_hypothesis && width_exceeds_two && all_candidates_within_two.
  /// When the area hypothesis fails no claim is made and this is false.
  bool holds = false;
};

PropositionReport proposition_check(const CuspTorus& t);

/// slope_length(t, r) - width(t) * distance(gamma, r): a curve representing
/// r crosses the shortest geodesic at least distance(gamma, r) times, each
/// crossing arc spanning the cylinder of height w. Non-negative up to
/// floating slack for every slope.
double length_lower_bound_margin(const CuspTorus& t, const Slope& r);

/// `.cusp` text format, key-value lines with `#` comments. Either
///   meridian <x> <y> / longitude <x> <y>
/// or
///   modulus <re> <im> / meridian_length <len>
/// with the convention meridian = (len, 0), longitude = len * (re, im).
CuspTorus load_cusp(std::istream& in);
CuspTorus load_cusp_file(const std::string& path);

}  // namespace slopekit
