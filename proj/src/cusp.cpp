#include "slopekit/cusp.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <sstream>

namespace slopekit {

CuspTorus make_cusp_torus(const Eigen::Vector2d& meridian,
                          const Eigen::Vector2d& longitude) {
  for (const double v :
       {meridian.x(), meridian.y(), longitude.x(), longitude.y()})
    if (!std::isfinite(v))
      throw std::invalid_argument("cusp torus: translations must be finite");
  const double det =
      meridian.x() * longitude.y() - meridian.y() * longitude.x();
  if (std::abs(det) <=
      1e-12 * std::max(1.0, meridian.norm() * longitude.norm()))
    throw std::invalid_argument(
        "cusp torus: degenerate (collinear) translations");
  return {meridian, longitude};
}

double area(const CuspTorus& t) {
  return std::abs(t.meridian.x() * t.longitude.y() -
                  t.meridian.y() * t.longitude.x());
}

Eigen::Vector2d translation_vector(const CuspTorus& t, const Slope& r) {
  return static_cast<double>(r.p()) * t.meridian +
         static_cast<double>(r.q()) * t.longitude;
}

double slope_length(const CuspTorus& t, const Slope& r) {
  return translation_vector(t, r).norm();
}

namespace {

// A lattice basis vector carried with its slope coordinates in the original
// marking, so reduced-coordinate results convert back exactly.
struct BasisVec {
  std::int64_t p = 0, q = 0;
  Eigen::Vector2d v = Eigen::Vector2d::Zero();
};

struct ReducedBasis {
  BasisVec b1, b2;  // |b1| <= |b2|, |<b1, b2>| <= |b1|^2 / 2 (up to fp)
};

BasisVec combine(const CuspTorus& t, std::int64_t p, std::int64_t q) {
  return {p, q,
          static_cast<double>(p) * t.meridian +
              static_cast<double>(q) * t.longitude};
}

// Lagrange (Gauss) reduction, shearing off the nearest multiple until no
// strict improvement remains.
ReducedBasis reduce_basis(const CuspTorus& t) {
  BasisVec u = combine(t, 1, 0);
  BasisVec v = combine(t, 0, 1);
  for (int iter = 0; iter < 4096; ++iter) {
    if (u.v.squaredNorm() > v.v.squaredNorm()) std::swap(u, v);
    const double mu = u.v.dot(v.v) / u.v.squaredNorm();
    const auto m = static_cast<std::int64_t>(std::llround(mu));
    if (m == 0) break;
    const BasisVec w = combine(t, checked_sub(v.p, checked_mul(m, u.p)),
                               checked_sub(v.q, checked_mul(m, u.q)));
    if (w.v.squaredNorm() >= v.v.squaredNorm()) break;
    v = w;
  }
  if (u.v.squaredNorm() > v.v.squaredNorm()) std::swap(u, v);
  return {u, v};
}

}  // namespace

ShortestSlope shortest_slope(const CuspTorus& t) {
  const ReducedBasis rb = reduce_basis(t);
  // For a reduced basis the minimum is attained within |i|, |j| <= 1; the
  // window of 2 is slack for borderline reductions.
  struct Hit {
    Slope s;
    double len;
  };
  std::vector<Hit> hits;
  for (std::int64_t i = 0; i <= 2; ++i) {
    for (std::int64_t j = (i == 0 ? 1 : -2); j <= 2; ++j) {
      if (std::gcd(i, checked_abs(j)) != 1) continue;
      const std::int64_t p =
          checked_add(checked_mul(i, rb.b1.p), checked_mul(j, rb.b2.p));
      const std::int64_t q =
          checked_add(checked_mul(i, rb.b1.q), checked_mul(j, rb.b2.q));
      const Slope s(p, q);
      hits.push_back({s, slope_length(t, s)});
    }
  }
  double h = hits.front().len;
  for (const Hit& hit : hits) h = std::min(h, hit.len);
  const double tie = h + 1e-12 * std::max(1.0, h);
  ShortestSlope out;
  for (const Hit& hit : hits)
    if (hit.len <= tie) out.tied.push_back(hit.s);
  std::sort(out.tied.begin(), out.tied.end());
  out.tied.erase(std::unique(out.tied.begin(), out.tied.end()),
                 out.tied.end());
  out.gamma = out.tied.front();
  out.h = h;
  return out;
}

double width(const CuspTorus& t) { return area(t) / shortest_slope(t).h; }

std::vector<SlopeLengthReport> slopes_within_length(const CuspTorus& t,
                                                    double max_length) {
  if (!(max_length >= 0))
    throw std::invalid_argument("slopes_within_length: bound must be >= 0");
  const ReducedBasis rb = reduce_basis(t);
  const double a = area(t);
  const Slope gamma = shortest_slope(t).gamma;
  // |i b1 + j b2| >= |i| a/|b2| and >= |j| a/|b1|.
  const auto i_max = static_cast<std::int64_t>(
      std::floor(max_length * rb.b2.v.norm() / a + 1e-9)) + 1;
  const auto j_max = static_cast<std::int64_t>(
      std::floor(max_length * rb.b1.v.norm() / a + 1e-9)) + 1;
  std::vector<SlopeLengthReport> out;
  for (std::int64_t i = 0; i <= i_max; ++i) {
    for (std::int64_t j = (i == 0 ? 1 : -j_max); j <= j_max; ++j) {
      if (std::gcd(i, checked_abs(j)) != 1) continue;
      const std::int64_t p =
          checked_add(checked_mul(i, rb.b1.p), checked_mul(j, rb.b2.p));
      const std::int64_t q =
          checked_add(checked_mul(i, rb.b1.q), checked_mul(j, rb.b2.q));
      const Slope s(p, q);
      const double len = slope_length(t, s);
      if (len <= max_length)
        out.push_back({s, len, distance(gamma, s), len <= 6.0});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const SlopeLengthReport& x, const SlopeLengthReport& y) {
              if (x.length != y.length) return x.length < y.length;
              return x.slope < y.slope;
            });
  return out;
}

std::vector<SlopeLengthReport> six_candidates(const CuspTorus& t) {
  return slopes_within_length(t, 6.0);
}

double area_threshold() { return 8.0 / std::sqrt(3.0); }

PropositionReport proposition_check(const CuspTorus& t) {
  PropositionReport rep;
  rep.area_value = area(t);
  const double threshold = area_threshold();
  rep.area_hypothesis = rep.area_value > threshold;
  rep.marginal_area = std::abs(rep.area_value - threshold) < kMarginal;

  const ShortestSlope ss = shortest_slope(t);
  rep.gamma = ss.gamma;
  rep.h = ss.h;
  rep.w = rep.area_value / ss.h;
  rep.tied_shortest = ss.tied;

  const double h_split = 4.0 / std::sqrt(3.0);
  rep.branch = ss.h <= h_split ? WidthBranch::small_h : WidthBranch::large_h;
  rep.marginal_branch = std::abs(ss.h - h_split) < kMarginal;
  rep.width_exceeds_two = rep.w > 2.0;
  rep.marginal_width = std::abs(rep.w - 2.0) < kMarginal;

  rep.candidates = slopes_within_length(t, 6.0);
  bool within = true;
  for (const Slope& g : rep.tied_shortest)
    for (const SlopeLengthReport& c : rep.candidates)
      within = within && distance(g, c.slope) <= 2;
  rep.all_candidates_within_two = within;
  for (const SlopeLengthReport& c : rep.candidates)
    rep.max_candidate_distance =
        std::max(rep.max_candidate_distance, c.distance_from_shortest);

  rep.holds = rep.area_hypothesis && rep.width_exceeds_two &&
              rep.all_candidates_within_two;
  return rep;
}

double length_lower_bound_margin(const CuspTorus& t, const Slope& r) {
  const ShortestSlope ss = shortest_slope(t);
  const double w = area(t) / ss.h;
  return slope_length(t, r) -
         w * static_cast<double>(distance(ss.gamma, r));
}

namespace {

double parse_double(const std::string& token, int line_no) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(token, &used);
  } catch (const std::exception&) {
    throw parse_error("non-numeric value '" + token + "' at line " +
                          std::to_string(line_no),
                      line_no);
  }
  if (used != token.size())
    throw parse_error("non-numeric value '" + token + "' at line " +
                          std::to_string(line_no),
                      line_no);
  if (!std::isfinite(value))
    throw parse_error("non-finite value '" + token + "' at line " +
                          std::to_string(line_no),
                      line_no);
  return value;
}

}  // namespace

CuspTorus load_cusp(std::istream& in) {
  std::map<std::string, std::vector<double>> fields;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    std::vector<double> values;
    std::string token;
    while (ls >> token) values.push_back(parse_double(token, line_no));
    if (fields.count(key))
      throw parse_error("duplicate key '" + key + "' at line " +
                            std::to_string(line_no),
                        line_no);
    fields[key] = std::move(values);
  }

  auto take2 = [&](const std::string& key) {
    const auto& v = fields.at(key);
    if (v.size() != 2)
      throw parse_error("key '" + key + "' needs exactly two numbers");
    return Eigen::Vector2d(v[0], v[1]);
  };

  const bool direct = fields.count("meridian") || fields.count("longitude");
  const bool modular =
      fields.count("modulus") || fields.count("meridian_length");
  if (direct && modular)
    throw parse_error(
        "mixed conventions: give meridian/longitude or "
        "modulus/meridian_length, not both");
  auto build = [](const Eigen::Vector2d& m, const Eigen::Vector2d& l) {
    try {
      return make_cusp_torus(m, l);
    } catch (const std::invalid_argument& e) {
      throw parse_error(e.what());
    }
  };

  if (direct) {
    if (!fields.count("meridian") || !fields.count("longitude"))
      throw parse_error("both 'meridian' and 'longitude' are required");
    for (const auto& [key, v] : fields)
      if (key != "meridian" && key != "longitude")
        throw parse_error("unknown key '" + key + "'");
    return build(take2("meridian"), take2("longitude"));
  }
  if (modular) {
    if (!fields.count("modulus") || !fields.count("meridian_length"))
      throw parse_error(
          "both 'modulus' and 'meridian_length' are required");
    for (const auto& [key, v] : fields)
      if (key != "modulus" && key != "meridian_length")
        throw parse_error("unknown key '" + key + "'");
    const Eigen::Vector2d mod = take2("modulus");
    const auto& len_v = fields.at("meridian_length");
    if (len_v.size() != 1)
      throw parse_error("key 'meridian_length' needs exactly one number");
    const double len = len_v[0];
    if (!(len > 0))
      throw parse_error("meridian_length must be positive");
    // Longitude is the modulus times the meridian, as complex numbers.
    return build(Eigen::Vector2d(len, 0),
                 Eigen::Vector2d(len * mod.x(), len * mod.y()));
  }
  throw parse_error("cusp file must define meridian/longitude or "
                    "modulus/meridian_length");
}

CuspTorus load_cusp_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open cusp file '" + path + "'");
  return load_cusp(in);
}

}  // namespace slopekit
