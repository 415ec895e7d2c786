#include "slopekit/slope_set.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace slopekit {

SlopeSet::SlopeSet(std::vector<Slope> slopes) : elements_(std::move(slopes)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
}

bool SlopeSet::insert(const Slope& s) {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), s);
  if (it != elements_.end() && *it == s) return false;
  elements_.insert(it, s);
  return true;
}

bool SlopeSet::contains(const Slope& s) const {
  return std::binary_search(elements_.begin(), elements_.end(), s);
}

std::strong_ordering operator<=>(const SlopeSet& a, const SlopeSet& b) {
  return std::lexicographical_compare_three_way(
      a.elements_.begin(), a.elements_.end(), b.elements_.begin(),
      b.elements_.end());
}

std::int64_t diameter(const SlopeSet& s) {
  std::int64_t best = 0;
  const auto& e = s.elements();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      best = std::max(best, distance(e[i], e[j]));
  return best;
}

std::pair<Slope, Slope> diameter_pair(const SlopeSet& s) {
  if (s.size() < 2)
    throw std::invalid_argument("diameter_pair requires at least two slopes");
  const auto& e = s.elements();
  std::pair<Slope, Slope> best{e[0], e[1]};
  std::int64_t best_d = -1;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      const std::int64_t d = distance(e[i], e[j]);
      if (d > best_d) {
        best_d = d;
        best = {e[i], e[j]};
      }
    }
  return best;
}

std::vector<std::int64_t> distance_profile(const SlopeSet& s) {
  std::vector<std::int64_t> out;
  const auto& e = s.elements();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      out.push_back(distance(e[i], e[j]));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::int64_t ceil_div_pos(std::int64_t a, std::int64_t b) {
  // b > 0
  return a / b + (a % b > 0 ? 1 : 0);
}

}  // namespace

Window default_center_window(const SlopeSet& s, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("center distance k must be >= 0");
  const std::int64_t d = diameter(s);
  if (d >= 1) {
    const auto [r1, r2] = diameter_pair(s);
    Window w;
    w.q_max = std::max<std::int64_t>(
        1, ceil_div_pos(checked_mul(k, checked_add(r1.q(), r2.q())), d));
    w.p_bound = std::max<std::int64_t>(
        1, ceil_div_pos(
               checked_mul(k, checked_add(checked_abs(r1.p()),
                                          checked_abs(r2.p()))),
               d));
    return w;
  }
  // Diameter-0 set: any slope is a center of the empty set and infinitely
  // many are centers of a singleton once k >= 1; the window just covers a
  // neighborhood of the set.
  Window w;
  std::int64_t q_hi = 0, p_hi = 1;
  for (const Slope& r : s) {
    q_hi = std::max(q_hi, r.q());
    p_hi = std::max(p_hi, checked_abs(r.p()));
  }
  w.q_max = checked_add(q_hi, checked_add(k, 1));
  w.p_bound = checked_add(p_hi, checked_add(k, 1));
  return w;
}

std::vector<Slope> centers(const SlopeSet& s, std::int64_t k,
                           const Window& w) {
  if (k < 0) throw std::invalid_argument("center distance k must be >= 0");
  std::vector<Slope> out;
  for (const Slope& g : enumerate_slopes(w.q_max, w.p_bound)) {
    bool ok = true;
    for (const Slope& r : s)
      if (distance(g, r) > k) {
        ok = false;
        break;
      }
    if (ok) out.push_back(g);
  }
  return out;
}

std::vector<Slope> centers(const SlopeSet& s, std::int64_t k) {
  return centers(s, k, default_center_window(s, k));
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  // b > 0
  std::int64_t q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

}  // namespace

Normalization normalize_set(const SlopeSet& s) {
  if (s.empty())
    throw std::invalid_argument("normalize_set: the empty set has no marking");
  MarkingTransform t = MarkingTransform::sending_to_meridian(s.elements().front());
  SlopeSet image = apply(t, s);
  if (image.size() > 1) {
    const Slope first = image.elements()[1];  // least non-meridian element
    const std::int64_t n = -floor_div(first.p(), first.q());
    const MarkingTransform shift = MarkingTransform::translation(n);
    t = compose(shift, t);
    image = apply(shift, image);
  }
  return {std::move(image), t};
}

SlopeSet apply(const MarkingTransform& t, const SlopeSet& s) {
  std::vector<Slope> out;
  out.reserve(s.size());
  for (const Slope& r : s) out.push_back(apply(t, r));
  SlopeSet result{std::move(out)};
  // Transforms are injective on slopes, so the size never shrinks.
  if (result.size() != s.size())
    throw std::logic_error("marking transform collapsed distinct slopes");
  return result;
}

SlopeSet load_set(std::istream& in) {
  SlopeSet out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    const auto end = line.find_last_not_of(" \t\r");
    const std::string token = line.substr(begin, end - begin + 1);
    Slope s;
    try {
      s = parse_slope(token);
    } catch (const parse_error& e) {
      throw parse_error(std::string(e.what()) + " at line " +
                            std::to_string(line_no),
                        line_no);
    }
    if (!out.insert(s))
      throw parse_error("duplicate slope '" + token + "' (canonical " +
                            format_slope(s) + ") at line " +
                            std::to_string(line_no),
                        line_no);
  }
  return out;
}

SlopeSet load_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open slope file '" + path + "'");
  return load_set(in);
}

void save_set(const SlopeSet& s, std::ostream& out) {
  for (const Slope& r : s) out << format_slope(r) << '\n';
}

void save_set_file(const SlopeSet& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw parse_error("cannot write slope file '" + path + "'");
  save_set(s, out);
}

SlopeSet paper_example_set() {
  return SlopeSet{{Slope(1, 0), Slope(0, 1), Slope(1, 1), Slope(2, 1),
                   Slope(3, 1), Slope(3, 2), Slope(4, 3), Slope(5, 3),
                   Slope(5, 4), Slope(7, 4), Slope(7, 5), Slope(8, 5)}};
}

}  // namespace slopekit
