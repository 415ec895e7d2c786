#include "slopekit/proof.hpp"

#include <algorithm>
#include <sstream>

#include "slopekit/search.hpp"

namespace slopekit {

std::int64_t ProofClassification::top_integral() const {
  if (integrals.empty())
    throw std::logic_error("top_integral: no integral elements");
  return integrals.back();
}

ProofClassification classify(const SlopeSet& s) {
  ProofClassification c;
  for (const Slope& r : s) {
    if (r.is_meridian()) {
      c.gamma_in_set = true;
    } else if (r.q() == 1) {
      c.integrals.push_back(r.p());
    } else if (r.q() == 2) {
      c.halves.push_back(r.p());
    } else {
      throw std::invalid_argument(
          "classify: slope " + format_slope(r) + " is at distance " +
          std::to_string(r.q()) +
          " >= 3 from 1/0; every element must be within distance 2");
    }
  }
  std::sort(c.integrals.begin(), c.integrals.end());
  std::sort(c.halves.begin(), c.halves.end());

  std::int64_t n = 0;
  if (!c.integrals.empty()) {
    n = checked_neg(c.integrals.front());
  } else if (!c.halves.empty()) {
    // No integral elements: pin the largest half numerator at 1, the odd
    // value of least magnitude (ties to the positive side).
    n = (1 - c.halves.back()) / 2;
  }
  if (n != 0) {
    for (auto& v : c.integrals) v = checked_add(v, n);
    for (auto& v : c.halves) v = checked_add(v, checked_mul(2, n));
  }
  c.normalization = MarkingTransform::translation(n);
  return c;
}

namespace {

std::string fmt_half(std::int64_t m) { return std::to_string(m) + "/2"; }
std::string fmt_int(std::int64_t n) { return std::to_string(n) + "/1"; }

}  // namespace

ProofBound proof_bound(const ProofClassification& c,
                       std::int64_t diameter_bound) {
  if (diameter_bound < 0)
    throw std::invalid_argument("proof_bound: diameter bound must be >= 0");
  const std::int64_t b = diameter_bound;
  ProofBound out;
  // Violating pairs are reported in the marking the caller supplied, not in
  // the internally translated one the trace narrates.
  const MarkingTransform back = inverse(c.normalization);
  auto fail = [&](std::string inequality, const Slope& x, const Slope& y) {
    out.hypothesis_ok = false;
    out.failed_inequality = std::move(inequality);
    out.violating_pair = {apply(back, x), apply(back, y)};
  };

  if (c.normalization != MarkingTransform::identity())
    out.trace.push_back("classified after translating by " +
                        std::to_string(c.normalization.b()));

  if (c.integrals.empty()) {
    out.trace.push_back(
        "case: no integral elements; every non-meridian element is "
        "half-integral");
    out.trace.push_back(
        "distinct half-integral slopes x/2, y/2 have distance 2|x - y| >= 4");
    if (c.halves.size() >= 2) {
      const std::int64_t x = c.halves.front();
      const std::int64_t y = c.halves.back();
      const std::int64_t dmax = checked_mul(2, checked_sub(y, x));
      out.trace.push_back("largest pair distance: distance(" + fmt_half(x) +
                          ", " + fmt_half(y) + ") = " + std::to_string(dmax));
      if (dmax > b) {
        fail("pairwise half-integral distance <= " + std::to_string(b),
             Slope(x, 2), Slope(y, 2));
        return out;
      }
    }
    if (!c.halves.empty() && c.gamma_in_set && b < 2) {
      fail("distance(1/0, M/2) = 2 <= " + std::to_string(b), Slope(),
           Slope(c.halves.front(), 2));
      return out;
    }
    // Odd numerators within pairwise distance b span a window of width b/2.
    const std::int64_t half_cap = b / 4 + 1;
    out.trace.push_back(
        "half numerators fit in a window of width " + std::to_string(b / 2) +
        ", so their number is at most " + std::to_string(half_cap));
    out.bound = checked_add(1, half_cap);
    out.trace.push_back("cardinality <= 1 + " + std::to_string(half_cap) +
                        " = " + std::to_string(out.bound));
    return out;
  }

  // Integral elements present, normalized to {0, ..., N}.
  const std::int64_t n = c.top_integral();
  const std::int64_t k = c.integral_count();
  out.trace.push_back("case: integral elements present, occupying {0, ..., " +
                      std::to_string(n) + "}; k = " + std::to_string(k) +
                      " <= N_k + 1 = " + std::to_string(n + 1));
  out.trace.push_back("distance(" + fmt_int(0) + ", " + fmt_int(n) + ") = " +
                      std::to_string(n) + " requires N_k <= " +
                      std::to_string(b));
  if (n > b) {
    fail("N_k <= " + std::to_string(b), Slope(0, 1), Slope(n, 1));
    return out;
  }
  // Largest odd value compatible with an |odd| <= b constraint.
  const std::int64_t odd_cap = (b % 2 == 0) ? b - 1 : b;
  std::int64_t half_cap = std::max<std::int64_t>(odd_cap - n + 1, 0);
  if (!c.halves.empty()) {
    const std::int64_t m1 = c.halves.front();
    const std::int64_t ml = c.halves.back();
    const std::int64_t d1 = checked_abs(checked_sub(m1, checked_mul(2, n)));
    out.trace.push_back("distance(" + fmt_half(m1) + ", " + fmt_int(n) +
                        ") = |" + std::to_string(m1) + " - 2*" +
                        std::to_string(n) + "| = " + std::to_string(d1));
    if (d1 > b) {
      fail("distance(M_1/2, N_k/1) <= " + std::to_string(b), Slope(m1, 2),
           Slope(n, 1));
      return out;
    }
    out.trace.push_back("M_1 odd and the above give M_1 >= " +
                        std::to_string(2 * n - odd_cap));
    const std::int64_t dl = checked_abs(ml);
    out.trace.push_back("distance(" + fmt_half(ml) + ", " + fmt_int(0) +
                        ") = |" + std::to_string(ml) + "| = " +
                        std::to_string(dl));
    if (dl > b) {
      fail("distance(M_l/2, 0/1) <= " + std::to_string(b), Slope(ml, 2),
           Slope(0, 1));
      return out;
    }
    out.trace.push_back("M_l odd and the above give M_l <= " +
                        std::to_string(odd_cap));
    out.trace.push_back(
        "half numerators are odd values in [" + std::to_string(2 * n - odd_cap) +
        ", " + std::to_string(odd_cap) + "], so l <= " +
        std::to_string(half_cap) + "; actual l = " +
        std::to_string(c.half_count()));
  } else {
    out.trace.push_back("no half-integral elements; their cap is " +
                        std::to_string(half_cap));
  }
  out.bound = checked_add(checked_add(n + 1, half_cap), 1);
  out.trace.push_back("cardinality <= (N_k + 1) + " + std::to_string(half_cap) +
                      " + 1 = (" + std::to_string(n) + " + 1) + " +
                      std::to_string(half_cap) + " + 1 = " +
                      std::to_string(out.bound));
  return out;
}

std::pair<SlopeSet, MarkingTransform> mark_center_as_meridian(
    const SlopeSet& s, const Slope& center) {
  const MarkingTransform t = MarkingTransform::sending_to_meridian(center);
  return {apply(t, s), t};
}

CrossCheck exhaustive_cross_check(std::int64_t diameter_bound,
                                  std::int64_t center_k, int jobs) {
  if (center_k < 0 || center_k > 2)
    throw std::invalid_argument(
        "exhaustive_cross_check: the classification reaches distance 2, so "
        "center_k must be 0, 1, or 2");
  SearchConfig cfg;
  cfg.diameter_bound = diameter_bound;
  cfg.center_k = center_k;
  cfg.jobs = jobs;
  const SearchResult res = search(cfg);

  CrossCheck out;
  out.max_cardinality = res.max_cardinality;
  bool all_rows_ok = true;
  std::ostringstream os;
  os << "cross-check: exhaustive search vs proof replay\n";
  os << "  diameter bound " << diameter_bound << ", center distance "
     << center_k << "\n";
  os << "  max cardinality: " << res.max_cardinality << " over "
     << res.witnesses.size() << " witnesses\n";
  for (const SlopeSet& w : res.witnesses) {
    WitnessCheck row;
    row.witness = w;
    row.size = static_cast<std::int64_t>(w.size());
    const auto cs = centers(w, center_k);
    if (cs.empty()) {
      row.ok = false;
      all_rows_ok = false;
      os << "  witness of size " << row.size
         << ": NO CENTER FOUND (search invariant violated)\n";
      out.rows.push_back(std::move(row));
      continue;
    }
    row.center = cs.front();
    const auto [marked, t] = mark_center_as_meridian(w, row.center);
    const ProofClassification cls = classify(marked);
    const ProofBound pb = proof_bound(cls, diameter_bound);
    row.bound = pb.bound;
    row.ok = pb.hypothesis_ok && pb.bound >= row.size;
    all_rows_ok = all_rows_ok && row.ok;
    os << "  witness";
    for (const Slope& r : w) os << ' ' << format_slope(r);
    os << "\n    center " << format_slope(row.center) << ", size " << row.size
       << ", replayed bound ";
    if (pb.hypothesis_ok)
      os << pb.bound;
    else
      os << "(hypothesis failed: " << pb.failed_inequality << ")";
    os << (row.ok ? " [ok]" : " [MISMATCH]") << "\n";
    out.rows.push_back(std::move(row));
  }
  out.ok = all_rows_ok;
  if (diameter_bound == 8 && center_k == 2) {
    const bool exact_ten = res.max_cardinality == 10;
    os << "  theorem instance: max cardinality == 10 "
       << (exact_ten ? "[ok]" : "[MISMATCH]") << "\n";
    out.ok = out.ok && exact_ten;
  }
  os << "  verdict: " << (out.ok ? "agree" : "DISAGREE") << "\n";
  out.report = os.str();
  return out;
}

}  // namespace slopekit
