// slopekit: exact slope-set combinatorics and horotorus geometry.
//
// Subcommands: analyze, search, verify, cross-check, cusp, fixtures.
// Exit codes: 0 success, 1 precondition or verification failure,
// 2 malformed input (bad flag, missing file, bad record).

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "slopekit/cusp.hpp"
#include "slopekit/proof.hpp"
#include "slopekit/search.hpp"
#include "slopekit/slope_set.hpp"

namespace {

using namespace slopekit;

std::string fmt_real(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

std::string join_slopes(const std::vector<Slope>& slopes,
                        const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    if (i) out += sep;
    out += format_slope(slopes[i]);
  }
  return out;
}

// ---------------------------------------------------------------- analyze

struct AnalyzeOpts {
  std::string file;
  std::int64_t center_k = 2;
  std::int64_t window_q = 0;  // 0 = default window
  std::int64_t window_p = 0;
  bool tsv = false;
};

int cmd_analyze(const AnalyzeOpts& opt) {
  const SlopeSet set = load_set_file(opt.file);
  const std::int64_t diam = diameter(set);
  const Window window = (opt.window_q > 0 && opt.window_p > 0)
                            ? Window{opt.window_q, opt.window_p}
                            : default_center_window(set, opt.center_k);
  const std::vector<Slope> cs = centers(set, opt.center_k, window);
  const auto& e = set.elements();

  if (opt.tsv) {
    std::cout << "cardinality\t" << set.size() << "\n";
    std::cout << "diameter\t" << diam << "\n";
    std::cout << "window_q_max\t" << window.q_max << "\n";
    std::cout << "window_p_bound\t" << window.p_bound << "\n";
    std::cout << "center_count\t" << cs.size() << "\n";
    for (const Slope& g : cs) std::cout << "center\t" << g << "\n";
    std::cout << "matrix\t.";
    for (const Slope& s : e) std::cout << '\t' << s;
    std::cout << "\n";
    for (const Slope& a : e) {
      std::cout << "matrix\t" << a;
      for (const Slope& b : e) std::cout << '\t' << distance(a, b);
      std::cout << "\n";
    }
    return 0;
  }

  std::cout << "file: " << opt.file << "\n";
  std::cout << "cardinality: " << set.size() << "\n";
  std::cout << "diameter: " << diam << "\n";
  if (!e.empty()) {
    std::size_t w = 1;
    for (const Slope& s : e) w = std::max(w, format_slope(s).size());
    w += 2;
    std::cout << "distance matrix:\n" << std::setw(static_cast<int>(w)) << " ";
    for (const Slope& s : e)
      std::cout << std::setw(static_cast<int>(w)) << format_slope(s);
    std::cout << "\n";
    for (const Slope& a : e) {
      std::cout << std::setw(static_cast<int>(w)) << format_slope(a);
      for (const Slope& b : e)
        std::cout << std::setw(static_cast<int>(w)) << distance(a, b);
      std::cout << "\n";
    }
  }
  std::cout << "centers within distance " << opt.center_k << " (window q <= "
            << window.q_max << ", |p| <= " << window.p_bound
            << "): " << (cs.empty() ? "none" : join_slopes(cs)) << "\n";
  return 0;
}

// ----------------------------------------------------------------- search

struct SearchOpts {
  std::int64_t diameter = 8;
  std::int64_t center_k = -1;
  bool has_center_k = false;
  bool all_witnesses = false;
  std::string emit;
  int jobs = 0;
  bool force_diameter = false;
  bool no_assume_meridian = false;
  bool tsv = false;
  bool verbose = false;
};

int cmd_search(const SearchOpts& opt) {
  SearchConfig cfg;
  cfg.diameter_bound = opt.diameter;
  if (opt.has_center_k) cfg.center_k = opt.center_k;
  cfg.jobs = opt.jobs;
  cfg.override_guard = opt.force_diameter;
  cfg.assume_meridian = !opt.no_assume_meridian;
  const SearchResult res = search(cfg);

  if (opt.tsv) {
    std::cout << "max_cardinality\t" << res.max_cardinality << "\n";
    std::cout << "witness_count\t" << res.witnesses.size() << "\n";
    const std::size_t shown = opt.all_witnesses ? res.witnesses.size()
                              : res.witnesses.empty() ? 0
                                                      : 1;
    for (std::size_t i = 0; i < shown; ++i) {
      std::cout << "witness\t" << (i + 1);
      for (const Slope& s : res.witnesses[i]) std::cout << '\t' << s;
      std::cout << "\n";
    }
  } else {
    std::cout << "max cardinality: " << res.max_cardinality << "\n";
    std::cout << "witnesses (canonical forms): " << res.witnesses.size()
              << "\n";
    const std::size_t shown = opt.all_witnesses ? res.witnesses.size()
                              : res.witnesses.empty() ? 0
                                                      : 1;
    for (std::size_t i = 0; i < shown; ++i)
      std::cout << "witness " << (i + 1) << ": "
                << join_slopes(res.witnesses[i].elements()) << "\n";
    std::cout << "certificate:\n";
    std::istringstream cert(res.certificate);
    for (std::string line; std::getline(cert, line);)
      std::cout << "  " << line << "\n";
    if (opt.verbose)
      std::cout << "nodes explored: " << res.nodes_explored
                << " (varies with scheduling)\n";
  }

  if (!opt.emit.empty() && !res.witnesses.empty()) {
    std::ofstream ws(opt.emit);
    if (!ws) throw parse_error("cannot write '" + opt.emit + "'");
    ws << "# canonically least maximum-cardinality witness, diameter bound "
       << opt.diameter << "\n";
    save_set(res.witnesses.front(), ws);
    const std::string cert_path = opt.emit + ".cert";
    std::ofstream cf(cert_path);
    if (!cf) throw parse_error("cannot write '" + cert_path + "'");
    cf << res.certificate;
    if (!opt.tsv)
      std::cout << "emitted: " << opt.emit << ", " << cert_path << "\n";
  }
  return 0;
}

// ----------------------------------------------------------------- verify

struct VerifyOpts {
  std::string file;
  std::int64_t diameter_bound = 8;
};

int cmd_verify(const VerifyOpts& opt) {
  const SlopeSet input = load_set_file(opt.file);
  if (input.empty()) {
    std::cerr << "error: '" << opt.file << "' holds no slopes\n";
    return 1;
  }
  std::cout << "file: " << opt.file << " (" << input.size() << " slopes)\n";

  // Use the file's marking when 1/0 already works as the center; otherwise
  // re-mark by some verified center within distance 2.
  SlopeSet set = input;
  bool meridian_centered = true;
  for (const Slope& r : input) meridian_centered &= r.q() <= 2;
  if (!meridian_centered) {
    const std::vector<Slope> cs = centers(input, 2);
    if (cs.empty()) {
      const Window w = default_center_window(input, 2);
      const SlopeSet norm = normalize_set(input).set;
      Slope offender = norm.elements().back();
      for (const Slope& r : norm)
        if (r.q() >= 3) {
          offender = r;
          break;
        }
      std::cerr << "error: no slope lies within distance 2 of every element"
                << " (window q <= " << w.q_max << ", |p| <= " << w.p_bound
                << "); e.g. after normalization, slope "
                << format_slope(offender) << " is at distance "
                << offender.q() << " from 1/0\n";
      return 1;
    }
    const auto [marked, t] = mark_center_as_meridian(input, cs.front());
    std::cout << "re-marked by center " << format_slope(cs.front())
              << " via transform (" << t.a() << " " << t.b() << "; " << t.c()
              << " " << t.d() << ")\n";
    set = marked;
  }

  const ProofClassification cls = classify(set);
  std::cout << "classification:\n";
  std::cout << "  gamma: 1/0 (element of the set: "
            << (cls.gamma_in_set ? "yes" : "no") << ")\n";
  std::cout << "  integral elements:";
  if (cls.integrals.empty())
    std::cout << " none";
  else
    for (const auto v : cls.integrals) std::cout << ' ' << v;
  std::cout << "  (k = " << cls.integral_count();
  if (!cls.integrals.empty()) std::cout << ", N_k = " << cls.top_integral();
  std::cout << ")\n";
  std::cout << "  half-integral elements:";
  if (cls.halves.empty())
    std::cout << " none";
  else
    for (const auto v : cls.halves) std::cout << ' ' << v << "/2";
  std::cout << "  (l = " << cls.half_count() << ")\n";

  const ProofBound pb = proof_bound(cls, opt.diameter_bound);
  std::cout << "trace (diameter bound " << opt.diameter_bound << "):\n";
  for (const std::string& line : pb.trace) std::cout << "  " << line << "\n";
  if (!pb.hypothesis_ok) {
    std::cerr << "error: hypothesis fails: " << pb.failed_inequality;
    if (pb.violating_pair)
      std::cerr << " at pair (" << format_slope(pb.violating_pair->first)
                << ", " << format_slope(pb.violating_pair->second) << ")";
    std::cerr << "\n";
    return 1;
  }
  const auto size = static_cast<std::int64_t>(input.size());
  std::cout << "verdict: cardinality " << size << " <= bound " << pb.bound
            << "\n";
  if (size > pb.bound) {
    std::cerr << "error: cardinality " << size << " exceeds the replayed bound "
              << pb.bound << "\n";
    return 1;
  }
  return 0;
}

// ------------------------------------------------------------ cross-check

struct CrossOpts {
  std::int64_t diameter = 8;
  std::int64_t center_k = 2;
  int jobs = 0;
};

int cmd_cross_check(const CrossOpts& opt) {
  const CrossCheck cc =
      exhaustive_cross_check(opt.diameter, opt.center_k, opt.jobs);
  std::cout << cc.report;
  return cc.ok ? 0 : 1;
}

// ------------------------------------------------------------------- cusp

struct CuspOpts {
  std::string file;
  bool report = false;
  bool candidates = false;
  bool tsv = false;
};

int cmd_cusp(const CuspOpts& opt) {
  const CuspTorus t = load_cusp_file(opt.file);
  const PropositionReport rep = proposition_check(t);

  if (opt.tsv) {
    std::cout << "area\t" << fmt_real(rep.area_value) << "\n";
    std::cout << "gamma\t" << rep.gamma << "\n";
    std::cout << "h\t" << fmt_real(rep.h) << "\n";
    std::cout << "w\t" << fmt_real(rep.w) << "\n";
    std::cout << "tied_shortest\t" << join_slopes(rep.tied_shortest, "\t")
              << "\n";
    std::cout << "area_hypothesis\t" << (rep.area_hypothesis ? 1 : 0) << "\n";
    std::cout << "branch\t"
              << (rep.branch == WidthBranch::small_h ? "small_h" : "large_h")
              << "\n";
    std::cout << "proposition\t" << (rep.holds ? "holds" : "no_claim") << "\n";
    for (const auto& c : rep.candidates)
      std::cout << "candidate\t" << c.slope << '\t' << fmt_real(c.length)
                << '\t' << c.distance_from_shortest << "\n";
    return 0;
  }

  std::cout << "file: " << opt.file << "\n";
  std::cout << "area: " << fmt_real(rep.area_value) << "\n";
  std::cout << "shortest slope gamma: " << rep.gamma;
  if (rep.tied_shortest.size() > 1)
    std::cout << " (tied: " << join_slopes(rep.tied_shortest) << ")";
  std::cout << "\n";
  std::cout << "h (length of gamma): " << fmt_real(rep.h) << "\n";
  std::cout << "w (width, area/h): " << fmt_real(rep.w) << "\n";

  if (opt.report) {
    std::cout << "area threshold 8/sqrt(3): " << fmt_real(area_threshold())
              << "\n";
    std::cout << "area hypothesis (area > 8/sqrt(3)): "
              << (rep.area_hypothesis ? "holds" : "fails")
              << (rep.marginal_area ? " [marginal]" : "") << "\n";
    if (!rep.area_hypothesis) {
      std::cout << "proposition: hypothesis fails, no claim\n";
    } else {
      if (rep.branch == WidthBranch::small_h)
        std::cout << "width branch: h <= 4/sqrt(3), so w = area/h > "
                     "(8/sqrt(3))/h >= 2\n";
      else
        std::cout << "width branch: h > 4/sqrt(3), so w >= h*sqrt(3)/2 > 2\n";
      std::cout << "w > 2: " << (rep.width_exceeds_two ? "yes" : "NO")
                << (rep.marginal_width ? " [marginal]" : "") << "\n";
      std::cout << "slopes of length <= 6: " << rep.candidates.size()
                << ", max distance from gamma: " << rep.max_candidate_distance
                << "\n";
      std::cout << "proposition (every slope of length <= 6 within distance "
                   "2 of gamma): "
                << (rep.holds ? "holds" : "VIOLATED") << "\n";
    }
  }
  if (opt.candidates) {
    std::cout << "candidates (length <= 6):\n";
    std::cout << "  " << std::left << std::setw(10) << "slope" << std::setw(18)
              << "length" << "distance from " << format_slope(rep.gamma)
              << "\n";
    for (const auto& c : rep.candidates)
      std::cout << "  " << std::left << std::setw(10) << format_slope(c.slope)
                << std::setw(18) << fmt_real(c.length)
                << c.distance_from_shortest << "\n";
    std::cout << std::right;
  }
  if (opt.report && rep.area_hypothesis && !rep.holds) return 1;
  return 0;
}

// --------------------------------------------------------------- fixtures

int cmd_fixtures(const std::string& emit) {
  const SlopeSet set = paper_example_set();
  if (emit.empty()) {
    save_set(set, std::cout);
    return 0;
  }
  std::ofstream out(emit);
  if (!out) throw parse_error("cannot write '" + emit + "'");
  out << "# the 12-slope set with diameter 8\n";
  save_set(set, out);
  std::cout << "emitted: " << emit << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slopekit: exact slope-set combinatorics and horotorus "
               "geometry for exceptional surgery bounds"};
  app.require_subcommand(1);

  AnalyzeOpts an;
  auto* analyze = app.add_subcommand(
      "analyze", "cardinality, diameter, distance matrix and centers of a "
                 ".slopes file");
  analyze->add_option("file", an.file, "input .slopes file")->required();
  analyze->add_option("--center-k", an.center_k, "center distance (default 2)")
      ->check(CLI::NonNegativeNumber);
  analyze->add_option("--window-q", an.window_q, "override window: max q");
  analyze->add_option("--window-p", an.window_p, "override window: max |p|");
  analyze->add_flag("--tsv", an.tsv, "tab-separated output");

  SearchOpts se;
  auto* searchc = app.add_subcommand(
      "search", "exact maximum cardinality of a slope set under a diameter "
                "bound, with optional center constraint");
  searchc->add_option("--diameter", se.diameter, "diameter bound D")
      ->required()
      ->check(CLI::NonNegativeNumber);
  auto* ck = searchc->add_option("--center-k", se.center_k,
                                 "require a center within this distance")
                 ->check(CLI::NonNegativeNumber);
  searchc->add_flag("--all-witnesses", se.all_witnesses,
                    "print every canonical witness");
  searchc->add_option("--emit", se.emit,
                      "write the least witness to FILE and the certificate "
                      "to FILE.cert");
  searchc->add_option("--jobs", se.jobs, "worker count (default: processors)");
  searchc->add_flag("--force-diameter", se.force_diameter,
                    "override the diameter guard");
  searchc->add_flag("--no-assume-meridian", se.no_assume_meridian,
                    "also explore sets omitting 1/0 (same result, slower)");
  searchc->add_flag("--tsv", se.tsv, "tab-separated output");
  searchc->add_flag("-v,--verbose", se.verbose, "include node diagnostics");

  VerifyOpts ve;
  auto* verify = app.add_subcommand(
      "verify", "classify a slope set around the meridian and replay the "
                "cardinality bound");
  verify->add_option("file", ve.file, "input .slopes file")->required();
  verify->add_option("--diameter-bound", ve.diameter_bound,
                     "diameter hypothesis (default 8)")
      ->check(CLI::NonNegativeNumber);

  CrossOpts cr;
  auto* cross = app.add_subcommand(
      "cross-check", "exhaustive search vs proof replay on every witness");
  cross->add_option("--diameter", cr.diameter, "diameter bound D")
      ->check(CLI::NonNegativeNumber);
  cross->add_option("--center-k", cr.center_k, "center distance (0, 1 or 2)")
      ->check(CLI::NonNegativeNumber);
  cross->add_option("--jobs", cr.jobs, "worker count (default: processors)");

  CuspOpts cu;
  auto* cusp = app.add_subcommand(
      "cusp", "slope lengths and the area > 8/sqrt(3) proposition on a "
              ".cusp file");
  cusp->add_option("file", cu.file, "input .cusp file")->required();
  cusp->add_flag("--report", cu.report, "print the proposition report");
  cusp->add_flag("--candidates", cu.candidates, "print the candidate table");
  cusp->add_flag("--tsv", cu.tsv, "tab-separated output");

  std::string fixtures_emit;
  auto* fixtures = app.add_subcommand(
      "fixtures", "emit the bundled 12-slope example set");
  fixtures->add_option("--emit", fixtures_emit,
                       "write to FILE instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(an);
    if (app.got_subcommand(searchc)) {
      se.has_center_k = ck->count() > 0;
      return cmd_search(se);
    }
    if (app.got_subcommand(verify)) return cmd_verify(ve);
    if (app.got_subcommand(cross)) return cmd_cross_check(cr);
    if (app.got_subcommand(cusp)) return cmd_cusp(cu);
    if (app.got_subcommand(fixtures)) return cmd_fixtures(fixtures_emit);
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
