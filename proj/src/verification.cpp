#include "symca/verification.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "symca/datasets.hpp"
#include "symca/interval_table.hpp"

namespace symca::verify {

namespace {

enum SuiteTag : std::uint64_t { kIntervalSuite = 1, kRectangleSuite = 2, kDegenerateSuite = 3 };

std::string seed_tag(std::uint64_t seed) {
  std::ostringstream os;
  os << "instance seed " << seed;
  return os.str();
}

std::string side_name(Side s) { return s == Side::Row ? "row" : "column"; }

}  // namespace

bool Report::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteReport& s) { return s.passed(); });
}

void Report::print(std::ostream& os) const {
  for (const auto& s : suites) {
    os << (s.passed() ? "PASS " : "FAIL ") << s.name << ": " << s.checked << " instances";
    if (!s.passed()) os << ", " << s.failures.size() << " failures";
    os << "\n";
    for (const auto& f : s.failures) os << "  " << f << "\n";
  }
  os << (passed() ? "all verification suites passed" : "verification FAILED") << "\n";
}

SuiteReport interval_table_suite(const Options& opt) {
  SuiteReport report{"interval table (fast vs brute force)", 0, {}};
  random::SurveyShape shape;
  shape.max_individuals = opt.max_individuals;
  for (int k = 0; k < opt.instances; ++k) {
    const auto seed = random::instance_seed(opt.seed, kIntervalSuite, static_cast<std::uint64_t>(k));
    const auto [x, y] = random::survey(seed, shape);
    try {
      const auto fast = interval_contingency(x, y);
      const auto brute = brute_force_interval_contingency(x, y, opt.limit);
      if (fast.lower() != brute.lower() || fast.upper() != brute.upper())
        report.failures.push_back(seed_tag(seed) + ": meet/join products differ from enumerated min/max");
    } catch (const EnumerationTooLarge& e) {
      report.failures.push_back(seed_tag(seed) + ": " + e.what());
    }
    ++report.checked;
  }
  return report;
}

void check_rectangles(const IntervalTable& t, const SymCAResult<double>& r, const std::string& tag,
                      std::vector<std::string>& failures) {
  auto compare = [&](Side side, Eigen::Index index, Eigen::Index axis, Bounds<double> closed, double center) {
    const auto oracle = vertex_projection_oracle(t, r.ca, index, axis, side);
    const std::string where = tag + ": " + side_name(side) + " " + std::to_string(index) + " axis " +
                              std::to_string(axis);
    if (std::abs(closed.lo - oracle.lo) > kRectangleTolerance || std::abs(closed.hi - oracle.hi) > kRectangleTolerance)
      failures.push_back(where + ": closed-form bounds differ from vertex extrema");
    if (!closed.contains(center)) failures.push_back(where + ": center coordinate outside its rectangle");
  };
  for (Eigen::Index a = 0; a < r.ca.n_axes; ++a) {
    for (Eigen::Index i = 0; i < t.rows(); ++i) compare(Side::Row, i, a, r.row_rect(i, a), r.ca.row_coords(i, a));
    for (Eigen::Index j = 0; j < t.cols(); ++j)
      compare(Side::Column, j, a, r.col_rect(j, a), r.ca.col_coords(j, a));
  }
}

SuiteReport rectangle_suite(const Options& opt) {
  SuiteReport report{"rectangles (closed form vs vertex enumeration)", 0, {}};
  const auto eye_hair = datasets::eye_hair_592();
  check_rectangles(eye_hair, symca::symca(eye_hair), "eye/hair table", report.failures);
  ++report.checked;
  const int count = std::max(1, opt.instances / 2);
  for (int k = 0; k < count; ++k) {
    const auto seed = random::instance_seed(opt.seed, kRectangleSuite, static_cast<std::uint64_t>(k));
    const auto t = random::interval_table(seed);
    check_rectangles(t, symca::symca(t), seed_tag(seed), report.failures);
    ++report.checked;
  }
  return report;
}

SuiteReport degenerate_suite(const Options& opt) {
  SuiteReport report{"degenerate tables (classic analysis as a special case)", 0, {}};
  const int count = std::max(1, opt.instances / 4);
  for (int k = 0; k < count; ++k) {
    const auto seed = random::instance_seed(opt.seed, kDegenerateSuite, static_cast<std::uint64_t>(k));
    const auto t = random::degenerate_table(seed);
    const auto sym = symca::symca(t);
    const auto classic = correspondence_analysis(Eigen::MatrixXd(t.lower().cast<double>()));
    const double coord_gap = std::max((sym.ca.row_coords - classic.row_coords).cwiseAbs().maxCoeff(),
                                      (sym.ca.col_coords - classic.col_coords).cwiseAbs().maxCoeff());
    const double width = std::max((sym.row_rect_hi - sym.row_rect_lo).maxCoeff(),
                                  (sym.col_rect_hi - sym.col_rect_lo).maxCoeff());
    if (coord_gap > kDegenerateTolerance)
      report.failures.push_back(seed_tag(seed) + ": coordinates differ from classic analysis by " +
                                std::to_string(coord_gap));
    if (width > kDegenerateTolerance)
      report.failures.push_back(seed_tag(seed) + ": rectangle width " + std::to_string(width) + " on degenerate table");
    ++report.checked;
  }
  return report;
}

Report run_all(const Options& opt) {
  return Report{{interval_table_suite(opt), rectangle_suite(opt), degenerate_suite(opt)}};
}

}  // namespace symca::verify
