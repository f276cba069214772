#ifndef SYMCA_VERIFICATION_HPP
#define SYMCA_VERIFICATION_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "symca/multivalued_data.hpp"
#include "symca/random_instances.hpp"
#include "symca/symca_projection.hpp"

namespace symca::verify {

inline constexpr double kRectangleTolerance = 1e-10;
inline constexpr double kDegenerateTolerance = 1e-12;

struct Options {
  std::uint64_t seed = 42;
  int instances = 200;  ///< survey instances; rectangle and degenerate suites scale from it
  int max_individuals = 6;
  std::uint64_t limit = kDefaultCompletionLimit;
};

struct SuiteReport {
  std::string name;
  int checked = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

struct Report {
  std::vector<SuiteReport> suites;

  bool passed() const;
  void print(std::ostream& os) const;
};

/// Fast interval table equals brute-force enumeration on random surveys.
SuiteReport interval_table_suite(const Options& opt);

/// Closed-form rectangles equal vertex-enumeration extrema and contain the
/// center coordinates, on the eye/hair table and random tables.
SuiteReport rectangle_suite(const Options& opt);

/// Degenerate tables give point rectangles at the classic coordinates.
SuiteReport degenerate_suite(const Options& opt);

Report run_all(const Options& opt);

/// Compares closed-form rectangles of every modality and axis against the
/// vertex oracle and checks containment. Appends messages to `failures`.
void check_rectangles(const IntervalTable& t, const SymCAResult<double>& r, const std::string& tag,
                      std::vector<std::string>& failures);

}  // namespace symca::verify

#endif  // SYMCA_VERIFICATION_HPP
