#ifndef SYMCA_INTERVAL_TABLE_HPP
#define SYMCA_INTERVAL_TABLE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "symca/multivalued_data.hpp"

namespace symca {

using CountMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// n x p table of integer count intervals [lower(i,j), upper(i,j)].
/// Rows are the modalities of the first variable, columns those of the second.
class IntervalTable {
 public:
  IntervalTable(std::vector<std::string> row_labels, std::vector<std::string> col_labels,
                CountMatrix lower, CountMatrix upper);

  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }
  const CountMatrix& lower() const { return lower_; }
  const CountMatrix& upper() const { return upper_; }

  Eigen::Index rows() const { return lower_.rows(); }
  Eigen::Index cols() const { return lower_.cols(); }

  bool is_degenerate() const { return lower_ == upper_; }

  friend bool operator==(const IntervalTable&, const IntervalTable&) = default;

 private:
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
  CountMatrix lower_;
  CountMatrix upper_;
};

/// Table of interval midpoints. Values are half-integers, exact in double.
struct CenterTable {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  Eigen::MatrixXd cells;
};

/// Fast construction: two integer products meet(x)^T meet(y) and join(x)^T join(y).
IntervalTable interval_contingency(const MultiValuedVariable& x, const MultiValuedVariable& y);

/// Entrywise min/max of x_c^T y_c over every pair of completions (x_c, y_c).
/// The combined pair count is checked against `limit` before enumerating.
IntervalTable brute_force_interval_contingency(const MultiValuedVariable& x,
                                               const MultiValuedVariable& y,
                                               std::uint64_t limit = kDefaultCompletionLimit);

CenterTable centers(const IntervalTable& t);

struct TableDiagnostics {
  double grand_total = 0.0;
  std::vector<Eigen::Index> zero_rows;
  std::vector<Eigen::Index> zero_cols;
  Eigen::Index rank_bound = 0;  ///< min(n-1, p-1)
  std::vector<std::string> issues;

  bool analyzable() const { return issues.empty(); }
};

TableDiagnostics validate_for_analysis(const CenterTable& t);

/// Removes rows and columns whose center margin is zero. Returns the reduced
/// table and one warning line per removed row/column.
std::pair<IntervalTable, std::vector<std::string>> drop_empty_margins(const IntervalTable& t);

}  // namespace symca

#endif  // SYMCA_INTERVAL_TABLE_HPP
