#include "symca/interval_table.hpp"

#include <limits>

#include "symca/errors.hpp"

namespace symca {

IntervalTable::IntervalTable(std::vector<std::string> row_labels, std::vector<std::string> col_labels,
                             CountMatrix lower, CountMatrix upper)
    : row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      lower_(std::move(lower)),
      upper_(std::move(upper)) {
  if (lower_.rows() < 1 || lower_.cols() < 1) throw ValidationError("interval table is empty");
  if (lower_.rows() != upper_.rows() || lower_.cols() != upper_.cols())
    throw ValidationError("lower and upper bound matrices differ in shape");
  if (static_cast<Eigen::Index>(row_labels_.size()) != lower_.rows() ||
      static_cast<Eigen::Index>(col_labels_.size()) != lower_.cols())
    throw ValidationError("label count does not match table shape");
  for (Eigen::Index i = 0; i < lower_.rows(); ++i)
    for (Eigen::Index j = 0; j < lower_.cols(); ++j) {
      const auto at = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (lower_(i, j) < 0) throw ValidationError("negative bound at " + at);
      if (lower_(i, j) > upper_(i, j)) throw ValidationError("inverted interval at " + at);
    }
}

IntervalTable interval_contingency(const MultiValuedVariable& x, const MultiValuedVariable& y) {
  if (x.num_individuals() != y.num_individuals())
    throw ValidationError("variables observed on different numbers of individuals (" +
                          std::to_string(x.num_individuals()) + " vs " +
                          std::to_string(y.num_individuals()) + ")");
  const CountMatrix lower = meet_matrix(x).cast<std::int64_t>().transpose() * meet_matrix(y).cast<std::int64_t>();
  const CountMatrix upper = join_matrix(x).cast<std::int64_t>().transpose() * join_matrix(y).cast<std::int64_t>();
  return IntervalTable(x.modalities(), y.modalities(), lower, upper);
}

IntervalTable brute_force_interval_contingency(const MultiValuedVariable& x,
                                               const MultiValuedVariable& y,
                                               std::uint64_t limit) {
  if (x.num_individuals() != y.num_individuals())
    throw ValidationError("variables observed on different numbers of individuals");
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t nx = x.completion_count();
  const std::uint64_t ny = y.completion_count();
  const std::uint64_t pairs = (nx != 0 && ny > kMax / nx) ? kMax : nx * ny;
  if (pairs > limit) throw EnumerationTooLarge(pairs, limit);

  std::vector<std::vector<int>> y_choices;
  y_choices.reserve(ny);
  for_each_completion(y, limit, [&](const std::vector<int>& c) { y_choices.push_back(c); });

  const Eigen::Index n = x.num_modalities();
  const Eigen::Index p = y.num_modalities();
  CountMatrix lower = CountMatrix::Constant(n, p, std::numeric_limits<std::int64_t>::max());
  CountMatrix upper = CountMatrix::Zero(n, p);
  CountMatrix table(n, p);
  for_each_completion(x, limit, [&](const std::vector<int>& cx) {
    for (const auto& cy : y_choices) {
      table.setZero();
      for (std::size_t k = 0; k < cx.size(); ++k) ++table(cx[k], cy[k]);
      lower = lower.cwiseMin(table);
      upper = upper.cwiseMax(table);
    }
  });
  return IntervalTable(x.modalities(), y.modalities(), lower, upper);
}

CenterTable centers(const IntervalTable& t) {
  return {t.row_labels(), t.col_labels(), (t.lower() + t.upper()).cast<double>() / 2.0};
}

TableDiagnostics validate_for_analysis(const CenterTable& t) {
  TableDiagnostics d;
  const Eigen::Index n = t.cells.rows();
  const Eigen::Index p = t.cells.cols();
  d.grand_total = t.cells.sum();
  d.rank_bound = std::max<Eigen::Index>(0, std::min(n - 1, p - 1));
  if ((t.cells.array() < 0.0).any() || !t.cells.allFinite()) d.issues.emplace_back("invalid cells");
  if (!(d.grand_total > 0.0)) d.issues.emplace_back("zero grand total");
  for (Eigen::Index i = 0; i < n; ++i)
    if (t.cells.row(i).sum() == 0.0) {
      d.zero_rows.push_back(i);
      d.issues.push_back("zero row margin at row " + std::to_string(i));
    }
  for (Eigen::Index j = 0; j < p; ++j)
    if (t.cells.col(j).sum() == 0.0) {
      d.zero_cols.push_back(j);
      d.issues.push_back("zero column margin at column " + std::to_string(j));
    }
  if (d.rank_bound < 1) d.issues.emplace_back("no non-trivial axes");
  return d;
}

std::pair<IntervalTable, std::vector<std::string>> drop_empty_margins(const IntervalTable& t) {
  // A center margin is zero exactly when every upper bound on that line is zero.
  std::vector<Eigen::Index> keep_rows, keep_cols;
  std::vector<std::string> warnings;
  for (Eigen::Index i = 0; i < t.rows(); ++i) {
    if (t.upper().row(i).sum() > 0)
      keep_rows.push_back(i);
    else
      warnings.push_back("dropped empty row '" + t.row_labels()[static_cast<std::size_t>(i)] + "'");
  }
  for (Eigen::Index j = 0; j < t.cols(); ++j) {
    if (t.upper().col(j).sum() > 0)
      keep_cols.push_back(j);
    else
      warnings.push_back("dropped empty column '" + t.col_labels()[static_cast<std::size_t>(j)] + "'");
  }
  if (keep_rows.empty() || keep_cols.empty()) throw ValidationError("table is empty after dropping zero margins");

  std::vector<std::string> rows, cols;
  for (auto i : keep_rows) rows.push_back(t.row_labels()[static_cast<std::size_t>(i)]);
  for (auto j : keep_cols) cols.push_back(t.col_labels()[static_cast<std::size_t>(j)]);
  CountMatrix lower = t.lower()(keep_rows, keep_cols);
  CountMatrix upper = t.upper()(keep_rows, keep_cols);
  return {IntervalTable(std::move(rows), std::move(cols), std::move(lower), std::move(upper)),
          std::move(warnings)};
}

}  // namespace symca
