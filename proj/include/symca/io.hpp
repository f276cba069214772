#ifndef SYMCA_IO_HPP
#define SYMCA_IO_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symca/interval_table.hpp"
#include "symca/multivalued_data.hpp"
#include "symca/symca_projection.hpp"

namespace symca::io {

enum class TableFormat { Csv, Json };

/// Two-column survey: header with the variable names, then one individual
/// per line, each cell holding modality labels joined by '|'.
std::pair<MultiValuedVariable, MultiValuedVariable> read_survey_csv(std::string_view bytes);

/// CSV: header = corner cell then column labels; each row = label then
/// "lo:hi" cells. JSON: {"row_labels", "col_labels", "cells": [[[lo,hi],...],...]}.
IntervalTable read_interval_table(std::string_view bytes, TableFormat format);

std::string write_interval_table(const IntervalTable& t, TableFormat format);

/// Picks Csv for a ".csv" extension and Json otherwise.
TableFormat format_for_path(std::string_view path);

struct ModalityRecord {
  std::string label;
  std::vector<double> coords;
  std::vector<double> rect_lo;
  std::vector<double> rect_hi;

  friend bool operator==(const ModalityRecord&, const ModalityRecord&) = default;
};

/// Serializable view of a SymCA result: what the JSON file holds and what
/// the plotter needs.
struct ResultDocument {
  std::vector<double> eigenvalues;
  std::vector<double> inertia_share;
  std::vector<ModalityRecord> rows;
  std::vector<ModalityRecord> cols;

  std::size_t n_axes() const { return eigenvalues.size(); }

  friend bool operator==(const ResultDocument&, const ResultDocument&) = default;
};

ResultDocument summarize(const SymCAResult<double>& r);

/// Canonical JSON: sorted keys, 15 significant digits, two-space indent,
/// trailing newline. Identical inputs give identical bytes.
std::string write_result_json(const ResultDocument& doc);
std::string write_result_json(const SymCAResult<double>& r);

ResultDocument read_result_json(std::string_view bytes);

/// Shortest "%.15g" rendering, with negative zero printed as 0.
std::string format_number(double x);

}  // namespace symca::io

#endif  // SYMCA_IO_HPP
