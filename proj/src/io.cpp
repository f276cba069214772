#include "symca/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>

#include <json.hpp>

#include "symca/csv.hpp"
#include "symca/errors.hpp"

namespace symca::io {

using nlohmann::json;

namespace {

std::string at_line(int line) { return " at line " + std::to_string(line); }

std::set<std::string> split_labels(const std::string& cell, int line, std::size_t column) {
  std::set<std::string> labels;
  std::size_t start = 0;
  for (;;) {
    const auto bar = cell.find('|', start);
    const auto label = csv::trim(std::string_view(cell).substr(start, bar == std::string::npos ? bar : bar - start));
    if (label.empty())
      throw ParseError("empty modality label in column " + std::to_string(column + 1) + at_line(line));
    labels.insert(label);
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return labels;
}

std::int64_t parse_count(std::string_view text, const std::string& where) {
  const std::string s = csv::trim(text);
  std::int64_t value = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (s.empty() || ec != std::errc() || ptr != last) throw ParseError("invalid count '" + s + "' " + where);
  return value;
}

IntervalTable make_table(std::vector<std::string> rows, std::vector<std::string> cols, const CountMatrix& lo,
                         const CountMatrix& hi) {
  // Re-raise shape/bound violations as parse errors with cell coordinates.
  for (Eigen::Index i = 0; i < lo.rows(); ++i)
    for (Eigen::Index j = 0; j < lo.cols(); ++j) {
      const auto at = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (lo(i, j) < 0 || hi(i, j) < 0) throw ParseError("negative bound at " + at);
      if (lo(i, j) > hi(i, j)) throw ParseError("inverted interval at " + at);
    }
  try {
    return IntervalTable(std::move(rows), std::move(cols), lo, hi);
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
}

IntervalTable read_table_csv(std::string_view bytes) {
  const auto records = csv::parse(bytes);
  if (records.empty()) throw ParseError("interval table is empty");
  const auto& header = records.front();
  if (header.fields.size() < 2) throw ParseError("header needs at least one column label" + at_line(header.line));

  std::vector<std::string> cols;
  for (std::size_t j = 1; j < header.fields.size(); ++j) cols.push_back(csv::trim(header.fields[j]));
  const auto p = static_cast<Eigen::Index>(cols.size());
  const auto n = static_cast<Eigen::Index>(records.size() - 1);
  if (n < 1) throw ParseError("interval table has no rows");

  std::vector<std::string> rows;
  CountMatrix lo(n, p), hi(n, p);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& rec = records[static_cast<std::size_t>(i) + 1];
    if (static_cast<Eigen::Index>(rec.fields.size()) != p + 1)
      throw ParseError("ragged row: " + std::to_string(rec.fields.size()) + " fields, expected " +
                       std::to_string(p + 1) + at_line(rec.line));
    rows.push_back(csv::trim(rec.fields[0]));
    for (Eigen::Index j = 0; j < p; ++j) {
      const std::string& cell = rec.fields[static_cast<std::size_t>(j) + 1];
      const std::string where = "at (" + std::to_string(i) + "," + std::to_string(j) + ")";
      const auto colon = cell.find(':');
      if (colon == std::string::npos) throw ParseError("cell '" + cell + "' is not lo:hi " + where);
      lo(i, j) = parse_count(std::string_view(cell).substr(0, colon), where);
      hi(i, j) = parse_count(std::string_view(cell).substr(colon + 1), where);
    }
  }
  return make_table(std::move(rows), std::move(cols), lo, hi);
}

std::vector<std::string> string_array(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) throw ParseError(std::string("missing array '") + key + "'");
  std::vector<std::string> out;
  for (const auto& e : j[key]) {
    if (!e.is_string()) throw ParseError(std::string("non-string entry in '") + key + "'");
    out.push_back(e.get<std::string>());
  }
  return out;
}

IntervalTable read_table_json(std::string_view bytes) {
  json j;
  try {
    j = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("interval table JSON must be an object");
  auto rows = string_array(j, "row_labels");
  auto cols = string_array(j, "col_labels");
  if (!j.contains("cells") || !j["cells"].is_array()) throw ParseError("missing array 'cells'");
  const auto& cells = j["cells"];
  const auto n = static_cast<Eigen::Index>(rows.size());
  const auto p = static_cast<Eigen::Index>(cols.size());
  if (n < 1 || p < 1) throw ParseError("interval table has no rows or no columns");
  if (static_cast<Eigen::Index>(cells.size()) != n)
    throw ParseError("cells has " + std::to_string(cells.size()) + " rows, expected " + std::to_string(n));
  CountMatrix lo(n, p), hi(n, p);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = cells[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != p)
      throw ParseError("ragged row " + std::to_string(i) + " in cells");
    for (Eigen::Index j2 = 0; j2 < p; ++j2) {
      const auto& cell = row[static_cast<std::size_t>(j2)];
      const std::string where = "at (" + std::to_string(i) + "," + std::to_string(j2) + ")";
      if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number_integer() || !cell[1].is_number_integer())
        throw ParseError("cell must be [lo, hi] integers " + where);
      lo(i, j2) = cell[0].get<std::int64_t>();
      hi(i, j2) = cell[1].get<std::int64_t>();
    }
  }
  return make_table(std::move(rows), std::move(cols), lo, hi);
}

void dump_canonical(const json& j, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent), ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {  // std::map keeps keys sorted
        if (!first) out += ",\n";
        first = false;
        out += pad + json(key).dump() + ": ";
        dump_canonical(value, out, indent + 2);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case json::value_t::array: {
      const bool flat = std::none_of(j.begin(), j.end(), [](const json& e) { return e.is_structured(); });
      if (j.empty()) {
        out += "[]";
      } else if (flat) {
        out += "[";
        for (std::size_t k = 0; k < j.size(); ++k) {
          if (k) out += ", ";
          dump_canonical(j[k], out, indent);
        }
        out += "]";
      } else {
        out += "[\n";
        for (std::size_t k = 0; k < j.size(); ++k) {
          if (k) out += ",\n";
          out += pad;
          dump_canonical(j[k], out, indent + 2);
        }
        out += "\n" + close_pad + "]";
      }
      return;
    }
    case json::value_t::number_float:
      out += format_number(j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

std::string canonical(const json& j) {
  std::string out;
  dump_canonical(j, out, 0);
  out += "\n";
  return out;
}

json record_json(const ModalityRecord& r) {
  return json{{"label", r.label}, {"coords", r.coords}, {"rect_lo", r.rect_lo}, {"rect_hi", r.rect_hi}};
}

std::vector<double> number_array(const json& j, const char* key, std::size_t expected, const std::string& where) {
  if (!j.contains(key) || !j[key].is_array()) throw ParseError(std::string("missing array '") + key + "' in " + where);
  std::vector<double> out;
  for (const auto& e : j[key]) {
    if (!e.is_number()) throw ParseError(std::string("non-numeric entry in '") + key + "' in " + where);
    out.push_back(e.get<double>());
  }
  if (expected != static_cast<std::size_t>(-1) && out.size() != expected)
    throw ParseError(std::string("'") + key + "' in " + where + " has " + std::to_string(out.size()) +
                     " entries, expected " + std::to_string(expected));
  return out;
}

std::vector<ModalityRecord> records_from(const json& j, const char* key, std::size_t axes) {
  if (!j.contains(key) || !j[key].is_array()) throw ParseError(std::string("missing array '") + key + "'");
  std::vector<ModalityRecord> out;
  std::size_t k = 0;
  for (const auto& e : j[key]) {
    const std::string where = std::string(key) + "[" + std::to_string(k++) + "]";
    if (!e.is_object() || !e.contains("label") || !e["label"].is_string())
      throw ParseError("missing label in " + where);
    ModalityRecord r;
    r.label = e["label"].get<std::string>();
    r.coords = number_array(e, "coords", axes, where);
    r.rect_lo = number_array(e, "rect_lo", axes, where);
    r.rect_hi = number_array(e, "rect_hi", axes, where);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::pair<MultiValuedVariable, MultiValuedVariable> read_survey_csv(std::string_view bytes) {
  const auto records = csv::parse(bytes);
  if (records.empty()) throw ParseError("survey is empty");
  const auto& header = records.front();
  if (header.fields.size() < 2) throw ParseError("survey needs two columns, header has " +
                                                 std::to_string(header.fields.size()));
  if (header.fields.size() > 2)
    throw ParseError("survey needs exactly two columns, header has " + std::to_string(header.fields.size()));
  if (records.size() < 2) throw ParseError("survey has no individuals");

  std::vector<std::set<std::string>> xs, ys;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.fields.size() != 2)
      throw ParseError("malformed row: " + std::to_string(rec.fields.size()) + " fields, expected 2" +
                       at_line(rec.line));
    for (std::size_t c = 0; c < 2; ++c)
      if (csv::trim(rec.fields[c]).empty())
        throw ParseError("empty cell in column " + std::to_string(c + 1) + at_line(rec.line));
    xs.push_back(split_labels(rec.fields[0], rec.line, 0));
    ys.push_back(split_labels(rec.fields[1], rec.line, 1));
  }
  return {parse_observations(xs, std::nullopt, csv::trim(header.fields[0])),
          parse_observations(ys, std::nullopt, csv::trim(header.fields[1]))};
}

IntervalTable read_interval_table(std::string_view bytes, TableFormat format) {
  return format == TableFormat::Csv ? read_table_csv(bytes) : read_table_json(bytes);
}

std::string write_interval_table(const IntervalTable& t, TableFormat format) {
  if (format == TableFormat::Csv) {
    std::string out;
    for (const auto& c : t.col_labels()) out += "," + csv::escape(c);
    out += "\n";
    for (Eigen::Index i = 0; i < t.rows(); ++i) {
      out += csv::escape(t.row_labels()[static_cast<std::size_t>(i)]);
      for (Eigen::Index j = 0; j < t.cols(); ++j)
        out += "," + std::to_string(t.lower()(i, j)) + ":" + std::to_string(t.upper()(i, j));
      out += "\n";
    }
    return out;
  }
  json cells = json::array();
  for (Eigen::Index i = 0; i < t.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < t.cols(); ++j) row.push_back(json::array({t.lower()(i, j), t.upper()(i, j)}));
    cells.push_back(std::move(row));
  }
  return canonical(json{{"row_labels", t.row_labels()}, {"col_labels", t.col_labels()}, {"cells", cells}});
}

TableFormat format_for_path(std::string_view path) {
  return path.size() >= 4 && path.substr(path.size() - 4) == ".csv" ? TableFormat::Csv : TableFormat::Json;
}

ResultDocument summarize(const SymCAResult<double>& r) {
  const auto axes = static_cast<std::size_t>(r.ca.n_axes);
  ResultDocument doc;
  doc.eigenvalues.assign(r.ca.eigenvalues.data(), r.ca.eigenvalues.data() + axes);
  doc.inertia_share.assign(r.ca.inertia_share.data(), r.ca.inertia_share.data() + axes);
  auto fill = [axes](const std::vector<std::string>& labels, const Eigen::MatrixXd& coords,
                     const Eigen::MatrixXd& lo, const Eigen::MatrixXd& hi) {
    std::vector<ModalityRecord> out;
    for (Eigen::Index k = 0; k < coords.rows(); ++k) {
      ModalityRecord rec;
      rec.label = labels[static_cast<std::size_t>(k)];
      for (std::size_t a = 0; a < axes; ++a) {
        const auto col = static_cast<Eigen::Index>(a);
        rec.coords.push_back(coords(k, col));
        rec.rect_lo.push_back(lo(k, col));
        rec.rect_hi.push_back(hi(k, col));
      }
      out.push_back(std::move(rec));
    }
    return out;
  };
  doc.rows = fill(r.row_labels, r.ca.row_coords, r.row_rect_lo, r.row_rect_hi);
  doc.cols = fill(r.col_labels, r.ca.col_coords, r.col_rect_lo, r.col_rect_hi);
  return doc;
}

std::string write_result_json(const ResultDocument& doc) {
  json rows = json::array();
  json cols = json::array();
  for (const auto& r : doc.rows) rows.push_back(record_json(r));
  for (const auto& c : doc.cols) cols.push_back(record_json(c));
  return canonical(json{{"eigenvalues", doc.eigenvalues},
                        {"inertia_share", doc.inertia_share},
                        {"rows", rows},
                        {"cols", cols}});
}

std::string write_result_json(const SymCAResult<double>& r) { return write_result_json(summarize(r)); }

ResultDocument read_result_json(std::string_view bytes) {
  json j;
  try {
    j = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("result JSON must be an object");
  ResultDocument doc;
  doc.eigenvalues = number_array(j, "eigenvalues", static_cast<std::size_t>(-1), "result");
  doc.inertia_share = number_array(j, "inertia_share", doc.eigenvalues.size(), "result");
  doc.rows = records_from(j, "rows", doc.eigenvalues.size());
  doc.cols = records_from(j, "cols", doc.eigenvalues.size());
  return doc;
}

std::string format_number(double x) {
  if (!std::isfinite(x)) throw ValidationError("cannot serialize a non-finite number");
  if (x == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

}  // namespace symca::io
