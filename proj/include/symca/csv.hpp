#ifndef SYMCA_CSV_HPP
#define SYMCA_CSV_HPP

#include <string>
#include <string_view>
#include <vector>

namespace symca::csv {

struct Record {
  int line = 0;  ///< 1-based line where the record starts
  std::vector<std::string> fields;
};

/// RFC 4180 reader: comma separated, double-quoted fields with "" escapes,
/// LF or CRLF line ends. Blank lines are skipped and a leading UTF-8 BOM is
/// ignored. Throws ParseError on an unterminated quote or stray characters
/// after a closing quote.
std::vector<Record> parse(std::string_view text);

/// Quotes a field when it contains a comma, quote, or line break.
std::string escape(std::string_view field);

std::string trim(std::string_view s);

}  // namespace symca::csv

#endif  // SYMCA_CSV_HPP
