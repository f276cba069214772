#include "symca/csv.hpp"

#include "symca/errors.hpp"

namespace symca::csv {

namespace {

bool blank(const Record& r) { return r.fields.size() == 1 && r.fields.front().empty(); }

}  // namespace

std::vector<Record> parse(std::string_view text) {
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

  std::vector<Record> records;
  Record current;
  std::string field;
  int line = 1;
  current.line = line;
  std::size_t i = 0;
  bool quoted_field = false;

  auto end_record = [&] {
    current.fields.push_back(std::move(field));
    field.clear();
    if (!blank(current)) records.push_back(std::move(current));
    current = Record{};
    current.line = line;
    quoted_field = false;
  };

  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '"' && field.empty() && !quoted_field) {
      quoted_field = true;
      const int opened_at = line;
      ++i;
      for (;;) {
        if (i >= text.size())
          throw ParseError("unterminated quoted field starting at line " + std::to_string(opened_at));
        if (text[i] == '"') {
          if (i + 1 < text.size() && text[i + 1] == '"') {
            field.push_back('"');
            i += 2;
            continue;
          }
          ++i;
          break;
        }
        if (text[i] == '\n') ++line;
        field.push_back(text[i++]);
      }
      if (i < text.size() && text[i] != ',' && text[i] != '\n' && text[i] != '\r')
        throw ParseError("unexpected character after closing quote at line " + std::to_string(line));
      continue;
    }
    if (ch == ',') {
      current.fields.push_back(std::move(field));
      field.clear();
      quoted_field = false;
      ++i;
    } else if (ch == '\r' || ch == '\n') {
      if (ch == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      ++i;
      end_record();
      ++line;
      current.line = line;
    } else {
      if (quoted_field) throw ParseError("unexpected character after closing quote at line " + std::to_string(line));
      field.push_back(ch);
      ++i;
    }
  }
  if (!field.empty() || !current.fields.empty() || quoted_field) end_record();
  return records;
}

std::string escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace symca::csv
