#include "lexiswitch/csv.h"

#include "lexiswitch/error.h"

namespace lexiswitch::csv {

std::vector<Row> parse(std::string_view content, std::string_view source) {
  std::vector<Row> rows;
  std::size_t line = 1;
  std::size_t pos = 0;
  while (pos < content.size()) {
    Row row;
    row.line = line;
    std::string field;
    bool in_quotes = false;
    bool quoted_field = false;
    bool row_done = false;
    while (!row_done) {
      if (pos >= content.size()) {
        if (in_quotes) throw ParseError(std::string(source), row.line, "unterminated quoted field");
        row.fields.push_back(std::move(field));
        break;
      }
      const char c = content[pos++];
      if (in_quotes) {
        if (c == '"') {
          if (pos < content.size() && content[pos] == '"') {
            field.push_back('"');
            ++pos;
          } else {
            in_quotes = false;
          }
        } else {
          if (c == '\n') ++line;
          field.push_back(c);
        }
        continue;
      }
      switch (c) {
        case '"':
          if (!field.empty() || quoted_field)
            throw ParseError(std::string(source), line, "unexpected quote inside field");
          in_quotes = quoted_field = true;
          break;
        case ',':
          row.fields.push_back(std::move(field));
          field.clear();
          quoted_field = false;
          break;
        case '\r':
          break;
        case '\n':
          ++line;
          row.fields.push_back(std::move(field));
          row_done = true;
          break;
        default:
          if (quoted_field) throw ParseError(std::string(source), line, "text after closing quote");
          field.push_back(c);
      }
    }
    const bool blank = row.fields.size() == 1 && row.fields[0].empty();
    if (!blank) rows.push_back(std::move(row));
  }
  return rows;
}

std::string escape(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace lexiswitch::csv
