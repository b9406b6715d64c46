#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lexiswitch::csv {

struct Row {
  std::size_t line = 0;  // 1-based line on which the record starts
  std::vector<std::string> fields;
};

// RFC 4180 reader: quoted fields may contain commas, doubled quotes and newlines.
// Throws ParseError on an unterminated quote or stray quote character.
std::vector<Row> parse(std::string_view content, std::string_view source);

std::string escape(std::string_view field);

}  // namespace lexiswitch::csv
