#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace mcdm::csv {

struct Record {
  std::size_t line = 0;  // 1-based physical line in the source text
  std::vector<std::string> fields;
};

/// Splits CSV text into records. Blank lines and lines whose first
/// non-blank character is '#' are skipped. Fields may be double-quoted
/// ("" escapes a quote); unquoted fields are trimmed of surrounding blanks.
std::vector<Record> split(std::string_view text);

/// Parses a finite decimal number (decimal point only, no grouping).
/// Throws ParseError carrying `line`/`column` on failure.
double parse_number(std::string_view cell, std::size_t line, std::size_t column);

/// Quotes a field if it contains a comma, quote or newline.
std::string escape(std::string_view field);

/// Fixed-point text with `decimals` digits; values that round to zero print unsigned.
std::string fixed(double value, int decimals = 6);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace mcdm::csv
