#pragma once

// Comma-separated numeric tables. Input accepts an optional header row (any
// first row with a non-numeric cell), skips blank lines, and requires every
// data row to have the same column count and only finite numeric cells;
// violations raise ParseError with the 1-based physical line number.

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "ellspec/vecops.hpp"

namespace ellspec {

/// Error in ingested text (CSV/JSON). `line` is 1-based; 0 when the error is
/// not tied to a specific line. what() already includes the location.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& message, std::size_t line_no = 0)
      : std::runtime_error(message), line_(line_no) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct CsvTable {
  std::vector<std::string> header;  // empty when the input had none
  Mat rows;
};

CsvTable parse_csv(std::istream& in);
CsvTable parse_csv_file(const std::string& path);

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const Mat& rows);

}  // namespace ellspec
