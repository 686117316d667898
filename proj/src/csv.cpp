#include "ellspec/csv.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "ellspec/format.hpp"

namespace ellspec {

namespace {

std::string trim(const std::string& text) {
  const char* ws = " \t\r\f\v";
  const std::size_t first = text.find_first_not_of(ws);
  if (first == std::string::npos) return {};
  const std::size_t last = text.find_last_not_of(ws);
  return text.substr(first, last - first + 1);
}

std::vector<std::string> split_cells(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      cells.push_back(trim(line.substr(start)));
      break;
    }
    cells.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return cells;
}

// Strict finite-number parse: the whole cell must be consumed and the value
// finite ("nan"/"inf" are rejected).
bool parse_number(const std::string& cell, double& out) {
  if (cell.empty()) return false;
  char* end = nullptr;
  const double value = std::strtod(cell.c_str(), &end);
  if (end != cell.c_str() + cell.size()) return false;
  if (!std::isfinite(value)) return false;
  out = value;
  return true;
}

}  // namespace

CsvTable parse_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  std::size_t line_no = 0;
  std::size_t width = 0;
  bool saw_content = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::vector<std::string> cells = split_cells(line);
    if (!saw_content) {
      saw_content = true;
      width = cells.size();
      Vec row(cells.size());
      bool numeric = true;
      for (std::size_t i = 0; i < cells.size(); ++i)
        if (!parse_number(cells[i], row[i])) {
          numeric = false;
          break;
        }
      if (numeric)
        table.rows.push_back(std::move(row));
      else
        table.header = std::move(cells);
      continue;
    }
    if (cells.size() != width)
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                           std::to_string(width) + " columns, got " +
                           std::to_string(cells.size()),
                       line_no);
    Vec row(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (!parse_number(cells[i], row[i]))
        throw ParseError("line " + std::to_string(line_no) + ": cell '" +
                             cells[i] + "' in column " + std::to_string(i + 1) +
                             " is not a finite number",
                         line_no);
    table.rows.push_back(std::move(row));
  }
  if (table.rows.empty())
    throw ParseError("input contains no data rows", line_no);
  return table;
}

CsvTable parse_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "' for reading", 0);
  return parse_csv(in);
}

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const Mat& rows) {
  if (!header.empty()) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (i) out << ',';
      out << header[i];
    }
    out << '\n';
  }
  for (const Vec& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << format_double(row[i]);
    }
    out << '\n';
  }
}

}  // namespace ellspec
