#include "marc/csv.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "marc/error.hpp"

namespace marc::io {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(std::initializer_list<std::string_view> header)
    : CsvWriter(std::vector<std::string>(header.begin(), header.end())) {}

CsvWriter::CsvWriter(const std::vector<std::string>& header) {
  for (std::size_t k = 0; k < header.size(); ++k) {
    if (k > 0) text_ += ',';
    text_ += header[k];
  }
  text_ += '\n';
}

CsvWriter& CsvWriter::row(std::initializer_list<double> values) {
  return row(std::vector<double>(values));
}

CsvWriter& CsvWriter::row(std::string_view label, std::initializer_list<double> values) {
  text_ += label;
  for (double v : values) {
    text_ += ',';
    text_ += format_double(v);
  }
  text_ += '\n';
  return *this;
}

CsvWriter& CsvWriter::row(const std::vector<double>& values) {
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k > 0) text_ += ',';
    text_ += format_double(values[k]);
  }
  text_ += '\n';
  return *this;
}

std::size_t CsvTable::column(std::string_view name) const {
  for (std::size_t k = 0; k < header.size(); ++k) {
    if (header[k] == name) return k;
  }
  throw Error(ErrorKind::InvalidParameter, "no CSV column named " + std::string(name));
}

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    cells.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

double parse_cell(std::string_view cell) {
  double v = std::numeric_limits<double>::quiet_NaN();
  const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (res.ec != std::errc{} || res.ptr != cell.data() + cell.size()) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return v;
}

}  // namespace

CsvTable parse_csv(std::string_view text) {
  CsvTable table;
  bool first = true;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty()) continue;
    const auto cells = split(line);
    if (first) {
      for (auto c : cells) table.header.emplace_back(c);
      first = false;
      continue;
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (auto c : cells) row.push_back(parse_cell(c));
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace marc::io
