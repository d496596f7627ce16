#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace marc::io {

/// 17 significant digits in %g style with a '.' decimal point, independent
/// of the global locale.
std::string format_double(double v);

/// Comma-separated rows with LF endings. Cells are never quoted, so callers
/// only pass numbers and bare identifiers.
class CsvWriter {
 public:
  explicit CsvWriter(std::initializer_list<std::string_view> header);
  explicit CsvWriter(const std::vector<std::string>& header);

  CsvWriter& row(std::initializer_list<double> values);
  CsvWriter& row(std::string_view label, std::initializer_list<double> values);
  CsvWriter& row(const std::vector<double>& values);

  const std::string& str() const { return text_; }

 private:
  std::string text_;
};

/// Splits CSV text into header names and numeric rows; non-numeric cells
/// become NaN. Used to read our own output back.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  std::size_t column(std::string_view name) const;
};

CsvTable parse_csv(std::string_view text);

}  // namespace marc::io
