#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace atomlens::cli {

struct Column {
  std::string name;
  std::string unit;
};

/// Numeric table with comment lines before and after the data. Every row
/// has one value per column.
class ResultTable {
 public:
  void add_header_comment(std::string line) { header_.push_back(std::move(line)); }
  void add_footer_comment(std::string line) { footer_.push_back(std::move(line)); }
  void add_column(std::string name, std::string unit);
  /// Throws std::invalid_argument on a width mismatch.
  void add_row(std::vector<double> values);

  const std::vector<Column>& columns() const { return columns_; }
  const std::vector<std::vector<double>>& rows() const { return rows_; }
  const std::vector<std::string>& header_comments() const { return header_; }
  const std::vector<std::string>& footer_comments() const { return footer_; }

  /// CSV with LF endings, "# " comment lines and a "name [unit]" header row.
  void write_csv(std::ostream& out) const;
  std::string to_csv() const;

 private:
  std::vector<std::string> header_;
  std::vector<Column> columns_;
  std::vector<std::vector<double>> rows_;
  std::vector<std::string> footer_;
};

/// Shortest form that round-trips: printf "%.17g".
std::string format_double(double value);

}  // namespace atomlens::cli
