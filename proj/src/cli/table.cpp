#include "atomlens/cli/table.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace atomlens::cli {

void ResultTable::add_column(std::string name, std::string unit) {
  if (!rows_.empty()) throw std::logic_error("ResultTable: columns must precede rows");
  if (name.find_first_of(",\n\r") != std::string::npos ||
      unit.find_first_of(",\n\r") != std::string::npos) {
    throw std::invalid_argument("ResultTable: column names may not contain ',' or newlines");
  }
  columns_.push_back({std::move(name), std::move(unit)});
}

void ResultTable::add_row(std::vector<double> values) {
  if (values.size() != columns_.size()) {
    throw std::invalid_argument("ResultTable: row width does not match the column count");
  }
  rows_.push_back(std::move(values));
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

namespace {

void write_comment(std::ostream& out, const std::string& text) {
  std::size_t start = 0;
  for (;;) {
    const std::size_t nl = text.find('\n', start);
    out << "# " << text.substr(start, nl == std::string::npos ? std::string::npos : nl - start)
        << '\n';
    if (nl == std::string::npos) break;
    start = nl + 1;
  }
}

}  // namespace

void ResultTable::write_csv(std::ostream& out) const {
  for (const auto& h : header_) write_comment(out, h);
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (i) out << ',';
    out << columns_[i].name << " [" << columns_[i].unit << ']';
  }
  out << '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << format_double(row[i]);
    }
    out << '\n';
  }
  for (const auto& f : footer_) write_comment(out, f);
}

std::string ResultTable::to_csv() const {
  std::ostringstream os;
  write_csv(os);
  return os.str();
}

}  // namespace atomlens::cli
