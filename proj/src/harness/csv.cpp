#include "gdnlslab/harness/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace gdnls::harness {

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& header)
    : out_(path) {
  if (!out_) throw std::runtime_error("CsvWriter: cannot open " + path);
  for (size_t i = 0; i < header.size(); ++i) out_ << (i ? "," : "") << header[i];
  out_ << "\n";
}

std::string CsvWriter::format(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", *d);
    return buf;
  }
  if (const auto* i = std::get_if<long long>(&cell)) return std::to_string(*i);
  return std::get<std::string>(cell);
}

void CsvWriter::row(const std::vector<Cell>& cells) {
  for (size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << format(cells[i]);
  out_ << "\n";
}

}  // namespace gdnls::harness
