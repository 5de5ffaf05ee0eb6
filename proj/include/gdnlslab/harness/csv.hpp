#pragma once

#include <fstream>
#include <string>
#include <variant>
#include <vector>

namespace gdnls::harness {

// Comma-separated output with 17-significant-digit scientific floats,
// gnuplot-compatible, byte-reproducible across identical runs.
class CsvWriter {
 public:
  using Cell = std::variant<double, long long, std::string>;

  CsvWriter(const std::string& path, const std::vector<std::string>& header);
  void row(const std::vector<Cell>& cells);

  static std::string format(const Cell& cell);

 private:
  std::ofstream out_;
};

}  // namespace gdnls::harness
