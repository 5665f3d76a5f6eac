#pragma once

// Deterministic CSV for sweep output: comma separator, '.' decimal point,
// floats at 17 significant digits, '#'-prefixed comment lines before the
// header row.

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace z2mem {

struct ScanRecord {
  std::string scan_kind;
  int n = 0;
  double lambda = 0.0;
  std::optional<double> kT;  // empty cell when absent
  std::vector<std::pair<std::string, double>> columns;
};

/// %.17g; round-trips through std::strtod.
std::string format_double(double value);

class CsvWriter {
 public:
  CsvWriter(std::ostream& out, std::vector<std::string> comments);

  /// The first record fixes the header; later records must carry the same
  /// column names in the same order.
  void write(const ScanRecord& record);
  void write_all(const std::vector<ScanRecord>& records);

 private:
  std::ostream& out_;
  std::vector<std::string> comments_;
  std::vector<std::string> header_;
  bool started_ = false;
};

struct CsvTable {
  std::vector<std::string> comments;  // without the leading "# "
  std::vector<ScanRecord> records;
};

/// Parses what CsvWriter emits.
CsvTable read_csv(std::istream& in);

}  // namespace z2mem
