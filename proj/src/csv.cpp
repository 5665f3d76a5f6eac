#include "z2mem/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

#include "z2mem/errors.hpp"

namespace z2mem {

namespace {

constexpr int kFixedColumns = 4;  // scan_kind, n, lambda, kT

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

double parse_double(const std::string& text) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0') throw DomainError("malformed CSV number '" + text + "'");
  return v;
}

}  // namespace

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

CsvWriter::CsvWriter(std::ostream& out, std::vector<std::string> comments)
    : out_(out), comments_(std::move(comments)) {}

void CsvWriter::write(const ScanRecord& record) {
  if (!started_) {
    for (const auto& c : comments_) out_ << "# " << c << '\n';
    out_ << "scan_kind,n,lambda,kT";
    for (const auto& [name, value] : record.columns) {
      out_ << ',' << name;
      header_.push_back(name);
    }
    out_ << '\n';
    started_ = true;
  } else {
    if (record.columns.size() != header_.size()) throw DomainError("CSV record has wrong width");
    for (std::size_t i = 0; i < header_.size(); ++i) {
      if (record.columns[i].first != header_[i]) throw DomainError("CSV column order changed");
    }
  }
  out_ << record.scan_kind << ',' << record.n << ',' << format_double(record.lambda) << ',';
  if (record.kT) out_ << format_double(*record.kT);
  for (const auto& [name, value] : record.columns) out_ << ',' << format_double(value);
  out_ << '\n';
}

void CsvWriter::write_all(const std::vector<ScanRecord>& records) {
  for (const auto& r : records) write(r);
}

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::vector<std::string> header;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.front() == '#') {
      table.comments.push_back(line.size() > 2 ? line.substr(2) : std::string{});
      continue;
    }
    const auto cells = split_row(line);
    if (header.empty()) {
      if (cells.size() < kFixedColumns || cells[0] != "scan_kind") {
        throw DomainError("CSV header row missing");
      }
      header = cells;
      continue;
    }
    if (cells.size() != header.size()) throw DomainError("CSV row width differs from header");
    ScanRecord r;
    r.scan_kind = cells[0];
    r.n = static_cast<int>(parse_double(cells[1]));
    r.lambda = parse_double(cells[2]);
    if (!cells[3].empty()) r.kT = parse_double(cells[3]);
    for (std::size_t i = kFixedColumns; i < cells.size(); ++i) {
      r.columns.emplace_back(header[i], parse_double(cells[i]));
    }
    table.records.push_back(std::move(r));
  }
  return table;
}

}  // namespace z2mem
