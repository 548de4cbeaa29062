#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mvst {

// All CSV output goes through this formatter so files round-trip
// bit-identically at 17 significant digits.
inline std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> footer_comments;  // without the leading "# "
};

inline std::string to_csv_string(const CsvTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i) out += ',';
    out += table.header[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_g17(row[i]);
    }
    out += '\n';
  }
  for (const auto& c : table.footer_comments) out += "# " + c + '\n';
  return out;
}

inline void write_csv(const std::string& path, const CsvTable& table) {
  std::ofstream f(path);
  if (!f)
    throw std::invalid_argument("write_csv: cannot open " + path +
                                " for writing");
  f << to_csv_string(table);
  if (!f) throw std::invalid_argument("write_csv: write failed for " + path);
}

inline CsvTable read_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("read_csv: cannot open " + path);
  CsvTable table;
  std::string line;
  bool header_done = false;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      table.footer_comments.push_back(line.size() > 2 ? line.substr(2) : "");
      continue;
    }
    std::stringstream ss(line);
    std::string field;
    if (!header_done) {
      while (std::getline(ss, field, ',')) table.header.push_back(field);
      header_done = true;
      continue;
    }
    std::vector<double> row;
    while (std::getline(ss, field, ',')) row.push_back(std::stod(field));
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace mvst
