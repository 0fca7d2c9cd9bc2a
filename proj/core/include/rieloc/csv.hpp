#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace rieloc::csv {

/// Shortest representation that round-trips a double (17 significant digits).
inline std::string format(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline void write_row(std::ostream& os, const std::vector<std::string>& cells) {
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) os << ',';
    os << cells[i];
  }
  os << '\n';
}

inline void write_row(std::ostream& os, const std::vector<double>& cells) {
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) os << ',';
    os << format(cells[i]);
  }
  os << '\n';
}

}  // namespace rieloc::csv
