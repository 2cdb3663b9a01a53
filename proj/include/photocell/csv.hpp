#pragma once

#include <cstdio>
#include <string>

namespace photocell {

// Fixed 12-significant-digit formatting for all numeric CSV output.
inline std::string csv_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

}  // namespace photocell
