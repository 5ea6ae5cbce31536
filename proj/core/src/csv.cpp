#include "drip/csv.hpp"

#include <cstdio>

namespace drip {

std::string csv_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace drip
