#pragma once

#include <string>

namespace drip {

/// Formats a double for CSV output. Fixed "%.12g" formatting keeps campaign
/// output byte-identical across runs and thread counts.
std::string csv_num(double v);

}  // namespace drip
