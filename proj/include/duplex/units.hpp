#pragma once

#include <cmath>

namespace duplex {

// Power ratios. dBm uses the same conversion with 0 dBm = 1 mW, so all
// internal powers are carried in linear milliwatt-normalized units.
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double x) { return 10.0 * std::log10(x); }

}  // namespace duplex
