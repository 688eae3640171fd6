#pragma once

#include <complex>
#include <limits>

namespace opcalc {

using Complex = std::complex<double>;

// Sentinel valuation of an identically zero series.
inline constexpr int kInfiniteValuation = std::numeric_limits<int>::max();

}  // namespace opcalc
