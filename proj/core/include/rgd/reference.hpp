#pragma once

#include <array>

namespace rgd {

// Published reference values, 3 decimals.
const std::array<std::array<double, 24>, 11>& zetaTable();
const std::array<double, 20>& zetaSmallSigmaTable();
const std::array<std::array<double, 24>, 6>& z4Table();
const std::array<double, 20>& z4SmallSigmaTable();

inline double tableSigma2(int column) { return 0.1 * (column + 1); }

}  // namespace rgd
