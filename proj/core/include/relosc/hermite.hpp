#pragma once

#include <span>
#include <vector>

namespace relosc {

// Hard cap on the Hermite order: H_64 at the edge of our probe grids is
// ~1e80, still comfortably inside double range, while orders far beyond
// that overflow.  Everything in this library stays below ~12.
inline constexpr int hermite_max_order = 64;

// Physicist's Hermite polynomial H_j(x) via the three-term recurrence
// H_{j+1} = 2 x H_j - 2 j H_{j-1}.  Throws std::invalid_argument for
// j < 0 or j > hermite_max_order.
double hermite_h(int j, double x);

// Fills values[0..jmax] with H_0(x)..H_jmax(x) in one recurrence sweep.
// values.size() must be >= jmax + 1.
void hermite_all(int jmax, double x, std::span<double> values);
std::vector<double> hermite_all(int jmax, double x);

// One-dimensional oscillator basis factor
//   phi_j(x) = H_j(sqrt(Omega/2) x) * exp(-(Omega/4) x^2)
// in natural units.  Requires Omega > 0.
double phi_factor(int j, double x, double omega);

}  // namespace relosc
