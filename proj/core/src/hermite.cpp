#include "relosc/hermite.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace relosc {

namespace {

void check_order(int j) {
    if (j < 0 || j > hermite_max_order)
        throw std::invalid_argument("hermite order must lie in [0, " +
                                    std::to_string(hermite_max_order) + "], got " +
                                    std::to_string(j));
}

}  // namespace

double hermite_h(int j, double x) {
    check_order(j);
    double hm1 = 0.0;  // H_{k-1}
    double h = 1.0;    // H_k, starting at H_0 = 1
    for (int k = 0; k < j; ++k) {
        const double hp1 = 2.0 * x * h - 2.0 * k * hm1;
        hm1 = h;
        h = hp1;
    }
    return h;
}

void hermite_all(int jmax, double x, std::span<double> values) {
    check_order(jmax);
    if (values.size() < static_cast<std::size_t>(jmax) + 1)
        throw std::invalid_argument("hermite_all: output span too small");
    values[0] = 1.0;
    if (jmax == 0) return;
    values[1] = 2.0 * x;
    for (int k = 1; k < jmax; ++k)
        values[k + 1] = 2.0 * x * values[k] - 2.0 * k * values[k - 1];
}

std::vector<double> hermite_all(int jmax, double x) {
    std::vector<double> v(static_cast<std::size_t>(jmax) + 1);
    hermite_all(jmax, x, v);
    return v;
}

double phi_factor(int j, double x, double omega) {
    if (!(omega > 0.0))
        throw std::invalid_argument("phi_factor: Omega must be > 0");
    const double lambda = std::sqrt(omega / 2.0);
    const double z = lambda * x;
    return hermite_h(j, z) * std::exp(-0.5 * z * z);
}

}  // namespace relosc
