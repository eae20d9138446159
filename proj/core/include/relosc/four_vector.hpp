#pragma once

#include <array>
#include <cstddef>

namespace relosc {

// Contravariant four-vector in natural units (hbar = c = 1), index order 0..3.
// All contractions use the metric diag(+1, -1, -1, -1).
struct FourVector {
    std::array<double, 4> c{0.0, 0.0, 0.0, 0.0};

    constexpr double& operator[](std::size_t i) { return c[i]; }
    constexpr double operator[](std::size_t i) const { return c[i]; }

    friend constexpr bool operator==(const FourVector&, const FourVector&) = default;
};

constexpr double minkowski_dot(const FourVector& a, const FourVector& b) {
    return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
}

constexpr FourVector operator+(const FourVector& a, const FourVector& b) {
    return {{{a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]}}};
}

constexpr FourVector operator-(const FourVector& a) {
    return {{{-a[0], -a[1], -a[2], -a[3]}}};
}

constexpr FourVector operator*(double k, const FourVector& a) {
    return {{{k * a[0], k * a[1], k * a[2], k * a[3]}}};
}

}  // namespace relosc
