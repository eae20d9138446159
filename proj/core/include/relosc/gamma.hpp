#pragma once

#include <array>
#include <complex>

namespace relosc {

using Mat2 = std::array<std::array<std::complex<double>, 2>, 2>;
using Mat4 = std::array<std::array<std::complex<double>, 4>, 4>;
using Spinor2 = std::array<std::complex<double>, 2>;

// Gamma matrices in the Dirac (standard) representation plus the sigma3 Pauli
// matrix.  The representation is pluggable: everything downstream takes a
// GammaSet, so alternative representations can be tested (and a deliberately
// wrong set must be detected by the residual checks).
struct GammaSet {
    std::array<Mat4, 4> g;  // gamma^0 .. gamma^3 (upper index)
    Mat2 sigma3;
};

inline Mat2 pauli(int i) {
    const std::complex<double> I{0.0, 1.0};
    switch (i) {
        case 1:
            return {{{{0.0, 1.0}}, {{1.0, 0.0}}}};
        case 2:
            return {{{{0.0, -I}}, {{I, 0.0}}}};
        case 3:
            return {{{{1.0, 0.0}}, {{0.0, -1.0}}}};
        default:
            return {};
    }
}

// chi(+1/2) = (1,0)^T, chi(-1/2) = (0,1)^T.
inline Spinor2 chi(double s) {
    return s > 0 ? Spinor2{1.0, 0.0} : Spinor2{0.0, 1.0};
}

inline GammaSet dirac_gamma_set() {
    GammaSet set{};
    // gamma^0 = diag(1, 1, -1, -1)
    set.g[0][0][0] = 1.0;
    set.g[0][1][1] = 1.0;
    set.g[0][2][2] = -1.0;
    set.g[0][3][3] = -1.0;
    // gamma^i = [[0, sigma_i], [-sigma_i, 0]]
    for (int i = 1; i <= 3; ++i) {
        const Mat2 s = pauli(i);
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                set.g[i][a][b + 2] = s[a][b];
                set.g[i][a + 2][b] = -s[a][b];
            }
    }
    set.sigma3 = pauli(3);
    return set;
}

inline Mat4 mat_mul(const Mat4& a, const Mat4& b) {
    Mat4 out{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            const auto aik = a[i][k];
            if (aik == std::complex<double>{0.0, 0.0}) continue;
            for (int j = 0; j < 4; ++j) out[i][j] += aik * b[k][j];
        }
    return out;
}

// max entry of |{gamma^mu, gamma^nu} - 2 eta^{mu nu} I| over all mu, nu.
// Exactly zero for a representation with the right signature (the entries are
// small integers, so the arithmetic is exact).
inline double anticommutator_defect(const GammaSet& set) {
    const double eta[4] = {1.0, -1.0, -1.0, -1.0};
    double worst = 0.0;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            const Mat4 ab = mat_mul(set.g[mu], set.g[nu]);
            const Mat4 ba = mat_mul(set.g[nu], set.g[mu]);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) {
                    std::complex<double> want{0.0, 0.0};
                    if (i == j && mu == nu) want = 2.0 * eta[mu];
                    worst = std::max(worst, std::abs(ab[i][j] + ba[i][j] - want));
                }
        }
    return worst;
}

}  // namespace relosc
