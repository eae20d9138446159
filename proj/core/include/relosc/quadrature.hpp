#pragma once

#include <vector>

namespace relosc {

// Gauss-Hermite rule: sum_i weights[i] * f(nodes[i]) equals
// integral f(x) exp(-x^2) dx exactly for polynomial f of degree <= 2*order - 1.
struct QuadratureRule {
    int order = 0;
    std::vector<double> nodes;    // ascending, symmetric about 0
    std::vector<double> weights;  // positive, sum to sqrt(pi)
};

// Golub-Welsch construction (symmetric tridiagonal eigenproblem).
// Valid orders: 1 <= order <= 128; throws std::invalid_argument otherwise.
// Nodes and weights are symmetrized pairwise so the rule is bit-symmetric
// about zero (odd integrands cancel exactly).
QuadratureRule gauss_hermite(int order);

}  // namespace relosc
