#include "relosc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace relosc {

QuadratureRule gauss_hermite(int order) {
    if (order < 1 || order > 128)
        throw std::invalid_argument("gauss_hermite: order must lie in [1, 128], got " +
                                    std::to_string(order));

    const double sqrt_pi = std::sqrt(std::numbers::pi);
    QuadratureRule rule;
    rule.order = order;

    if (order == 1) {
        rule.nodes = {0.0};
        rule.weights = {sqrt_pi};
        return rule;
    }

    // Jacobi matrix of the (monic) Hermite recurrence: zero diagonal,
    // off-diagonal sqrt(k/2).  Its eigenvalues are the nodes; the squared
    // first eigenvector components, times sqrt(pi), are the weights.
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(order, order);
    for (int k = 1; k < order; ++k) {
        const double off = std::sqrt(k / 2.0);
        jacobi(k, k - 1) = off;
        jacobi(k - 1, k) = off;
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("gauss_hermite: eigen decomposition failed");

    rule.nodes.resize(order);
    rule.weights.resize(order);
    std::vector<int> idx(order);
    for (int i = 0; i < order; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return solver.eigenvalues()(a) < solver.eigenvalues()(b);
    });
    for (int i = 0; i < order; ++i) {
        const int j = idx[i];
        const double v0 = solver.eigenvectors()(0, j);
        rule.nodes[i] = solver.eigenvalues()(j);
        rule.weights[i] = sqrt_pi * v0 * v0;
    }

    // Enforce exact symmetry: mirror-average node/weight pairs and pin the
    // middle node of odd rules to zero.  This makes odd moments vanish
    // identically instead of to rounding.
    for (int i = 0, j = order - 1; i < j; ++i, --j) {
        const double node = 0.5 * (rule.nodes[j] - rule.nodes[i]);
        rule.nodes[i] = -node;
        rule.nodes[j] = node;
        const double weight = 0.5 * (rule.weights[i] + rule.weights[j]);
        rule.weights[i] = weight;
        rule.weights[j] = weight;
    }
    if (order % 2 == 1) rule.nodes[order / 2] = 0.0;

    return rule;
}

}  // namespace relosc
