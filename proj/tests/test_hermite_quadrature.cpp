#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "relosc/hermite.hpp"
#include "relosc/quadrature.hpp"

using namespace relosc;

namespace {

// integral x^{2k} e^{-x^2} dx = sqrt(pi) (2k-1)!! / 2^k
double even_gaussian_moment(int k) {
    double v = std::sqrt(std::numbers::pi);
    for (int j = 1; j <= k; ++j) v *= (2.0 * j - 1.0) / 2.0;
    return v;
}

}  // namespace

TEST_CASE("hermite polynomials match hand-computed values") {
    // Recurrence H_{j+1} = 2x H_j - 2j H_{j-1} unrolled by hand at x = 0.5:
    // 1, 1, -1, -5, 1, 41.
    CHECK(hermite_h(0, 0.5) == 1.0);
    CHECK(hermite_h(1, 0.5) == 1.0);
    CHECK(hermite_h(2, 0.5) == -1.0);
    CHECK(hermite_h(3, 0.5) == -5.0);
    CHECK(hermite_h(4, 0.5) == 1.0);
    CHECK(hermite_h(5, 0.5) == 41.0);

    // Values at the origin: zero for odd order, (-1)^k (2k)!/k! for order 2k.
    CHECK(hermite_h(1, 0.0) == 0.0);
    CHECK(hermite_h(3, 0.0) == 0.0);
    CHECK(hermite_h(2, 0.0) == -2.0);
    CHECK(hermite_h(4, 0.0) == 12.0);
    CHECK(hermite_h(6, 0.0) == -120.0);

    // Parity: H_j(-x) = (-1)^j H_j(x).
    for (int j = 0; j <= 8; ++j)
        CHECK(hermite_h(j, -1.3) == doctest::Approx((j % 2 ? -1.0 : 1.0) * hermite_h(j, 1.3))
                                        .epsilon(1e-14));
}

TEST_CASE("hermite_all agrees with the single-order evaluation") {
    const double x = 0.73;
    const auto values = hermite_all(10, x);
    REQUIRE(values.size() == 11);
    for (int j = 0; j <= 10; ++j) CHECK(values[j] == hermite_h(j, x));
}

TEST_CASE("hermite order limits are enforced") {
    CHECK_THROWS_AS(hermite_h(-1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(hermite_h(hermite_max_order + 1, 0.0), std::invalid_argument);
    CHECK_NOTHROW(hermite_h(hermite_max_order, 0.1));
}

TEST_CASE("phi_factor is the Hermite-Gaussian basis function") {
    const double omega = 2.0 / 3.0;
    const double lambda = std::sqrt(omega / 2.0);
    for (const double x : {0.0, 0.4, -1.7}) {
        for (int j = 0; j <= 4; ++j) {
            const double expected = hermite_h(j, lambda * x) * std::exp(-0.25 * omega * x * x);
            CHECK(phi_factor(j, x, omega) == doctest::Approx(expected).epsilon(1e-15));
        }
    }
}

TEST_CASE("two-point rule has the textbook nodes and weights") {
    const auto rule = gauss_hermite(2);
    const double node = 1.0 / std::sqrt(2.0);
    const double weight = std::sqrt(std::numbers::pi) / 2.0;
    REQUIRE(rule.nodes.size() == 2);
    CHECK(rule.nodes[0] == doctest::Approx(-node).epsilon(1e-15));
    CHECK(rule.nodes[1] == doctest::Approx(node).epsilon(1e-15));
    CHECK(rule.weights[0] == doctest::Approx(weight).epsilon(1e-15));
    CHECK(rule.weights[1] == doctest::Approx(weight).epsilon(1e-15));
}

TEST_CASE("one-point rule is the Gaussian mass at the origin") {
    const auto rule = gauss_hermite(1);
    REQUIRE(rule.nodes.size() == 1);
    CHECK(rule.nodes[0] == 0.0);
    CHECK(rule.weights[0] == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-15));
}

TEST_CASE("rules are bit-symmetric with positive weights summing to sqrt(pi)") {
    for (const int order : {2, 7, 16, 40, 128}) {
        const auto rule = gauss_hermite(order);
        REQUIRE(static_cast<int>(rule.nodes.size()) == order);
        double weight_sum = 0.0;
        for (int i = 0; i < order; ++i) {
            CHECK(rule.weights[i] > 0.0);
            weight_sum += rule.weights[i];
            // Pairwise symmetrization promises exact negation, not approximate.
            CHECK(rule.nodes[i] == -rule.nodes[order - 1 - i]);
            CHECK(rule.weights[i] == rule.weights[order - 1 - i]);
            if (i > 0) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
        }
        CHECK(weight_sum == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));
    }
}

TEST_CASE("rules integrate polynomial moments to their exactness degree") {
    for (const int order : {5, 13, 40}) {
        const auto rule = gauss_hermite(order);
        const int max_2k = std::min(2 * order - 2, 20);
        for (int twok = 0; twok <= max_2k; twok += 2) {
            double sum = 0.0;
            for (int i = 0; i < order; ++i)
                sum += rule.weights[i] * std::pow(rule.nodes[i], twok);
            const double exact = even_gaussian_moment(twok / 2);
            CHECK(std::abs(sum - exact) / exact <= 1e-13);
        }
        // Odd moments cancel exactly on the symmetrized rule.
        for (int p = 1; p <= 9; p += 2) {
            double sum = 0.0;
            for (int i = 0; i < order; ++i)
                sum += rule.weights[i] * std::pow(rule.nodes[i], p);
            CHECK(std::abs(sum) <= 1e-13);
        }
    }
}

TEST_CASE("quadrature order limits are enforced") {
    CHECK_THROWS_AS(gauss_hermite(0), std::invalid_argument);
    CHECK_THROWS_AS(gauss_hermite(129), std::invalid_argument);
}
