#include "relosc/integrate.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "relosc/hermite.hpp"

namespace relosc {

namespace {

struct FlatEntry {
    int u, v, w;
    Complex c;
};

std::vector<FlatEntry> flatten(const ScalarField& f) {
    std::vector<FlatEntry> out;
    out.reserve(f.coeffs().size());
    for (const auto& [idx, c] : f.coeffs()) out.push_back({idx[0], idx[1], idx[2], c});
    return out;
}

// values[axis][node * (maxord+1) + order] = H_order(node)
std::vector<double> axis_table(const QuadratureRule& rule, int maxord) {
    std::vector<double> t(static_cast<std::size_t>(rule.order) * (maxord + 1));
    for (int i = 0; i < rule.order; ++i)
        hermite_all(maxord, rule.nodes[i], {t.data() + static_cast<std::size_t>(i) * (maxord + 1),
                                            static_cast<std::size_t>(maxord) + 1});
    return t;
}

template <typename Accumulate>
void traverse(const ScalarField& a, const ScalarField& b, const QuadratureRule& rule,
              Accumulate&& accumulate) {
    const auto& ca = a.config();
    const auto& cb = b.config();
    if (ca.m != cb.m || ca.omega != cb.omega || ca.beta != cb.beta)
        throw std::invalid_argument("inner_product: fields have different kinematic context");
    if (rule.order < 1) throw std::invalid_argument("inner_product: empty quadrature rule");

    const auto ea = flatten(a);
    const auto eb = flatten(b);
    if (ea.empty() || eb.empty()) return;

    int maxord[3];
    for (int ax = 0; ax < 3; ++ax)
        maxord[ax] = std::max(a.max_orders()[ax], b.max_orders()[ax]);
    const auto t1 = axis_table(rule, maxord[0]);
    const auto t2 = axis_table(rule, maxord[1]);
    const auto t3 = axis_table(rule, maxord[2]);
    const int s1 = maxord[0] + 1, s2 = maxord[1] + 1, s3 = maxord[2] + 1;

    const int n = rule.order;
    for (int i = 0; i < n; ++i) {
        const double* h1 = t1.data() + static_cast<std::size_t>(i) * s1;
        const double wi = rule.weights[i];
        for (int j = 0; j < n; ++j) {
            const double* h2 = t2.data() + static_cast<std::size_t>(j) * s2;
            const double wij = wi * rule.weights[j];
            for (int k = 0; k < n; ++k) {
                const double* h3 = t3.data() + static_cast<std::size_t>(k) * s3;
                Complex va{0.0, 0.0}, vb{0.0, 0.0};
                for (const auto& e : ea) va += e.c * (h1[e.u] * h2[e.v] * h3[e.w]);
                for (const auto& e : eb) vb += e.c * (h1[e.u] * h2[e.v] * h3[e.w]);
                accumulate(wij * rule.weights[k], va, vb);
            }
        }
    }
}

}  // namespace

Complex inner_product(const ScalarField& a, const ScalarField& b, const QuadratureRule& rule) {
    Complex acc{0.0, 0.0};
    traverse(a, b, rule, [&](double w, Complex va, Complex vb) { acc += w * std::conj(va) * vb; });
    const Kinematics& k = a.kin();
    const double jac = 1.0 / (k.gamma * k.lambda * k.lambda * k.lambda);
    // Phase factors are constant over the relative coordinates; the bra enters
    // conjugated.
    return acc * jac * std::conj(a.phase_factor()) * b.phase_factor();
}

double inner_product_abs(const ScalarField& a, const ScalarField& b, const QuadratureRule& rule) {
    double acc = 0.0;
    traverse(a, b, rule, [&](double w, Complex va, Complex vb) { acc += w * std::abs(va) * std::abs(vb); });
    const Kinematics& k = a.kin();
    return acc / (k.gamma * k.lambda * k.lambda * k.lambda);
}

}  // namespace relosc
