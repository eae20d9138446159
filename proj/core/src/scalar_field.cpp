#include "relosc/scalar_field.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "relosc/hermite.hpp"
#include "relosc/rng.hpp"

namespace relosc {

namespace {

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

void check_raise(int j) {
    if (j + 1 > hermite_max_order)
        throw std::domain_error("ScalarField: Hermite order guard exceeded");
}

}  // namespace

ScalarField::ScalarField(const OscillatorConfig& cfg, CoeffMap coeffs, const FourVector& momentum)
    : cfg_(cfg), coeffs_(std::move(coeffs)), momentum_(momentum) {
    validate(cfg_);
    if (!(cfg_.omega > 0.0))
        throw std::invalid_argument("ScalarField: Omega must be > 0 for field construction");
    kin_ = kinematics(cfg_);
    prune_and_scan();
}

void ScalarField::prune_and_scan() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        const auto& [idx, c] = *it;
        if (idx[0] < 0 || idx[1] < 0 || idx[2] < 0)
            throw std::invalid_argument("ScalarField: negative Hermite order");
        if (idx[0] > hermite_max_order || idx[1] > hermite_max_order || idx[2] > hermite_max_order)
            throw std::invalid_argument("ScalarField: Hermite order guard exceeded");
        if (c == Complex{0.0, 0.0})
            it = coeffs_.erase(it);
        else
            ++it;
    }
    max_orders_ = {0, 0, 0};
    for (const auto& [idx, c] : coeffs_)
        for (int a = 0; a < 3; ++a)
            if (idx[a] > max_orders_[a]) max_orders_[a] = idx[a];
}

Complex ScalarField::phase_factor() const {
    const double angle = -(momentum_[0] * phase_t_ - momentum_[3] * phase_x3_);
    return std::polar(1.0, angle);
}

Complex ScalarField::evaluate_bare(double z1, double z2, double z3) const {
    if (coeffs_.empty()) return {0.0, 0.0};
    std::array<double, hermite_max_order + 1> h1, h2, h3;
    hermite_all(max_orders_[0], z1, {h1.data(), h1.size()});
    hermite_all(max_orders_[1], z2, {h2.data(), h2.size()});
    hermite_all(max_orders_[2], z3, {h3.data(), h3.size()});
    Complex acc{0.0, 0.0};
    for (const auto& [idx, c] : coeffs_)
        acc += c * (h1[idx[0]] * h2[idx[1]] * h3[idx[2]]);
    return acc;
}

Complex ScalarField::evaluate(double tau, double r1, double r2, double r3) const {
    if (coeffs_.empty()) return {0.0, 0.0};
    const double z1 = kin_.lambda * r1;
    const double z2 = kin_.lambda * r2;
    const double z3 = kin_.lambda * kin_.gamma * (r3 - cfg_.beta * tau);
    const double envelope = std::exp(-0.5 * (z1 * z1 + z2 * z2 + z3 * z3));
    return evaluate_bare(z1, z2, z3) * envelope * phase_factor();
}

ScalarField ScalarField::shape_derivative(int axis) const {
    if (axis < 1 || axis > 3) throw std::invalid_argument("shape_derivative: axis must be 1..3");
    const int a = axis - 1;
    const double lambda = kin_.lambda;
    CoeffMap out;
    for (const auto& [idx, c] : coeffs_) {
        const int j = idx[a];
        // d/dz [H_j e^{-z^2/2}] = j H_{j-1} e^{-z^2/2} - (1/2) H_{j+1} e^{-z^2/2}
        if (j > 0) {
            Index lo = idx;
            lo[a] = j - 1;
            out[lo] += lambda * static_cast<double>(j) * c;
        }
        check_raise(j);
        Index hi = idx;
        hi[a] = j + 1;
        out[hi] -= lambda * 0.5 * c;
    }
    ScalarField g = *this;
    g.coeffs_ = std::move(out);
    g.norm_constant_ = 0.0;
    g.prune_and_scan();
    return g;
}

ScalarField ScalarField::shape_multiply(int axis) const {
    if (axis < 1 || axis > 3) throw std::invalid_argument("shape_multiply: axis must be 1..3");
    const int a = axis - 1;
    const double inv_lambda = 1.0 / kin_.lambda;
    CoeffMap out;
    for (const auto& [idx, c] : coeffs_) {
        const int j = idx[a];
        // z H_j e^{-z^2/2} = (1/2) H_{j+1} e^{-z^2/2} + j H_{j-1} e^{-z^2/2}
        check_raise(j);
        Index hi = idx;
        hi[a] = j + 1;
        out[hi] += 0.5 * inv_lambda * c;
        if (j > 0) {
            Index lo = idx;
            lo[a] = j - 1;
            out[lo] += static_cast<double>(j) * inv_lambda * c;
        }
    }
    ScalarField g = *this;
    g.coeffs_ = std::move(out);
    g.norm_constant_ = 0.0;
    g.prune_and_scan();
    return g;
}

ScalarField ScalarField::derivative(Axis ax) const {
    switch (ax) {
        case Axis::r1:
            return shape_derivative(1);
        case Axis::r2:
            return shape_derivative(2);
        case Axis::r3:
            return kin_.gamma * shape_derivative(3);
        case Axis::tau:
            return (-cfg_.beta * kin_.gamma) * shape_derivative(3);
    }
    throw std::invalid_argument("derivative: bad axis");
}

ScalarField ScalarField::replace_coeffs(CoeffMap m) const {
    ScalarField g = *this;
    g.coeffs_ = std::move(m);
    g.norm_constant_ = 0.0;
    g.prune_and_scan();
    return g;
}

ScalarField ScalarField::conjugate() const {
    ScalarField g = *this;
    for (auto& [idx, c] : g.coeffs_) c = std::conj(c);
    g.momentum_ = -momentum_;
    return g;
}

ScalarField ScalarField::with_phase_reference(double t, double x3) const {
    ScalarField g = *this;
    g.phase_t_ = t;
    g.phase_x3_ = x3;
    return g;
}

ScalarField ScalarField::with_momentum(const FourVector& p) const {
    ScalarField g = *this;
    g.momentum_ = p;
    return g;
}

ScalarField ScalarField::with_norm_constant(double n) const {
    ScalarField g = *this;
    g.norm_constant_ = n;
    return g;
}

void ScalarField::require_compatible(const ScalarField& rhs) const {
    const bool same_shape = cfg_.m == rhs.cfg_.m && cfg_.omega == rhs.cfg_.omega &&
                            cfg_.beta == rhs.cfg_.beta;
    const bool same_phase = momentum_ == rhs.momentum_ && phase_t_ == rhs.phase_t_ &&
                            phase_x3_ == rhs.phase_x3_;
    if (!same_shape || !same_phase)
        throw std::invalid_argument("ScalarField: incompatible fields in linear combination");
}

ScalarField ScalarField::operator+(const ScalarField& rhs) const {
    if (coeffs_.empty()) {
        ScalarField g = rhs;
        return g;
    }
    if (rhs.coeffs_.empty()) return *this;
    require_compatible(rhs);
    ScalarField g = *this;
    for (const auto& [idx, c] : rhs.coeffs_) g.coeffs_[idx] += c;
    g.norm_constant_ = 0.0;
    g.prune_and_scan();
    return g;
}

ScalarField ScalarField::operator-(const ScalarField& rhs) const {
    return *this + (-1.0 * rhs);
}

ScalarField operator*(Complex k, const ScalarField& f) {
    ScalarField g = f;
    for (auto& [idx, c] : g.coeffs_) c *= k;
    g.norm_constant_ = 0.0;
    g.prune_and_scan();
    return g;
}

ScalarField operator*(double k, const ScalarField& f) { return Complex{k, 0.0} * f; }

double norm_constant(const OscillatorConfig& cfg) {
    const Kinematics k = kinematics(cfg);
    const int n = cfg.qn.n();
    const double pi32 = std::pow(std::numbers::pi, 1.5);
    const double denom = pi32 * std::pow(2.0, n) * factorial(cfg.qn.u) * factorial(cfg.qn.v) *
                         factorial(cfg.qn.w);
    const double lam3 = k.lambda * k.lambda * k.lambda;
    return std::sqrt(k.gamma * lam3 / denom);
}

ScalarField build_psi(const OscillatorConfig& cfg) {
    validate(cfg);
    if (!(cfg.omega > 0.0))
        throw std::invalid_argument("build_psi: Omega must be > 0");
    const Kinematics k = kinematics(cfg);
    const double n = norm_constant(cfg);
    ScalarField::CoeffMap coeffs;
    coeffs[{cfg.qn.u, cfg.qn.v, cfg.qn.w}] = Complex{n, 0.0};
    return ScalarField(cfg, std::move(coeffs), k.momentum).with_norm_constant(n);
}

double density(const ScalarField& f, double r1, double r2, double r3) {
    return std::norm(f.evaluate(0.0, r1, r2, r3));
}

std::vector<std::array<double, 4>> probe_points(const OscillatorConfig& cfg,
                                                std::uint64_t seed) {
    if (!(cfg.omega > 0.0))
        throw std::invalid_argument("probe_points: Omega must be > 0");
    const double ell = length_scale(cfg.omega);
    const std::array<double, 5> levels{-3.0, -1.5, 0.0, 1.5, 3.0};
    std::vector<std::array<double, 4>> pts;
    pts.reserve(levels.size() * levels.size() * levels.size() * levels.size() + 20);
    for (double t : levels)
        for (double a : levels)
            for (double b : levels)
                for (double c : levels)
                    pts.push_back({t * ell, a * ell, b * ell, c * ell});
    Rng rng(seed);
    for (int i = 0; i < 20; ++i) {
        std::array<double, 4> p{};
        for (auto& x : p) x = rng.uniform(-3.0 * ell, 3.0 * ell);
        pts.push_back(p);
    }
    return pts;
}

double max_abs_on(const ScalarField& f, std::span<const std::array<double, 4>> pts) {
    double m = 0.0;
    for (const auto& p : pts) m = std::max(m, std::abs(f.evaluate(p[0], p[1], p[2], p[3])));
    return m;
}

ScalarField q_dot_q_apply(const ScalarField& f) {
    const ScalarField tt = f.derivative(Axis::tau).derivative(Axis::tau);
    const ScalarField xx = f.derivative(Axis::r1).derivative(Axis::r1);
    const ScalarField yy = f.derivative(Axis::r2).derivative(Axis::r2);
    const ScalarField zz = f.derivative(Axis::r3).derivative(Axis::r3);
    return (-1.0 * tt) + xx + yy + zz;
}

ScalarField potential_apply(const ScalarField& f) {
    const double omega = f.config().omega;
    const double coef = -omega * omega / 4.0;
    const ScalarField u1 = f.shape_multiply(1).shape_multiply(1);
    const ScalarField u2 = f.shape_multiply(2).shape_multiply(2);
    const ScalarField u3 = f.shape_multiply(3).shape_multiply(3);
    return coef * (u1 + u2 + u3);
}

ScalarField kge_apply(const ScalarField& f) {
    const double pp = minkowski_dot(f.momentum(), f.momentum());
    const double m2 = f.config().m * f.config().m;
    return (pp - m2) * f + q_dot_q_apply(f) + potential_apply(f);
}

double kge_residual(const ScalarField& f, std::span<const std::array<double, 4>> pts) {
    const double scale = mass_sq(f.config()) * max_abs_on(f, pts);
    if (scale == 0.0) return 0.0;
    return max_abs_on(kge_apply(f), pts) / scale;
}

ConstraintResiduals constraint_residuals(const ScalarField& f,
                                         std::span<const std::array<double, 4>> pts) {
    ConstraintResiduals out;
    const double m2 = mass_sq(f.config());
    const double scale = m2 * max_abs_on(f, pts);
    if (scale == 0.0) return out;

    const double pp = minkowski_dot(f.momentum(), f.momentum());
    out.pp = max_abs_on((pp - m2) * f, pts) / scale;

    // P^mu Q_mu with the numeric momentum: i (E d_tau + p3 d_r3).
    const Complex i{0.0, 1.0};
    const ScalarField pq =
        (i * f.momentum()[0]) * f.derivative(Axis::tau) + (i * f.momentum()[3]) * f.derivative(Axis::r3);
    out.pq = max_abs_on(pq, pts) / scale;
    return out;
}

double nonrelativistic_energy(const OscillatorConfig& cfg) {
    validate(cfg);
    const double omega_nr = cfg.omega / (2.0 * cfg.m);
    return omega_nr * (1.5 + cfg.qn.n());
}

}  // namespace relosc
