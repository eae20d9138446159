#pragma once

#include "relosc/quadrature.hpp"
#include "relosc/scalar_field.hpp"

namespace relosc {

// Instant-form inner product  <a, b> = integral conj(a) b d^3r  at tau = 0,
// evaluated by tensor-product Gauss-Hermite quadrature in the shape variables
// z_i (Jacobian 1/(gamma lambda^3)).  Exact for the polynomial-times-Gaussian
// integrands this library produces, at any rule whose degree covers the
// polynomial part.  Fields must share (m, Omega, beta).
Complex inner_product(const ScalarField& a, const ScalarField& b, const QuadratureRule& rule);

// Same traversal accumulating |w * a * b|: an L1 magnitude used as a roundoff
// floor when estimating quadrature error.
double inner_product_abs(const ScalarField& a, const ScalarField& b, const QuadratureRule& rule);

}  // namespace relosc
