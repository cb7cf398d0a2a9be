#pragma once

// Classical Gaussian rules with algebraic endpoint weights, cached by
// (order, exponent) since the verification layer re-requests the same rules
// across many integrals and stencil points.

#include <vector>

namespace hyparr {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Rule for integrals of the form int_0^1 f(t) t^a (1-t)^b dt, a,b > -1.
const QuadratureRule& gauss_jacobi01(int n, double a, double b);

/// Rule for integrals of the form int_0^inf f(s) s^g e^{-s} ds, g > -1.
const QuadratureRule& gauss_laguerre(int n, double g);

}  // namespace hyparr
