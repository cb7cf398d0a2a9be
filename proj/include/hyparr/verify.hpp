#pragma once

// Numerical cross-checks tying the exact combinatorial layer (phase
// coefficients, connection matrices, ODE data) to the quadrature layer
// (chamber and cone integrals): decomposition, inversion, both connection
// matrices, the ODE residual, the differentiation identity, vertex
// asymptotics, and solution-basis nondegeneracy.

#include <string>
#include <vector>

#include "hyparr/arrangement.hpp"
#include "hyparr/integrals.hpp"

namespace hyparr {

struct CheckReport {
    std::string name;
    bool passed = false;
    double max_residual = 0;  // worst relative residual observed
    double tolerance = 0;
    std::string detail;       // where the worst residual occurred
};

struct VerifyOptions {
    double tol = 1e-6;        // pass threshold for relative residuals
    double quad_tol = 1e-12;  // refinement target handed to the integrator
    int max_nodes = 1536;
    std::vector<double> lambdas = {1.0, 2.0, 5.0};        // real positive
    std::vector<double> lambdas_negative = {-1.0, -2.0};  // real negative
    double fd_step = 1e-4;                   // ODE finite-difference step
    std::vector<double> asym_grid = {5.0, 10.0, 20.0, 50.0};
    double asym_tol = 5e-2;                  // deviation bound at the last grid point
    double wronskian_floor = 1e-10;          // relative to column-norm product
};

/// Sectorial solutions decompose over the upward-cone chambers with the
/// eta / conjugate-eta phases (checked on the positive real axis).
CheckReport check_decomposition(const Arrangement& arr, Integrator& integ,
                                const VerifyOptions& opt = {});
/// Chamber integrals invert through the boundary vertices with psi phases.
CheckReport check_inversion(const Arrangement& arr, Integrator& integ,
                            const VerifyOptions& opt = {});
/// minus-matrix == plus-matrix * C0 on the positive real axis.
CheckReport check_stokes_c0(const Arrangement& arr, Integrator& integ,
                            const VerifyOptions& opt = {});
/// plus-matrix * diag(e^{2 pi i alpha_X}) == minus-matrix * C1 on the
/// negative real axis.
CheckReport check_stokes_c1(const Arrangement& arr, Integrator& integ,
                            const VerifyOptions& opt = {});
/// Central-difference residual of I' = -(A + B/lambda) I for all chamber
/// columns and all lower sectorial columns, with frozen quadrature plans.
CheckReport check_ode(const Arrangement& arr, Integrator& integ,
                      const VerifyOptions& opt = {});
/// lambda * (f0-leading integral over U) equals the signed weighted sum of
/// the vertex-form integrals over U + {j}.
CheckReport check_cohomological(const Arrangement& arr, Integrator& integ,
                                const VerifyOptions& opt = {});
/// i_plus(X, X') * e^{lambda f0(X)} * lambda^{alpha_X + |X'\X|} approaches
/// the signed asymptotic constant along the grid.
CheckReport check_asymptotics(const Arrangement& arr, Integrator& integ,
                              const VerifyOptions& opt = {});
/// The sectorial solution matrix and the chamber solution matrix are both
/// nondegenerate at the first positive lambda.
CheckReport check_wronskian(const Arrangement& arr, Integrator& integ,
                            const VerifyOptions& opt = {});

std::vector<CheckReport> verify_all(const Arrangement& arr, const VerifyOptions& opt = {});

}  // namespace hyparr
