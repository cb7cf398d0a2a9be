#pragma once

// Numerical evaluation of the multivalued-weight integrals attached to an
// arrangement: chamber integrals (real axis), rotated-cone integrals with
// the analytically continued integrand, and their vertex asymptotics.

#include <complex>
#include <mutex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "hyparr/arrangement.hpp"
#include "hyparr/cells.hpp"

namespace hyparr {

struct QuadResult {
    std::complex<double> value{0.0, 0.0};
    double error_estimate = 0;  // |last - previous| refinement difference
    int nodes = 0;              // accepted per-axis node count
};

struct QuadOptions {
    double tol = 1e-12;    // relative refinement target
    int max_nodes = 1536;  // per-axis ceiling for the refinement ladder
    int fixed_nodes = 0;   // nonzero: evaluate once at this per-axis count
    int qmc_points = 200000;  // sampling budget for the k >= 3 fallback
};

class Integrator {
  public:
    explicit Integrator(const Arrangement& arr);

    /// Integral over a chamber (f0 bounded below) of
    ///   e^{-lambda f0} prod_j |f_j|^{w_j} * top_form(denoms),
    /// where |denoms| = k selects the vertex top-form (the product of
    /// dlog f_j with unit leading determinant) and |denoms| = k-1 selects
    /// the f0-leading form used by the differentiation identity.
    QuadResult chamber_integral(int chamber, const IndexSet& denoms, double lambda,
                                const QuadOptions& opt = {});

    /// Rotated-cone integral for base `vertex` and component `component`.
    /// Requires Im(rho) != 0 and Re(lambda * rho) > 0.
    QuadResult cone_integral(int vertex, int component, std::complex<double> lambda,
                             std::complex<double> rho, const QuadOptions& opt = {});

    /// Sectorial solutions: lower/upper rotation with the pinned rho rule.
    QuadResult i_plus(int vertex, int component, std::complex<double> lambda,
                      const QuadOptions& opt = {});
    QuadResult i_minus(int vertex, int component, std::complex<double> lambda,
                       const QuadOptions& opt = {});

    /// Columns: base vertices; rows: components (both in vertex order).
    Eigen::MatrixXcd i_plus_matrix(std::complex<double> lambda, const QuadOptions& opt = {});
    Eigen::MatrixXcd i_minus_matrix(std::complex<double> lambda, const QuadOptions& opt = {});
    /// Columns: bounded-below chambers in dplus order; rows: components.
    Eigen::MatrixXd chamber_matrix(double lambda, const QuadOptions& opt = {});

    /// Pinned rotation choice: rho = e^{-i theta(phi)} with
    /// theta = min(pi/8 + max(0, phi - 3pi/8), (phi + pi/2)/2) and phi the
    /// argument of lambda lifted to (-pi/2, 3pi/2). Mirrored for the upper
    /// rotation. Throws DomainError on the respective branch cuts.
    static std::complex<double> rho_plus(std::complex<double> lambda);
    static std::complex<double> rho_minus(std::complex<double> lambda);

    /// Signed constant c with i_plus(vertex, component) ~
    /// c * e^{-lambda f0(X)} * lambda^{-(weight_sum(X) + |X' \ X|)} for
    /// lambda -> +inf.
    double asymptotic_constant(int vertex, int component) const;

    const Arrangement& arrangement() const { return *arr_; }
    const std::vector<Cell>& cells(int chamber);

  private:
    QuadResult chamber_by_cells(int chamber, const std::vector<double>& beta, double lambda,
                                double prefactor, const QuadOptions& opt);
    QuadResult chamber_by_sampling(int chamber, const std::vector<double>& beta, double lambda,
                                   double prefactor, const QuadOptions& opt);
    double eval_cells(int chamber, const std::vector<double>& beta, double lambda, int n);

    const Arrangement* arr_;
    std::vector<std::optional<std::vector<Cell>>> cell_cache_;
    std::mutex cells_mutex_;
};

}  // namespace hyparr
