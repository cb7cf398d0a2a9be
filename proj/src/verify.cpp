#include "hyparr/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>

#include "hyparr/coefficients.hpp"
#include "hyparr/ode.hpp"
#include "hyparr/stokes.hpp"

namespace hyparr {

namespace {

constexpr double kPi = 3.14159265358979323846;

QuadOptions quad_options(const VerifyOptions& opt) {
    QuadOptions q;
    q.tol = opt.quad_tol;
    q.max_nodes = opt.max_nodes;
    return q;
}

double rel(double num, double den) { return num / std::max(den, 1e-300); }

template <typename... Args>
std::string fmt(const char* f, Args... args) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), f, args...);
    return std::string(buf);
}

struct Worst {
    double residual = 0;
    std::string detail;
    void offer(double r, std::string d) {
        if (r >= residual) {
            residual = r;
            detail = std::move(d);
        }
    }
};

CheckReport finish(std::string name, const Worst& w, double tol) {
    CheckReport rep;
    rep.name = std::move(name);
    rep.max_residual = w.residual;
    rep.tolerance = tol;
    rep.passed = w.residual <= tol;
    rep.detail = w.detail;
    return rep;
}

// Phase matrices used by the decomposition / inversion checks.
// E[ci][base]: eta (or conjugate) when dplus chamber ci lies in the upward
// cone of `base`, else 0. Psi[base][ci]: psi (or conjugate) when vertex
// `base` bounds dplus chamber ci, else 0.
Eigen::MatrixXcd eta_matrix(const Arrangement& arr, bool conjugate) {
    const auto& dp = arr.dplus();
    const int m = static_cast<int>(arr.vertices().size());
    Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(static_cast<int>(dp.size()), m);
    for (int base = 0; base < m; ++base)
        for (int ci = 0; ci < static_cast<int>(dp.size()); ++ci) {
            const int ch = dp[static_cast<size_t>(ci)];
            if (!theta(arr, base, ch)) continue;
            const PhaseCoefficient p = conjugate ? eta_bar(arr, base, ch) : eta(arr, base, ch);
            e(ci, base) = p.value(arr);
        }
    return e;
}

Eigen::MatrixXcd psi_matrix(const Arrangement& arr, bool conjugate) {
    const auto& dp = arr.dplus();
    const int m = static_cast<int>(arr.vertices().size());
    Eigen::MatrixXcd ps = Eigen::MatrixXcd::Zero(m, static_cast<int>(dp.size()));
    for (int ci = 0; ci < static_cast<int>(dp.size()); ++ci) {
        const int ch = dp[static_cast<size_t>(ci)];
        for (int v : arr.chambers()[static_cast<size_t>(ch)].closure_vertices) {
            const PhaseCoefficient p = conjugate ? psi_bar(arr, ch, v) : psi(arr, ch, v);
            ps(v, ci) = p.value(arr);
        }
    }
    return ps;
}

}  // namespace

CheckReport check_decomposition(const Arrangement& arr, Integrator& integ,
                                const VerifyOptions& opt) {
    const QuadOptions qo = quad_options(opt);
    const Eigen::MatrixXcd e_plus = eta_matrix(arr, false);
    const Eigen::MatrixXcd e_minus = eta_matrix(arr, true);
    Worst w;
    for (double lambda : opt.lambdas) {
        const Eigen::MatrixXcd cham = integ.chamber_matrix(lambda, qo).cast<std::complex<double>>();
        const Eigen::MatrixXcd plus = integ.i_plus_matrix(lambda, qo);
        const Eigen::MatrixXcd minus = integ.i_minus_matrix(lambda, qo);
        const Eigen::MatrixXcd rp = cham * e_plus - plus;
        const Eigen::MatrixXcd rm = cham * e_minus - minus;
        for (int col = 0; col < plus.cols(); ++col) {
            w.offer(rel(rp.col(col).norm(), plus.col(col).norm()),
                    fmt("plus, base vertex %d, lambda=%g", col, lambda));
            w.offer(rel(rm.col(col).norm(), minus.col(col).norm()),
                    fmt("minus, base vertex %d, lambda=%g", col, lambda));
        }
    }
    return finish("decomposition", w, opt.tol);
}

CheckReport check_inversion(const Arrangement& arr, Integrator& integ,
                            const VerifyOptions& opt) {
    const QuadOptions qo = quad_options(opt);
    const Eigen::MatrixXcd psi_plus = psi_matrix(arr, false);
    const Eigen::MatrixXcd psi_minus = psi_matrix(arr, true);
    Worst w;
    for (double lambda : opt.lambdas) {
        const Eigen::MatrixXcd cham = integ.chamber_matrix(lambda, qo).cast<std::complex<double>>();
        const Eigen::MatrixXcd plus = integ.i_plus_matrix(lambda, qo);
        const Eigen::MatrixXcd minus = integ.i_minus_matrix(lambda, qo);
        const Eigen::MatrixXcd rp = plus * psi_plus - cham;
        const Eigen::MatrixXcd rm = minus * psi_minus - cham;
        for (int col = 0; col < cham.cols(); ++col) {
            w.offer(rel(rp.col(col).norm(), cham.col(col).norm()),
                    fmt("plus, chamber %d, lambda=%g", arr.dplus()[static_cast<size_t>(col)],
                        lambda));
            w.offer(rel(rm.col(col).norm(), cham.col(col).norm()),
                    fmt("minus, chamber %d, lambda=%g", arr.dplus()[static_cast<size_t>(col)],
                        lambda));
        }
    }
    return finish("inversion", w, opt.tol);
}

CheckReport check_stokes_c0(const Arrangement& arr, Integrator& integ,
                            const VerifyOptions& opt) {
    const QuadOptions qo = quad_options(opt);
    const Eigen::MatrixXcd c0 = stokes_matrices(arr).c0_values(arr);
    Worst w;
    for (double lambda : opt.lambdas) {
        const Eigen::MatrixXcd plus = integ.i_plus_matrix(lambda, qo);
        const Eigen::MatrixXcd minus = integ.i_minus_matrix(lambda, qo);
        const Eigen::MatrixXcd r = plus * c0 - minus;
        for (int col = 0; col < r.cols(); ++col)
            w.offer(rel(r.col(col).norm(), minus.col(col).norm()),
                    fmt("base vertex %d, lambda=%g", col, lambda));
    }
    return finish("stokes-c0", w, opt.tol);
}

CheckReport check_stokes_c1(const Arrangement& arr, Integrator& integ,
                            const VerifyOptions& opt) {
    const QuadOptions qo = quad_options(opt);
    const Eigen::MatrixXcd c1 = stokes_matrices(arr).c1_values(arr);
    const int m = static_cast<int>(arr.vertices().size());
    Eigen::VectorXcd monodromy(m);
    for (int v = 0; v < m; ++v)
        monodromy(v) = std::polar(1.0, 2 * kPi * arr.weight_sum(
                                           arr.vertices()[static_cast<size_t>(v)].forms));
    Worst w;
    for (double lambda : opt.lambdas_negative) {
        const std::complex<double> z(lambda, 0.0);
        const Eigen::MatrixXcd plus = integ.i_plus_matrix(z, qo);
        const Eigen::MatrixXcd minus = integ.i_minus_matrix(z, qo);
        const Eigen::MatrixXcd lhs = plus * monodromy.asDiagonal();
        const Eigen::MatrixXcd r = lhs - minus * c1;
        for (int col = 0; col < r.cols(); ++col)
            w.offer(rel(r.col(col).norm(), lhs.col(col).norm()),
                    fmt("base vertex %d, lambda=%g", col, lambda));
    }
    return finish("stokes-c1", w, opt.tol);
}

CheckReport check_ode(const Arrangement& arr, Integrator& integ, const VerifyOptions& opt) {
    const QuadOptions qo = quad_options(opt);
    const Eigen::VectorXd a = ode_a_diagonal(arr);
    const Eigen::MatrixXd b = ode_b_matrix(arr);
    const int m = static_cast<int>(arr.vertices().size());
    const double h = opt.fd_step;
    Worst w;

    const auto offer_column = [&](const Eigen::VectorXcd& value, const Eigen::VectorXcd& deriv,
                                  double lambda, const std::string& what) {
        const Eigen::VectorXcd res =
            deriv + a.asDiagonal() * value + (b * value) / lambda;
        const double scale = deriv.norm() + (a.asDiagonal() * value).norm() +
                             (b * value).norm() / std::abs(lambda);
        w.offer(rel(res.norm(), scale), what);
    };

    for (double lambda : opt.lambdas) {
        // Chamber solution columns.
        for (int ci = 0; ci < static_cast<int>(arr.dplus().size()); ++ci) {
            const int ch = arr.dplus()[static_cast<size_t>(ci)];
            Eigen::VectorXcd value(m), deriv(m);
            for (int row = 0; row < m; ++row) {
                const IndexSet& denoms = arr.vertices()[static_cast<size_t>(row)].forms;
                const QuadResult center = integ.chamber_integral(ch, denoms, lambda, qo);
                QuadOptions frozen = qo;
                frozen.fixed_nodes = center.nodes;
                const QuadResult up = integ.chamber_integral(ch, denoms, lambda + h, frozen);
                const QuadResult dn = integ.chamber_integral(ch, denoms, lambda - h, frozen);
                value(row) = center.value;
                deriv(row) = (up.value - dn.value) / (2 * h);
            }
            offer_column(value, deriv, lambda, fmt("chamber %d, lambda=%g", ch, lambda));
        }
        // Lower sectorial columns, frozen rotation and frozen plan.
        const std::complex<double> rho = Integrator::rho_plus(lambda);
        for (int base = 0; base < m; ++base) {
            Eigen::VectorXcd value(m), deriv(m);
            for (int row = 0; row < m; ++row) {
                const QuadResult center = integ.cone_integral(base, row, lambda, rho, qo);
                QuadOptions frozen = qo;
                frozen.fixed_nodes = center.nodes;
                const QuadResult up = integ.cone_integral(base, row, lambda + h, rho, frozen);
                const QuadResult dn = integ.cone_integral(base, row, lambda - h, rho, frozen);
                value(row) = center.value;
                deriv(row) = (up.value - dn.value) / (2 * h);
            }
            offer_column(value, deriv, lambda, fmt("sectorial base %d, lambda=%g", base, lambda));
        }
    }
    return finish("ode-residual", w, opt.tol);
}

CheckReport check_cohomological(const Arrangement& arr, Integrator& integ,
                                const VerifyOptions& opt) {
    const QuadOptions qo = quad_options(opt);
    const std::vector<IndexSet> subsets = index_subsets(arr.n(), arr.k() - 1);
    Worst w;
    for (double lambda : opt.lambdas) {
        for (int ch : arr.dplus()) {
            for (const IndexSet& u : subsets) {
                const double lhs =
                    lambda * integ.chamber_integral(ch, u, lambda, qo).value.real();
                double rhs = 0, magnitude = std::abs(lhs);
                for (int j = 0; j < arr.n(); ++j) {
                    if (std::binary_search(u.begin(), u.end(), j)) continue;
                    IndexSet uj = u;
                    uj.insert(std::lower_bound(uj.begin(), uj.end(), j), j);
                    const double term =
                        edge_orientation(arr, j, u) * arr.weight(j) *
                        integ.chamber_integral(ch, uj, lambda, qo).value.real();
                    rhs += term;
                    magnitude = std::max(magnitude, std::abs(term));
                }
                w.offer(rel(std::abs(lhs - rhs), magnitude),
                        fmt("chamber %d, subset #%d, lambda=%g", ch,
                            static_cast<int>(&u - subsets.data()), lambda));
            }
        }
    }
    return finish("differentiation-identity", w, opt.tol);
}

CheckReport check_asymptotics(const Arrangement& arr, Integrator& integ,
                              const VerifyOptions& opt) {
    const QuadOptions qo = quad_options(opt);
    const int m = static_cast<int>(arr.vertices().size());
    Worst w;
    for (int base = 0; base < m; ++base) {
        const Vertex& vx = arr.vertices()[static_cast<size_t>(base)];
        const double f0x = rat_to_double(vx.f0_value);
        const double ax = arr.weight_sum(vx.forms);
        for (int row = 0; row < m; ++row) {
            const Vertex& vc = arr.vertices()[static_cast<size_t>(row)];
            IndexSet inter;
            std::set_intersection(vx.forms.begin(), vx.forms.end(), vc.forms.begin(),
                                  vc.forms.end(), std::back_inserter(inter));
            const double expo = ax + static_cast<double>(arr.k() - static_cast<int>(inter.size()));
            const double constant = integ.asymptotic_constant(base, row);
            double first_dev = 0, last_dev = 0;
            for (size_t gi = 0; gi < opt.asym_grid.size(); ++gi) {
                const double lambda = opt.asym_grid[gi];
                const std::complex<double> v = integ.i_plus(base, row, lambda, qo).value;
                const std::complex<double> predicted =
                    constant * std::exp(-lambda * f0x) * std::pow(lambda, -expo);
                const double dev = std::abs(v / predicted - 1.0);
                if (gi == 0) first_dev = dev;
                last_dev = dev;
            }
            // Residual: deviation at the largest lambda, plus a growth guard
            // (the deviation must not grow along the grid).
            w.offer(last_dev, fmt("base %d, component %d, final deviation", base, row));
            if (last_dev > first_dev * 1.05 + 1e-12)
                w.offer(1.0, fmt("base %d, component %d: deviation grew along grid", base, row));
        }
    }
    return finish("asymptotics", w, opt.asym_tol);
}

CheckReport check_wronskian(const Arrangement& arr, Integrator& integ,
                            const VerifyOptions& opt) {
    const QuadOptions qo = quad_options(opt);
    const double lambda = opt.lambdas.empty() ? 1.0 : opt.lambdas.front();
    const Eigen::MatrixXcd plus = integ.i_plus_matrix(lambda, qo);
    const Eigen::MatrixXd cham = integ.chamber_matrix(lambda, qo);

    const auto scaled_det = [](const auto& mat) {
        double scale = 1;
        for (int c = 0; c < mat.cols(); ++c) scale *= std::max(mat.col(c).norm(), 1e-300);
        return std::abs(std::complex<double>(mat.determinant())) / scale;
    };
    const double d_plus = scaled_det(plus);
    const double d_cham = scaled_det(cham);

    CheckReport rep;
    rep.name = "wronskian";
    rep.tolerance = opt.wronskian_floor;
    rep.max_residual = std::min(d_plus, d_cham);
    rep.passed = rep.max_residual >= opt.wronskian_floor;
    rep.detail = fmt("scaled |det|: sectorial %.3e, chamber %.3e at lambda=%g", d_plus, d_cham,
                     lambda);
    return rep;
}

std::vector<CheckReport> verify_all(const Arrangement& arr, const VerifyOptions& opt) {
    Integrator integ(arr);
    std::vector<CheckReport> out;
    out.push_back(check_decomposition(arr, integ, opt));
    out.push_back(check_inversion(arr, integ, opt));
    out.push_back(check_stokes_c0(arr, integ, opt));
    out.push_back(check_stokes_c1(arr, integ, opt));
    out.push_back(check_ode(arr, integ, opt));
    out.push_back(check_cohomological(arr, integ, opt));
    out.push_back(check_asymptotics(arr, integ, opt));
    out.push_back(check_wronskian(arr, integ, opt));
    return out;
}

}  // namespace hyparr
