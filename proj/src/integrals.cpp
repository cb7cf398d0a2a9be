#include "hyparr/integrals.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "hyparr/errors.hpp"
#include "hyparr/linalg.hpp"
#include "hyparr/lp.hpp"
#include "hyparr/quadrature.hpp"

namespace hyparr {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Per-axis exponent of the extracted face monomials: the jacobian faces plus
// the weighted faces of every factor.
struct FaceExponents {
    double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
};

FaceExponents face_exponents(const Cell& cell, const std::vector<double>& beta) {
    FaceExponents g;
    g.x0 = cell.jac_faces.x0;
    g.x1 = cell.jac_faces.x1;
    g.y0 = cell.jac_faces.y0;
    g.y1 = cell.jac_faces.y1;
    for (const CellFactor& f : cell.factors) {
        const double b = beta[static_cast<size_t>(f.form)];
        g.x0 += b * f.faces.x0;
        g.x1 += b * f.faces.x1;
        g.y0 += b * f.faces.y0;
        g.y1 += b * f.faces.y1;
    }
    return g;
}

// Smooth part of the integrand at local coordinates (x, y): the strictly
// signed factor remainders raised to their weights times the jacobian
// remainder. The exponential is handled by the caller.
double smooth_part(const Cell& cell, const std::vector<double>& beta, double x, double y) {
    double val = std::abs(cell.jac_rest.eval(x, y));
    for (const CellFactor& f : cell.factors) {
        const double b = beta[static_cast<size_t>(f.form)];
        if (b == 0.0) continue;
        val *= std::pow(std::abs(f.rest.eval(x, y)), b);
    }
    return val;
}

double eval_cell(const Cell& cell, const std::vector<double>& beta, double lambda, int n) {
    const FaceExponents g = face_exponents(cell, beta);
    switch (cell.domain) {
        case CellDomain::kInterval: {
            const QuadratureRule& rule = gauss_jacobi01(n, g.x0, g.x1);
            double sum = 0;
            for (size_t i = 0; i < rule.nodes.size(); ++i) {
                const double x = rule.nodes[i];
                sum += rule.weights[i] * smooth_part(cell, beta, x, 0.0) *
                       std::exp(-lambda * cell.f0.eval(x, 0.0));
            }
            return sum;
        }
        case CellDomain::kSquare: {
            const QuadratureRule& rx = gauss_jacobi01(n, g.x0, g.x1);
            const QuadratureRule& ry = gauss_jacobi01(n, g.y0, g.y1);
            double sum = 0;
            for (size_t i = 0; i < rx.nodes.size(); ++i) {
                const double x = rx.nodes[i];
                double row = 0;
                for (size_t j = 0; j < ry.nodes.size(); ++j) {
                    const double y = ry.nodes[j];
                    row += ry.weights[j] * smooth_part(cell, beta, x, y) *
                           std::exp(-lambda * cell.f0.eval(x, y));
                }
                sum += rx.weights[i] * row;
            }
            return sum;
        }
        case CellDomain::kRay: {
            // x = start + s / lambda turns the cell into a Gauss-Laguerre
            // axis; the exponential is exactly e^{-lambda x} because the
            // first local coordinate equals f0 on ray cells.
            assert(cell.f0_is_x);
            const QuadratureRule& rule = gauss_laguerre(n, g.x0);
            const double pref = std::exp(-lambda * cell.start) *
                                std::pow(lambda, -(g.x0 + 1.0));
            double sum = 0;
            for (size_t i = 0; i < rule.nodes.size(); ++i) {
                const double x = cell.start + rule.nodes[i] / lambda;
                sum += rule.weights[i] * smooth_part(cell, beta, x, 0.0);
            }
            return pref * sum;
        }
        case CellDomain::kCollar: {
            assert(cell.f0_is_x);
            const QuadratureRule& rx = gauss_laguerre(n, g.x0);
            const QuadratureRule& ry = gauss_jacobi01(n, g.y0, g.y1);
            const double pref = std::exp(-lambda * cell.start) *
                                std::pow(lambda, -(g.x0 + 1.0));
            double sum = 0;
            for (size_t i = 0; i < rx.nodes.size(); ++i) {
                const double x = cell.start + rx.nodes[i] / lambda;
                double row = 0;
                for (size_t j = 0; j < ry.nodes.size(); ++j) {
                    row += ry.weights[j] * smooth_part(cell, beta, x, ry.nodes[j]);
                }
                sum += rx.weights[i] * row;
            }
            return pref * sum;
        }
    }
    throw std::logic_error("unknown cell domain");
}

std::vector<int> node_ladder(int max_nodes, int fixed_nodes) {
    if (fixed_nodes > 0) return {fixed_nodes};
    std::vector<int> ladder;
    for (int n = 24; n <= max_nodes; n *= 2) ladder.push_back(n);
    if (ladder.empty()) ladder.push_back(max_nodes);
    return ladder;
}

// van der Corput radical-inverse sequence in the given base (Halton axis).
double radical_inverse(uint64_t i, uint32_t base) {
    double inv = 1.0 / base, frac = inv, value = 0.0;
    while (i > 0) {
        value += static_cast<double>(i % base) * frac;
        i /= base;
        frac *= inv;
    }
    return value;
}

}  // namespace

Integrator::Integrator(const Arrangement& arr)
    : arr_(&arr), cell_cache_(arr.chambers().size()) {}

const std::vector<Cell>& Integrator::cells(int chamber) {
    std::lock_guard<std::mutex> lock(cells_mutex_);
    auto& slot = cell_cache_.at(static_cast<size_t>(chamber));
    if (!slot) slot = chamber_cells(*arr_, chamber);
    return *slot;
}

QuadResult Integrator::chamber_integral(int chamber, const IndexSet& denoms, double lambda,
                                        const QuadOptions& opt) {
    const int k = arr_->k();
    if (!(lambda > 0) || !std::isfinite(lambda))
        throw DomainError("chamber integrals require real lambda > 0");
    if (chamber < 0 || chamber >= static_cast<int>(arr_->chambers().size()))
        throw DomainError("chamber index out of range");
    const Chamber& ch = arr_->chambers()[static_cast<size_t>(chamber)];
    if (!ch.bounded_below)
        throw DomainError("chamber integral requires f0 bounded below on the chamber");
    const int m = static_cast<int>(denoms.size());
    if (m != k && m != k - 1)
        throw DomainError("denominator set must have size k or k-1");
    if (!std::is_sorted(denoms.begin(), denoms.end()) ||
        std::adjacent_find(denoms.begin(), denoms.end()) != denoms.end())
        throw DomainError("denominator set must be sorted and distinct");
    for (int j : denoms)
        if (j < 0 || j >= arr_->n()) throw DomainError("denominator index out of range");

    std::vector<double> beta(static_cast<size_t>(arr_->n()));
    for (int j = 0; j < arr_->n(); ++j) beta[static_cast<size_t>(j)] = arr_->weight(j);
    for (int j : denoms) beta[static_cast<size_t>(j)] -= 1.0;

    // Leading determinant of the denominator form, then the chamber signs of
    // the denominator hyperplanes (each |f_j|^{-1} carries the sign of f_j).
    RatMat mat(k, k);
    int row = 0;
    if (m == k - 1) {
        for (int c = 0; c < k; ++c) mat(0, c) = arr_->input().f0[static_cast<size_t>(c)];
        row = 1;
    }
    for (int j : denoms) {
        for (int c = 0; c < k; ++c)
            mat(row, c) = arr_->input().forms[static_cast<size_t>(j)].linear[static_cast<size_t>(c)];
        ++row;
    }
    double prefactor = std::abs(rat_to_double(det(mat)));
    for (int j : denoms) prefactor *= ch.signs[static_cast<size_t>(j)];

    if (k >= 3) return chamber_by_sampling(chamber, beta, lambda, prefactor, opt);
    return chamber_by_cells(chamber, beta, lambda, prefactor, opt);
}

double Integrator::eval_cells(int chamber, const std::vector<double>& beta, double lambda,
                              int n) {
    double total = 0;
    for (const Cell& cell : cells(chamber)) total += eval_cell(cell, beta, lambda, n);
    return total;
}

QuadResult Integrator::chamber_by_cells(int chamber, const std::vector<double>& beta,
                                        double lambda, double prefactor,
                                        const QuadOptions& opt) {
    QuadResult res;
    bool have_prev = false;
    double prev = 0;
    for (int n : node_ladder(opt.max_nodes, opt.fixed_nodes)) {
        const double cur = eval_cells(chamber, beta, lambda, n);
        res.value = prefactor * cur;
        res.nodes = n;
        if (have_prev) {
            res.error_estimate = std::abs(prefactor) * std::abs(cur - prev);
            if (res.error_estimate <= opt.tol * std::abs(prefactor * cur)) break;
        }
        prev = cur;
        have_prev = true;
    }
    return res;
}

QuadResult Integrator::chamber_by_sampling(int chamber, const std::vector<double>& beta,
                                           double lambda, double prefactor,
                                           const QuadOptions& opt) {
    // Quasi-Monte Carlo fallback for k >= 3: sample a Halton sequence over an
    // exact bounding box of the chamber truncated at f0 <= cap.
    const int k = arr_->k();
    const int n = arr_->n();
    const Chamber& ch = arr_->chambers()[static_cast<size_t>(chamber)];
    double max_f0 = 0;
    bool first = true;
    for (int vi : ch.closure_vertices) {
        const double v = rat_to_double(arr_->vertices()[static_cast<size_t>(vi)].f0_value);
        max_f0 = first ? v : std::max(max_f0, v);
        first = false;
    }
    if (first) throw std::logic_error("bounded-below chamber without closure vertices");
    const double cap = max_f0 + 40.0 / lambda;

    // Box via exact linear programs: extremize each coordinate over the
    // closed chamber cut by f0 <= cap (compact for bounded-below chambers).
    RatMat A(n + 1, k);
    RatVec b(static_cast<size_t>(n + 1));
    for (int j = 0; j < n; ++j) {
        const Rat s(ch.signs[static_cast<size_t>(j)]);
        for (int c = 0; c < k; ++c)
            A(j, c) = -s * arr_->input().forms[static_cast<size_t>(j)].linear[static_cast<size_t>(c)];
        b[static_cast<size_t>(j)] = s * arr_->input().forms[static_cast<size_t>(j)].constant;
    }
    for (int c = 0; c < k; ++c) A(n, c) = arr_->input().f0[static_cast<size_t>(c)];
    b[static_cast<size_t>(n)] = rat_from_double(cap);

    std::vector<double> lo(static_cast<size_t>(k)), hi(static_cast<size_t>(k));
    double volume = 1;
    for (int c = 0; c < k; ++c) {
        for (int sign : {+1, -1}) {
            RatVec obj(static_cast<size_t>(k), Rat(0));
            obj[static_cast<size_t>(c)] = Rat(sign);
            const LpResult r = lp_maximize(A, b, obj);
            if (r.status != LpResult::Status::kOptimal)
                throw std::logic_error("truncated chamber should be compact");
            const double v = rat_to_double(r.objective);
            if (sign > 0)
                hi[static_cast<size_t>(c)] = v;
            else
                lo[static_cast<size_t>(c)] = -v;
        }
        volume *= hi[static_cast<size_t>(c)] - lo[static_cast<size_t>(c)];
    }

    static constexpr uint32_t kBases[] = {2, 3, 5, 7, 11, 13};
    std::vector<std::vector<double>> lin(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(k)));
    std::vector<double> cst(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        for (int c = 0; c < k; ++c)
            lin[static_cast<size_t>(j)][static_cast<size_t>(c)] = rat_to_double(
                arr_->input().forms[static_cast<size_t>(j)].linear[static_cast<size_t>(c)]);
        cst[static_cast<size_t>(j)] =
            rat_to_double(arr_->input().forms[static_cast<size_t>(j)].constant);
    }
    std::vector<double> f0d(static_cast<size_t>(k));
    for (int c = 0; c < k; ++c)
        f0d[static_cast<size_t>(c)] = rat_to_double(arr_->input().f0[static_cast<size_t>(c)]);

    const auto sample_mean = [&](uint64_t count) {
        double acc = 0;
        std::vector<double> p(static_cast<size_t>(k));
        for (uint64_t i = 1; i <= count; ++i) {
            for (int c = 0; c < k; ++c)
                p[static_cast<size_t>(c)] =
                    lo[static_cast<size_t>(c)] +
                    (hi[static_cast<size_t>(c)] - lo[static_cast<size_t>(c)]) *
                        radical_inverse(i, kBases[c]);
            double f0v = 0;
            for (int c = 0; c < k; ++c)
                f0v += f0d[static_cast<size_t>(c)] * p[static_cast<size_t>(c)];
            if (f0v > cap) continue;
            double integrand = std::exp(-lambda * f0v);
            bool inside = true;
            for (int j = 0; j < n; ++j) {
                double fv = cst[static_cast<size_t>(j)];
                for (int c = 0; c < k; ++c)
                    fv += lin[static_cast<size_t>(j)][static_cast<size_t>(c)] *
                          p[static_cast<size_t>(c)];
                if (fv * ch.signs[static_cast<size_t>(j)] <= 0) {
                    inside = false;
                    break;
                }
                integrand *= std::pow(std::abs(fv), beta[static_cast<size_t>(j)]);
            }
            if (inside) acc += integrand;
        }
        return acc / static_cast<double>(count);
    };

    const uint64_t full = static_cast<uint64_t>(std::max(opt.qmc_points, 1000));
    const double half_mean = sample_mean(full / 2);
    const double full_mean = sample_mean(full);
    QuadResult res;
    res.value = prefactor * volume * full_mean;
    res.error_estimate = std::abs(prefactor) * volume * std::abs(full_mean - half_mean);
    res.nodes = static_cast<int>(full);
    return res;
}

std::complex<double> Integrator::rho_plus(std::complex<double> lambda) {
    if (lambda == 0.0) throw DomainError("lambda must be nonzero");
    if (lambda.real() == 0.0 && lambda.imag() < 0.0)
        throw DomainError("lower sectorial solution is undefined on the negative imaginary axis");
    double phi = std::arg(lambda);  // (-pi, pi]
    if (phi <= -kPi / 2) phi += 2 * kPi;
    const double theta =
        std::min(kPi / 8 + std::max(0.0, phi - 3 * kPi / 8), (phi + kPi / 2) / 2);
    return std::polar(1.0, -theta);
}

std::complex<double> Integrator::rho_minus(std::complex<double> lambda) {
    if (lambda == 0.0) throw DomainError("lambda must be nonzero");
    if (lambda.real() == 0.0 && lambda.imag() > 0.0)
        throw DomainError("upper sectorial solution is undefined on the positive imaginary axis");
    return std::conj(rho_plus(std::conj(lambda)));
}

QuadResult Integrator::cone_integral(int vertex, int component, std::complex<double> lambda,
                                     std::complex<double> rho, const QuadOptions& opt) {
    const int k = arr_->k();
    const int nv = static_cast<int>(arr_->vertices().size());
    if (vertex < 0 || vertex >= nv || component < 0 || component >= nv)
        throw DomainError("vertex index out of range");
    if (rho.imag() == 0.0) throw DomainError("rotation rho must have nonzero imaginary part");
    const std::complex<double> lr = lambda * rho;
    if (!(lr.real() > 0.0)) throw DomainError("Re(lambda * rho) must be positive");

    const Vertex& vx = arr_->vertices()[static_cast<size_t>(vertex)];
    const Vertex& vc = arr_->vertices()[static_cast<size_t>(component)];
    const IndexSet& X = vx.forms;
    const IndexSet& Xp = vc.forms;

    // Cone-direction coefficients c_j = l_j(e_{X \ {j}}) for j in X, and the
    // component matrix M with rows the linear parts of X' evaluated on the
    // cone directions.
    std::vector<Rat> c_coeff(static_cast<size_t>(k));
    for (int t = 0; t < k; ++t) {
        c_coeff[static_cast<size_t>(t)] =
            arr_->l_of(X[static_cast<size_t>(t)], vx.cone_dirs[static_cast<size_t>(t)]);
        assert(sgn(c_coeff[static_cast<size_t>(t)]) == vx.cone_signs[static_cast<size_t>(t)]);
    }
    RatMat M(k, k);
    for (int r = 0; r < k; ++r)
        for (int t = 0; t < k; ++t)
            M(r, t) = arr_->l_of(Xp[static_cast<size_t>(r)], vx.cone_dirs[static_cast<size_t>(t)]);

    // Per-axis exponents gamma_t and the shared-form bookkeeping.
    std::vector<double> gamma(static_cast<size_t>(k));
    int shared = 0;
    double inv_c_signed = 1;
    for (int t = 0; t < k; ++t) {
        const int j = X[static_cast<size_t>(t)];
        const bool in_comp = std::binary_search(Xp.begin(), Xp.end(), j);
        gamma[static_cast<size_t>(t)] = arr_->weight(j) - (in_comp ? 1.0 : 0.0);
        if (in_comp) {
            ++shared;
            inv_c_signed /= rat_to_double(c_coeff[static_cast<size_t>(t)]);
        }
    }

    // Forms outside X: value at the cone apex, linear part on each cone
    // direction, apex sign, and exponent (weight, minus one when the form
    // divides the component).
    struct OuterForm {
        double apex_sign = 1;
        double expo = 0;
        std::complex<double> at_apex;
        std::vector<double> along;
    };
    std::vector<OuterForm> outer;
    double outer_sign = 1;
    for (int j = 0; j < arr_->n(); ++j) {
        if (std::binary_search(X.begin(), X.end(), j)) continue;
        OuterForm of;
        const Rat fx = arr_->input().forms[static_cast<size_t>(j)].eval(vx.point);
        const int s = sgn(fx);
        assert(s != 0);
        of.apex_sign = s;
        of.at_apex = rat_to_double(fx);
        const bool in_comp = std::binary_search(Xp.begin(), Xp.end(), j);
        of.expo = arr_->weight(j) - (in_comp ? 1.0 : 0.0);
        if (in_comp) outer_sign *= s;
        of.along.resize(static_cast<size_t>(k));
        for (int t = 0; t < k; ++t)
            of.along[static_cast<size_t>(t)] =
                rat_to_double(arr_->l_of(j, vx.cone_dirs[static_cast<size_t>(t)]));
        outer.push_back(std::move(of));
    }

    const double theta = std::arg(rho);
    const double w = lr.real();
    const double q = lr.imag() / w;

    // lambda- and node-independent prefactor.
    std::complex<double> pref = std::abs(rat_to_double(det(M)));
    pref *= std::pow(rho, std::complex<double>(k - shared, 0));
    pref *= std::exp(-lambda * rat_to_double(vx.f0_value));
    pref *= std::polar(1.0, theta * arr_->weight_sum(X));
    double axis_power = 0;
    for (int t = 0; t < k; ++t) {
        pref *= std::pow(std::abs(rat_to_double(c_coeff[static_cast<size_t>(t)])),
                         arr_->weight(X[static_cast<size_t>(t)]));
        axis_power += gamma[static_cast<size_t>(t)] + 1.0;
    }
    pref *= inv_c_signed * outer_sign;
    pref *= std::pow(w, -axis_power);

    const auto eval_level = [&](int n_nodes) {
        std::vector<const QuadratureRule*> rules(static_cast<size_t>(k));
        for (int t = 0; t < k; ++t)
            rules[static_cast<size_t>(t)] = &gauss_laguerre(n_nodes, gamma[static_cast<size_t>(t)]);
        std::vector<size_t> idx(static_cast<size_t>(k), 0);
        std::vector<double> a(static_cast<size_t>(k));
        std::complex<double> sum = 0;
        while (true) {
            double wprod = 1, s_sum = 0;
            for (int t = 0; t < k; ++t) {
                const double s = rules[static_cast<size_t>(t)]->nodes[idx[static_cast<size_t>(t)]];
                wprod *= rules[static_cast<size_t>(t)]->weights[idx[static_cast<size_t>(t)]];
                s_sum += s;
                a[static_cast<size_t>(t)] = s / w;
            }
            std::complex<double> g = std::polar(1.0, -q * s_sum);
            for (const OuterForm& of : outer) {
                std::complex<double> fv = of.at_apex;
                for (int t = 0; t < k; ++t)
                    fv += rho * a[static_cast<size_t>(t)] * of.along[static_cast<size_t>(t)];
                // Folded by the apex sign, the rotated value stays clear of
                // the negative real axis, so the principal power is the
                // analytic continuation of the real-positive branch.
                g *= std::exp(of.expo * std::log(of.apex_sign * fv));
            }
            sum += wprod * g;
            int t = 0;
            for (; t < k; ++t) {
                if (++idx[static_cast<size_t>(t)] < rules[static_cast<size_t>(t)]->nodes.size())
                    break;
                idx[static_cast<size_t>(t)] = 0;
            }
            if (t == k) break;
        }
        return sum;
    };

    const int cap = k <= 2 ? opt.max_nodes
                           : (k == 3 ? std::min(opt.max_nodes, 96) : std::min(opt.max_nodes, 48));
    QuadResult res;
    bool have_prev = false;
    std::complex<double> prev = 0;
    for (int n_nodes : node_ladder(cap, opt.fixed_nodes)) {
        const std::complex<double> cur = eval_level(n_nodes);
        res.value = pref * cur;
        res.nodes = n_nodes;
        if (have_prev) {
            res.error_estimate = std::abs(pref) * std::abs(cur - prev);
            if (res.error_estimate <= opt.tol * std::abs(pref * cur)) break;
        }
        prev = cur;
        have_prev = true;
    }
    return res;
}

QuadResult Integrator::i_plus(int vertex, int component, std::complex<double> lambda,
                              const QuadOptions& opt) {
    return cone_integral(vertex, component, lambda, rho_plus(lambda), opt);
}

QuadResult Integrator::i_minus(int vertex, int component, std::complex<double> lambda,
                               const QuadOptions& opt) {
    return cone_integral(vertex, component, lambda, rho_minus(lambda), opt);
}

Eigen::MatrixXcd Integrator::i_plus_matrix(std::complex<double> lambda, const QuadOptions& opt) {
    const int m = static_cast<int>(arr_->vertices().size());
    Eigen::MatrixXcd out(m, m);
    for (int col = 0; col < m; ++col)
        for (int row = 0; row < m; ++row) out(row, col) = i_plus(col, row, lambda, opt).value;
    return out;
}

Eigen::MatrixXcd Integrator::i_minus_matrix(std::complex<double> lambda, const QuadOptions& opt) {
    const int m = static_cast<int>(arr_->vertices().size());
    Eigen::MatrixXcd out(m, m);
    for (int col = 0; col < m; ++col)
        for (int row = 0; row < m; ++row) out(row, col) = i_minus(col, row, lambda, opt).value;
    return out;
}

Eigen::MatrixXd Integrator::chamber_matrix(double lambda, const QuadOptions& opt) {
    const int m = static_cast<int>(arr_->vertices().size());
    const std::vector<int>& dp = arr_->dplus();
    Eigen::MatrixXd out(m, static_cast<int>(dp.size()));
    for (int col = 0; col < static_cast<int>(dp.size()); ++col)
        for (int row = 0; row < m; ++row)
            out(row, col) =
                chamber_integral(dp[static_cast<size_t>(col)],
                                 arr_->vertices()[static_cast<size_t>(row)].forms, lambda, opt)
                    .value.real();
    return out;
}

double Integrator::asymptotic_constant(int vertex, int component) const {
    const int k = arr_->k();
    const Vertex& vx = arr_->vertices()[static_cast<size_t>(vertex)];
    const Vertex& vc = arr_->vertices()[static_cast<size_t>(component)];
    const IndexSet& X = vx.forms;
    const IndexSet& Xp = vc.forms;

    RatMat M(k, k);
    for (int r = 0; r < k; ++r)
        for (int t = 0; t < k; ++t)
            M(r, t) = arr_->l_of(Xp[static_cast<size_t>(r)], vx.cone_dirs[static_cast<size_t>(t)]);
    double value = std::abs(rat_to_double(det(M)));
    double sign = 1;
    for (int t = 0; t < k; ++t) {
        const int j = X[static_cast<size_t>(t)];
        const bool in_comp = std::binary_search(Xp.begin(), Xp.end(), j);
        const double c =
            rat_to_double(arr_->l_of(j, vx.cone_dirs[static_cast<size_t>(t)]));
        value *= std::tgamma(arr_->weight(j) + (in_comp ? 0.0 : 1.0));
        value *= std::pow(std::abs(c), arr_->weight(j) - (in_comp ? 1.0 : 0.0));
        if (in_comp && c < 0) sign = -sign;
    }
    for (int j = 0; j < arr_->n(); ++j) {
        if (std::binary_search(X.begin(), X.end(), j)) continue;
        const bool in_comp = std::binary_search(Xp.begin(), Xp.end(), j);
        const double fv =
            rat_to_double(arr_->input().forms[static_cast<size_t>(j)].eval(vx.point));
        value *= std::pow(std::abs(fv), arr_->weight(j) - (in_comp ? 1.0 : 0.0));
        if (in_comp && fv < 0) sign = -sign;
    }
    return sign * value;
}

}  // namespace hyparr
