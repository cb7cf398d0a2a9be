// Acceptance gate: one line per criterion, nonzero exit when any fails.
// All random draws are seeded here so every run checks the same instances.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hyparr/arrangement.hpp"
#include "hyparr/coefficients.hpp"
#include "hyparr/integrals.hpp"
#include "hyparr/stokes.hpp"
#include "hyparr/verify.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace hyparr;
using test_support::line_points_input;
using test_support::random_arrangement;
using test_support::triangle_input;
using test_support::u01;
using test_support::uint_in;
using test_support::weight_prefix;

namespace {

struct Outcome {
    bool passed = true;
    double worst = 0;      // worst residual / deviation observed
    std::string note;      // where the worst case happened
};

void offer(Outcome& out, double value, const std::string& where) {
    if (value > out.worst) {
        out.worst = value;
        out.note = where;
    }
}

double matrix_dev(const Eigen::MatrixXcd& got, const oracle::CMatrix& want) {
    double dev = 0;
    for (int r = 0; r < got.rows(); ++r)
        for (int c = 0; c < got.cols(); ++c)
            dev = std::max(dev, std::abs(got(r, c) - want[static_cast<size_t>(r)]
                                                         [static_cast<size_t>(c)]));
    return dev;
}

std::vector<double> draw_weights(std::mt19937_64& rng, int n) {
    std::vector<double> w(static_cast<size_t>(n));
    for (auto& x : w) x = 0.2 + 0.6 * u01(rng);
    return w;
}

struct Instance {
    std::string label;
    Arrangement arr;
};

// The pinned verification instances: one, two, and three collinear points,
// plus the triangle with direction 2x + y.
std::vector<Instance> pinned_instances() {
    std::vector<Instance> out;
    out.push_back({"line-1pt", Arrangement(line_points_input(1, weight_prefix(1)))});
    out.push_back({"line-2pt", Arrangement(line_points_input(2, weight_prefix(2)))});
    out.push_back({"line-3pt", Arrangement(line_points_input(3, weight_prefix(3)))});
    out.push_back({"triangle", Arrangement(triangle_input(Rat(2), Rat(1), weight_prefix(3)))});
    return out;
}

Outcome run_report_checks(
    const std::function<std::vector<CheckReport>(const Instance&, Integrator&)>& checks) {
    Outcome out;
    for (const Instance& inst : pinned_instances()) {
        Integrator ig(inst.arr);
        for (const CheckReport& rep : checks(inst, ig)) {
            offer(out, rep.max_residual, inst.label + " " + rep.name + " " + rep.detail);
            out.passed = out.passed && rep.passed;
        }
    }
    return out;
}

// --- criteria ---------------------------------------------------------------

Outcome collinear_closed_form() {
    Outcome out;
    std::mt19937_64 rng(0xAC5E0001ULL);
    for (int n = 2; n <= 8; ++n) {
        for (int draw = 0; draw <= 5; ++draw) {
            const std::vector<double> w = draw == 0 ? weight_prefix(n) : draw_weights(rng, n);
            const Arrangement arr(line_points_input(n, w));
            const StokesMatrices sm = stokes_matrices(arr);
            const std::string where = "N=" + std::to_string(n) + " draw " + std::to_string(draw);
            offer(out, matrix_dev(sm.c0_values(arr), oracle::line_points_c0(w)), where + " C0");
            offer(out, matrix_dev(sm.c1_values(arr), oracle::line_points_c1(w)), where + " C1");
        }
    }
    out.passed = out.worst <= 1e-12;
    return out;
}

Outcome triangle_closed_form() {
    Outcome out;
    std::mt19937_64 rng(0xAC5E0002ULL);
    for (int draw = 0; draw < 100; ++draw) {
        const int den = uint_in(rng, 1, 3);
        const int bnum = uint_in(rng, 1, 9);
        const int anum = bnum + uint_in(rng, 1, 9);
        const std::vector<double> w = draw_weights(rng, 3);
        const Arrangement arr(triangle_input(Rat(anum, den), Rat(bnum, den), w));
        const StokesMatrices sm = stokes_matrices(arr);
        const std::string where = "draw " + std::to_string(draw);
        offer(out, matrix_dev(sm.c0_values(arr), oracle::triangle_c0(w[0], w[1], w[2])),
              where + " C0");
        offer(out, matrix_dev(sm.c1_values(arr), oracle::triangle_c1(w[0], w[1], w[2])),
              where + " C1");
    }
    out.passed = out.worst <= 1e-12;
    return out;
}

Outcome indicator_expansion() {
    Outcome out;
    std::mt19937_64 rng(0xAC5E0003ULL);
    long long violations = 0;
    for (int inst = 0; inst < 50 && out.passed; ++inst) {
        const int k = uint_in(rng, 1, 3);
        const int n = uint_in(rng, k, 6);
        const Arrangement arr = random_arrangement(rng, k, n);
        const IndicatorFrame frame(arr);
        std::vector<double> lo, hi;
        frame.bounding_box(3.0, lo, hi);
        for (int ci : arr.dplus()) {
            int generic = 0, attempts = 0;
            while (generic < 10000 && attempts < 40000) {
                ++attempts;
                std::vector<double> p(static_cast<size_t>(k));
                for (int c = 0; c < k; ++c)
                    p[static_cast<size_t>(c)] =
                        lo[static_cast<size_t>(c)] +
                        (hi[static_cast<size_t>(c)] - lo[static_cast<size_t>(c)]) * u01(rng);
                const int r = chi_identity_at(arr, frame, ci, p);
                if (r == 0) continue;
                ++generic;
                if (r == -1) {
                    ++violations;
                    out.passed = false;
                    out.note = "instance " + std::to_string(inst) + " chamber " +
                               std::to_string(ci);
                    break;
                }
            }
            if (generic < 10000 && out.passed) {
                out.passed = false;
                out.note = "instance " + std::to_string(inst) + ": too few generic points";
            }
            if (!out.passed) break;
        }
    }
    out.worst = static_cast<double>(violations);
    return out;
}

Outcome incidence_inversion() {
    Outcome out;
    std::mt19937_64 rng(0xAC5E0004ULL);
    for (int inst = 0; inst < 50; ++inst) {
        const int k = uint_in(rng, 1, 3);
        const int n = uint_in(rng, k, 6);
        const Arrangement arr = random_arrangement(rng, k, n);
        const auto th = theta_matrix(arr);
        const auto nv = nu_matrix(arr);
        const size_t m = arr.vertices().size();
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) {
                long long tn = 0, nt = 0;
                for (size_t c = 0; c < m; ++c) {
                    tn += static_cast<long long>(th[i][c]) * nv[c][j];
                    nt += static_cast<long long>(nv[i][c]) * th[c][j];
                }
                const long long want = i == j ? 1 : 0;
                const double dev =
                    static_cast<double>(std::max(std::llabs(tn - want), std::llabs(nt - want)));
                offer(out, dev, "instance " + std::to_string(inst));
            }
    }
    out.passed = out.worst == 0;
    return out;
}

Outcome positive_axis_connection() {
    return run_report_checks([](const Instance& inst, Integrator& ig) {
        VerifyOptions opt;
        opt.lambdas = {1.0, 2.0, 5.0};
        return std::vector<CheckReport>{check_stokes_c0(inst.arr, ig, opt)};
    });
}

Outcome negative_axis_connection() {
    return run_report_checks([](const Instance& inst, Integrator& ig) {
        VerifyOptions opt;
        opt.lambdas_negative = {-1.0, -2.0};
        return std::vector<CheckReport>{check_stokes_c1(inst.arr, ig, opt)};
    });
}

Outcome ode_residual() {
    return run_report_checks([](const Instance& inst, Integrator& ig) {
        VerifyOptions opt;
        opt.lambdas = {1.0, 2.0, 5.0};
        opt.fd_step = 1e-4;
        return std::vector<CheckReport>{check_ode(inst.arr, ig, opt)};
    });
}

Outcome decomposition_inversion() {
    return run_report_checks([](const Instance& inst, Integrator& ig) {
        VerifyOptions opt;
        opt.lambdas = {1.0, 2.0};
        return std::vector<CheckReport>{check_decomposition(inst.arr, ig, opt),
                                        check_inversion(inst.arr, ig, opt)};
    });
}

Outcome differentiation_identity() {
    return run_report_checks([](const Instance& inst, Integrator& ig) {
        VerifyOptions opt;
        opt.lambdas = {1.0, 2.0};
        return std::vector<CheckReport>{check_cohomological(inst.arr, ig, opt)};
    });
}

Outcome vertex_asymptotics() {
    Outcome out;
    // Diagonal ratio test at lambda = 50 for one and two collinear points.
    for (int n : {1, 2}) {
        const Arrangement arr(line_points_input(n, weight_prefix(n)));
        Integrator ig(arr);
        for (int v = 0; v < n; ++v) {
            const double f0x = rat_to_double(arr.vertices()[static_cast<size_t>(v)].f0_value);
            const double expo = arr.weight_sum(arr.vertices()[static_cast<size_t>(v)].forms);
            const double pred = ig.asymptotic_constant(v, v) * std::exp(-50.0 * f0x) *
                                std::pow(50.0, -expo);
            const std::complex<double> got = ig.i_plus(v, v, 50.0).value;
            const double dev = std::abs(got / pred - 1.0);
            offer(out, dev, "N=" + std::to_string(n) + " vertex " + std::to_string(v));
            out.passed = out.passed && dev <= 1e-2;
        }
    }
    // Single point: the ratio is exactly 1 up to quadrature error.
    const Arrangement one(line_points_input(1, weight_prefix(1)));
    Integrator ig(one);
    for (double lambda : {5.0, 10.0, 20.0, 50.0}) {
        const double want = std::tgamma(0.3) * std::pow(lambda, -0.3);
        const double dev = std::abs(ig.i_plus(0, 0, lambda).value / want - 1.0);
        out.passed = out.passed && dev <= 1e-8;
        offer(out, dev, "single point lambda=" + std::to_string(lambda));
    }
    return out;
}

Outcome basis_nondegeneracy() {
    Outcome out;
    double least = 1e300;
    for (const Instance& inst : pinned_instances()) {
        Integrator ig(inst.arr);
        const CheckReport rep = check_wronskian(inst.arr, ig);
        out.passed = out.passed && rep.passed;
        if (rep.max_residual < least) {
            least = rep.max_residual;
            out.note = inst.label + " " + rep.detail;
        }
    }
    out.worst = least;  // smallest scaled determinant; must stay >= 1e-10
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
        double budget_seconds;  // 0 = no runtime bound
    };
    const std::vector<Criterion> criteria = {
        {"closed-form connection matrices, collinear points N=2..8", collinear_closed_form, 1.0},
        {"closed-form connection matrices, triangle, 100 draws", triangle_closed_form, 1.0},
        {"chamber indicators expand over upward cones, 50 instances", indicator_expansion, 30.0},
        {"cone/chamber incidence matrices invert exactly, 50 instances", incidence_inversion,
         30.0},
        {"positive-axis connection relation, residual <= 1e-6", positive_axis_connection, 120.0},
        {"negative-axis connection relation, residual <= 1e-6", negative_axis_connection, 120.0},
        {"ODE residual via central differences, <= 1e-6", ode_residual, 120.0},
        {"decomposition and inversion identities, <= 1e-6", decomposition_inversion, 0.0},
        {"differentiation identity for direction-leading forms, <= 1e-6",
         differentiation_identity, 0.0},
        {"vertex asymptotics ratio test at lambda=50", vertex_asymptotics, 0.0},
        {"solution bases nondegenerate at lambda=1", basis_nondegeneracy, 0.0},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[i].run();
        } catch (const std::exception& e) {
            out.passed = false;
            out.note = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool on_time = criteria[i].budget_seconds == 0 || secs <= criteria[i].budget_seconds;
        const bool ok = out.passed && on_time;
        failures += ok ? 0 : 1;
        std::printf("%s  %2zu  %-62s  worst=%.3e  %6.2fs%s%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                    criteria[i].name, out.worst, secs, on_time ? "" : "  [over budget]",
                    out.note.empty() || ok ? "" : "  @ ", out.note.empty() || ok
                                                              ? ""
                                                              : out.note.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
