#include "hyparr/quadrature.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include <Eigen/Dense>

namespace hyparr {

namespace {

std::uint64_t double_bits(double x) {
    std::uint64_t b;
    std::memcpy(&b, &x, sizeof(b));
    return b;
}

/// Orthonormal-polynomial Newton step for an eigenvalue of the Jacobi
/// matrix with recurrence diagonal `a` and off-diagonal `b` (b[0] unused).
/// Rescales the running recurrence values to dodge overflow at large nodes.
double polish_node(const std::vector<double>& a, const std::vector<double>& b, double x) {
    const int n = static_cast<int>(a.size());
    for (int iter = 0; iter < 2; ++iter) {
        double pm1 = 0, p = 1, dm1 = 0, d = 0;
        for (int j = 0; j < n; ++j) {
            double pj = ((x - a[j]) * p - (j == 0 ? 0.0 : b[j]) * pm1);
            double dj = ((x - a[j]) * d + p - (j == 0 ? 0.0 : b[j]) * dm1);
            double bn = (j + 1 < n) ? b[j + 1] : 1.0;
            pj /= bn;
            dj /= bn;
            pm1 = p;
            p = pj;
            dm1 = d;
            d = dj;
            double mag = std::abs(p);
            if (mag > 1e120) {
                p /= mag;
                pm1 /= mag;
                d /= mag;
                dm1 /= mag;
            }
        }
        if (d == 0) break;
        double step = p / d;
        if (!std::isfinite(step)) break;
        x -= step;
    }
    return x;
}

/// Inverse Christoffel function 1/K_n(x) = mu0 / sum_j q_j(x)^2 evaluated via
/// the orthonormal recurrence (q_0 = 1); at a node x_i this equals the Gauss
/// weight w_i.  The recurrence values explode at the outermost Laguerre nodes
/// (their weights underflow), so the running values are rescaled and the
/// result is assembled in log space, flushing to zero instead of overflowing.
double christoffel_weight(const std::vector<double>& a, const std::vector<double>& b, double mu0,
                          double x) {
    const int n = static_cast<int>(a.size());
    const double big = 1e140;
    double qm1 = 0, q = 1, sum = 1;
    int rescales = 0;
    for (int j = 0; j + 1 < n; ++j) {
        double qj = ((x - a[j]) * q - (j == 0 ? 0.0 : b[j]) * qm1) / b[j + 1];
        qm1 = q;
        q = qj;
        if (std::abs(q) > big) {
            q /= big;
            qm1 /= big;
            sum /= big * big;
            ++rescales;
        }
        sum += q * q;
    }
    if (rescales == 0) return mu0 / sum;
    double log_w = std::log(mu0) - std::log(sum) - 2.0 * rescales * std::log(big);
    return std::exp(log_w);
}

/// Golub-Welsch nodes: eigenvalues of the symmetric tridiagonal matrix
/// (computed without eigenvectors, then Newton-polished); weights via the
/// Christoffel function, which avoids the O(n^3) eigenvector accumulation.
QuadratureRule golub_welsch(const std::vector<double>& diag, const std::vector<double>& offdiag,
                            double mu0) {
    const int n = static_cast<int>(diag.size());
    Eigen::VectorXd d(n), sub(n > 1 ? n - 1 : 0);
    for (int i = 0; i < n; ++i) d(i) = diag[i];
    for (int i = 0; i + 1 < n; ++i) sub(i) = offdiag[i + 1];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(d, sub, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw std::runtime_error("quadrature eigensolve failed");

    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = polish_node(diag, offdiag, es.eigenvalues()(i));
        rule.weights[i] = christoffel_weight(diag, offdiag, mu0, rule.nodes[i]);
    }
    return rule;
}

struct Key {
    int n;
    std::uint64_t a, b;
    bool operator<(const Key& o) const { return std::tie(n, a, b) < std::tie(o.n, o.a, o.b); }
};

std::map<Key, QuadratureRule> g_jacobi_cache;   // NOLINT
std::map<Key, QuadratureRule> g_laguerre_cache; // NOLINT
std::mutex g_cache_mutex;                       // NOLINT

}  // namespace

const QuadratureRule& gauss_jacobi01(int n, double a, double b) {
    if (n < 1 || !(a > -1) || !(b > -1)) throw std::invalid_argument("bad Jacobi rule request");
    Key key{n, double_bits(a), double_bits(b)};
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_jacobi_cache.find(key);
    if (it != g_jacobi_cache.end()) return it->second;

    // Weight (1-x)^A (1+x)^B on [-1,1] with A = b, B = a maps to
    // t^a (1-t)^b on [0,1] under x = 2t - 1.
    const double A = b, B = a;
    std::vector<double> diag(n), off(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double s = 2.0 * i + A + B;
        diag[i] = i == 0 ? (B - A) / (A + B + 2)
                         : (B * B - A * A) / (s * (s + 2));
        if (i == 1)
            off[i] = std::sqrt(4 * (A + 1) * (B + 1) / ((A + B + 2) * (A + B + 2) * (A + B + 3)));
        else if (i >= 2)
            off[i] = std::sqrt(4.0 * i * (i + A) * (i + B) * (i + A + B) /
                               (s * s * (s + 1) * (s - 1)));
    }
    double mu0 = std::pow(2.0, A + B + 1) * std::tgamma(A + 1) * std::tgamma(B + 1) /
                 std::tgamma(A + B + 2);
    QuadratureRule rule = golub_welsch(diag, off, mu0);
    // Map [-1,1] -> [0,1] and strip the 2^{A+B+1} mass factor.
    double scale = std::pow(2.0, A + B + 1);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = (1.0 + rule.nodes[i]) / 2.0;
        rule.weights[i] /= scale;
    }
    return g_jacobi_cache.emplace(key, std::move(rule)).first->second;
}

const QuadratureRule& gauss_laguerre(int n, double g) {
    if (n < 1 || !(g > -1)) throw std::invalid_argument("bad Laguerre rule request");
    Key key{n, double_bits(g), 0};
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_laguerre_cache.find(key);
    if (it != g_laguerre_cache.end()) return it->second;

    std::vector<double> diag(n), off(n, 0.0);
    for (int i = 0; i < n; ++i) {
        diag[i] = 2.0 * i + g + 1;
        if (i >= 1) off[i] = std::sqrt(i * (i + g));
    }
    QuadratureRule rule = golub_welsch(diag, off, std::tgamma(g + 1));
    return g_laguerre_cache.emplace(key, std::move(rule)).first->second;
}

}  // namespace hyparr
