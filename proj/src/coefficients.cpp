#include "hyparr/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace hyparr {

PhaseCoefficient& PhaseCoefficient::operator*=(const PhaseCoefficient& o) {
    if (sign == 0 || o.sign == 0) {
        sign = 0;
        phase.clear();
        return *this;
    }
    sign *= o.sign;
    for (const auto& [j, m] : o.phase) {
        int& cur = phase[j];
        cur += m;
        if (cur == 0) phase.erase(j);
    }
    return *this;
}

PhaseCoefficient PhaseCoefficient::conj() const {
    PhaseCoefficient out = *this;
    for (auto& [j, m] : out.phase) m = -m;
    return out;
}

std::complex<double> PhaseCoefficient::value(const Arrangement& arr) const {
    if (sign == 0) return {0.0, 0.0};
    double s = 0;
    for (const auto& [j, m] : phase) s += m * arr.weight(j);
    return double(sign) * std::polar(1.0, M_PI * s);
}

PhaseCoefficient phase_from_indices(const IndexSet& idx, int mult, int sign) {
    PhaseCoefficient out;
    out.sign = sign;
    if (mult != 0)
        for (int j : idx) out.phase[j] += mult;
    return out;
}

PhaseCoefficient eta(const Arrangement& arr, int vertex, int chamber) {
    IndexSet h = arr.separating_set(chamber, arr.vertices()[vertex].dplus_chamber);
    return phase_from_indices(h);
}

PhaseCoefficient eta_bar(const Arrangement& arr, int vertex, int chamber) {
    return eta(arr, vertex, chamber).conj();
}

PhaseCoefficient psi(const Arrangement& arr, int chamber, int vertex) {
    IndexSet h = arr.separating_set(chamber, arr.vertices()[vertex].dplus_chamber);
    return phase_from_indices(h, 1, h.size() % 2 == 0 ? +1 : -1);
}

PhaseCoefficient psi_bar(const Arrangement& arr, int chamber, int vertex) {
    return psi(arr, chamber, vertex).conj();
}

int nu(const Arrangement& arr, int chamber, int vertex) {
    const Chamber& c = arr.chambers()[chamber];
    if (!std::binary_search(c.closure_vertices.begin(), c.closure_vertices.end(), vertex))
        return 0;
    IndexSet h = arr.separating_set(chamber, arr.vertices()[vertex].dplus_chamber);
    return h.size() % 2 == 0 ? +1 : -1;
}

bool theta(const Arrangement& arr, int vertex, int chamber) {
    return arr.cone_position(vertex, arr.chambers()[chamber].interior_point) ==
           Arrangement::ConePos::kInterior;
}

std::vector<std::vector<int>> theta_matrix(const Arrangement& arr) {
    const auto& dplus = arr.dplus();
    std::vector<std::vector<int>> m(arr.vertices().size(), std::vector<int>(dplus.size(), 0));
    for (std::size_t v = 0; v < arr.vertices().size(); ++v)
        for (std::size_t c = 0; c < dplus.size(); ++c)
            m[v][c] = theta(arr, static_cast<int>(v), dplus[c]) ? 1 : 0;
    return m;
}

std::vector<std::vector<int>> nu_matrix(const Arrangement& arr) {
    const auto& dplus = arr.dplus();
    std::vector<std::vector<int>> m(dplus.size(), std::vector<int>(arr.vertices().size(), 0));
    for (std::size_t c = 0; c < dplus.size(); ++c)
        for (std::size_t v = 0; v < arr.vertices().size(); ++v)
            m[c][v] = nu(arr, dplus[c], static_cast<int>(v));
    return m;
}

IndicatorFrame::IndicatorFrame(const Arrangement& arr, double margin)
    : arr_(&arr), margin_(margin) {
    const int k = arr.k(), n = arr.n();
    lin_.resize(n, std::vector<double>(k));
    cst_.resize(n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < k; ++i) lin_[j][i] = rat_to_double(arr.input().forms[j].linear[i]);
        cst_[j] = rat_to_double(arr.input().forms[j].constant);
    }
    for (const auto& v : arr.vertices()) {
        std::vector<double> p(k);
        for (int i = 0; i < k; ++i) p[i] = rat_to_double(v.point[i]);
        vertex_.push_back(std::move(p));

        Eigen::MatrixXd E(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) E(i, j) = rat_to_double(v.cone_dirs[j][i]);
        Eigen::MatrixXd inv = E.inverse();
        std::vector<double> flat(static_cast<std::size_t>(k) * k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) flat[static_cast<std::size_t>(i) * k + j] = inv(i, j);
        cone_inv_.push_back(std::move(flat));
    }
}

int IndicatorFrame::chamber_state(int chamber, const std::vector<double>& p) const {
    const auto& signs = arr_->chambers()[chamber].signs;
    const int k = arr_->k();
    bool inside = true;
    for (int j = 0; j < arr_->n(); ++j) {
        double val = cst_[j], scale = 1.0 + std::abs(cst_[j]);
        for (int i = 0; i < k; ++i) {
            double term = lin_[j][i] * p[i];
            val += term;
            scale += std::abs(term);
        }
        if (std::abs(val) <= margin_ * scale) return -1;
        if ((val > 0 ? 1 : -1) != signs[j]) inside = false;
    }
    return inside ? 1 : 0;
}

int IndicatorFrame::cone_state(int vertex, const std::vector<double>& p) const {
    const int k = arr_->k();
    const auto& vp = vertex_[vertex];
    const auto& inv = cone_inv_[vertex];
    bool inside = true;
    for (int i = 0; i < k; ++i) {
        double coord = 0, scale = 1.0;
        for (int j = 0; j < k; ++j) {
            double term = inv[static_cast<std::size_t>(i) * k + j] * (p[j] - vp[j]);
            coord += term;
            scale += std::abs(term);
        }
        if (std::abs(coord) <= margin_ * scale) return -1;
        if (coord < 0) inside = false;
    }
    return inside ? 1 : 0;
}

void IndicatorFrame::bounding_box(double inflate, std::vector<double>& lo,
                                  std::vector<double>& hi) const {
    const int k = arr_->k();
    lo.assign(k, 0.0);
    hi.assign(k, 0.0);
    for (int i = 0; i < k; ++i) {
        double mn = vertex_.front()[i], mx = mn;
        for (const auto& p : vertex_) {
            mn = std::min(mn, p[i]);
            mx = std::max(mx, p[i]);
        }
        double c = (mn + mx) / 2, half = (mx - mn) / 2 + 1.0;
        lo[i] = c - inflate * half;
        hi[i] = c + inflate * half;
    }
}

int chi_identity_at(const Arrangement& arr, const IndicatorFrame& frame, int chamber,
                    const std::vector<double>& p) {
    int lhs = frame.chamber_state(chamber, p);
    if (lhs < 0) return 0;
    int rhs = 0;
    for (int v : arr.chambers()[chamber].closure_vertices) {
        int state = frame.cone_state(v, p);
        if (state < 0) return 0;
        rhs += nu(arr, chamber, v) * state;
    }
    return lhs == rhs ? 1 : -1;
}

}  // namespace hyparr
