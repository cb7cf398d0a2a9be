#include "hyparr/stokes.hpp"

#include <algorithm>
#include <cmath>

namespace hyparr {

VertexPairClass classify_vertex_pair(const Arrangement& arr, int row, int col) {
    VertexPairClass out;
    if (row == col) return out;
    const Vertex& vx = arr.vertices()[col];  // X
    const Vertex& vr = arr.vertices()[row];  // X'

    for (int j = 0; j < arr.n(); ++j) {
        Rat a = arr.input().forms[j].eval(vx.point);
        Rat b = arr.input().forms[j].eval(vr.point);
        if (sgn(a) * sgn(b) < 0) out.separating.push_back(j);
    }
    for (std::size_t i = 0; i < vx.forms.size(); ++i) {
        int j = vx.forms[i];
        auto pos = std::find(vr.forms.begin(), vr.forms.end(), j);
        if (pos == vr.forms.end()) continue;
        int sr = vr.cone_signs[pos - vr.forms.begin()];
        if (vx.cone_signs[i] != sr) out.cone_flips.push_back(j);
    }

    RatVec coords = arr.cone_coords(col, vr.point);
    bool has_neg = false, has_pos = false, has_zero = false;
    for (const Rat& a : coords) {
        if (a < 0) has_neg = true;
        else if (a > 0) has_pos = true;
        else has_zero = true;
    }

    // Interior position: exceptional when some hyperplane through the row
    // vertex fails to separate the two base chambers. Boundary position is
    // never exceptional; outside the closed cone always is.
    auto interior_exceptional = [&](int chamber_r, int chamber_x) {
        const auto& sr = arr.chambers()[chamber_r].signs;
        const auto& sx = arr.chambers()[chamber_x].signs;
        for (int j : vr.forms)
            if (sr[j] == sx[j]) return true;
        return false;
    };

    if (has_neg)
        out.positive_exceptional = true;
    else if (!has_zero)
        out.positive_exceptional = interior_exceptional(vr.dplus_chamber, vx.dplus_chamber);

    if (has_pos)
        out.negative_exceptional = true;
    else if (!has_zero)
        out.negative_exceptional = interior_exceptional(vr.dminus_chamber, vx.dminus_chamber);

    return out;
}

std::complex<double> StokesEntry::value(const Arrangement& arr) const {
    std::complex<double> v = coeff.value(arr);
    for (int j : sin_indices) v *= std::complex<double>(0.0, 2.0 * std::sin(M_PI * arr.weight(j)));
    return v;
}

Eigen::MatrixXcd StokesMatrices::c0_values(const Arrangement& arr) const {
    const std::size_t m = c0.size();
    Eigen::MatrixXcd out(m, m);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) out(r, c) = c0[r][c].value(arr);
    return out;
}

Eigen::MatrixXcd StokesMatrices::c1_values(const Arrangement& arr) const {
    const std::size_t m = c1.size();
    Eigen::MatrixXcd out(m, m);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) out(r, c) = c1[r][c].value(arr);
    return out;
}

StokesMatrices stokes_matrices(const Arrangement& arr) {
    const std::size_t m = arr.vertices().size();
    StokesMatrices out;
    out.c0.assign(m, std::vector<StokesEntry>(m));
    out.c1.assign(m, std::vector<StokesEntry>(m));

    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < m; ++c) {
            if (r == c) continue;  // default-constructed entry is the unit
            VertexPairClass cls = classify_vertex_pair(arr, static_cast<int>(r),
                                                       static_cast<int>(c));
            const IndexSet& X = arr.vertices()[c].forms;
            const IndexSet& Xp = arr.vertices()[r].forms;
            IndexSet row_only;
            std::set_difference(Xp.begin(), Xp.end(), X.begin(), X.end(),
                                std::back_inserter(row_only));

            int sign = (cls.cone_flips.size() + row_only.size()) % 2 == 0 ? +1 : -1;
            PhaseCoefficient base = phase_from_indices(cls.cone_flips, 1, sign) *
                                    phase_from_indices(cls.separating, -1);

            if (cls.positive_exceptional) {
                out.c0[r][c].coeff = PhaseCoefficient::zero();
                out.positive_exceptional_pairs.emplace_back(static_cast<int>(r),
                                                            static_cast<int>(c));
            } else {
                out.c0[r][c].coeff = base;
                out.c0[r][c].sin_indices = row_only;
            }

            if (cls.negative_exceptional) {
                out.c1[r][c].coeff = PhaseCoefficient::zero();
                out.negative_exceptional_pairs.emplace_back(static_cast<int>(r),
                                                            static_cast<int>(c));
            } else {
                out.c1[r][c].coeff =
                    base * phase_from_indices(X, 1) * phase_from_indices(Xp, -1);
                out.c1[r][c].sin_indices = row_only;
            }
        }
    }
    return out;
}

std::complex<double> c0_entry_by_chamber_sum(const Arrangement& arr, int row, int col) {
    std::complex<double> sum = 0;
    for (std::size_t ch = 0; ch < arr.chambers().size(); ++ch) {
        const Chamber& c = arr.chambers()[ch];
        if (!std::binary_search(c.closure_vertices.begin(), c.closure_vertices.end(), row))
            continue;
        if (!theta(arr, col, static_cast<int>(ch))) continue;
        PhaseCoefficient g = eta_bar(arr, col, static_cast<int>(ch)) *
                             psi(arr, static_cast<int>(ch), row);
        sum += g.value(arr);
    }
    return sum;
}

}  // namespace hyparr
