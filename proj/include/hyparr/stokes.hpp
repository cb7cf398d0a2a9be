#pragma once

// Closed-form Stokes matrices C0 (positive real axis) and C1 (negative real
// axis) for the arrangement ODE, in the vertex (f0) order. Entries are kept
// in exact structured form: sign, exp(i*pi*<weight combination>), and a
// product of 2*i*sin(pi*weight) factors.

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hyparr/arrangement.hpp"
#include "hyparr/coefficients.hpp"

namespace hyparr {

struct VertexPairClass {
    bool positive_exceptional = false;  // forces C0(row, col) = 0
    bool negative_exceptional = false;  // forces C1(row, col) = 0
    IndexSet separating;  // hyperplanes strictly separating the two vertices
    IndexSet cone_flips;  // common forms whose upward-cone side differs
};

/// Classifies the ordered pair (column vertex, row vertex). The row plays
/// the role of the "target" vertex X' in the entry C(X', X).
VertexPairClass classify_vertex_pair(const Arrangement& arr, int row, int col);

struct StokesEntry {
    PhaseCoefficient coeff;  // zero coefficient encodes a vanishing entry
    IndexSet sin_indices;    // product over these of 2*i*sin(pi*weight)
    bool is_zero() const { return coeff.is_zero(); }
    std::complex<double> value(const Arrangement& arr) const;
};

struct StokesMatrices {
    std::vector<std::vector<StokesEntry>> c0, c1;  // [row][col], vertex order
    std::vector<std::pair<int, int>> positive_exceptional_pairs;  // (row, col)
    std::vector<std::pair<int, int>> negative_exceptional_pairs;

    Eigen::MatrixXcd c0_values(const Arrangement& arr) const;
    Eigen::MatrixXcd c1_values(const Arrangement& arr) const;
};

StokesMatrices stokes_matrices(const Arrangement& arr);

/// Independent evaluation of C0(row, col) as the chamber sum
/// sum_{D in upward cone of col, row on boundary of D} eta_bar(col,D) psi(D,row).
std::complex<double> c0_entry_by_chamber_sum(const Arrangement& arr, int row, int col);

}  // namespace hyparr
