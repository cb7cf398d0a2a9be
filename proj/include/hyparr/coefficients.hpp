#pragma once

// Combinatorial phase coefficients attached to chamber/vertex incidences:
// the eta / psi / nu / theta families used to pass between chamber integrals
// and cone integrals, kept exact as "sign times exp(i*pi*<integer
// combination of weights>)".

#include <complex>
#include <map>
#include <vector>

#include "hyparr/arrangement.hpp"

namespace hyparr {

struct PhaseCoefficient {
    int sign = 1;               // +1 / -1; 0 encodes the zero coefficient
    std::map<int, int> phase;   // weight index -> integer multiplicity

    static PhaseCoefficient one() { return {}; }
    static PhaseCoefficient zero() { return {0, {}}; }

    bool is_zero() const { return sign == 0; }

    PhaseCoefficient& operator*=(const PhaseCoefficient& o);
    friend PhaseCoefficient operator*(PhaseCoefficient a, const PhaseCoefficient& b) {
        a *= b;
        return a;
    }
    PhaseCoefficient conj() const;

    friend bool operator==(const PhaseCoefficient&, const PhaseCoefficient&) = default;

    std::complex<double> value(const Arrangement& arr) const;
};

/// exp(i*pi*sum of weights over `idx`), optionally negated / conjugated.
PhaseCoefficient phase_from_indices(const IndexSet& idx, int mult = 1, int sign = +1);

/// Coefficient of the chamber integral over `chamber` in the cone integral
/// attached to `vertex` on the positive real axis. Assumes the chamber lies
/// in the upward cone of the vertex.
PhaseCoefficient eta(const Arrangement& arr, int vertex, int chamber);
PhaseCoefficient eta_bar(const Arrangement& arr, int vertex, int chamber);

/// Coefficient of the cone integral of `vertex` in the inversion expressing
/// the chamber integral over `chamber`. Assumes the vertex bounds the chamber.
PhaseCoefficient psi(const Arrangement& arr, int chamber, int vertex);
PhaseCoefficient psi_bar(const Arrangement& arr, int chamber, int vertex);

/// Signed incidence (-1)^{#separating hyperplanes to the vertex's chamber},
/// zero when the vertex is not on the chamber closure.
int nu(const Arrangement& arr, int chamber, int vertex);

/// Whether the chamber lies inside the open upward cone of the vertex (exact).
bool theta(const Arrangement& arr, int vertex, int chamber);

/// theta over (vertex, bounded-below chamber) pairs; rows follow vertex
/// order, columns follow Arrangement::dplus() order.
std::vector<std::vector<int>> theta_matrix(const Arrangement& arr);

/// nu over (bounded-below chamber, vertex) pairs, same index conventions.
std::vector<std::vector<int>> nu_matrix(const Arrangement& arr);

/// Double-precision membership tests with an ambiguity margin, used to spot
/// check the characteristic-function identity at random points.
class IndicatorFrame {
  public:
    explicit IndicatorFrame(const Arrangement& arr, double margin = 1e-6);

    /// 1 = inside chamber, 0 = outside, -1 = too close to a wall.
    int chamber_state(int chamber, const std::vector<double>& p) const;
    /// 1 = inside the vertex's open upward cone, 0 = outside, -1 = ambiguous.
    int cone_state(int vertex, const std::vector<double>& p) const;

    /// Axis-aligned box around all vertices, inflated by `inflate` about its
    /// center (with a unit pad so single-vertex boxes have volume).
    void bounding_box(double inflate, std::vector<double>& lo, std::vector<double>& hi) const;

  private:
    const Arrangement* arr_;
    double margin_;
    std::vector<std::vector<double>> lin_;       // n x k form linear parts
    std::vector<double> cst_;                    // n form constants
    std::vector<std::vector<double>> vertex_;    // vertex points
    std::vector<std::vector<double>> cone_inv_;  // per vertex: k x k row-major inverse
};

/// Tests that the indicator of a bounded-below chamber agrees with the
/// signed combination of upward-cone indicators over its boundary vertices.
/// Returns 1 if verified at p, 0 if p is too close to a wall, -1 if violated.
int chi_identity_at(const Arrangement& arr, const IndicatorFrame& frame, int chamber,
                    const std::vector<double>& p);

}  // namespace hyparr
