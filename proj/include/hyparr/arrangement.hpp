#pragma once
// Combinatorics and exact geometry of a generic affine hyperplane arrangement
// in R^k with a direction functional f0:
//   vertices (k-fold intersections), edges (lines of (k-1)-fold
//   intersections) with f0-normalized directions, chambers (sign vectors of
//   the complement), the subfamily of chambers on which f0 is bounded below,
//   and the vertex<->chamber bijection given by the f0-minimizing vertex.
// All predicates are decided in exact rational arithmetic.

#include <map>
#include <optional>
#include <vector>

#include "hyparr/errors.hpp"
#include "hyparr/linalg.hpp"

namespace hyparr {

/// f(z) = linear . z + constant
struct AffineForm {
    RatVec linear;
    Rat constant;
    Rat eval(const RatVec& z) const { return dot(linear, z) + constant; }
};

using IndexSet = std::vector<int>;  // strictly increasing hyperplane indices, 0-based

struct ArrangementInput {
    int k = 0;
    std::vector<AffineForm> forms;  // f_1..f_N as indices 0..N-1
    std::vector<double> weights;    // alpha_j > 0
    RatVec f0;                      // linear functional (no constant term)
};

struct Vertex {
    IndexSet forms;        // |forms| == k
    RatVec point;
    Rat f0_value;
    int orientation_sign;  // sign det of (linear parts, rows in increasing index order)
    // Cone through the vertex on which f0 - f0(X) > 0:
    // directions e_{X\{j}} (f0-normalized), listed parallel to `forms`.
    std::vector<RatVec> cone_dirs;
    // sign of f_j on that cone (= sign l_j(e_{X\{j}})), parallel to `forms`
    std::vector<int> cone_signs;
    int dplus_chamber = -1;   // chamber adjacent to X inside the cone above
    int dminus_chamber = -1;  // same for the reflected cone (f0 - f0(X) < 0)
};

struct Edge {
    IndexSet forms;    // |forms| == k-1
    RatVec direction;  // e_U with f0(e_U) = 1
};

struct Chamber {
    std::vector<int> signs;            // size N, entries +1/-1
    RatVec interior_point;             // exact feasibility certificate
    bool bounded = false;              // recession cone == {0}
    bool bounded_below = false;        // f0 bounded below on the chamber
    int min_vertex = -1;               // f0-minimizing vertex index (when bounded_below)
    std::vector<int> closure_vertices; // vertices lying in the closure
};

class Arrangement {
  public:
    /// Validates genericity and builds all combinatorial data.
    /// Throws SchemaError / GenericityError.
    explicit Arrangement(ArrangementInput in);

    /// Pure validation (does not throw on violations).
    static GenericityReport check_genericity(const ArrangementInput& in);

    const ArrangementInput& input() const { return in_; }
    int k() const { return in_.k; }
    int n() const { return static_cast<int>(in_.forms.size()); }
    const std::vector<double>& weights() const { return in_.weights; }
    double weight(int j) const { return in_.weights[j]; }

    Rat f0_of(const RatVec& z) const { return dot(in_.f0, z); }
    Rat l_of(int j, const RatVec& d) const { return dot(in_.forms[j].linear, d); }

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Chamber>& chambers() const { return chambers_; }
    /// Chamber indices with f0 bounded below, ordered by their min-vertex
    /// (i.e. aligned with `vertices()`).
    const std::vector<int>& dplus() const { return dplus_; }

    int vertex_index(const IndexSet& X) const;               // -1 if absent
    int chamber_index(const std::vector<int>& signs) const;  // -1 if absent
    const Edge& edge(const IndexSet& U) const;

    /// Coordinates a with p = X + sum_j a_j e_{X\{j}} (order of `forms`).
    RatVec cone_coords(int vertex, const RatVec& p) const;

    enum class ConePos { kOutside, kBoundary, kInterior };
    /// Position of point p relative to the closed cone at `vertex`.
    ConePos cone_position(int vertex, const RatVec& p) const;

    /// Chamber containing a floating-point p; -1 when p is within `tol` of a
    /// hyperplane (scaled by the evaluation magnitude).
    int chamber_of_point(const std::vector<double>& p, double tol = 1e-9) const;

    /// Same arrangement with f0 negated (used for the reflected problem).
    Arrangement reflected() const;

    /// Separating hyperplanes between two chambers (indices where the sign
    /// vectors differ).
    IndexSet separating_set(int chamber_a, int chamber_b) const;

    /// alpha_S = sum of weights over an index set.
    double weight_sum(const IndexSet& s) const;

    /// Deterministic interior sample scale for the chamber next to vertex v
    /// inside its cone: eps with eps * (1 + |l_j(dbar)|) < |f_j(X)| for all
    /// j outside X.
    Rat vertex_sample_eps(int vertex) const;

  private:
    ArrangementInput in_;
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<Chamber> chambers_;
    std::vector<int> dplus_;
    std::map<IndexSet, int> vertex_by_forms_;
    std::map<IndexSet, int> edge_by_forms_;
    std::map<std::vector<int>, int> chamber_by_signs_;

    void build();
};

/// LP feasibility of the open region {sign_j * f_j > 0 : j in active}.
/// Returns an interior point when nonempty. `active` selects a prefix or any
/// subset of constraints (used both by the chamber search and by tests).
std::optional<RatVec> region_interior_point(const ArrangementInput& in,
                                            const std::vector<int>& signs,
                                            std::size_t active_count);

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<IndexSet> index_subsets(int n, int k);

}  // namespace hyparr
