#pragma once

// The linear ODE satisfied by the column of integrals attached to an
// arrangement: I'(t) = -(A + B/t) I(t), with A diagonal in the vertex f0
// values and B built from the weights and edge orientations.

#include <Eigen/Dense>

#include "hyparr/arrangement.hpp"

namespace hyparr {

/// sgn l_j(e_U): orientation of form j along the edge line of U (j not in U).
int edge_orientation(const Arrangement& arr, int j, const IndexSet& U);

/// sgn(l_j(e_U) l_r(e_U)): relative orientation of forms j and r across the
/// common edge U of the vertices U+{j} and U+{r}.
int pair_orientation(const Arrangement& arr, int j, int r, const IndexSet& U);

/// Diagonal of the exponential part: f0 at each vertex, vertex order.
Eigen::VectorXd ode_a_diagonal(const Arrangement& arr);

/// Residue part: B(X,X) = sum of weights over X; for |X ^ Y| = k-1 with
/// {j} = X\Y, {r} = Y\X, B(X,Y) = pair_orientation(j,r,X^Y) * weight(r);
/// all other entries vanish.
Eigen::MatrixXd ode_b_matrix(const Arrangement& arr);

/// Coefficients c (ordered like the vertex's form set) expressing
/// f0 - f0(X) = sum_{j in X} c_j f_j.
RatVec f0_in_vertex_forms(const Arrangement& arr, int vertex);

}  // namespace hyparr
