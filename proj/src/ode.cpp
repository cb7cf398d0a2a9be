#include "hyparr/ode.hpp"

#include <algorithm>

namespace hyparr {

int edge_orientation(const Arrangement& arr, int j, const IndexSet& U) {
    return sgn(arr.l_of(j, arr.edge(U).direction));
}

int pair_orientation(const Arrangement& arr, int j, int r, const IndexSet& U) {
    return edge_orientation(arr, j, U) * edge_orientation(arr, r, U);
}

Eigen::VectorXd ode_a_diagonal(const Arrangement& arr) {
    const auto& vs = arr.vertices();
    Eigen::VectorXd a(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) a(i) = rat_to_double(vs[i].f0_value);
    return a;
}

Eigen::MatrixXd ode_b_matrix(const Arrangement& arr) {
    const auto& vs = arr.vertices();
    const std::size_t m = vs.size();
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(m, m);
    for (std::size_t x = 0; x < m; ++x) {
        b(x, x) = arr.weight_sum(vs[x].forms);
        for (std::size_t y = 0; y < m; ++y) {
            if (y == x) continue;
            IndexSet common;
            std::set_intersection(vs[x].forms.begin(), vs[x].forms.end(), vs[y].forms.begin(),
                                  vs[y].forms.end(), std::back_inserter(common));
            if (static_cast<int>(common.size()) != arr.k() - 1) continue;
            int j = -1, r = -1;
            for (int t : vs[x].forms)
                if (!std::binary_search(common.begin(), common.end(), t)) j = t;
            for (int t : vs[y].forms)
                if (!std::binary_search(common.begin(), common.end(), t)) r = t;
            b(x, y) = pair_orientation(arr, j, r, common) * arr.weight(r);
        }
    }
    return b;
}

RatVec f0_in_vertex_forms(const Arrangement& arr, int vertex) {
    const IndexSet& X = arr.vertices()[vertex].forms;
    const int k = arr.k();
    RatMat m(k, k);
    RatVec rhs(k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) m(i, j) = arr.input().forms[X[j]].linear[i];
        rhs[i] = arr.input().f0[i];
    }
    return solve(std::move(m), std::move(rhs));
}

}  // namespace hyparr
