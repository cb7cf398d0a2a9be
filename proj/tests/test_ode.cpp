#include <doctest.h>

#include <random>
#include <vector>

#include "hyparr/ode.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace hyparr;
using test_support::line_points_input;
using test_support::random_arrangement;
using test_support::triangle_input;
using test_support::weight_prefix;

namespace {

Eigen::MatrixXd to_eigen(const std::vector<std::vector<double>>& rows) {
    Eigen::MatrixXd m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c)
            m(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
    return m;
}

}  // namespace

TEST_SUITE("ode") {

TEST_CASE("collinear points: coefficient matrices") {
    for (int n : {2, 3, 5}) {
        const std::vector<double> w = weight_prefix(n);
        const Arrangement arr(line_points_input(n, w));
        const Eigen::VectorXd a = ode_a_diagonal(arr);
        REQUIRE(a.size() == n);
        for (int i = 0; i < n; ++i) CHECK(a(i) == doctest::Approx(i).epsilon(1e-15));

        const Eigen::MatrixXd b = ode_b_matrix(arr);
        const Eigen::MatrixXd expect = to_eigen(oracle::line_points_b(w));
        CHECK((b - expect).cwiseAbs().maxCoeff() <= 1e-14);
    }
}

TEST_CASE("triangle: coefficient matrices") {
    const std::vector<double> w = weight_prefix(3);
    const Arrangement arr(triangle_input(Rat(2), Rat(1), w));
    const Eigen::VectorXd a = ode_a_diagonal(arr);
    REQUIRE(a.size() == 3);
    CHECK(a(0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(a(1) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(a(2) == doctest::Approx(2.0).epsilon(1e-15));

    const Eigen::MatrixXd b = ode_b_matrix(arr);
    const Eigen::MatrixXd expect = to_eigen(oracle::triangle_b(w[0], w[1], w[2]));
    CHECK((b - expect).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("diagonal of b is the weight sum over the vertex") {
    std::mt19937_64 rng(808);
    for (int trial = 0; trial < 4; ++trial) {
        const int k = test_support::uint_in(rng, 1, 2);
        const int n = test_support::uint_in(rng, k, 5);
        const Arrangement arr = random_arrangement(rng, k, n);
        const Eigen::MatrixXd b = ode_b_matrix(arr);
        for (size_t vi = 0; vi < arr.vertices().size(); ++vi) {
            const double want = arr.weight_sum(arr.vertices()[vi].forms);
            CHECK(b(static_cast<int>(vi), static_cast<int>(vi)) ==
                  doctest::Approx(want).epsilon(1e-14));
        }
    }
}

TEST_CASE("edge orientation symmetry of off-diagonal entries") {
    // For vertices X, Y sharing an edge U = X\cap Y with {j} = X\Y, {r} = Y\X:
    // b(X, Y) = eps(j, U) eps(r, U) w_r and b(Y, X) = eps(j, U) eps(r, U) w_j,
    // so b(X, Y) / w_r == b(Y, X) / w_j exactly (both equal the shared sign).
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 4; ++trial) {
        const int k = test_support::uint_in(rng, 1, 3);
        const int n = test_support::uint_in(rng, k, k == 3 ? 4 : 5);
        const Arrangement arr = random_arrangement(rng, k, n);
        const Eigen::MatrixXd b = ode_b_matrix(arr);
        const auto& vs = arr.vertices();
        for (size_t x = 0; x < vs.size(); ++x)
            for (size_t y = 0; y < vs.size(); ++y) {
                if (x == y) continue;
                IndexSet shared;
                std::set_intersection(vs[x].forms.begin(), vs[x].forms.end(),
                                      vs[y].forms.begin(), vs[y].forms.end(),
                                      std::back_inserter(shared));
                if (static_cast<int>(shared.size()) != arr.k() - 1) {
                    CHECK(b(static_cast<int>(x), static_cast<int>(y)) == 0.0);
                    continue;
                }
                int j = -1, r = -1;
                for (int f : vs[x].forms)
                    if (!std::binary_search(shared.begin(), shared.end(), f)) j = f;
                for (int f : vs[y].forms)
                    if (!std::binary_search(shared.begin(), shared.end(), f)) r = f;
                REQUIRE(j >= 0);
                REQUIRE(r >= 0);
                const int sign = pair_orientation(arr, j, r, shared);
                CHECK(sign == pair_orientation(arr, r, j, shared));
                CHECK(b(static_cast<int>(x), static_cast<int>(y)) ==
                      doctest::Approx(sign * arr.weight(r)).epsilon(1e-14));
                CHECK(b(static_cast<int>(y), static_cast<int>(x)) ==
                      doctest::Approx(sign * arr.weight(j)).epsilon(1e-14));
            }
    }
}

TEST_CASE("linear functional expands exactly in the forms of a vertex") {
    std::mt19937_64 rng(606);
    for (int trial = 0; trial < 6; ++trial) {
        const int k = test_support::uint_in(rng, 1, 3);
        const int n = test_support::uint_in(rng, k, k == 3 ? 4 : 5);
        const Arrangement arr = random_arrangement(rng, k, n);
        for (size_t vi = 0; vi < arr.vertices().size(); ++vi) {
            const Vertex& vx = arr.vertices()[vi];
            const RatVec coef = f0_in_vertex_forms(arr, static_cast<int>(vi));
            REQUIRE(coef.size() == static_cast<size_t>(arr.k()));
            // Check the identity f0(p) - f0(X) = sum_t coef_t * f_{X_t}(p)
            // at random rational points p.
            for (int probe = 0; probe < 5; ++probe) {
                RatVec p(static_cast<size_t>(arr.k()));
                for (auto& c : p)
                    c = Rat(test_support::uint_in(rng, 0, 12) - 6,
                            test_support::uint_in(rng, 1, 4));
                Rat lhs = -vx.f0_value;
                for (int c = 0; c < arr.k(); ++c)
                    lhs += arr.input().f0[static_cast<size_t>(c)] * p[static_cast<size_t>(c)];
                Rat rhs(0);
                for (int t = 0; t < arr.k(); ++t) {
                    const int j = vx.forms[static_cast<size_t>(t)];
                    rhs += coef[static_cast<size_t>(t)] *
                           arr.input().forms[static_cast<size_t>(j)].eval(p);
                }
                CHECK(lhs == rhs);
            }
        }
    }
}

}  // TEST_SUITE
