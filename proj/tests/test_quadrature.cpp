#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "hyparr/quadrature.hpp"

using namespace hyparr;

namespace {

double beta01(double a, double b) {
    // int_0^1 t^a (1-t)^b dt = Gamma(a+1) Gamma(b+1) / Gamma(a+b+2)
    return std::exp(std::lgamma(a + 1) + std::lgamma(b + 1) - std::lgamma(a + b + 2));
}

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

double moment(const QuadratureRule& q, int m) {
    double s = 0;
    for (size_t i = 0; i < q.nodes.size(); ++i) s += q.weights[i] * std::pow(q.nodes[i], m);
    return s;
}

}  // namespace

TEST_SUITE("quadrature") {

TEST_CASE("jacobi rule integrates endpoint-weighted monomials") {
    for (double a : {-0.7, -0.3, 0.0, 0.4, 1.6})
        for (double b : {-0.5, 0.0, 0.7, 2.3}) {
            const QuadratureRule& q = gauss_jacobi01(24, a, b);
            REQUIRE(q.nodes.size() == 24);
            REQUIRE(q.weights.size() == 24);
            for (size_t i = 0; i < q.nodes.size(); ++i) {
                CHECK(q.nodes[i] > 0.0);
                CHECK(q.nodes[i] < 1.0);
                CHECK(q.weights[i] > 0.0);
                if (i > 0) CHECK(q.nodes[i] > q.nodes[i - 1]);
            }
            CHECK(rel(moment(q, 0), beta01(a, b)) <= 1e-14);
            // Exact for polynomial degree up to 2*24-1.
            for (int m = 1; m <= 20; ++m)
                CHECK(rel(moment(q, m), beta01(a + m, b)) <= 1e-13);
        }
}

TEST_CASE("laguerre rule integrates weighted monomials") {
    for (double g : {-0.7, -0.2, 0.0, 0.55, 1.3}) {
        const QuadratureRule& q = gauss_laguerre(20, g);
        REQUIRE(q.nodes.size() == 20);
        for (size_t i = 0; i < q.nodes.size(); ++i) {
            CHECK(q.nodes[i] > 0.0);
            CHECK(q.weights[i] > 0.0);
            if (i > 0) CHECK(q.nodes[i] > q.nodes[i - 1]);
        }
        // int_0^inf s^{g+m} e^{-s} ds = Gamma(g+m+1)
        for (int m = 0; m <= 8; ++m)
            CHECK(rel(moment(q, m), std::tgamma(g + m + 1)) <= 1e-13);
    }
}

TEST_CASE("small orders behave") {
    const QuadratureRule& q1 = gauss_jacobi01(1, 0.0, 0.0);
    REQUIRE(q1.nodes.size() == 1);
    CHECK(q1.nodes[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(q1.weights[0] == doctest::Approx(1.0).epsilon(1e-14));

    const QuadratureRule& l1 = gauss_laguerre(1, 0.0);
    REQUIRE(l1.nodes.size() == 1);
    CHECK(l1.nodes[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(l1.weights[0] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("rules are cached by parameters") {
    const QuadratureRule& a = gauss_jacobi01(16, 0.25, -0.5);
    const QuadratureRule& b = gauss_jacobi01(16, 0.25, -0.5);
    CHECK(&a == &b);
    const QuadratureRule& c = gauss_jacobi01(16, 0.25, -0.25);
    CHECK(&a != &c);
    const QuadratureRule& d = gauss_laguerre(16, 0.25);
    const QuadratureRule& e = gauss_laguerre(16, 0.25);
    CHECK(&d == &e);
}

TEST_CASE("invalid parameters are rejected") {
    CHECK_THROWS_AS((void)gauss_jacobi01(0, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS((void)gauss_jacobi01(-3, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS((void)gauss_jacobi01(8, -1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS((void)gauss_jacobi01(8, 0.0, -1.5), std::invalid_argument);
    CHECK_THROWS_AS((void)gauss_laguerre(0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS((void)gauss_laguerre(8, -1.0), std::invalid_argument);
}

}  // TEST_SUITE
