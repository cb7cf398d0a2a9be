#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "hyparr/arrangement.hpp"
#include "test_support.hpp"

using namespace hyparr;
using test_support::line_points_input;
using test_support::random_arrangement;
using test_support::random_input;
using test_support::triangle_input;
using test_support::weight_prefix;

namespace {

long long binom(int n, int r) {
    if (r < 0 || r > n) return 0;
    long long v = 1;
    for (int i = 0; i < r; ++i) v = v * (n - i) / (i + 1);
    return v;
}

long long expected_chambers(int n, int k) {
    long long total = 0;
    for (int i = 0; i <= k; ++i) total += binom(n, i);
    return total;
}

}  // namespace

TEST_SUITE("arrangement") {

TEST_CASE("three points on a line") {
    const Arrangement arr(line_points_input(3, weight_prefix(3)));
    CHECK(arr.k() == 1);
    CHECK(arr.n() == 3);
    REQUIRE(arr.vertices().size() == 3);
    // Vertices sorted by f0 = z: 0, 1, 2.
    for (int i = 0; i < 3; ++i) {
        CHECK(arr.vertices()[static_cast<size_t>(i)].f0_value == Rat(i));
        CHECK(arr.vertices()[static_cast<size_t>(i)].forms == IndexSet{i});
    }
    CHECK(arr.edges().size() == 1);  // the empty subset's line
    CHECK(arr.chambers().size() == 4);
    CHECK(arr.dplus().size() == 3);

    int bounded = 0;
    for (const Chamber& c : arr.chambers()) bounded += c.bounded ? 1 : 0;
    CHECK(bounded == 2);  // (0,1) and (1,2)

    // The bounded-below chambers are in bijection with vertices through the
    // f0-minimizing vertex.
    std::set<int> mins;
    for (int ci : arr.dplus()) {
        const Chamber& c = arr.chambers()[static_cast<size_t>(ci)];
        CHECK(c.bounded_below);
        REQUIRE(c.min_vertex >= 0);
        mins.insert(c.min_vertex);
        CHECK(arr.vertices()[static_cast<size_t>(c.min_vertex)].dplus_chamber == ci);
    }
    CHECK(mins.size() == arr.vertices().size());
}

TEST_CASE("triangle arrangement combinatorics") {
    const Arrangement arr(triangle_input(Rat(2), Rat(1), weight_prefix(3)));
    CHECK(arr.vertices().size() == 3);
    CHECK(arr.edges().size() == 3);
    CHECK(arr.chambers().size() == 7);
    CHECK(arr.dplus().size() == 3);

    // Vertex order by f0 = 2x + y: (0,0), (0,1), (1,0).
    CHECK(arr.vertices()[0].forms == IndexSet{0, 1});
    CHECK(arr.vertices()[1].forms == IndexSet{0, 2});
    CHECK(arr.vertices()[2].forms == IndexSet{1, 2});
    CHECK(arr.vertices()[0].f0_value == Rat(0));
    CHECK(arr.vertices()[1].f0_value == Rat(1));
    CHECK(arr.vertices()[2].f0_value == Rat(2));

    int bounded = 0;
    for (const Chamber& c : arr.chambers()) bounded += c.bounded ? 1 : 0;
    CHECK(bounded == 1);  // the open triangle

    // The triangle is the chamber (+, +, -) and it is the minimum chamber of
    // the origin vertex.
    const int tri = arr.chamber_index({1, 1, -1});
    REQUIRE(tri >= 0);
    CHECK(arr.chambers()[static_cast<size_t>(tri)].bounded);
    CHECK(arr.chambers()[static_cast<size_t>(tri)].min_vertex == 0);
    CHECK(arr.vertices()[0].dplus_chamber == tri);
}

TEST_CASE("random arrangements match the flat sign-vector scan") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 6; ++trial) {
        const int k = test_support::uint_in(rng, 1, 3);
        const int n = test_support::uint_in(rng, k, k == 3 ? 4 : 5);
        const Arrangement arr = random_arrangement(rng, k, n);

        CHECK(static_cast<long long>(arr.chambers().size()) == expected_chambers(n, k));
        CHECK(static_cast<long long>(arr.vertices().size()) == binom(n, k));
        CHECK(arr.dplus().size() == arr.vertices().size());

        // Oracle: enumerate all 2^n sign vectors and test nonemptiness by LP.
        std::set<std::vector<int>> oracle;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> signs(static_cast<size_t>(n));
            for (int j = 0; j < n; ++j) signs[static_cast<size_t>(j)] = (mask >> j) & 1 ? 1 : -1;
            if (region_interior_point(arr.input(), signs, static_cast<size_t>(n)))
                oracle.insert(signs);
        }
        std::set<std::vector<int>> found;
        for (const Chamber& c : arr.chambers()) found.insert(c.signs);
        CHECK(found == oracle);
    }
}

TEST_CASE("closure vertices and chamber membership") {
    const Arrangement arr(triangle_input(Rat(2), Rat(1), weight_prefix(3)));
    const int tri = arr.chamber_index({1, 1, -1});
    REQUIRE(tri >= 0);
    // All three vertices lie on the triangle's closure.
    CHECK(arr.chambers()[static_cast<size_t>(tri)].closure_vertices == std::vector<int>{0, 1, 2});

    CHECK(arr.chamber_of_point({0.2, 0.2}) == tri);
    CHECK(arr.chamber_of_point({0.5, 0.5}) == -1);  // on x + y = 1
    const int outside = arr.chamber_of_point({-1.0, 0.5});
    REQUIRE(outside >= 0);
    CHECK(arr.chambers()[static_cast<size_t>(outside)].signs == std::vector<int>{-1, 1, -1});
}

TEST_CASE("cone coordinates and position") {
    const Arrangement arr(triangle_input(Rat(2), Rat(1), weight_prefix(3)));
    const Vertex& v0 = arr.vertices()[0];  // origin
    // The vertex itself sits on the cone boundary.
    CHECK(arr.cone_position(0, v0.point) == Arrangement::ConePos::kBoundary);
    // A point along the sum of cone directions is interior.
    RatVec p = v0.point;
    for (const RatVec& d : v0.cone_dirs)
        for (size_t c = 0; c < p.size(); ++c) p[c] += d[c];
    CHECK(arr.cone_position(0, p) == Arrangement::ConePos::kInterior);
    const RatVec coords = arr.cone_coords(0, p);
    for (const Rat& a : coords) CHECK(a == Rat(1));
    // Reversing one direction leaves the cone.
    RatVec q = v0.point;
    for (size_t c = 0; c < q.size(); ++c) q[c] -= v0.cone_dirs[0][c];
    CHECK(arr.cone_position(0, q) == Arrangement::ConePos::kOutside);
}

TEST_CASE("vertex sample eps certificate") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 4; ++trial) {
        const int k = test_support::uint_in(rng, 1, 2);
        const Arrangement arr = random_arrangement(rng, k, test_support::uint_in(rng, k + 1, 5));
        for (size_t vi = 0; vi < arr.vertices().size(); ++vi) {
            const Vertex& v = arr.vertices()[vi];
            const Rat eps = arr.vertex_sample_eps(static_cast<int>(vi));
            CHECK(eps > 0);
            RatVec p = v.point;
            for (const RatVec& d : v.cone_dirs)
                for (size_t c = 0; c < p.size(); ++c) p[c] += eps * d[c];
            // The sample lands in the chamber attached above the vertex.
            const Chamber& ch = arr.chambers()[static_cast<size_t>(v.dplus_chamber)];
            for (int j = 0; j < arr.n(); ++j) {
                const Rat fv = arr.input().forms[static_cast<size_t>(j)].eval(p);
                CHECK(sgn(fv) == ch.signs[static_cast<size_t>(j)]);
            }
        }
    }
}

TEST_CASE("reflection reverses the vertex order") {
    const Arrangement arr(line_points_input(3, weight_prefix(3)));
    const Arrangement ref = arr.reflected();
    REQUIRE(ref.vertices().size() == 3);
    for (int i = 0; i < 3; ++i) {
        const int ri = ref.vertex_index(arr.vertices()[static_cast<size_t>(i)].forms);
        CHECK(ri == 2 - i);
    }
    // Bounded-below chambers of the reflection are the bounded-above ones.
    CHECK(ref.dplus().size() == 3);
}

TEST_CASE("separating sets") {
    const Arrangement arr(line_points_input(3, weight_prefix(3)));
    // Chambers along the line: (-inf,0), (0,1), (1,2), (2,inf).
    const int c0 = arr.chamber_index({-1, -1, -1});
    const int c1 = arr.chamber_index({1, -1, -1});
    const int c3 = arr.chamber_index({1, 1, 1});
    REQUIRE(c0 >= 0);
    REQUIRE(c1 >= 0);
    REQUIRE(c3 >= 0);
    CHECK(arr.separating_set(c0, c1) == IndexSet{0});
    CHECK(arr.separating_set(c1, c3) == IndexSet{1, 2});
    CHECK(arr.separating_set(c3, c1) == IndexSet{1, 2});
    CHECK(arr.separating_set(c1, c1).empty());
}

TEST_CASE("genericity violations are classified") {
    // Coincident hyperplanes: common zero of two forms in k=1.
    {
        ArrangementInput in = line_points_input(2, weight_prefix(2));
        in.forms[1] = in.forms[0];
        const auto rep = Arrangement::check_genericity(in);
        REQUIRE_FALSE(rep.ok);
        CHECK(rep.violations.front().kind == "overdetermined_intersection");
        CHECK_THROWS_AS((void)Arrangement(in), GenericityError);
    }
    // Parallel lines in the plane: dependent pair of linear parts.
    {
        ArrangementInput in = triangle_input(Rat(2), Rat(1), weight_prefix(3));
        in.forms[2].linear = in.forms[0].linear;  // x and x - 1
        const auto rep = Arrangement::check_genericity(in);
        REQUIRE_FALSE(rep.ok);
        CHECK(rep.violations.front().kind == "dependent_linear_parts");
    }
    // Direction functional constant on an edge line.
    {
        ArrangementInput in = triangle_input(Rat(2), Rat(1), weight_prefix(3));
        in.f0 = {Rat(1), Rat(0)};  // constant along the x = const edge of form 0
        const auto rep = Arrangement::check_genericity(in);
        REQUIRE_FALSE(rep.ok);
        CHECK(rep.violations.front().kind == "f0_constant_on_edge");
    }
    // Two vertices with equal f0 value (no parallel pair, no degenerate
    // edge): f0 = 3x + 2y takes the value 3 at both (0, 3/2) and (1, 0).
    {
        ArrangementInput in;
        in.k = 2;
        in.forms = {
            {{Rat(1), Rat(0)}, Rat(0)},   // x
            {{Rat(0), Rat(1)}, Rat(0)},   // y
            {{Rat(1), Rat(1)}, Rat(-1)},  // x + y - 1
            {{Rat(1), Rat(2)}, Rat(-3)},  // x + 2y - 3
        };
        in.weights = weight_prefix(4);
        in.f0 = {Rat(3), Rat(2)};
        const auto rep = Arrangement::check_genericity(in);
        REQUIRE_FALSE(rep.ok);
        CHECK(rep.violations.front().kind == "f0_vertex_collision");
    }
}

TEST_CASE("schema validation") {
    ArrangementInput ok = line_points_input(2, weight_prefix(2));
    {
        ArrangementInput in = ok;
        in.k = 0;
        CHECK_THROWS_AS((void)Arrangement(in), SchemaError);
    }
    {
        ArrangementInput in = ok;
        in.weights.pop_back();
        CHECK_THROWS_AS((void)Arrangement(in), SchemaError);
    }
    {
        ArrangementInput in = ok;
        in.weights[0] = -0.5;
        CHECK_THROWS_AS((void)Arrangement(in), SchemaError);
    }
    {
        ArrangementInput in = ok;
        in.f0 = {Rat(1), Rat(2)};
        CHECK_THROWS_AS((void)Arrangement(in), SchemaError);
    }
    {
        ArrangementInput in = ok;
        in.forms.resize(1);
        in.weights.resize(1);
        in.k = 1;  // n >= k holds; now break the form arity instead
        in.forms[0].linear = {Rat(1), Rat(2)};
        CHECK_THROWS_AS((void)Arrangement(in), SchemaError);
    }
}

TEST_CASE("index subsets enumerator") {
    const auto s = index_subsets(4, 2);
    CHECK(s.size() == 6);
    CHECK(s.front() == IndexSet{0, 1});
    CHECK(s.back() == IndexSet{2, 3});
    CHECK(index_subsets(3, 0) == std::vector<IndexSet>{{}});
}

}  // TEST_SUITE
