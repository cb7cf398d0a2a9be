#include <doctest.h>

#include "hyparr/linalg.hpp"
#include "hyparr/rational.hpp"

using namespace hyparr;

TEST_SUITE("rational_linalg") {

TEST_CASE("rational parsing") {
    CHECK(*rat_parse("3") == Rat(3));
    CHECK(*rat_parse("-7") == Rat(-7));
    CHECK(*rat_parse("-1/2") == Rat(-1) / 2);
    CHECK(*rat_parse("2/4") == Rat(1) / 2);
    CHECK(*rat_parse("0.25") == Rat(1) / 4);
    CHECK(*rat_parse("-0.125") == Rat(-1) / 8);
    CHECK(*rat_parse("10.5") == Rat(21) / 2);
    CHECK_FALSE(rat_parse("").has_value());
    CHECK_FALSE(rat_parse("abc").has_value());
    CHECK_FALSE(rat_parse("1/0").has_value());
    CHECK_FALSE(rat_parse("1.2.3").has_value());
    CHECK_FALSE(rat_parse("1/").has_value());
    CHECK_FALSE(rat_parse("--2").has_value());
}

TEST_CASE("double conversions are exact") {
    for (double x : {0.0, 1.0, -1.0, 0.3, -0.1, 1e-12, 12345.6789, 0x1.fffffffffffffp0}) {
        CHECK(rat_to_double(rat_from_double(x)) == x);
    }
    CHECK(rat_from_double(0.5) == Rat(1) / 2);
    CHECK(rat_from_double(-2.0) == Rat(-2));
}

TEST_CASE("string round trip") {
    for (const Rat& r : {Rat(0), Rat(7), Rat(-3) / 4, Rat(22) / 7, Rat(-100)}) {
        CHECK(*rat_parse(rat_to_string(r)) == r);
    }
    CHECK(rat_to_string(Rat(-2) / 4) == "-1/2");
    CHECK(rat_to_string(Rat(5)) == "5");
}

TEST_CASE("sgn and abs") {
    CHECK(sgn(Rat(3) / 2) == 1);
    CHECK(sgn(Rat(0)) == 0);
    CHECK(sgn(Rat(-1) / 9) == -1);
    CHECK(rat_abs(Rat(-5) / 3) == Rat(5) / 3);
}

TEST_CASE("determinants") {
    RatMat m2(2, 2);
    m2(0, 0) = 1;
    m2(0, 1) = 2;
    m2(1, 0) = 3;
    m2(1, 1) = 4;
    CHECK(det(m2) == Rat(-2));

    // Hilbert 3x3: entries 1/(i+j+1), determinant 1/2160.
    RatMat h(3, 3);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) h(i, j) = Rat(1) / Rat(static_cast<int>(i + j + 1));
    CHECK(det(h) == Rat(1) / 2160);

    RatMat sing(2, 2);
    sing(0, 0) = 1;
    sing(0, 1) = 2;
    sing(1, 0) = 2;
    sing(1, 1) = 4;
    CHECK(det(sing) == Rat(0));
}

TEST_CASE("exact solve") {
    RatMat m(2, 2);
    m(0, 0) = 2;
    m(0, 1) = 1;
    m(1, 0) = 1;
    m(1, 1) = 3;
    const RatVec x = solve(m, {Rat(5), Rat(10)});
    REQUIRE(x.size() == 2);
    CHECK(x[0] == Rat(1));
    CHECK(x[1] == Rat(3));

    RatMat sing(2, 2);
    sing(0, 0) = 1;
    sing(0, 1) = 1;
    sing(1, 0) = 2;
    sing(1, 1) = 2;
    CHECK(solve(sing, {Rat(1), Rat(2)}).empty());
}

TEST_CASE("kernel directions") {
    RatMat m(1, 2);
    m(0, 0) = 2;
    m(0, 1) = 3;
    const RatVec d = kernel_direction(m);
    REQUIRE(d.size() == 2);
    CHECK(dot({m(0, 0), m(0, 1)}, d) == Rat(0));
    CHECK((sgn(d[0]) != 0 || sgn(d[1]) != 0));

    RatMat m23(2, 3);
    m23(0, 0) = 1;
    m23(0, 1) = 0;
    m23(0, 2) = 1;
    m23(1, 0) = 0;
    m23(1, 1) = 1;
    m23(1, 2) = -2;
    const RatVec d3 = kernel_direction(m23);
    REQUIRE(d3.size() == 3);
    for (size_t r = 0; r < 2; ++r)
        CHECK(m23(r, 0) * d3[0] + m23(r, 1) * d3[1] + m23(r, 2) * d3[2] == Rat(0));

    // Degenerate 0 x 1 case used by one-dimensional arrangements.
    const RatVec d1 = kernel_direction(RatMat(0, 1));
    REQUIRE(d1.size() == 1);
    CHECK(sgn(d1[0]) != 0);
}

TEST_CASE("matrix product") {
    RatMat a(2, 3), b(3, 2);
    int v = 1;
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 3; ++j) a(i, j) = v++;
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 2; ++j) b(i, j) = v++;
    const RatMat p = mat_mul(a, b);
    REQUIRE(p.rows == 2);
    REQUIRE(p.cols == 2);
    CHECK(p(0, 0) == Rat(1 * 7 + 2 * 9 + 3 * 11));
    CHECK(p(1, 1) == Rat(4 * 8 + 5 * 10 + 6 * 12));
}

}  // TEST_SUITE
