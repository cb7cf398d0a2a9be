#pragma once
// Small dense exact linear algebra on rationals: determinants, linear solves
// and 1-dimensional kernels, at arrangement sizes (k <= ~10).

#include "hyparr/rational.hpp"

namespace hyparr {

/// Row-major dense rational matrix.
struct RatMat {
    std::size_t rows = 0, cols = 0;
    RatVec a;  // rows*cols entries

    RatMat() = default;
    RatMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Rat(0)) {}
    Rat& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

/// Exact determinant (fraction-aware Gaussian elimination). Square only.
Rat det(RatMat m);

/// Solve M x = b exactly. Returns empty vector when M is singular.
RatVec solve(RatMat m, RatVec b);

/// One-dimensional kernel of an (n-1) x n matrix of full row rank.
/// Returns a nonzero kernel vector, or empty if the rank is deficient.
RatVec kernel_direction(const RatMat& m);

/// Exact integer matrix product (used for the combinatorial inversion checks).
RatMat mat_mul(const RatMat& a, const RatMat& b);

}  // namespace hyparr
