#pragma once

// Decomposition of a chamber (with f0 bounded below) into quadrature cells
// on which every arrangement form factors exactly as a product of cell-face
// monomials and a strictly-signed bilinear remainder. Supported for
// dimensions 1 and 2; higher dimensions fall back to sampling elsewhere.

#include <vector>

#include "hyparr/arrangement.hpp"

namespace hyparr {

/// c00 + c10*x + c01*y + c11*x*y with exact coefficients.
struct BiRat {
    Rat c00, c10, c01, c11;
    Rat eval(const Rat& x, const Rat& y) const {
        return c00 + c10 * x + c01 * y + c11 * x * y;
    }
};

/// Double-precision mirror of BiRat used on the evaluation hot path.
struct BiD {
    double c00 = 0, c10 = 0, c01 = 0, c11 = 0;
    double eval(double x, double y) const { return c00 + x * (c10 + c11 * y) + c01 * y; }
    static BiD from(const BiRat& b) {
        return {rat_to_double(b.c00), rat_to_double(b.c10), rat_to_double(b.c01),
                rat_to_double(b.c11)};
    }
};

/// Multiplicities of the cell-face monomials extracted from a factor:
/// x0 ~ x (or x - start on half-unbounded axes), x1 ~ 1-x, y0 ~ y, y1 ~ 1-y.
struct FacePow {
    int x0 = 0, x1 = 0, y0 = 0, y1 = 0;
};

enum class CellDomain {
    kInterval,  // x in [0,1], one-dimensional
    kRay,       // x = f0-value in [start, inf), one-dimensional
    kSquare,    // (x,y) in [0,1]^2
    kCollar,    // x = f0-value in [start, inf), y in [0,1]
};

/// One arrangement form restricted to the cell: form o z =
/// faces(x,y) * rest(x,y) with rest strictly of sign `rest_sign`.
struct CellFactor {
    int form = -1;
    FacePow faces;
    BiD rest;
    int rest_sign = 0;
};

struct Cell {
    CellDomain domain = CellDomain::kInterval;
    double start = 0;  // x-axis origin for kRay/kCollar
    std::vector<CellFactor> factors;  // one entry per arrangement form
    FacePow jac_faces;                // |jacobian| = faces * |jac_rest|
    BiD jac_rest;
    BiD f0;            // f0 o z; for kRay/kCollar this is exactly x
    bool f0_is_x = false;
};

/// Extracts face monomials in place; returns their multiplicities.
/// `start` is only used by the half-unbounded domains.
FacePow extract_faces(BiRat& b, CellDomain domain, const Rat& start);

/// Strict sign of b on the (closed) domain, or 0 if b changes sign or
/// vanishes identically. `start` as above.
int strict_sign(const BiRat& b, CellDomain domain, const Rat& start);

/// Cells covering the chamber exactly. Requires f0 bounded below on the
/// chamber and k <= 2.
std::vector<Cell> chamber_cells(const Arrangement& arr, int chamber);

}  // namespace hyparr
