#pragma once
// Exact rational linear programming (dense two-phase simplex, Bland's rule).
// Used for chamber feasibility certificates and recession-cone tests; problem
// sizes are tiny (<= ~25 rows), so termination and exactness matter more than
// speed.

#include "hyparr/linalg.hpp"

namespace hyparr {

struct LpResult {
    enum class Status { kOptimal, kInfeasible, kUnbounded };
    Status status = Status::kInfeasible;
    Rat objective;  // valid when kOptimal
    RatVec x;       // an optimal point, valid when kOptimal
};

/// maximize c.x  subject to  A x <= b,  x free.
LpResult lp_maximize(const RatMat& A, const RatVec& b, const RatVec& c);

}  // namespace hyparr
