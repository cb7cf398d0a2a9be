#include "hyparr/lp.hpp"

#include <stdexcept>

namespace hyparr {
namespace {

// Standard-form simplex: maximize c.x s.t. A x = b, x >= 0, b >= 0,
// with an initial basic feasible solution given by `basis`.
// Tableau rows: [A | b]; `obj` holds reduced costs [c~ | value].
struct Tableau {
    std::size_t m, n;           // rows, structural columns
    std::vector<RatVec> row;    // m rows of size n+1
    RatVec obj;                 // size n+1; obj[n] = current objective value
    std::vector<std::size_t> basis;
    std::vector<char> blocked;  // columns barred from entering (phase-2 artificials)

    void pivot(std::size_t r, std::size_t c) {
        Rat p = row[r][c];
        for (auto& v : row[r]) v /= p;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || row[i][c] == 0) continue;
            Rat f = row[i][c];
            for (std::size_t j = 0; j <= n; ++j) row[i][j] -= f * row[r][j];
        }
        if (obj[c] != 0) {
            Rat f = obj[c];
            for (std::size_t j = 0; j <= n; ++j) obj[j] -= f * row[r][j];
        }
        basis[r] = c;
    }

    // Returns false when unbounded. Bland's rule guarantees termination.
    bool run() {
        for (;;) {
            std::size_t enter = n;
            for (std::size_t j = 0; j < n; ++j)
                if (!blocked[j] && obj[j] > 0) { enter = j; break; }
            if (enter == n) return true;
            std::size_t leave = m;
            Rat best_ratio;
            for (std::size_t i = 0; i < m; ++i) {
                if (row[i][enter] <= 0) continue;
                Rat ratio = row[i][n] / row[i][enter];
                if (leave == m || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == m) return false;
            pivot(leave, enter);
        }
    }
};

}  // namespace

LpResult lp_maximize(const RatMat& A, const RatVec& b, const RatVec& c) {
    const std::size_t m = A.rows, d = A.cols;
    if (b.size() != m || c.size() != d) throw std::invalid_argument("lp_maximize: shape mismatch");

    // Free variables: x = u - v with u, v >= 0; one slack per row; one
    // artificial per row for phase 1.
    const std::size_t n_struct = 2 * d + m;        // u, v, slacks
    const std::size_t n_total = n_struct + m;      // + artificials
    Tableau t;
    t.m = m;
    t.n = n_total;
    t.row.assign(m, RatVec(n_total + 1, Rat(0)));
    t.basis.assign(m, 0);
    t.blocked.assign(n_total, 0);
    for (std::size_t i = 0; i < m; ++i) {
        int flip = (b[i] < 0) ? -1 : 1;
        for (std::size_t j = 0; j < d; ++j) {
            t.row[i][j] = flip * A(i, j);
            t.row[i][d + j] = -flip * A(i, j);
        }
        t.row[i][2 * d + i] = flip;  // slack of A x <= b
        t.row[i][n_struct + i] = 1;  // artificial
        t.row[i][n_total] = flip * b[i];
        t.basis[i] = n_struct + i;
    }

    // Phase 1: maximize -(sum of artificials).
    t.obj.assign(n_total + 1, Rat(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n_total; ++j)
            if (j < n_struct || j == n_total) t.obj[j] += t.row[i][j];
    if (!t.run()) throw std::logic_error("lp phase 1 unbounded");
    if (t.obj[n_total] != 0) {
        // Residual artificial infeasibility.
        LpResult r;
        r.status = LpResult::Status::kInfeasible;
        return r;
    }
    // Drive artificials out of the basis where possible; degenerate rows that
    // cannot pivot are redundant equalities and stay harmlessly basic at 0.
    for (std::size_t i = 0; i < m; ++i) {
        if (t.basis[i] < n_struct) continue;
        for (std::size_t j = 0; j < n_struct; ++j) {
            if (t.row[i][j] != 0) {
                t.pivot(i, j);
                break;
            }
        }
    }

    // Phase 2: real objective, artificials pinned at zero by removing them
    // from pricing (set reduced costs so they never enter).
    t.obj.assign(n_total + 1, Rat(0));
    for (std::size_t j = 0; j < d; ++j) {
        t.obj[j] = c[j];
        t.obj[d + j] = -c[j];
    }
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t bj = t.basis[i];
        if (t.obj[bj] == 0) continue;
        Rat f = t.obj[bj];
        for (std::size_t j = 0; j <= n_total; ++j) t.obj[j] -= f * t.row[i][j];
    }
    for (std::size_t i = 0; i < m; ++i) t.blocked[n_struct + i] = 1;  // artificials stay at 0

    if (!t.run()) {
        LpResult r;
        r.status = LpResult::Status::kUnbounded;
        return r;
    }

    LpResult r;
    r.status = LpResult::Status::kOptimal;
    r.objective = -t.obj[n_total];  // obj row holds value negated by updates
    RatVec uv(n_struct, Rat(0));
    for (std::size_t i = 0; i < m; ++i)
        if (t.basis[i] < n_struct) uv[t.basis[i]] = t.row[i][n_total];
    r.x.assign(d, Rat(0));
    for (std::size_t j = 0; j < d; ++j) r.x[j] = uv[j] - uv[d + j];
    // Recompute the objective from x to avoid sign-convention slips.
    r.objective = dot(c, r.x);
    return r;
}

}  // namespace hyparr
