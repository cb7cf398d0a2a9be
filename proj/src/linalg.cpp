#include "hyparr/linalg.hpp"

#include <stdexcept>

namespace hyparr {

Rat det(RatMat m) {
    if (m.rows != m.cols) throw std::invalid_argument("det: not square");
    const std::size_t n = m.rows;
    Rat result = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col) == 0) ++pivot;
        if (pivot == n) return Rat(0);
        if (pivot != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(m(pivot, j), m(col, j));
            result = -result;
        }
        result *= m(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col) == 0) continue;
            Rat f = m(i, col) / m(col, col);
            for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return result;
}

RatVec solve(RatMat m, RatVec b) {
    if (m.rows != m.cols || b.size() != m.rows) throw std::invalid_argument("solve: shape mismatch");
    const std::size_t n = m.rows;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col) == 0) ++pivot;
        if (pivot == n) return {};
        if (pivot != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(m(pivot, j), m(col, j));
            std::swap(b[pivot], b[col]);
        }
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col) == 0) continue;
            Rat f = m(i, col) / m(col, col);
            for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
            b[i] -= f * b[col];
        }
    }
    RatVec x(n, Rat(0));
    for (std::size_t ii = n; ii-- > 0;) {
        Rat s = b[ii];
        for (std::size_t j = ii + 1; j < n; ++j) s -= m(ii, j) * x[j];
        x[ii] = s / m(ii, ii);
    }
    return x;
}

RatVec kernel_direction(const RatMat& m) {
    if (m.rows + 1 != m.cols) throw std::invalid_argument("kernel_direction: need (n-1) x n");
    const std::size_t n = m.cols;
    if (n == 1) return {Rat(1)};  // empty system in one variable
    // Cramer-style: component i is (-1)^i times the minor without column i.
    RatVec d(n);
    bool all_zero = true;
    for (std::size_t drop = 0; drop < n; ++drop) {
        RatMat sub(n - 1, n - 1);
        for (std::size_t i = 0; i < n - 1; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == drop) continue;
                sub(i, jj++) = m(i, j);
            }
        }
        Rat minor = det(sub);
        d[drop] = (drop % 2 == 0) ? minor : Rat(-minor);
        if (d[drop] != 0) all_zero = false;
    }
    if (all_zero) return {};
    return d;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
    if (a.cols != b.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    RatMat c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t l = 0; l < a.cols; ++l) {
            if (a(i, l) == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) c(i, j) += a(i, l) * b(l, j);
        }
    return c;
}

}  // namespace hyparr
