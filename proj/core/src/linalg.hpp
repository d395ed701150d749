// Small exact-rational linear algebra used by the polytope and constants
// code. Internal to the library.
#ifndef DP4A13_SRC_LINALG_HPP
#define DP4A13_SRC_LINALG_HPP

#include <optional>
#include <vector>

#include "dp4a13/rational.hpp"

namespace dp4a13 {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>; // row-major

// Solve A x = b for square A; nullopt if singular.
inline std::optional<RatVec> solve_square(RatMat a, RatVec b) {
    const size_t n = a.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            Rat f = a[r][col] / a[col][col];
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    RatVec x(n);
    for (size_t r = 0; r < n; ++r) x[r] = b[r] / a[r][r];
    return x;
}

inline int rank(RatMat a) {
    if (a.empty()) return 0;
    const size_t rows = a.size(), cols = a[0].size();
    int rk = 0;
    size_t r = 0;
    for (size_t col = 0; col < cols && r < rows; ++col) {
        size_t piv = r;
        while (piv < rows && a[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        for (size_t k = 0; k < rows; ++k) {
            if (k == r || a[k][col].is_zero()) continue;
            Rat f = a[k][col] / a[r][col];
            for (size_t c = col; c < cols; ++c) a[k][c] -= f * a[r][c];
        }
        ++r;
        ++rk;
    }
    return rk;
}

inline Rat determinant(RatMat a) {
    const size_t n = a.size();
    Rat det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            Rat f = a[r][col] / a[col][col];
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

} // namespace dp4a13

#endif
