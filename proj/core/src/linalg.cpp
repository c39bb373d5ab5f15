#include "toric/linalg.hpp"

#include <cassert>
#include <cstdint>
#include <cstddef>

namespace toric {

namespace {

// Row-echelon elimination in place; returns (rank, det_sign_and_product).
// Only the pivot product is meaningful when the matrix is square and has
// full rank.  Pivots are restricted to the first `pivot_cols` columns so an
// augmented system cannot claim rank through its right-hand side.
std::pair<int, Rat> echelon(RatMat& a, std::size_t pivot_cols = SIZE_MAX) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    const std::size_t limit = std::min(cols, pivot_cols);
    Rat pivot_product = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < limit && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            pivot_product = -pivot_product;
        }
        pivot_product *= a[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            const Rat f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return {static_cast<int>(r), pivot_product};
}

}  // namespace

Rat det(RatMat a) {
    assert(!a.empty() && a.size() == a[0].size());
    auto [rk, prod] = echelon(a);
    if (rk != static_cast<int>(a.size())) return 0;
    return prod;
}

int rank(RatMat a) {
    if (a.empty()) return 0;
    return echelon(a).first;
}

std::optional<RatVec> solve_square(RatMat a, RatVec b) {
    const std::size_t n = a.size();
    assert(b.size() == n);
    for (std::size_t i = 0; i < n; ++i) {
        assert(a[i].size() == n);
        a[i].push_back(b[i]);
    }
    auto [rk, prod] = echelon(a, n);
    (void)prod;
    if (rk != static_cast<int>(n)) return std::nullopt;
    // back substitution on the upper-triangular augmented matrix
    RatVec x(n, Rat(0));
    for (std::size_t ii = n; ii-- > 0;) {
        Rat s = a[ii][n];
        for (std::size_t j = ii + 1; j < n; ++j) s -= a[ii][j] * x[j];
        x[ii] = s / a[ii][ii];
    }
    return x;
}

std::optional<RatMat> inverse(RatMat a) {
    const std::size_t n = a.size();
    RatMat aug = a;
    for (std::size_t i = 0; i < n; ++i) {
        assert(a[i].size() == n);
        for (std::size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? Rat(1) : Rat(0));
    }
    // Gauss-Jordan
    std::size_t r = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = r;
        while (p < n && aug[p][c] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(aug[p], aug[r]);
        const Rat piv = aug[r][c];
        for (std::size_t j = 0; j < 2 * n; ++j) aug[r][j] /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || aug[i][c] == 0) continue;
            const Rat f = aug[i][c];
            for (std::size_t j = 0; j < 2 * n; ++j) aug[i][j] -= f * aug[r][j];
        }
        ++r;
    }
    RatMat inv(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

int affine_rank(const std::vector<RatVec>& points) {
    if (points.empty()) return -1;
    if (points.size() == 1) return 0;
    RatMat diffs;
    diffs.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) {
        RatVec d(points[i].size());
        for (std::size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
        diffs.push_back(std::move(d));
    }
    return rank(std::move(diffs));
}

}  // namespace toric
