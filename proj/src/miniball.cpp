#include "ph/miniball.hpp"

#include <algorithm>
#include <cmath>

namespace ph {

namespace {

double sqdist(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

// Smallest ball with all support points on its boundary: the circumsphere of
// the support restricted to its affine hull. Solves 2 U Uᵗ λ = diag(U Uᵗ).
Ball ball_from_support(const std::vector<const std::vector<double>*>& support) {
    Ball b;
    if (support.empty()) {
        b.radius = -1.0;
        return b;
    }
    const auto& p0 = *support[0];
    std::size_t dim = p0.size();
    b.center = p0;
    b.radius = 0.0;
    std::size_t k = support.size() - 1;
    if (k == 0) return b;

    std::vector<std::vector<double>> u(k, std::vector<double>(dim));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t c = 0; c < dim; ++c)
            u[i][c] = (*support[i + 1])[c] - p0[c];

    // A λ = rhs with A_ij = 2 u_i·u_j, rhs_i = |u_i|².
    std::vector<std::vector<double>> a(k, std::vector<double>(k + 1));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            double dot = 0;
            for (std::size_t c = 0; c < dim; ++c) dot += u[i][c] * u[j][c];
            a[i][j] = 2.0 * dot;
        }
        a[i][k] = a[i][i] / 2.0;
    }
    // Gaussian elimination with partial pivoting; a vanishing pivot means the
    // support is affinely dependent and the trailing point is redundant.
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < k; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) < 1e-12) {
            b.radius = -1.0;
            return b;
        }
        std::swap(a[col], a[piv]);
        for (std::size_t r = 0; r < k; ++r) {
            if (r == col) continue;
            double f = a[r][col] / a[col][col];
            for (std::size_t c = col; c <= k; ++c) a[r][c] -= f * a[col][c];
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        double lambda = a[i][k] / a[i][i];
        for (std::size_t c = 0; c < dim; ++c) b.center[c] += lambda * u[i][c];
    }
    b.radius = std::sqrt(sqdist(b.center, p0));
    return b;
}

Ball welzl(std::vector<const std::vector<double>*>& pts, std::size_t n,
           std::vector<const std::vector<double>*>& support, std::size_t max_support) {
    Ball b = ball_from_support(support);
    if (support.size() == max_support) return b;
    for (std::size_t i = 0; i < n; ++i) {
        const auto* p = pts[i];
        if (b.radius >= 0 && b.contains(*p)) continue;
        support.push_back(p);
        b = welzl(pts, i, support, max_support);
        support.pop_back();
        // Move-to-front keeps boundary points early for later calls.
        for (std::size_t j = i; j > 0; --j) pts[j] = pts[j - 1];
        pts[0] = p;
    }
    return b;
}

} // namespace

bool Ball::contains(const std::vector<double>& p, double slack) const {
    return sqdist(p, center) <= (radius + slack) * (radius + slack);
}

Ball min_enclosing_ball(std::vector<std::vector<double>> points) {
    // Duplicates do not move the ball and break the support solver.
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::vector<const std::vector<double>*> ptrs;
    ptrs.reserve(points.size());
    for (const auto& p : points) ptrs.push_back(&p);
    std::vector<const std::vector<double>*> support;
    std::size_t max_support = points.empty() ? 0 : points[0].size() + 1;
    return welzl(ptrs, ptrs.size(), support, max_support);
}

} // namespace ph
