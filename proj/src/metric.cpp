#include "ph/metric.hpp"

#include <cmath>

namespace ph {

double euclidean(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

MetricInput MetricInput::from_points(std::vector<std::vector<double>> points) {
    if (points.empty()) throw BadParams("empty point cloud");
    std::size_t d = points[0].size();
    for (const auto& p : points) {
        if (p.size() != d) throw BadParams("points of mixed dimension");
        for (double x : p)
            if (!std::isfinite(x)) throw BadParams("non-finite coordinate");
    }
    MetricInput m;
    m.n_ = points.size();
    m.points_ = std::move(points);
    m.dist_.assign(m.n_ * m.n_, 0.0);
    for (std::size_t i = 0; i < m.n_; ++i)
        for (std::size_t j = i + 1; j < m.n_; ++j) {
            double d_ij = euclidean(m.points_[i], m.points_[j]);
            m.dist_[i * m.n_ + j] = d_ij;
            m.dist_[j * m.n_ + i] = d_ij;
        }
    return m;
}

MetricInput MetricInput::from_distances(std::size_t n, std::vector<double> dist) {
    if (n == 0) throw BadParams("empty metric space");
    if (dist.size() != n * n) throw BadParams("distance matrix size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (dist[i * n + i] != 0.0)
            throw BadParams("distance matrix diagonal must be zero");
        for (std::size_t j = 0; j < n; ++j) {
            double d = dist[i * n + j];
            if (!std::isfinite(d) || d < 0)
                throw BadParams("distances must be finite and non-negative");
            if (std::abs(d - dist[j * n + i]) > 1e-12)
                throw BadParams("distance matrix not symmetric");
        }
    }
    // Re-symmetrize exactly so downstream max/min scans are order-free.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            dist[j * n + i] = dist[i * n + j];
    MetricInput m;
    m.n_ = n;
    m.dist_ = std::move(dist);
    return m;
}

double MetricInput::diameter() const {
    double d = 0;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j) d = std::max(d, dist(i, j));
    return d;
}

} // namespace ph
