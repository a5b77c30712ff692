#pragma once

#include <cstddef>
#include <vector>

#include "ph/errors.hpp"

namespace ph {

/// A finite metric space: either a Euclidean point cloud or a bare symmetric
/// distance matrix. The matrix form is always materialized.
class MetricInput {
public:
    static MetricInput from_points(std::vector<std::vector<double>> points);
    static MetricInput from_distances(std::size_t n, std::vector<double> dist);

    std::size_t size() const { return n_; }
    double dist(std::size_t i, std::size_t j) const { return dist_[i * n_ + j]; }
    bool has_points() const { return !points_.empty(); }
    const std::vector<std::vector<double>>& points() const { return points_; }
    std::size_t ambient_dim() const { return points_.empty() ? 0 : points_[0].size(); }

    /// Largest pairwise distance.
    double diameter() const;

private:
    MetricInput() = default;
    std::size_t n_ = 0;
    std::vector<std::vector<double>> points_;
    std::vector<double> dist_; // row-major n x n
};

double euclidean(const std::vector<double>& a, const std::vector<double>& b);

} // namespace ph
