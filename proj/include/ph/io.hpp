#pragma once

#include <iosfwd>
#include <vector>

#include "ph/builders.hpp"
#include "ph/metric.hpp"

namespace ph {

/// Point cloud: one point per line, whitespace-separated reals, `#` comments.
std::vector<std::vector<double>> read_point_cloud(std::istream& in);
void write_point_cloud(std::ostream& out, const std::vector<std::vector<double>>& pts);

/// Distance matrix: n lines of n reals (full symmetric).
MetricInput read_distance_matrix(std::istream& in);
void write_distance_matrix(std::ostream& out, const MetricInput& m);

/// Edge list: `u v w` per line, 0-indexed vertices.
WeightedGraph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const WeightedGraph& g);

} // namespace ph
