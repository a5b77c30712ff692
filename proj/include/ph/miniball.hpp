#pragma once

#include <vector>

namespace ph {

struct Ball {
    std::vector<double> center;
    double radius = 0.0;

    bool contains(const std::vector<double>& p, double slack = 1e-10) const;
};

/// Exact minimal enclosing ball by Welzl's move-to-front algorithm. Intended
/// for the small vertex sets of individual simplices.
Ball min_enclosing_ball(std::vector<std::vector<double>> points);

} // namespace ph
