#pragma once

#include <cstdint>
#include <vector>

#include "ph/metric.hpp"
#include "ph/simplex.hpp"

namespace ph {

/// Weighted undirected graph; edges carry positive weights, u < v, no
/// duplicates or self-loops.
struct WeightedGraph {
    struct Edge {
        Index u, v;
        double w;
    };
    Index n = 0;
    std::vector<Edge> edges;

    void validate() const;
};

/// Landmark subset of a witness point set, with each witness's distances to
/// the landmarks cached in sorted order.
class LandmarkSet {
public:
    LandmarkSet(const MetricInput& m, std::vector<std::size_t> indices);

    const std::vector<std::size_t>& indices() const { return indices_; }
    std::size_t size() const { return indices_.size(); }

    /// m_nu(s): distance from witness s to its nu-th closest landmark;
    /// m_0(s) = 0. Throws BadNu when nu exceeds the landmark count.
    double m_nu(std::size_t witness, int nu) const;

private:
    std::vector<std::size_t> indices_;
    std::vector<std::vector<double>> sorted_dists_; // per witness, ascending
};

struct RipsOptions {
    Index cap = kDefaultSimplexCap; // refuse larger complexes
};

/// Vietoris–Rips: every clique of the max_scale-neighborhood graph with at
/// most max_dim+1 vertices, at filtration value = diameter (the 2ε axis).
FilteredComplex build_rips(const MetricInput& m, int max_dim, double max_scale,
                           const RipsOptions& opts = {});

/// Čech with values = twice the minimal-enclosing-ball radius, so Čech and
/// VR share the diameter axis.
FilteredComplex build_cech(const MetricInput& m, int max_dim, double max_scale);

/// Weak witness complex on L: each simplex enters at the smallest ε at which
/// some witness is a weak ε-witness for it, monotonized over faces.
FilteredComplex build_weak_witness(const MetricInput& m, const LandmarkSet& l,
                                   int max_dim, double max_scale);

/// Parametrized witness complex W_nu: edge values from the m_nu offsets,
/// higher simplices by the clique rule. nu = 2 is the lazy witness complex.
FilteredComplex build_parametrized_witness(const MetricInput& m, const LandmarkSet& l,
                                           int nu, int max_dim, double max_scale);

/// Greedy maxmin landmark selection; the first pick is seeded.
LandmarkSet maxmin_landmarks(const MetricInput& m, std::size_t count,
                             std::uint64_t seed);

/// Weight rank clique filtration: step t keeps edges of weight >= the t-th
/// largest distinct weight; values are the 1-based step indices.
FilteredComplex build_wrcf(const WeightedGraph& g, int max_dim);

enum class GraphMetricMode { inverse, raw, one_minus };

/// All-pairs shortest paths with edge lengths 1/w, w, or 1-w.
MetricInput graph_to_metric(const WeightedGraph& g, GraphMetricMode mode);

} // namespace ph
