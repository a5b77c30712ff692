#include "ph/builders.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <sstream>

#include "ph/miniball.hpp"
#include "ph/rng.hpp"

namespace ph {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Expands cliques over a graph given as sorted higher-index adjacency lists.
// Each clique's value is the max over its edge values.
template <class EdgeValFn, class EmitFn>
void clique_rec(const std::vector<std::vector<Index>>& nbr_higher, EdgeValFn edge_value,
                int max_size, std::vector<Index>& clique, double value,
                const std::vector<Index>& cand, EmitFn emit) {
    for (std::size_t ci = 0; ci < cand.size(); ++ci) {
        Index v = cand[ci];
        double ext = value;
        for (Index u : clique) ext = std::max(ext, edge_value(u, v));
        clique.push_back(v);
        emit(clique, ext);
        if (static_cast<int>(clique.size()) < max_size) {
            std::vector<Index> next_cand;
            std::set_intersection(cand.begin() + static_cast<std::ptrdiff_t>(ci) + 1,
                                  cand.end(), nbr_higher[static_cast<std::size_t>(v)].begin(),
                                  nbr_higher[static_cast<std::size_t>(v)].end(),
                                  std::back_inserter(next_cand));
            if (!next_cand.empty())
                clique_rec(nbr_higher, edge_value, max_size, clique, ext, next_cand, emit);
        }
        clique.pop_back();
    }
}

// Full clique complex of a weighted graph, vertices at vertex_value.
template <class EdgeValFn>
std::vector<FilteredSimplex> clique_complex(Index n,
                                            const std::vector<std::vector<Index>>& nbr_higher,
                                            EdgeValFn edge_value, int max_dim,
                                            double vertex_value, Index cap) {
    std::vector<FilteredSimplex> cells;
    auto emit = [&](const std::vector<Index>& clique, double value) {
        if (static_cast<Index>(cells.size()) >= cap)
            throw ComplexTooLarge("clique complex exceeds the simplex cap of " +
                                  std::to_string(cap));
        Simplex::Storage vs(clique.begin(), clique.end());
        cells.push_back({Simplex(std::move(vs)), value});
    };
    std::vector<Index> clique;
    for (Index v = 0; v < n; ++v) {
        emit({v}, vertex_value);
        clique.assign(1, v);
        if (max_dim >= 1)
            clique_rec(nbr_higher, edge_value, max_dim + 1, clique, vertex_value,
                       nbr_higher[static_cast<std::size_t>(v)], emit);
    }
    return cells;
}

FilteredComplex sort_into_complex(std::vector<FilteredSimplex> cells) {
    std::sort(cells.begin(), cells.end(), [](const FilteredSimplex& a, const FilteredSimplex& b) {
        if (a.value != b.value) return a.value < b.value;
        if (a.simplex.dim() != b.simplex.dim()) return a.simplex.dim() < b.simplex.dim();
        return a.simplex < b.simplex;
    });
    return FilteredComplex(std::move(cells), FilteredComplex::Unchecked{});
}

} // namespace

void WeightedGraph::validate() const {
    if (n <= 0) throw EmptyGraph("graph has no nodes");
    std::map<std::pair<Index, Index>, bool> seen;
    for (const auto& e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
            throw BadParams("edge endpoint out of range");
        if (e.u == e.v) throw BadParams("self-loop");
        if (e.u > e.v) throw BadParams("edges must satisfy u < v");
        if (!(e.w > 0) || !std::isfinite(e.w)) throw BadParams("edge weight must be positive");
        if (!seen.emplace(std::make_pair(e.u, e.v), true).second)
            throw BadParams("duplicate edge");
    }
}

FilteredComplex build_rips(const MetricInput& m, int max_dim, double max_scale,
                           const RipsOptions& opts) {
    if (max_dim < 0) throw BadParams("max_dim must be >= 0");
    if (!(max_scale > 0)) throw BadScale("max_scale must be positive");
    Index n = static_cast<Index>(m.size());
    std::vector<std::vector<Index>> nbr(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j)
            if (m.dist(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) <= max_scale)
                nbr[static_cast<std::size_t>(i)].push_back(j);
    auto edge_value = [&m](Index u, Index v) {
        return m.dist(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    };
    return sort_into_complex(clique_complex(n, nbr, edge_value, max_dim, 0.0, opts.cap));
}

FilteredComplex build_cech(const MetricInput& m, int max_dim, double max_scale) {
    if (!m.has_points())
        throw NeedsCoordinates("Cech complex needs Euclidean coordinates");
    if (max_dim < 0) throw BadParams("max_dim must be >= 0");
    if (!(max_scale > 0)) throw BadScale("max_scale must be positive");
    Index n = static_cast<Index>(m.size());
    // Cech value >= diameter, so the max_scale neighborhood graph carries
    // every candidate clique.
    std::vector<std::vector<Index>> nbr(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j)
            if (m.dist(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) <= max_scale)
                nbr[static_cast<std::size_t>(i)].push_back(j);

    std::vector<FilteredSimplex> cells;
    auto emit = [&](const std::vector<Index>& clique, double) {
        std::vector<std::vector<double>> pts;
        pts.reserve(clique.size());
        for (Index v : clique) pts.push_back(m.points()[static_cast<std::size_t>(v)]);
        double value = clique.size() == 1 ? 0.0 : 2.0 * min_enclosing_ball(std::move(pts)).radius;
        if (value > max_scale) return;
        Simplex::Storage vs(clique.begin(), clique.end());
        cells.push_back({Simplex(std::move(vs)), value});
    };
    auto edge_value = [&m](Index u, Index v) {
        return m.dist(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    };
    std::vector<Index> clique;
    for (Index v = 0; v < n; ++v) {
        emit({v}, 0.0);
        clique.assign(1, v);
        if (max_dim >= 1)
            clique_rec(nbr, edge_value, max_dim + 1, clique, 0.0,
                       nbr[static_cast<std::size_t>(v)], emit);
    }
    return sort_into_complex(std::move(cells));
}

LandmarkSet::LandmarkSet(const MetricInput& m, std::vector<std::size_t> indices)
    : indices_(std::move(indices)) {
    if (indices_.empty()) throw EmptyLandmarks("landmark set is empty");
    std::vector<std::size_t> sorted = indices_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw BadParams("duplicate landmark index");
    for (std::size_t i : indices_)
        if (i >= m.size()) throw BadParams("landmark index out of range");
    for (std::size_t a = 0; a < indices_.size(); ++a)
        for (std::size_t b = a + 1; b < indices_.size(); ++b)
            if (m.dist(indices_[a], indices_[b]) == 0.0)
                throw BadParams("landmarks must be pairwise distinct points");
    sorted_dists_.resize(m.size());
    for (std::size_t s = 0; s < m.size(); ++s) {
        auto& row = sorted_dists_[s];
        row.reserve(indices_.size());
        for (std::size_t l : indices_) row.push_back(m.dist(s, l));
        std::sort(row.begin(), row.end());
    }
}

double LandmarkSet::m_nu(std::size_t witness, int nu) const {
    if (nu == 0) return 0.0;
    if (nu < 0 || static_cast<std::size_t>(nu) > indices_.size())
        throw BadNu("m_nu needs " + std::to_string(nu) + " landmarks, have " +
                    std::to_string(indices_.size()));
    return sorted_dists_[witness][static_cast<std::size_t>(nu) - 1];
}

FilteredComplex build_weak_witness(const MetricInput& m, const LandmarkSet& l,
                                   int max_dim, double max_scale) {
    if (max_dim < 0) throw BadParams("max_dim must be >= 0");
    std::size_t nl = l.size();
    std::size_t nw = m.size();
    // d(witness, landmark), indexed by landmark ordinal.
    std::vector<std::vector<double>> wd(nw, std::vector<double>(nl));
    for (std::size_t s = 0; s < nw; ++s)
        for (std::size_t a = 0; a < nl; ++a) wd[s][a] = m.dist(s, l.indices()[a]);

    // Smallest eps at which some witness certifies the subset sigma.
    auto raw_value = [&](const std::vector<std::size_t>& sigma) {
        std::vector<char> in_sigma(nl, 0);
        for (std::size_t a : sigma) in_sigma[a] = 1;
        double best = kInf;
        for (std::size_t s = 0; s < nw; ++s) {
            double a_max = 0;
            for (std::size_t a : sigma) a_max = std::max(a_max, wd[s][a]);
            double b_min = kInf;
            for (std::size_t b = 0; b < nl; ++b)
                if (!in_sigma[b]) b_min = std::min(b_min, wd[s][b]);
            double eps = b_min == kInf ? 0.0 : std::max(0.0, a_max - b_min);
            best = std::min(best, eps);
        }
        return best;
    };

    // Collect raw values for all subsets, then monotonize size by size so
    // every face carries its final value before its cofaces are raised.
    std::map<std::vector<std::size_t>, double> values;
    std::vector<std::size_t> sigma;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        for (std::size_t a = start; a < nl; ++a) {
            sigma.push_back(a);
            values[sigma] = raw_value(sigma);
            if (static_cast<int>(sigma.size()) <= max_dim) self(self, a + 1);
            sigma.pop_back();
        }
    };
    rec(rec, 0);
    for (std::size_t sz = 2; sz <= static_cast<std::size_t>(max_dim) + 1; ++sz) {
        for (auto& [verts, v] : values) {
            if (verts.size() != sz) continue;
            for (std::size_t skip = 0; skip < sz; ++skip) {
                std::vector<std::size_t> face;
                for (std::size_t i = 0; i < sz; ++i)
                    if (i != skip) face.push_back(verts[i]);
                v = std::max(v, values.at(face));
            }
        }
    }

    std::vector<FilteredSimplex> cells;
    for (const auto& [verts, v] : values) {
        if (v > max_scale) continue;
        Simplex::Storage vs;
        for (std::size_t a : verts) vs.push_back(static_cast<VertexId>(a));
        cells.push_back({Simplex(std::move(vs)), v});
    }
    return sort_into_complex(std::move(cells));
}

FilteredComplex build_parametrized_witness(const MetricInput& m, const LandmarkSet& l,
                                           int nu, int max_dim, double max_scale) {
    if (max_dim < 0) throw BadParams("max_dim must be >= 0");
    if (nu < 0) throw BadNu("nu must be >= 0");
    if (static_cast<std::size_t>(nu) > l.size())
        throw BadNu("nu exceeds the landmark count");
    std::size_t nl = l.size();
    std::size_t nw = m.size();

    std::vector<double> edge_val(nl * nl, kInf);
    for (std::size_t a = 0; a < nl; ++a)
        for (std::size_t b = a + 1; b < nl; ++b) {
            double best = kInf;
            for (std::size_t s = 0; s < nw; ++s) {
                double reach = std::max(m.dist(s, l.indices()[a]), m.dist(s, l.indices()[b]));
                best = std::min(best, std::max(0.0, reach - l.m_nu(s, nu)));
            }
            edge_val[a * nl + b] = edge_val[b * nl + a] = best;
        }

    Index n = static_cast<Index>(nl);
    std::vector<std::vector<Index>> nbr(nl);
    for (Index a = 0; a < n; ++a)
        for (Index b = a + 1; b < n; ++b)
            if (edge_val[static_cast<std::size_t>(a) * nl + static_cast<std::size_t>(b)] <= max_scale)
                nbr[static_cast<std::size_t>(a)].push_back(b);
    auto ev = [&](Index u, Index v) {
        return edge_val[static_cast<std::size_t>(u) * nl + static_cast<std::size_t>(v)];
    };
    return sort_into_complex(clique_complex(n, nbr, ev, max_dim, 0.0, kDefaultSimplexCap));
}

LandmarkSet maxmin_landmarks(const MetricInput& m, std::size_t count, std::uint64_t seed) {
    if (count < 1 || count > m.size()) throw BadCount("landmark count out of range");
    SplitMix64 rng(seed);
    std::vector<std::size_t> picks;
    picks.push_back(static_cast<std::size_t>(rng.next_below(m.size())));
    std::vector<double> min_dist(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) min_dist[i] = m.dist(i, picks[0]);
    while (picks.size() < count) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < m.size(); ++i)
            if (min_dist[i] > min_dist[best]) best = i;
        picks.push_back(best);
        for (std::size_t i = 0; i < m.size(); ++i)
            min_dist[i] = std::min(min_dist[i], m.dist(i, best));
    }
    return LandmarkSet(m, std::move(picks));
}

FilteredComplex build_wrcf(const WeightedGraph& g, int max_dim) {
    g.validate();
    if (g.edges.empty()) throw EmptyGraph("graph has no edges");
    if (max_dim < 0) throw BadParams("max_dim must be >= 0");

    std::vector<double> weights;
    weights.reserve(g.edges.size());
    for (const auto& e : g.edges) weights.push_back(e.w);
    std::sort(weights.begin(), weights.end(), std::greater<>());
    weights.erase(std::unique(weights.begin(), weights.end()), weights.end());
    auto step_of = [&](double w) {
        auto it = std::lower_bound(weights.begin(), weights.end(), w, std::greater<>());
        return static_cast<double>(it - weights.begin()) + 1.0;
    };

    std::vector<double> edge_step(static_cast<std::size_t>(g.n) * static_cast<std::size_t>(g.n),
                                  kInf);
    std::vector<std::vector<Index>> nbr(static_cast<std::size_t>(g.n));
    for (const auto& e : g.edges) {
        double t = step_of(e.w);
        edge_step[static_cast<std::size_t>(e.u) * static_cast<std::size_t>(g.n) +
                  static_cast<std::size_t>(e.v)] = t;
        edge_step[static_cast<std::size_t>(e.v) * static_cast<std::size_t>(g.n) +
                  static_cast<std::size_t>(e.u)] = t;
        nbr[static_cast<std::size_t>(e.u)].push_back(e.v);
    }
    for (auto& a : nbr) std::sort(a.begin(), a.end());
    auto ev = [&](Index u, Index v) {
        return edge_step[static_cast<std::size_t>(u) * static_cast<std::size_t>(g.n) +
                         static_cast<std::size_t>(v)];
    };
    // Nodes belong to every subnetwork, so vertices enter at the first step.
    return sort_into_complex(clique_complex(g.n, nbr, ev, max_dim, 1.0, kDefaultSimplexCap));
}

MetricInput graph_to_metric(const WeightedGraph& g, GraphMetricMode mode) {
    g.validate();
    std::size_t n = static_cast<std::size_t>(g.n);
    auto length = [&](double w) {
        switch (mode) {
        case GraphMetricMode::inverse: return 1.0 / w;
        case GraphMetricMode::raw: return w;
        case GraphMetricMode::one_minus:
            if (w > 1.0) throw BadParams("one_minus mode needs weights <= 1");
            return 1.0 - w;
        }
        throw BadParams("unknown mode");
    };
    std::vector<std::vector<std::pair<std::size_t, double>>> adj(n);
    for (const auto& e : g.edges) {
        double len = length(e.w);
        adj[static_cast<std::size_t>(e.u)].emplace_back(static_cast<std::size_t>(e.v), len);
        adj[static_cast<std::size_t>(e.v)].emplace_back(static_cast<std::size_t>(e.u), len);
    }

    std::vector<double> dist(n * n, kInf);
    for (std::size_t src = 0; src < n; ++src) {
        std::vector<double> d(n, kInf);
        d[src] = 0;
        using QE = std::pair<double, std::size_t>;
        std::priority_queue<QE, std::vector<QE>, std::greater<>> q;
        q.emplace(0.0, src);
        while (!q.empty()) {
            auto [du, u] = q.top();
            q.pop();
            if (du > d[u]) continue;
            for (auto [v, len] : adj[u])
                if (du + len < d[v]) {
                    d[v] = du + len;
                    q.emplace(d[v], v);
                }
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (d[j] == kInf) {
                std::ostringstream msg;
                msg << "graph is disconnected; node " << j
                    << " is unreachable from node " << src;
                throw Disconnected(msg.str());
            }
            dist[src * n + j] = d[j];
        }
    }
    return MetricInput::from_distances(n, std::move(dist));
}

} // namespace ph
