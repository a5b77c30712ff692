#include "ph/datasets.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <unordered_set>

#include "ph/rng.hpp"

namespace ph {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

std::vector<double> klein_point(double u, double v) {
    constexpr double a = 2.0;
    double f = a + std::cos(u / 2) * std::sin(v) - std::sin(u / 2) * std::sin(2 * v);
    return {f * std::cos(u), f * std::sin(u),
            std::sin(u / 2) * std::sin(v) + std::cos(u / 2) * std::sin(2 * v)};
}

PointCloud generate_klein(std::size_t n, KleinMode mode, std::uint64_t seed) {
    if (n < 1) throw BadCount("need at least one point");
    PointCloud out;
    out.reserve(n);
    if (mode == KleinMode::grid) {
        auto g = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
        if (g * g != n) throw BadCount("grid sampling needs a perfect-square count");
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = 0; j < g; ++j)
                out.push_back(klein_point(kTwoPi * static_cast<double>(i) / static_cast<double>(g),
                                          kTwoPi * static_cast<double>(j) / static_cast<double>(g)));
    } else {
        SplitMix64 rng(seed);
        for (std::size_t i = 0; i < n; ++i) {
            double u = kTwoPi * rng.next_double();
            double v = kTwoPi * rng.next_double();
            out.push_back(klein_point(u, v));
        }
    }
    return out;
}

PointCloud generate_uniform(std::size_t n, std::size_t d, std::uint64_t seed) {
    if (n < 1 || d < 1) throw BadCount("need positive count and dimension");
    SplitMix64 rng(seed);
    PointCloud out(n, std::vector<double>(d));
    for (auto& p : out)
        for (auto& x : p) x = rng.next_double();
    return out;
}

void VicsekParams::validate() const {
    if (l <= 0 || v0 <= 0 || n == 0 || t == 0 || r <= 0 || eta < 0)
        throw BadParams("Vicsek parameters must be positive (noise may be zero)");
}

std::vector<PointCloud> generate_vicsek(const VicsekParams& p, std::uint64_t seed,
                                        const std::vector<std::size_t>& frames) {
    p.validate();
    for (std::size_t f : frames)
        if (f > p.t) throw BadFrame("frame index exceeds step count");

    SplitMix64 rng(seed);
    std::vector<double> x(p.n), y(p.n), theta(p.n);
    for (std::size_t i = 0; i < p.n; ++i) {
        x[i] = p.l * rng.next_double();
        y[i] = p.l * rng.next_double();
        theta[i] = p.init == VicsekInit::constant ? p.theta0 : kTwoPi * rng.next_double();
    }

    auto wrap = [&](double v) {
        v = std::fmod(v, p.l);
        return v < 0 ? v + p.l : v;
    };
    // shortest displacement on the torus
    auto delta = [&](double a, double b) {
        double d = std::abs(a - b);
        return std::min(d, p.l - d);
    };

    auto snapshot = [&] {
        PointCloud cloud(p.n);
        for (std::size_t i = 0; i < p.n; ++i) cloud[i] = {x[i], y[i], theta[i]};
        return cloud;
    };

    std::vector<PointCloud> states(p.t + 1);
    states[0] = snapshot();
    std::vector<double> next_theta(p.n);
    double r2 = p.r * p.r;
    for (std::size_t step = 1; step <= p.t; ++step) {
        for (std::size_t i = 0; i < p.n; ++i) {
            double s = 0, c = 0;
            for (std::size_t j = 0; j < p.n; ++j) {
                double dx = delta(x[i], x[j]);
                double dy = delta(y[i], y[j]);
                if (dx * dx + dy * dy <= r2) {
                    s += std::sin(theta[j]);
                    c += std::cos(theta[j]);
                }
            }
            double noise = p.eta == 0 ? 0.0 : p.eta * (rng.next_double() - 0.5);
            next_theta[i] = std::atan2(s, c) + noise;
        }
        theta = next_theta;
        for (std::size_t i = 0; i < p.n; ++i) {
            x[i] = wrap(x[i] + p.v0 * std::cos(theta[i]));
            y[i] = wrap(y[i] + p.v0 * std::sin(theta[i]));
        }
        states[step] = snapshot();
    }

    std::vector<PointCloud> out;
    out.reserve(frames.size());
    for (std::size_t f : frames) out.push_back(states[f]);
    return out;
}

void FractalParams::validate() const {
    if (b == 0 || k < 2 || n < b) throw BadParams("need b >= 1, k >= 2, n >= b");
}

WeightedGraph generate_fractal(const FractalParams& p, std::uint64_t seed) {
    p.validate();
    SplitMix64 rng(seed);
    WeightedGraph g;
    g.n = Index{1} << p.b;
    for (Index u = 0; u < g.n; ++u)
        for (Index v = u + 1; v < g.n; ++v) g.edges.push_back({u, v, 1.0});

    for (unsigned j = 1; j <= p.n - p.b; ++j) {
        Index s = g.n;
        std::size_t old_count = g.edges.size();
        for (std::size_t e = 0; e < old_count; ++e)
            g.edges.push_back({g.edges[e].u + s, g.edges[e].v + s, 1.0});

        double want = std::ldexp(1.0, static_cast<int>(2 * (p.b + j - 1))) /
                      std::pow(static_cast<double>(p.k), static_cast<double>(j));
        auto count = static_cast<std::uint64_t>(std::llround(want));
        // count <= s*s / k <= s*s / 2, so rejection sampling terminates fast
        std::unordered_set<std::uint64_t> chosen;
        std::vector<std::uint64_t> picks;
        picks.reserve(count);
        auto pairs = static_cast<std::uint64_t>(s) * static_cast<std::uint64_t>(s);
        while (picks.size() < count) {
            std::uint64_t r = rng.next_below(pairs);
            if (chosen.insert(r).second) picks.push_back(r);
        }
        std::sort(picks.begin(), picks.end());
        for (std::uint64_t r : picks)
            g.edges.push_back({static_cast<Index>(r / static_cast<std::uint64_t>(s)),
                               s + static_cast<Index>(r % static_cast<std::uint64_t>(s)), 1.0});
        g.n = 2 * s;
    }

    if (p.weighting == FractalWeighting::random) {
        for (auto& e : g.edges) e.w = 1.0 - rng.next_double(); // uniform (0,1]
    } else if (p.weighting == FractalWeighting::linear) {
        std::vector<double> degree(static_cast<std::size_t>(g.n), 0.0);
        for (const auto& e : g.edges) {
            degree[static_cast<std::size_t>(e.u)] += 1;
            degree[static_cast<std::size_t>(e.v)] += 1;
        }
        for (auto& e : g.edges)
            e.w = degree[static_cast<std::size_t>(e.u)] *
                  degree[static_cast<std::size_t>(e.v)] * (1.0 - rng.next_double());
    }
    g.validate();
    return g;
}

} // namespace ph
