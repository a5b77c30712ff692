#pragma once

#include <cstdint>
#include <vector>

#include "ph/builders.hpp"
#include "ph/errors.hpp"

namespace ph {

using PointCloud = std::vector<std::vector<double>>;

enum class KleinMode { grid, random };

/// Points on the Klein bottle's figure-8 immersion in R^3, tube parameter
/// a = 2. Grid mode samples (u, v) on a uniform sqrt(n) x sqrt(n) lattice
/// over [0, 2pi)^2 and requires n to be a perfect square.
PointCloud generate_klein(std::size_t n, KleinMode mode, std::uint64_t seed);

/// The immersion itself, for residual checks.
std::vector<double> klein_point(double u, double v);

/// N points uniform in [0,1)^d; exactly N*d PRNG draws in row-major order.
PointCloud generate_uniform(std::size_t n, std::size_t d, std::uint64_t seed);

enum class VicsekInit { constant, random };

struct VicsekParams {
    double l;           // box side
    double v0;          // speed
    std::size_t n;      // particle count
    double eta;         // noise width, radians
    std::size_t t;      // step count
    double r = 1.0;     // interaction radius
    VicsekInit init = VicsekInit::random;
    double theta0 = 0.0; // initial angle for constant init

    void validate() const;
};

/// Standard Vicsek update: each angle moves to the circular mean over
/// neighbors within radius r (including self) plus uniform noise in
/// [-eta/2, eta/2]; positions advance by v0*(cos, sin) with periodic wrap.
/// Emits one (x, y, theta) cloud per requested frame index.
std::vector<PointCloud> generate_vicsek(const VicsekParams& p, std::uint64_t seed,
                                        const std::vector<std::size_t>& frames);

enum class FractalWeighting { unit, random, linear };

struct FractalParams {
    unsigned b;
    unsigned n; // n >= b
    unsigned k; // k >= 2
    FractalWeighting weighting = FractalWeighting::unit;

    void validate() const;
};

/// Fractal network: start from the complete graph on 2^b nodes, double n-b
/// times; doubling step j adds round(2^(2(b+j-1)) * k^-j) inter-copy edges
/// chosen uniformly without replacement.
WeightedGraph generate_fractal(const FractalParams& p, std::uint64_t seed);

} // namespace ph
