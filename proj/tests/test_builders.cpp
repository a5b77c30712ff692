#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "oracles.hpp"
#include "ph/builders.hpp"
#include "ph/io.hpp"
#include "ph/metric.hpp"
#include "ph/miniball.hpp"
#include "ph/rng.hpp"

using namespace ph;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

MetricInput equilateral() {
    return MetricInput::from_points({{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}});
}

MetricInput random_cloud(std::uint64_t seed, std::size_t n, std::size_t d) {
    SplitMix64 rng(seed);
    std::vector<std::vector<double>> pts(n, std::vector<double>(d));
    for (auto& p : pts)
        for (auto& x : p) x = rng.next_double();
    return MetricInput::from_points(std::move(pts));
}

std::set<Simplex> simplex_set(const FilteredComplex& k) {
    std::set<Simplex> out;
    for (const auto& c : k.cells()) out.insert(c.simplex);
    return out;
}

} // namespace

TEST_CASE("metric input validation") {
    CHECK_THROWS_AS(MetricInput::from_distances(2, {0, 1, 2, 0}), BadParams);
    CHECK_THROWS_AS(MetricInput::from_distances(2, {0.5, 1, 1, 0}), BadParams);
    auto m = MetricInput::from_distances(2, {0, 1, 1, 0});
    CHECK(m.dist(0, 1) == 1);
    CHECK_FALSE(m.has_points());
    auto e = MetricInput::from_points({{0, 0}, {3, 4}});
    CHECK(e.dist(0, 1) == doctest::Approx(5));
    CHECK(e.diameter() == doctest::Approx(5));
}

TEST_CASE("rips on simple configurations") {
    SUBCASE("equilateral triangle") {
        auto k = build_rips(equilateral(), 2, kInf);
        REQUIRE(k.size() == 7);
        CHECK(k.top_dim() == 2);
        CHECK(k.value(k.index_of(Simplex{0, 1, 2})) == doctest::Approx(1));
        for (Index i = 0; i < 3; ++i) CHECK(k.value(i) == 0);
    }
    SUBCASE("edge beyond scale excluded") {
        auto m = MetricInput::from_points({{0.0}, {3.0}});
        auto k = build_rips(m, 1, 2.0);
        CHECK(k.size() == 2);
    }
    SUBCASE("bad scale") {
        CHECK_THROWS_AS(build_rips(equilateral(), 1, 0.0), BadScale);
    }
    SUBCASE("full-scale size is the binomial sum") {
        auto m = random_cloud(4, 9, 3);
        auto k = build_rips(m, 2, kInf);
        CHECK(k.size() == 9 + 36 + 84);
    }
    SUBCASE("cap refused with a clear error") {
        auto m = random_cloud(4, 12, 3);
        CHECK_THROWS_AS(build_rips(m, 3, kInf, {.cap = 100}), ComplexTooLarge);
    }
}

TEST_CASE("rips clique property and value rule") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto m = random_cloud(seed, 10, 2);
        double scale = 0.6;
        auto k = build_rips(m, 3, scale);
        auto present = simplex_set(k);
        for (const auto& c : k.cells()) {
            if (c.simplex.dim() < 1) continue;
            double diam = 0;
            const auto& vs = c.simplex.vertices();
            for (std::size_t a = 0; a < vs.size(); ++a)
                for (std::size_t b = a + 1; b < vs.size(); ++b)
                    diam = std::max(diam, m.dist(static_cast<std::size_t>(vs[a]),
                                                 static_cast<std::size_t>(vs[b])));
            CHECK(c.value == doctest::Approx(diam));
            for (const auto& f : c.simplex.facets()) CHECK(present.count(f));
        }
        // every admissible clique of <= 4 vertices is present
        for (std::size_t a = 0; a < 10; ++a)
            for (std::size_t b = a + 1; b < 10; ++b) {
                if (m.dist(a, b) > scale) continue;
                CHECK(present.count(Simplex{static_cast<VertexId>(a),
                                            static_cast<VertexId>(b)}));
            }
    }
}

TEST_CASE("rips is monotone in max_scale and stable under relabeling") {
    auto m = random_cloud(11, 8, 3);
    auto small = build_rips(m, 2, 0.5);
    auto large = build_rips(m, 2, 0.9);
    auto small_set = simplex_set(small);
    auto large_set = simplex_set(large);
    CHECK(std::includes(large_set.begin(), large_set.end(), small_set.begin(),
                        small_set.end()));
    for (const auto& c : small.cells())
        CHECK(large.value(large.index_of(c.simplex)) == c.value);

    // reversing the point order relabels vertices but keeps the structure
    auto pts = m.points();
    std::reverse(pts.begin(), pts.end());
    auto r = build_rips(MetricInput::from_points(pts), 2, 0.9);
    REQUIRE(r.size() == large.size());
    for (const auto& c : large.cells()) {
        std::vector<VertexId> mapped;
        for (auto v : c.simplex.vertices()) mapped.push_back(7 - v);
        std::sort(mapped.begin(), mapped.end());
        Index idx = r.index_of(Simplex(mapped));
        REQUIRE(idx >= 0);
        CHECK(r.value(idx) == doctest::Approx(c.value));
    }
}

TEST_CASE("minimal enclosing balls") {
    SUBCASE("two points") {
        auto b = min_enclosing_ball({{0, 0}, {2, 0}});
        CHECK(b.radius == doctest::Approx(1));
        CHECK(b.center[0] == doctest::Approx(1));
    }
    SUBCASE("equilateral triangle circumradius") {
        auto b = min_enclosing_ball({{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}});
        CHECK(b.radius == doctest::Approx(1 / std::sqrt(3.0)));
    }
    SUBCASE("obtuse triangle uses the long edge") {
        auto b = min_enclosing_ball({{0, 0}, {4, 0}, {2, 0.1}});
        CHECK(b.radius == doctest::Approx(2));
    }
    SUBCASE("square corners") {
        auto b = min_enclosing_ball({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
        CHECK(b.radius == doctest::Approx(std::sqrt(2.0) / 2));
    }
    SUBCASE("random sets are contained and support-minimal") {
        SplitMix64 rng(3);
        for (int trial = 0; trial < 50; ++trial) {
            std::size_t n = 2 + rng.next_below(7), d = 2 + rng.next_below(4);
            std::vector<std::vector<double>> pts(n, std::vector<double>(d));
            for (auto& p : pts)
                for (auto& x : p) x = rng.next_double();
            auto b = min_enclosing_ball(pts);
            double maxd = 0, diam = 0;
            for (const auto& p : pts) maxd = std::max(maxd, euclidean(p, b.center));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    diam = std::max(diam, euclidean(pts[i], pts[j]));
            CHECK(maxd <= b.radius + 1e-9);
            CHECK(b.radius >= diam / 2 - 1e-9);            // lower bound
            CHECK(b.radius <= diam / std::sqrt(2.0) + 1e-9); // Jung (d >= 2)
        }
    }
}

TEST_CASE("cech values") {
    SUBCASE("equilateral triangle") {
        auto k = build_cech(equilateral(), 2, kInf);
        REQUIRE(k.size() == 7);
        CHECK(k.value(k.index_of(Simplex{0, 1})) == doctest::Approx(1));
        CHECK(k.value(k.index_of(Simplex{0, 1, 2})) ==
              doctest::Approx(2 / std::sqrt(3.0)));
    }
    SUBCASE("pair value is the distance") {
        auto m = MetricInput::from_points({{0, 0}, {0, 1.5}});
        auto k = build_cech(m, 1, kInf);
        CHECK(k.value(k.index_of(Simplex{0, 1})) == doctest::Approx(1.5));
    }
    SUBCASE("unit square tetrahedron") {
        auto m = MetricInput::from_points({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
        auto k = build_cech(m, 3, kInf);
        CHECK(k.value(k.index_of(Simplex{0, 1, 2, 3})) ==
              doctest::Approx(std::sqrt(2.0)));
    }
    SUBCASE("distance matrix rejected") {
        CHECK_THROWS_AS(build_cech(MetricInput::from_distances(2, {0, 1, 1, 0}), 1, 1.0),
                        NeedsCoordinates);
    }
}

TEST_CASE("cech-rips sandwich") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto m = random_cloud(seed + 50, 10, 3);
        double t = 0.7;
        auto cech_t = simplex_set(build_cech(m, 3, t));
        auto rips_t = simplex_set(build_rips(m, 3, t));
        auto cech_up = simplex_set(build_cech(m, 3, std::sqrt(2.0) * t + 1e-9));
        CHECK(std::includes(rips_t.begin(), rips_t.end(), cech_t.begin(), cech_t.end()));
        CHECK(std::includes(cech_up.begin(), cech_up.end(), rips_t.begin(),
                            rips_t.end()));
        // per-simplex: diameter <= cech value <= sqrt(2) * diameter
        auto ck = build_cech(m, 3, kInf);
        auto rk = build_rips(m, 3, kInf);
        for (const auto& c : ck.cells()) {
            double diam = rk.value(rk.index_of(c.simplex));
            CHECK(c.value >= diam - 1e-9);
            CHECK(c.value <= std::sqrt(2.0) * diam + 1e-9);
        }
    }
}

TEST_CASE("weak witness complex") {
    SUBCASE("landmarks witness themselves at zero") {
        auto m = random_cloud(9, 6, 2);
        LandmarkSet l(m, {0, 1, 2, 3, 4, 5});
        auto k = build_weak_witness(m, l, 1, kInf);
        for (Index i = 0; i < 6; ++i) CHECK(k.value(i) == 0);
    }
    SUBCASE("vacuous condition when all landmarks are in the simplex") {
        auto m = MetricInput::from_points({{0.0}, {1.0}, {2.0}, {3.0}});
        LandmarkSet l(m, {0, 3});
        auto k = build_weak_witness(m, l, 1, kInf);
        Index e = k.index_of(Simplex{0, 1});
        REQUIRE(e >= 0); // landmark ordinals 0 and 1
        CHECK(k.value(e) == 0);
    }
    SUBCASE("brute-force witness values") {
        auto m = MetricInput::from_points({{0.0}, {1.0}, {2.0}, {3.0}});
        std::vector<std::size_t> lm{0, 1, 3};
        LandmarkSet l(m, lm);
        auto k = build_weak_witness(m, l, 2, kInf);
        // check every pair against a literal evaluation of the definition
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = a + 1; b < 3; ++b) {
                double best = kInf;
                for (std::size_t s = 0; s < 4; ++s) {
                    double mx = std::max(m.dist(s, lm[a]), m.dist(s, lm[b]));
                    double mn = kInf;
                    for (std::size_t c = 0; c < 3; ++c)
                        if (c != a && c != b) mn = std::min(mn, m.dist(s, lm[c]));
                    best = std::min(best, std::max(0.0, mx - mn));
                }
                Index e = k.index_of(Simplex{static_cast<VertexId>(a),
                                             static_cast<VertexId>(b)});
                REQUIRE(e >= 0);
                CHECK(k.value(e) >= best - 1e-12); // monotonization may raise
            }
    }
    SUBCASE("empty landmark set") {
        auto m = random_cloud(2, 4, 2);
        CHECK_THROWS_AS(LandmarkSet(m, {}), EmptyLandmarks);
    }
}

TEST_CASE("parametrized witness complex") {
    SUBCASE("nu=1 with all landmarks on the equilateral triangle") {
        auto m = equilateral();
        LandmarkSet l(m, {0, 1, 2});
        auto k = build_parametrized_witness(m, l, 1, 2, kInf);
        // m_1(s) = 0 for every witness (its own landmark), so edges get 1
        for (const auto& c : k.cells())
            if (c.simplex.dim() == 1) CHECK(c.value == doctest::Approx(1));
    }
    SUBCASE("nu=2 equals the literal lazy-witness rule") {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            auto m = random_cloud(seed + 200, 8, 2);
            std::vector<std::size_t> lm{0, 2, 4, 6};
            LandmarkSet l(m, lm);
            auto k = build_parametrized_witness(m, l, 2, 2, kInf);
            for (std::size_t a = 0; a < 4; ++a)
                for (std::size_t b = a + 1; b < 4; ++b) {
                    double best = kInf;
                    for (std::size_t s = 0; s < 8; ++s) {
                        // m_2(s): distance to the second-closest landmark
                        std::vector<double> ds;
                        for (auto li : lm) ds.push_back(m.dist(s, li));
                        std::sort(ds.begin(), ds.end());
                        double mx = std::max(m.dist(s, lm[a]), m.dist(s, lm[b]));
                        best = std::min(best, std::max(0.0, mx - ds[1]));
                    }
                    Index e = k.index_of(Simplex{static_cast<VertexId>(a),
                                                 static_cast<VertexId>(b)});
                    REQUIRE(e >= 0);
                    CHECK(k.value(e) == doctest::Approx(best));
                }
        }
    }
    SUBCASE("nu=0 interleaves with rips") {
        auto m = random_cloud(31, 10, 2);
        std::vector<std::size_t> all{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
        LandmarkSet l(m, all);
        // W_0 at eps contains sigma iff every edge has min-over-s max(d) <= eps;
        // VR at 2 eps contains sigma iff every edge has d <= 2 eps
        for (double eps : {0.2, 0.4, 0.6}) {
            auto w0 = build_parametrized_witness(m, l, 0, 2, eps);
            auto vr = build_rips(m, 2, 2 * eps);
            auto w0_up = build_parametrized_witness(m, l, 0, 2, 2 * eps);
            auto sw = simplex_set(w0), sv = simplex_set(vr), su = simplex_set(w0_up);
            CHECK(std::includes(sv.begin(), sv.end(), sw.begin(), sw.end()));
            CHECK(std::includes(su.begin(), su.end(), sv.begin(), sv.end()));
        }
    }
    SUBCASE("nu too large") {
        auto m = random_cloud(5, 5, 2);
        LandmarkSet l(m, {0, 1});
        CHECK_THROWS_AS(build_parametrized_witness(m, l, 3, 1, kInf), BadNu);
    }
}

TEST_CASE("maxmin landmark selection") {
    std::vector<std::vector<double>> line;
    for (int i = 0; i < 10; ++i) line.push_back({static_cast<double>(i)});
    auto m = MetricInput::from_points(line);
    SUBCASE("count = n selects everything") {
        auto l = maxmin_landmarks(m, 10, 42);
        std::set<std::size_t> got(l.indices().begin(), l.indices().end());
        CHECK(got.size() == 10);
    }
    SUBCASE("second pick is the farthest point") {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            auto l = maxmin_landmarks(m, 2, seed);
            std::size_t first = l.indices()[0], second = l.indices()[1];
            std::size_t expect = first < 5 ? 9 : 0;
            CHECK(second == expect);
        }
    }
    SUBCASE("count=1 and determinism") {
        auto a = maxmin_landmarks(m, 1, 7);
        auto b = maxmin_landmarks(m, 1, 7);
        CHECK(a.indices() == b.indices());
        CHECK(a.indices().size() == 1);
    }
    SUBCASE("bad count") {
        CHECK_THROWS_AS(maxmin_landmarks(m, 0, 1), BadCount);
        CHECK_THROWS_AS(maxmin_landmarks(m, 11, 1), BadCount);
    }
}

TEST_CASE("weight rank clique filtration") {
    SUBCASE("triangle with distinct weights") {
        WeightedGraph g{3, {{0, 1, 3}, {0, 2, 2}, {1, 2, 1}}};
        auto k = build_wrcf(g, 2);
        CHECK(k.value(k.index_of(Simplex{0, 1})) == 1);
        CHECK(k.value(k.index_of(Simplex{0, 2})) == 2);
        CHECK(k.value(k.index_of(Simplex{1, 2})) == 3);
        CHECK(k.value(k.index_of(Simplex{0, 1, 2})) == 3);
        for (Index i = 0; i < 3; ++i)
            if (k.dim(i) == 0) CHECK(k.value(i) == 1);
    }
    SUBCASE("equal weights collapse to one step") {
        WeightedGraph g{3, {{0, 1, 5}, {0, 2, 5}, {1, 2, 5}}};
        auto k = build_wrcf(g, 2);
        for (Index i = 0; i < k.size(); ++i) CHECK(k.value(i) == 1);
        CHECK(k.size() == 7);
    }
    SUBCASE("star graph has no higher simplices") {
        WeightedGraph g{4, {{0, 1, 3}, {0, 2, 2}, {0, 3, 1}}};
        auto k = build_wrcf(g, 3);
        CHECK(k.top_dim() == 1);
    }
    SUBCASE("empty graph") {
        WeightedGraph g{3, {}};
        CHECK_THROWS_AS(build_wrcf(g, 1), EmptyGraph);
    }
}

TEST_CASE("graph to metric") {
    SUBCASE("path graph raw") {
        WeightedGraph g{3, {{0, 1, 1}, {1, 2, 1}}};
        auto m = graph_to_metric(g, GraphMetricMode::raw);
        CHECK(m.dist(0, 2) == doctest::Approx(2));
    }
    SUBCASE("inverse weights route through the heavy edges") {
        WeightedGraph g{3, {{0, 1, 4}, {1, 2, 4}, {0, 2, 1}}};
        auto m = graph_to_metric(g, GraphMetricMode::inverse);
        CHECK(m.dist(0, 2) == doctest::Approx(0.5));
    }
    SUBCASE("one_minus at weight 1 contributes zero") {
        WeightedGraph g{2, {{0, 1, 1}}};
        auto m = graph_to_metric(g, GraphMetricMode::one_minus);
        CHECK(m.dist(0, 1) == 0);
    }
    SUBCASE("disconnected graphs are rejected") {
        WeightedGraph g{4, {{0, 1, 1}, {2, 3, 1}}};
        CHECK_THROWS_AS(graph_to_metric(g, GraphMetricMode::raw), Disconnected);
    }
    SUBCASE("triangle inequality on random graphs") {
        SplitMix64 rng(13);
        for (int trial = 0; trial < 10; ++trial) {
            WeightedGraph g;
            g.n = 8;
            for (Index u = 0; u < 8; ++u)
                for (Index v = u + 1; v < 8; ++v)
                    if (rng.next_below(3) != 0)
                        g.edges.push_back({u, v, 0.1 + rng.next_double()});
            if (g.edges.empty()) continue;
            MetricInput m = [&] {
                try {
                    return graph_to_metric(g, GraphMetricMode::inverse);
                } catch (const Disconnected&) {
                    return MetricInput::from_distances(1, {0});
                }
            }();
            for (std::size_t a = 0; a < m.size(); ++a)
                for (std::size_t b = 0; b < m.size(); ++b)
                    for (std::size_t c = 0; c < m.size(); ++c)
                        CHECK(m.dist(a, c) <= m.dist(a, b) + m.dist(b, c) + 1e-9);
        }
    }
}

TEST_CASE("graph validation") {
    CHECK_THROWS_AS(WeightedGraph({2, {{0, 0, 1}}}).validate(), BadParams);
    CHECK_THROWS_AS(WeightedGraph({2, {{0, 1, 0}}}).validate(), BadParams);
    CHECK_THROWS_AS(WeightedGraph({2, {{0, 1, 1}, {0, 1, 2}}}).validate(), BadParams);
}
