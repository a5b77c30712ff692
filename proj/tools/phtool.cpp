// phtool: command-line front end for the persistent-homology engine.
// Pipeline: generate -> build -> reduce -> barcode -> distance/plot; `bench`
// runs a configured suite and writes a CSV report.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <sys/resource.h>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ph/builders.hpp"
#include "ph/cubical.hpp"
#include "ph/datasets.hpp"
#include "ph/diagrams.hpp"
#include "ph/io.hpp"
#include "ph/reduction.hpp"
#include "ph/simplex.hpp"

namespace {

using nlohmann::json;

constexpr double kInf = std::numeric_limits<double>::infinity();

std::ifstream open_in(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ph::IoError("cannot open " + path);
    return f;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw ph::IoError("cannot open " + path + " for writing");
    return f;
}

// write to the file, or to stdout when path is empty or "-"
template <class Fn>
void with_output(const std::string& path, Fn&& fn) {
    if (path.empty() || path == "-") {
        fn(std::cout);
    } else {
        auto f = open_out(path);
        fn(f);
    }
}

ph::MetricInput load_metric(const std::string& path, const std::string& format) {
    auto f = open_in(path);
    if (format == "points") return ph::MetricInput::from_points(ph::read_point_cloud(f));
    if (format == "distances") return ph::read_distance_matrix(f);
    throw ph::IoError("metric input must be points or distances, got " + format);
}

ph::ReductionState run_reduction(const std::string& algorithm, const ph::SparseF2Matrix& b,
                                 const std::vector<int>& dims) {
    if (algorithm == "standard") return ph::reduce_standard(b);
    if (algorithm == "twist") return ph::reduce_twist(b, dims);
    if (algorithm == "dual") return ph::reduce_dual(b, dims);
    throw ph::BadParams("unknown algorithm " + algorithm);
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
    std::string output;
    std::uint64_t seed = 0;
    // klein / uniform
    std::size_t count = 400;
    std::size_t dim = 3;
    std::string mode = "grid";
    // vicsek
    ph::VicsekParams vp{10.0, 0.03, 300, 0.1, 100};
    std::string init = "random";
    std::vector<std::size_t> frames;
    // fractal
    unsigned fb = 5, fn = 9, fk = 2;
    std::string weighting = "unit";
};

void add_generate(CLI::App& app, GenerateArgs& a) {
    auto* gen = app.add_subcommand("generate", "Generate a synthetic dataset");
    gen->require_subcommand(1);

    auto* klein = gen->add_subcommand("klein", "Klein-bottle figure-8 immersion sample");
    klein->add_option("--count", a.count, "number of points")->capture_default_str();
    klein->add_option("--mode", a.mode, "grid|random")->capture_default_str();
    klein->add_option("--seed", a.seed);
    klein->add_option("--output,-o", a.output);
    klein->callback([&a] {
        auto mode = a.mode == "grid" ? ph::KleinMode::grid : ph::KleinMode::random;
        auto pts = ph::generate_klein(a.count, mode, a.seed);
        with_output(a.output, [&](std::ostream& o) { ph::write_point_cloud(o, pts); });
    });

    auto* uni = gen->add_subcommand("uniform", "Uniform sample from the unit cube");
    uni->add_option("--count", a.count)->capture_default_str();
    uni->add_option("--dim", a.dim, "ambient dimension")->capture_default_str();
    uni->add_option("--seed", a.seed);
    uni->add_option("--output,-o", a.output);
    uni->callback([&a] {
        auto pts = ph::generate_uniform(a.count, a.dim, a.seed);
        with_output(a.output, [&](std::ostream& o) { ph::write_point_cloud(o, pts); });
    });

    auto* vic = gen->add_subcommand("vicsek", "Vicsek flocking model frames (x, y, theta)");
    vic->add_option("--box", a.vp.l)->capture_default_str();
    vic->add_option("--speed", a.vp.v0)->capture_default_str();
    vic->add_option("--count", a.vp.n)->capture_default_str();
    vic->add_option("--noise", a.vp.eta)->capture_default_str();
    vic->add_option("--steps", a.vp.t)->capture_default_str();
    vic->add_option("--radius", a.vp.r)->capture_default_str();
    vic->add_option("--init", a.init, "constant|random")->capture_default_str();
    vic->add_option("--theta0", a.vp.theta0)->capture_default_str();
    vic->add_option("--frames", a.frames, "step indices to emit")->required();
    vic->add_option("--seed", a.seed);
    vic->add_option("--output,-o", a.output);
    vic->callback([&a] {
        a.vp.init = a.init == "constant" ? ph::VicsekInit::constant : ph::VicsekInit::random;
        auto clouds = ph::generate_vicsek(a.vp, a.seed, a.frames);
        if (clouds.size() == 1) {
            with_output(a.output, [&](std::ostream& o) { ph::write_point_cloud(o, clouds[0]); });
        } else {
            for (std::size_t i = 0; i < clouds.size(); ++i) {
                std::string path = a.output + "." + std::to_string(a.frames[i]);
                with_output(path, [&](std::ostream& o) { ph::write_point_cloud(o, clouds[i]); });
            }
        }
    });

    auto* fr = gen->add_subcommand("fractal", "Fractal network as a weighted edge list");
    fr->add_option("--b", a.fb, "log2 of the seed-clique size")->capture_default_str();
    fr->add_option("--n", a.fn, "log2 of the final node count")->capture_default_str();
    fr->add_option("--k", a.fk, "density decay factor")->capture_default_str();
    fr->add_option("--weighting", a.weighting, "unit|random|linear")->capture_default_str();
    fr->add_option("--seed", a.seed);
    fr->add_option("--output,-o", a.output);
    fr->callback([&a] {
        ph::FractalWeighting w = a.weighting == "random"   ? ph::FractalWeighting::random
                                 : a.weighting == "linear" ? ph::FractalWeighting::linear
                                                           : ph::FractalWeighting::unit;
        auto g = ph::generate_fractal({a.fb, a.fn, a.fk, w}, a.seed);
        with_output(a.output, [&](std::ostream& o) { ph::write_edge_list(o, g); });
    });
}

// ------------------------------------------------------------------- build

struct BuildArgs {
    std::string input, output, format;
    int max_dim = 1;
    double max_scale = kInf;
    std::size_t landmark_count = 0;
    int nu = -1; // -1 = weak witness
    std::uint64_t seed = 0;
    std::string graph_metric = "raw";
};

ph::GraphMetricMode parse_graph_metric(const std::string& s) {
    if (s == "inverse") return ph::GraphMetricMode::inverse;
    if (s == "raw") return ph::GraphMetricMode::raw;
    if (s == "one_minus") return ph::GraphMetricMode::one_minus;
    throw ph::BadParams("unknown graph metric mode " + s);
}

void add_build(CLI::App& app, BuildArgs& a) {
    auto* build = app.add_subcommand("build", "Build a filtered complex from data");
    build->require_subcommand(1);

    auto common = [&a](CLI::App* sub, const char* default_format) {
        // the subcommands share one BuildArgs, so apply each default when its
        // subcommand starts parsing, before --format can override it
        sub->preparse_callback(
            [&a, default_format](std::size_t) { a.format = default_format; });
        sub->add_option("--input,-i", a.input)->required();
        sub->add_option("--output,-o", a.output);
        sub->add_option("--format", a.format, "points|distances|edges|image")
            ->capture_default_str();
        sub->add_option("--max-dim", a.max_dim)->capture_default_str();
        sub->add_option("--max-scale", a.max_scale);
    };

    auto emit = [&a](const ph::FilteredComplex& k) {
        with_output(a.output, [&](std::ostream& o) { ph::write_complex(o, k); });
    };

    auto* rips = build->add_subcommand("rips", "Vietoris-Rips complex");
    common(rips, "points");
    rips->callback([&a, emit] {
        emit(ph::build_rips(load_metric(a.input, a.format), a.max_dim, a.max_scale));
    });

    auto* cech = build->add_subcommand("cech", "Cech complex (needs coordinates)");
    common(cech, "points");
    cech->callback([&a, emit] {
        emit(ph::build_cech(load_metric(a.input, a.format), a.max_dim, a.max_scale));
    });

    auto* wit = build->add_subcommand("witness", "Witness complex on maxmin landmarks");
    common(wit, "points");
    wit->add_option("--landmark-count", a.landmark_count)->required();
    wit->add_option("--nu", a.nu, "witness parameter; omit for the weak complex");
    wit->add_option("--seed", a.seed, "seed for the first landmark pick");
    wit->callback([&a, emit] {
        auto m = load_metric(a.input, a.format);
        auto l = ph::maxmin_landmarks(m, a.landmark_count, a.seed);
        emit(a.nu < 0 ? ph::build_weak_witness(m, l, a.max_dim, a.max_scale)
                      : ph::build_parametrized_witness(m, l, a.nu, a.max_dim, a.max_scale));
    });

    auto* wrcf = build->add_subcommand("wrcf", "Weight rank clique filtration of a graph");
    common(wrcf, "edges");
    wrcf->callback([&a, emit] {
        auto f = open_in(a.input);
        emit(ph::build_wrcf(ph::read_edge_list(f), a.max_dim));
    });

    auto* cub = build->add_subcommand("cubical", "Cubical complex of a grey-scale image");
    common(cub, "image");
    cub->callback([&a] {
        auto f = open_in(a.input);
        auto cx = ph::build_cubical(ph::read_image(f));
        with_output(a.output, [&](std::ostream& o) {
            o.precision(17);
            o << "# cubical cells: dim extent anchor... value\n";
            for (const auto& c : cx.cells) {
                o << c.dim() << ' ' << c.extent;
                for (auto x : c.anchor) o << ' ' << x;
                o << ' ' << c.value << '\n';
            }
        });
    });
}

// ------------------------------------------------------------------ reduce

void add_reduce(CLI::App& app, BuildArgs& a, std::string& algorithm) {
    auto* red = app.add_subcommand("reduce", "Reduce a complex's boundary matrix");
    red->add_option("algorithm", algorithm, "standard|twist|dual")->required();
    red->add_option("--input,-i", a.input)->required();
    red->add_option("--output,-o", a.output);
    red->callback([&a, &algorithm] {
        auto f = open_in(a.input);
        auto k = ph::read_complex(f);
        auto dims = k.dims();
        auto st = run_reduction(algorithm, ph::boundary_matrix(k), dims);
        with_output(a.output, [&](std::ostream& o) {
            for (auto [i, j] : st.pairs) o << i << ' ' << j << '\n';
            for (auto e : st.essentials) o << e << " inf\n";
        });
    });
}

// ----------------------------------------------------------------- barcode

struct BarcodeArgs {
    std::string input, output, format = "complex", complex_kind = "rips";
    std::string algorithm = "twist";
    int max_dim = 1;
    double max_scale = kInf;
    bool keep_zero = false;
    std::size_t landmark_count = 0;
    int nu = -1;
    std::uint64_t seed = 0;
};

ph::Barcode compute_barcode(const BarcodeArgs& a) {
    if (a.format == "image") {
        auto f = open_in(a.input);
        auto img = ph::read_image(f);
        auto cx = ph::build_cubical(img);
        auto dims = cx.dims();
        auto st = run_reduction(a.algorithm, ph::cubical_boundary(cx), dims);
        auto bc = ph::extract_barcode(st, dims, cx.values(), !a.keep_zero);
        std::erase_if(bc.intervals,
                      [&a](const ph::Interval& iv) { return iv.dim > a.max_dim; });
        return bc;
    }
    ph::FilteredComplex k;
    if (a.format == "complex") {
        auto f = open_in(a.input);
        k = ph::read_complex(f);
    } else if (a.format == "edges") {
        auto f = open_in(a.input);
        k = ph::build_wrcf(ph::read_edge_list(f), a.max_dim);
    } else {
        auto m = load_metric(a.input, a.format);
        if (a.complex_kind == "rips") {
            k = ph::build_rips(m, a.max_dim, a.max_scale);
        } else if (a.complex_kind == "cech") {
            k = ph::build_cech(m, a.max_dim, a.max_scale);
        } else if (a.complex_kind == "witness") {
            auto l = ph::maxmin_landmarks(m, a.landmark_count, a.seed);
            k = a.nu < 0 ? ph::build_weak_witness(m, l, a.max_dim, a.max_scale)
                         : ph::build_parametrized_witness(m, l, a.nu, a.max_dim, a.max_scale);
        } else {
            throw ph::BadParams("unknown complex kind " + a.complex_kind);
        }
    }
    auto dims = k.dims();
    auto st = run_reduction(a.algorithm, ph::boundary_matrix(k), dims);
    return ph::extract_barcode(st, dims, k.values(), !a.keep_zero);
}

void add_barcode(CLI::App& app, BarcodeArgs& a) {
    auto* bar = app.add_subcommand("barcode", "Build, reduce, and print a barcode");
    bar->add_option("--input,-i", a.input)->required();
    bar->add_option("--output,-o", a.output);
    bar->add_option("--format", a.format, "complex|points|distances|edges|image")
        ->capture_default_str();
    bar->add_option("--complex", a.complex_kind, "rips|cech|witness")->capture_default_str();
    bar->add_option("--algorithm", a.algorithm, "standard|twist|dual")->capture_default_str();
    bar->add_option("--max-dim", a.max_dim)->capture_default_str();
    bar->add_option("--max-scale", a.max_scale);
    bar->add_flag("--keep-zero", a.keep_zero, "keep zero-length intervals");
    bar->add_option("--landmark-count", a.landmark_count);
    bar->add_option("--nu", a.nu);
    bar->add_option("--seed", a.seed);
    bar->callback([&a] {
        auto bc = compute_barcode(a);
        with_output(a.output, [&](std::ostream& o) { ph::write_barcode(o, bc); });
    });
}

// ---------------------------------------------------------------- distance

void add_distance(CLI::App& app) {
    struct Args {
        std::string kind, file_a, file_b, metric = "linf";
        int dim = 0;
        double p = 1.0;
    };
    auto a = std::make_shared<Args>();
    auto* dist = app.add_subcommand("distance", "Distance between two diagrams");
    dist->add_option("kind", a->kind, "bottleneck|wasserstein")->required();
    dist->add_option("file_a", a->file_a)->required();
    dist->add_option("file_b", a->file_b)->required();
    dist->add_option("--dim", a->dim, "homology degree to compare")->capture_default_str();
    dist->add_option("--p", a->p, "Wasserstein exponent")->capture_default_str();
    dist->add_option("--metric", a->metric, "linf|l2")->capture_default_str();
    dist->callback([a] {
        auto fa = open_in(a->file_a);
        auto fb = open_in(a->file_b);
        auto x = ph::read_diagram(fa, a->dim);
        auto y = ph::read_diagram(fb, a->dim);
        double d;
        if (a->kind == "bottleneck") {
            d = ph::bottleneck(x, y);
        } else if (a->kind == "wasserstein") {
            auto m = a->metric == "l2" ? ph::PointMetric::l2 : ph::PointMetric::linf;
            d = ph::wasserstein(x, y, a->p, m);
        } else {
            throw ph::BadParams("unknown distance kind " + a->kind);
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", d);
        std::cout << buf << '\n';
    });
}

// ------------------------------------------------------------- betti, plot

void add_betti(CLI::App& app) {
    auto input = std::make_shared<std::string>();
    auto* betti = app.add_subcommand("betti", "Betti numbers of a complex");
    betti->add_option("--input,-i", *input)->required();
    betti->callback([input] {
        auto f = open_in(*input);
        auto b = ph::betti_numbers(ph::read_complex(f));
        while (b.size() > 1 && b.back() == 0) b.pop_back();
        for (std::size_t i = 0; i < b.size(); ++i) std::cout << (i ? " " : "") << b[i];
        std::cout << '\n';
    });
}

void add_plot(CLI::App& app) {
    struct Args {
        std::string input, output, type = "barcode";
        int dim = 0;
    };
    auto a = std::make_shared<Args>();
    auto* plot = app.add_subcommand("plot", "Render a barcode or diagram as SVG");
    plot->add_option("--input,-i", a->input)->required();
    plot->add_option("--output,-o", a->output)->required();
    plot->add_option("--type", a->type, "barcode|diagram")->capture_default_str();
    plot->add_option("--dim", a->dim, "degree for diagram plots")->capture_default_str();
    plot->callback([a] {
        auto f = open_in(a->input);
        if (a->type == "diagram")
            ph::emit_svg_file(ph::read_diagram(f, a->dim), a->output);
        else
            ph::emit_svg_file(ph::read_barcode(f), a->output);
    });
}

// ------------------------------------------------------------------- bench

std::uint64_t binomial_sum(std::uint64_t n, int max_dim) {
    // sum_{k=1}^{max_dim+1} C(n, k)
    std::uint64_t total = 0;
    for (int k = 1; k <= max_dim + 1; ++k) {
        std::uint64_t c = 1;
        for (int i = 1; i <= k; ++i) {
            unsigned __int128 t = static_cast<unsigned __int128>(c) * (n - static_cast<std::uint64_t>(k - i));
            c = static_cast<std::uint64_t>(t / static_cast<std::uint64_t>(i));
        }
        total += c;
    }
    return total;
}

std::uint64_t peak_rss_bytes() {
    struct rusage ru{};
    getrusage(RUSAGE_SELF, &ru);
    return static_cast<std::uint64_t>(ru.ru_maxrss) * 1024;
}

void run_bench(const std::string& config_path, const std::string& output_path) {
    json cfg = json::object();
    if (!config_path.empty()) {
        auto f = open_in(config_path);
        f >> cfg;
    }
    int repeats = cfg.value("repeats", 3);
    auto cap = cfg.value("cap", static_cast<std::uint64_t>(ph::kDefaultSimplexCap));

    std::ostringstream csv;
    csv << "dataset,complex,max_dim,size,algorithm,wall_s,cpu_s,peak_mem_bytes\n";

    for (const auto& cell : cfg.value("cells", json::array())) {
        const auto& ds = cell.at("dataset");
        std::string kind = ds.at("kind");
        std::string name = ds.value("name", kind);
        std::string complex_kind = cell.at("complex");
        int max_dim = cell.value("max_dim", 1);
        double max_scale = cell.value("max_scale", kInf);
        std::string algorithm = cell.value("algorithm", "twist");
        auto seed = ds.value("seed", std::uint64_t{0});

        auto emit_row = [&](const std::string& size, const std::string& wall,
                            const std::string& cpu, const std::string& mem) {
            csv << name << ',' << complex_kind << ',' << max_dim << ',' << size << ','
                << algorithm << ',' << wall << ',' << cpu << ',' << mem << '\n';
        };

        try {
            // materialize the dataset
            ph::PointCloud pts;
            ph::WeightedGraph graph;
            bool is_graph = false;
            if (kind == "klein") {
                auto mode = ds.value("mode", std::string("grid")) == "random"
                                ? ph::KleinMode::random
                                : ph::KleinMode::grid;
                pts = ph::generate_klein(ds.value("n", std::size_t{400}), mode, seed);
            } else if (kind == "uniform") {
                pts = ph::generate_uniform(ds.value("n", std::size_t{50}),
                                           ds.value("d", std::size_t{16}), seed);
            } else if (kind == "vicsek") {
                ph::VicsekParams vp{ds.value("box", 10.0),     ds.value("speed", 0.03),
                                    ds.value("n", std::size_t{300}), ds.value("noise", 0.1),
                                    ds.value("steps", std::size_t{100}), ds.value("radius", 1.0)};
                pts = ph::generate_vicsek(vp, seed, {ds.value("frame", vp.t)})[0];
            } else if (kind == "fractal") {
                ph::FractalWeighting w = ph::FractalWeighting::unit;
                std::string ws = ds.value("weighting", std::string("unit"));
                if (ws == "random") w = ph::FractalWeighting::random;
                if (ws == "linear") w = ph::FractalWeighting::linear;
                graph = ph::generate_fractal({ds.value("b", 2u), ds.value("n", 3u),
                                              ds.value("k", 2u), w},
                                             seed);
                is_graph = true;
            } else {
                throw ph::BadParams("unknown dataset kind " + kind);
            }

            // full-scale VR sizes are known analytically; respect the cap
            std::uint64_t analytic = 0;
            if (complex_kind == "rips" && !is_graph && std::isinf(max_scale))
                analytic = binomial_sum(pts.size(), max_dim);
            if (analytic > cap) {
                emit_row(std::to_string(analytic), "-", "-", "-");
                continue;
            }

            double wall_total = 0, cpu_total = 0;
            std::uint64_t mem = 0;
            ph::Index size = 0;
            for (int rep = 0; rep < repeats; ++rep) {
                auto wall0 = std::chrono::steady_clock::now();
                auto cpu0 = std::clock();

                ph::FilteredComplex k;
                if (is_graph) {
                    if (complex_kind == "wrcf") {
                        k = ph::build_wrcf(graph, max_dim);
                    } else {
                        auto mode = parse_graph_metric(
                            ds.value("metric_mode", std::string("raw")));
                        k = ph::build_rips(ph::graph_to_metric(graph, mode), max_dim,
                                           max_scale);
                    }
                } else {
                    auto m = ph::MetricInput::from_points(pts);
                    if (complex_kind == "cech")
                        k = ph::build_cech(m, max_dim, max_scale);
                    else
                        k = ph::build_rips(m, max_dim, max_scale,
                                           {static_cast<ph::Index>(cap)});
                }
                size = k.size();
                auto dims = k.dims();
                auto st = run_reduction(algorithm, ph::boundary_matrix(k), dims);
                auto bc = ph::extract_barcode(st, dims, k.values());
                (void)bc;

                wall_total += std::chrono::duration<double>(
                                  std::chrono::steady_clock::now() - wall0)
                                  .count();
                cpu_total += static_cast<double>(std::clock() - cpu0) / CLOCKS_PER_SEC;
                mem = std::max(mem, peak_rss_bytes());
            }
            if (analytic != 0 && static_cast<std::uint64_t>(size) != analytic)
                throw ph::BadParams("size mismatch against analytic count");
            char wall_buf[32], cpu_buf[32];
            std::snprintf(wall_buf, sizeof wall_buf, "%.6f", wall_total / repeats);
            std::snprintf(cpu_buf, sizeof cpu_buf, "%.6f", cpu_total / repeats);
            emit_row(std::to_string(size), wall_buf, cpu_buf, std::to_string(mem));
        } catch (const std::exception& e) {
            std::cerr << "bench cell " << name << "/" << complex_kind << " failed: "
                      << e.what() << '\n';
            emit_row("-", "-", "-", "-");
        }
    }

    with_output(output_path, [&](std::ostream& o) { o << csv.str(); });
}

void add_bench(CLI::App& app) {
    struct Args {
        std::string config, output;
    };
    auto a = std::make_shared<Args>();
    auto* bench = app.add_subcommand("bench", "Run a benchmark suite, emit CSV");
    bench->add_option("--config,-c", a->config, "JSON suite description");
    bench->add_option("--output,-o", a->output);
    bench->callback([a] { run_bench(a->config, a->output); });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"persistent-homology toolkit"};
    app.require_subcommand(1);

    GenerateArgs gen_args;
    BuildArgs build_args;
    BuildArgs reduce_args;
    std::string reduce_algorithm;
    BarcodeArgs barcode_args;

    add_generate(app, gen_args);
    add_build(app, build_args);
    add_reduce(app, reduce_args, reduce_algorithm);
    add_barcode(app, barcode_args);
    add_distance(app);
    add_betti(app);
    add_plot(app);
    add_bench(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
