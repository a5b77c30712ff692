#include "ph/diagrams.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

namespace ph {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double point_dist(const DiagramPoint& a, const DiagramPoint& b, PointMetric d) {
    double db = std::abs(a.birth - b.birth);
    double dd = std::abs(a.death - b.death);
    return d == PointMetric::linf ? std::max(db, dd) : std::hypot(db, dd);
}

// Distance from a finite point to its diagonal projection.
double diag_dist(const DiagramPoint& a, PointMetric d) {
    double half = (a.death - a.birth) / 2.0;
    return d == PointMetric::linf ? half : half * std::sqrt(2.0);
}

// Sorted matching of essential births; optimal for any convex 1-d cost.
bool match_essentials(const PersistenceDiagram& x, const PersistenceDiagram& y,
                      std::vector<std::pair<double, double>>& out) {
    auto ex = x.essential_births();
    auto ey = y.essential_births();
    if (ex.size() != ey.size()) return false;
    std::sort(ex.begin(), ex.end());
    std::sort(ey.begin(), ey.end());
    out.clear();
    for (std::size_t i = 0; i < ex.size(); ++i) out.emplace_back(ex[i], ey[i]);
    return true;
}

// Hopcroft–Karp maximum matching; adj maps left nodes to right nodes.
class BipartiteMatcher {
public:
    BipartiteMatcher(std::size_t n_left, std::size_t n_right)
        : adj_(n_left), match_l_(n_left, -1), match_r_(n_right, -1) {}

    void add_edge(std::size_t l, std::size_t r) { adj_[l].push_back(static_cast<int>(r)); }

    std::size_t max_matching() {
        std::size_t matched = 0;
        while (bfs()) {
            for (std::size_t l = 0; l < adj_.size(); ++l)
                if (match_l_[l] < 0 && dfs(static_cast<int>(l))) ++matched;
        }
        return matched;
    }

private:
    bool bfs() {
        std::vector<int> queue;
        level_.assign(adj_.size(), -1);
        for (std::size_t l = 0; l < adj_.size(); ++l)
            if (match_l_[l] < 0) {
                level_[l] = 0;
                queue.push_back(static_cast<int>(l));
            }
        bool reachable = false;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int l = queue[qi];
            for (int r : adj_[static_cast<std::size_t>(l)]) {
                int nl = match_r_[static_cast<std::size_t>(r)];
                if (nl < 0)
                    reachable = true;
                else if (level_[static_cast<std::size_t>(nl)] < 0) {
                    level_[static_cast<std::size_t>(nl)] = level_[static_cast<std::size_t>(l)] + 1;
                    queue.push_back(nl);
                }
            }
        }
        return reachable;
    }

    bool dfs(int l) {
        for (int r : adj_[static_cast<std::size_t>(l)]) {
            int nl = match_r_[static_cast<std::size_t>(r)];
            if (nl < 0 || (level_[static_cast<std::size_t>(nl)] ==
                               level_[static_cast<std::size_t>(l)] + 1 &&
                           dfs(nl))) {
                match_l_[static_cast<std::size_t>(l)] = r;
                match_r_[static_cast<std::size_t>(r)] = l;
                return true;
            }
        }
        level_[static_cast<std::size_t>(l)] = -1;
        return false;
    }

    std::vector<std::vector<int>> adj_;
    std::vector<int> match_l_, match_r_, level_;
};

// Perfect matching at threshold eps in the diagonal-augmented graph.
bool feasible(const std::vector<DiagramPoint>& xs, const std::vector<DiagramPoint>& ys,
              double eps) {
    std::size_t m = xs.size(), k = ys.size();
    // left: x_0..x_{m-1}, then k diagonal slots; right: y_0..y_{k-1}, then m slots.
    BipartiteMatcher bm(m + k, k + m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            if (point_dist(xs[i], ys[j], PointMetric::linf) <= eps) bm.add_edge(i, j);
        if (diag_dist(xs[i], PointMetric::linf) <= eps) bm.add_edge(i, k + i);
    }
    for (std::size_t j = 0; j < k; ++j) {
        if (diag_dist(ys[j], PointMetric::linf) <= eps) bm.add_edge(m + j, j);
        for (std::size_t s = 0; s < m; ++s) bm.add_edge(m + j, k + s);
    }
    return bm.max_matching() == m + k;
}

// Hungarian algorithm (Jonker–Volgenant style potentials), square matrix.
double assignment_cost(const std::vector<std::vector<double>>& cost) {
    std::size_t n = cost.size();
    if (n == 0) return 0.0;
    std::vector<double> u(n + 1, 0), v(n + 1, 0);
    std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::vector<double> minv(n + 1, kInf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            std::size_t i0 = p[j0], j1 = 0;
            double delta = kInf;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }
    double total = 0;
    for (std::size_t j = 1; j <= n; ++j) total += cost[p[j] - 1][j - 1];
    return total;
}

} // namespace

std::vector<DiagramPoint> PersistenceDiagram::finite_points() const {
    std::vector<DiagramPoint> out;
    for (const auto& p : points)
        if (!std::isinf(p.death)) out.push_back(p);
    return out;
}

std::vector<double> PersistenceDiagram::essential_births() const {
    std::vector<double> out;
    for (const auto& p : points)
        if (std::isinf(p.death)) out.push_back(p.birth);
    return out;
}

PersistenceDiagram from_barcode(const Barcode& b, int dim) {
    PersistenceDiagram d;
    d.dim = dim;
    for (const auto& iv : b.intervals)
        if (iv.dim == dim) d.points.push_back({iv.birth, iv.death});
    return d;
}

double bottleneck(const PersistenceDiagram& x, const PersistenceDiagram& y) {
    std::vector<std::pair<double, double>> ess;
    if (!match_essentials(x, y, ess)) return kInf;
    double floor = 0;
    for (const auto& [a, b] : ess) floor = std::max(floor, std::abs(a - b));

    auto xs = x.finite_points();
    auto ys = y.finite_points();
    if (xs.empty() && ys.empty()) return floor;

    std::vector<double> candidates{0.0};
    for (const auto& a : xs) {
        candidates.push_back(diag_dist(a, PointMetric::linf));
        for (const auto& b : ys) candidates.push_back(point_dist(a, b, PointMetric::linf));
    }
    for (const auto& b : ys) candidates.push_back(diag_dist(b, PointMetric::linf));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (feasible(xs, ys, candidates[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return std::max(floor, candidates[lo]);
}

double wasserstein(const PersistenceDiagram& x, const PersistenceDiagram& y, double p,
                   PointMetric d) {
    if (p < 1.0) throw BadP("Wasserstein exponent must be >= 1");
    std::vector<std::pair<double, double>> ess;
    if (!match_essentials(x, y, ess)) return kInf;
    double total = 0;
    for (const auto& [a, b] : ess) total += std::pow(std::abs(a - b), p);

    auto xs = x.finite_points();
    auto ys = y.finite_points();
    std::size_t m = xs.size(), k = ys.size(), n = m + k;
    if (n > 0) {
        std::vector<std::vector<double>> cost(n, std::vector<double>(n, 0.0));
        for (std::size_t i = 0; i < m; ++i) {
            double dd = std::pow(diag_dist(xs[i], d), p);
            for (std::size_t j = 0; j < k; ++j)
                cost[i][j] = std::pow(point_dist(xs[i], ys[j], d), p);
            for (std::size_t j = k; j < n; ++j) cost[i][j] = dd;
        }
        for (std::size_t i = m; i < n; ++i)
            for (std::size_t j = 0; j < k; ++j)
                cost[i][j] = std::pow(diag_dist(ys[j], d), p);
        total += assignment_cost(cost);
    }
    return std::pow(total, 1.0 / p);
}

namespace {

struct SvgScale {
    double lo, hi, px0, px1;
    double operator()(double v) const { return px0 + (v - lo) / (hi - lo) * (px1 - px0); }
};

const char* dim_color(int d) {
    static const char* colors[] = {"#1f77b4", "#9467bd", "#2ca02c", "#d62728",
                                   "#ff7f0e", "#8c564b"};
    return colors[d % 6];
}

} // namespace

void emit_svg(const Barcode& b, std::ostream& out) {
    double lo = 0, hi = 1;
    bool any = false;
    for (const auto& iv : b.intervals) {
        if (!any) {
            lo = iv.birth;
            hi = iv.birth;
            any = true;
        }
        lo = std::min(lo, iv.birth);
        hi = std::max(hi, iv.birth);
        if (!std::isinf(iv.death)) hi = std::max(hi, iv.death);
    }
    if (hi <= lo) hi = lo + 1;
    double pad = (hi - lo) * 0.08;
    SvgScale sx{lo - pad, hi + pad, 40, 600};
    int rows = static_cast<int>(b.intervals.size());
    int height = 40 + 14 * std::max(rows, 1);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"" << height
        << "\">\n";
    out << "<line class=\"axis\" x1=\"40\" y1=\"" << height - 20 << "\" x2=\"600\" y2=\""
        << height - 20 << "\" stroke=\"black\"/>\n";
    int row = 0;
    for (const auto& iv : b.intervals) {
        double y = 20 + 14 * row++;
        double x1 = sx(iv.birth);
        double x2 = std::isinf(iv.death) ? 600.0 : sx(iv.death);
        out << "<line class=\"interval\" x1=\"" << x1 << "\" y1=\"" << y << "\" x2=\"" << x2
            << "\" y2=\"" << y << "\" stroke=\"" << dim_color(iv.dim)
            << "\" stroke-width=\"3\"/>\n";
        if (std::isinf(iv.death))
            out << "<polygon class=\"arrowhead\" points=\"600," << y - 4 << " 608," << y
                << " 600," << y + 4 << "\" fill=\"" << dim_color(iv.dim) << "\"/>\n";
    }
    out << "</svg>\n";
}

void emit_svg(const PersistenceDiagram& d, std::ostream& out) {
    double lo = 0, hi = 1;
    bool any = false;
    for (const auto& p : d.points) {
        if (!any) {
            lo = p.birth;
            hi = p.birth;
            any = true;
        }
        lo = std::min(lo, p.birth);
        hi = std::max(hi, p.birth);
        if (!std::isinf(p.death)) hi = std::max(hi, p.death);
    }
    if (hi <= lo) hi = lo + 1;
    double pad = (hi - lo) * 0.08;
    SvgScale sx{lo - pad, hi + pad, 40, 440};
    SvgScale sy{lo - pad, hi + pad, 440, 40};
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"480\">\n";
    out << "<line class=\"axis\" x1=\"40\" y1=\"440\" x2=\"440\" y2=\"440\" stroke=\"black\"/>\n";
    out << "<line class=\"axis\" x1=\"40\" y1=\"440\" x2=\"40\" y2=\"40\" stroke=\"black\"/>\n";
    out << "<line class=\"diagonal\" x1=\"" << sx(lo - pad) << "\" y1=\"" << sy(lo - pad)
        << "\" x2=\"" << sx(hi + pad) << "\" y2=\"" << sy(hi + pad)
        << "\" stroke=\"gray\"/>\n";
    for (const auto& p : d.points) {
        if (std::isinf(p.death))
            out << "<rect class=\"dgmpoint essential\" x=\"" << sx(p.birth) - 4
                << "\" y=\"36\" width=\"8\" height=\"8\" fill=\"" << dim_color(d.dim)
                << "\"/>\n";
        else
            out << "<circle class=\"dgmpoint\" cx=\"" << sx(p.birth) << "\" cy=\""
                << sy(p.death) << "\" r=\"4\" fill=\"" << dim_color(d.dim) << "\"/>\n";
    }
    out << "</svg>\n";
}

namespace {

template <class T>
void emit_to_file(const T& obj, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    emit_svg(obj, out);
    if (!out) throw IoError("write failed for " + path);
}

} // namespace

void emit_svg_file(const Barcode& b, const std::string& path) { emit_to_file(b, path); }
void emit_svg_file(const PersistenceDiagram& d, const std::string& path) {
    emit_to_file(d, path);
}

PersistenceDiagram read_diagram(std::istream& in, int dim) {
    return from_barcode(read_barcode(in), dim);
}

void write_diagram(std::ostream& out, const PersistenceDiagram& d) {
    Barcode b;
    for (const auto& p : d.points) b.intervals.push_back({d.dim, p.birth, p.death});
    b.sort();
    write_barcode(out, b);
}

} // namespace ph
