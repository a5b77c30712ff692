#include "ph/io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace ph {

namespace {

// one vector of doubles per non-empty line, comments stripped
std::vector<std::vector<double>> read_rows(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream is(line);
        std::vector<double> row;
        double v;
        while (is >> v) row.push_back(v);
        if (!is.eof()) throw IoError("malformed numeric line: " + line);
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

std::vector<std::vector<double>> read_point_cloud(std::istream& in) {
    auto rows = read_rows(in);
    if (rows.empty()) throw IoError("empty point cloud");
    for (const auto& r : rows)
        if (r.size() != rows[0].size())
            throw IoError("inconsistent point dimensions");
    return rows;
}

void write_point_cloud(std::ostream& out, const std::vector<std::vector<double>>& pts) {
    out.precision(17);
    for (const auto& p : pts) {
        for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << p[i];
        out << '\n';
    }
}

MetricInput read_distance_matrix(std::istream& in) {
    auto rows = read_rows(in);
    std::size_t n = rows.size();
    if (n == 0) throw IoError("empty distance matrix");
    std::vector<double> flat;
    flat.reserve(n * n);
    for (const auto& r : rows) {
        if (r.size() != n) throw IoError("distance matrix is not square");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return MetricInput::from_distances(n, std::move(flat));
}

void write_distance_matrix(std::ostream& out, const MetricInput& m) {
    out.precision(17);
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) out << (j ? " " : "") << m.dist(i, j);
        out << '\n';
    }
}

WeightedGraph read_edge_list(std::istream& in) {
    auto rows = read_rows(in);
    WeightedGraph g;
    for (const auto& r : rows) {
        if (r.size() != 3) throw IoError("edge lines must be `u v w`");
        double uf = r[0], vf = r[1];
        auto u = static_cast<Index>(uf);
        auto v = static_cast<Index>(vf);
        if (static_cast<double>(u) != uf || static_cast<double>(v) != vf || u < 0 || v < 0)
            throw IoError("edge endpoints must be non-negative integers");
        if (u > v) std::swap(u, v);
        g.edges.push_back({u, v, r[2]});
        g.n = std::max(g.n, v + 1);
    }
    g.validate();
    return g;
}

void write_edge_list(std::ostream& out, const WeightedGraph& g) {
    out.precision(17);
    for (const auto& e : g.edges) out << e.u << ' ' << e.v << ' ' << e.w << '\n';
}

} // namespace ph
