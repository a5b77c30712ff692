#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ph/reduction.hpp"

namespace ph {

struct DiagramPoint {
    double birth;
    double death; // +infinity for essential classes

    bool operator==(const DiagramPoint&) const = default;
};

/// Multiset of off-diagonal points of one homology degree; the diagonal is
/// implicit with infinite multiplicity.
struct PersistenceDiagram {
    int dim = 0;
    std::vector<DiagramPoint> points;

    std::vector<DiagramPoint> finite_points() const;
    std::vector<double> essential_births() const;
};

PersistenceDiagram from_barcode(const Barcode& b, int dim);

enum class PointMetric { linf, l2 };

/// Exact bottleneck distance W_inf[L_inf]: binary search over the candidate
/// values with a bipartite-matching feasibility test. Returns +inf when the
/// essential-point multiplicities differ.
double bottleneck(const PersistenceDiagram& x, const PersistenceDiagram& y);

/// Exact p-Wasserstein distance via optimal assignment on the diagonal-
/// augmented bipartite graph (Hungarian algorithm on costs d^p).
double wasserstein(const PersistenceDiagram& x, const PersistenceDiagram& y,
                   double p, PointMetric d = PointMetric::linf);

/// Deterministic SVG: barcodes as stacked segments (arrowheads for infinite
/// intervals), diagrams as scatter over the diagonal.
void emit_svg(const Barcode& b, std::ostream& out);
void emit_svg(const PersistenceDiagram& d, std::ostream& out);
void emit_svg_file(const Barcode& b, const std::string& path);
void emit_svg_file(const PersistenceDiagram& d, const std::string& path);

/// Same line format as barcodes: `dim birth death`.
PersistenceDiagram read_diagram(std::istream& in, int dim);
void write_diagram(std::ostream& out, const PersistenceDiagram& d);

} // namespace ph
