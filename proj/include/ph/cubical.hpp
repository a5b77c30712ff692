#pragma once

#include <cstdint>
#include <vector>

#include "ph/reduction.hpp"
#include "ph/simplex.hpp"

namespace ph {

/// A d-dimensional grey-scale grid, row-major, d in {2, 3}.
struct ImageGrid {
    std::vector<std::size_t> dims;
    std::vector<double> values;

    void validate() const;
    double at(const std::vector<std::size_t>& coord) const;
};

/// An elementary cube anchored at integer coordinates, extended one unit
/// along the axes in `extent` (bitmask); dimension = popcount(extent).
struct CubicalCell {
    std::vector<std::size_t> anchor;
    unsigned extent;
    double value; // max grey value over the cell's vertices

    int dim() const;
};

/// Filtered cubical complex in V-construction order: value, then dimension,
/// then anchor lexicographic, then extent.
struct CubicalComplex {
    std::vector<std::size_t> grid_dims;
    std::vector<CubicalCell> cells;

    Index size() const { return static_cast<Index>(cells.size()); }
    Index index_of(const std::vector<std::size_t>& anchor, unsigned extent) const;
    std::vector<int> dims() const;
    std::vector<double> values() const;

    std::vector<std::pair<std::uint64_t, Index>> lookup_; // (cell code, index)
};

/// One vertex per pixel at its grey value; each edge/square/cube at the max
/// of its vertices.
CubicalComplex build_cubical(const ImageGrid& img);

/// Column of a k-cell lists its 2k codimension-1 faces.
SparseF2Matrix cubical_boundary(const CubicalComplex& cx);

/// End to end: build, reduce with the twist algorithm, read intervals.
Barcode image_barcode(const ImageGrid& img, int max_dim, bool drop_zero = true);

/// Image file: line 1 `d`, line 2 the extents, then values row-major.
ImageGrid read_image(std::istream& in);
void write_image(std::ostream& out, const ImageGrid& img);

} // namespace ph
