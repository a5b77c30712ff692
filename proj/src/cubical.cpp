#include "ph/cubical.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <istream>
#include <ostream>
#include <sstream>

namespace ph {

namespace {

std::uint64_t flat_index(const std::vector<std::size_t>& dims,
                         const std::vector<std::size_t>& coord) {
    std::uint64_t f = 0;
    for (std::size_t a = 0; a < dims.size(); ++a) f = f * dims[a] + coord[a];
    return f;
}

std::uint64_t cell_code(const std::vector<std::size_t>& dims,
                        const std::vector<std::size_t>& anchor, unsigned extent) {
    return flat_index(dims, anchor) * 8 + extent;
}

} // namespace

void ImageGrid::validate() const {
    if (dims.size() < 2 || dims.size() > 3)
        throw UnsupportedDim("image must be 2- or 3-dimensional");
    std::size_t total = 1;
    for (std::size_t d : dims) {
        if (d == 0) throw BadParams("zero image extent");
        total *= d;
    }
    if (values.size() != total) throw BadParams("image value count mismatch");
    for (double v : values)
        if (!std::isfinite(v)) throw BadParams("non-finite grey value");
}

double ImageGrid::at(const std::vector<std::size_t>& coord) const {
    return values[flat_index(dims, coord)];
}

int CubicalCell::dim() const { return std::popcount(extent); }

Index CubicalComplex::index_of(const std::vector<std::size_t>& anchor,
                               unsigned extent) const {
    std::uint64_t code = cell_code(grid_dims, anchor, extent);
    auto it = std::lower_bound(lookup_.begin(), lookup_.end(),
                               std::make_pair(code, Index{-1}));
    if (it == lookup_.end() || it->first != code) return -1;
    return it->second;
}

std::vector<int> CubicalComplex::dims() const {
    std::vector<int> out(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) out[i] = cells[i].dim();
    return out;
}

std::vector<double> CubicalComplex::values() const {
    std::vector<double> out(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) out[i] = cells[i].value;
    return out;
}

CubicalComplex build_cubical(const ImageGrid& img) {
    img.validate();
    std::size_t d = img.dims.size();
    CubicalComplex cx;
    cx.grid_dims = img.dims;

    std::vector<std::size_t> anchor(d, 0);
    std::vector<std::size_t> corner(d);
    for (;;) {
        for (unsigned extent = 0; extent < (1u << d); ++extent) {
            bool fits = true;
            for (std::size_t a = 0; a < d; ++a)
                if ((extent >> a) & 1u)
                    if (anchor[a] + 1 >= img.dims[a]) fits = false;
            if (!fits) continue;
            double value = -std::numeric_limits<double>::infinity();
            for (unsigned sub = extent;; sub = (sub - 1) & extent) {
                for (std::size_t a = 0; a < d; ++a)
                    corner[a] = anchor[a] + ((sub >> a) & 1u);
                value = std::max(value, img.at(corner));
                if (sub == 0) break;
            }
            cx.cells.push_back({anchor, extent, value});
        }
        // advance the anchor, row-major
        std::size_t a = d;
        while (a-- > 0) {
            if (++anchor[a] < img.dims[a]) break;
            anchor[a] = 0;
            if (a == 0) goto done;
        }
    }
done:
    std::sort(cx.cells.begin(), cx.cells.end(),
              [](const CubicalCell& x, const CubicalCell& y) {
                  if (x.value != y.value) return x.value < y.value;
                  if (x.dim() != y.dim()) return x.dim() < y.dim();
                  if (x.anchor != y.anchor) return x.anchor < y.anchor;
                  return x.extent < y.extent;
              });
    cx.lookup_.reserve(cx.cells.size());
    for (std::size_t i = 0; i < cx.cells.size(); ++i)
        cx.lookup_.emplace_back(cell_code(cx.grid_dims, cx.cells[i].anchor, cx.cells[i].extent),
                                static_cast<Index>(i));
    std::sort(cx.lookup_.begin(), cx.lookup_.end());
    return cx;
}

SparseF2Matrix cubical_boundary(const CubicalComplex& cx) {
    SparseF2Matrix b;
    b.n = cx.size();
    b.columns.resize(cx.cells.size());
    std::vector<std::size_t> shifted;
    for (std::size_t j = 0; j < cx.cells.size(); ++j) {
        const auto& cell = cx.cells[j];
        auto& col = b.columns[j];
        for (std::size_t a = 0; a < cx.grid_dims.size(); ++a) {
            if (!((cell.extent >> a) & 1u)) continue;
            unsigned face_extent = cell.extent & ~(1u << a);
            col.push_back(static_cast<SparseF2Matrix::Row>(cx.index_of(cell.anchor, face_extent)));
            shifted = cell.anchor;
            shifted[a] += 1;
            col.push_back(static_cast<SparseF2Matrix::Row>(cx.index_of(shifted, face_extent)));
        }
        std::sort(col.begin(), col.end());
    }
    return b;
}

Barcode image_barcode(const ImageGrid& img, int max_dim, bool drop_zero) {
    CubicalComplex cx = build_cubical(img);
    auto dims = cx.dims();
    auto values = cx.values();
    ReductionState st = reduce_twist(cubical_boundary(cx), dims);
    Barcode bc = extract_barcode(st, dims, values, drop_zero);
    std::erase_if(bc.intervals, [max_dim](const Interval& iv) { return iv.dim > max_dim; });
    return bc;
}

ImageGrid read_image(std::istream& in) {
    std::ostringstream clean;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        clean << line << '\n';
    }
    std::istringstream is(clean.str());
    std::size_t d;
    if (!(is >> d)) throw IoError("missing image dimension");
    ImageGrid img;
    img.dims.resize(d);
    std::size_t total = 1;
    for (auto& e : img.dims) {
        if (!(is >> e)) throw IoError("missing image extent");
        total *= e;
    }
    img.values.resize(total);
    for (auto& v : img.values)
        if (!(is >> v)) throw IoError("truncated image data");
    img.validate();
    return img;
}

void write_image(std::ostream& out, const ImageGrid& img) {
    out.precision(17);
    out << img.dims.size() << '\n';
    for (std::size_t i = 0; i < img.dims.size(); ++i)
        out << (i ? " " : "") << img.dims[i];
    out << '\n';
    std::size_t row = img.dims.back();
    for (std::size_t i = 0; i < img.values.size(); ++i)
        out << img.values[i] << ((i + 1) % row == 0 ? '\n' : ' ');
}

} // namespace ph
