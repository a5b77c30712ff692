#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <limits>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "ph/errors.hpp"

namespace ph {

using VertexId = std::int64_t;
using Index = std::int64_t;

/// A simplex is a non-empty set of distinct vertex ids, stored strictly
/// increasing. A p-simplex has p+1 vertices.
class Simplex {
public:
    using Storage = boost::container::small_vector<VertexId, 4>;

    Simplex(std::initializer_list<VertexId> vs);
    explicit Simplex(std::vector<VertexId> vs);
    explicit Simplex(Storage vs);

    int dim() const { return static_cast<int>(verts_.size()) - 1; }
    std::size_t size() const { return verts_.size(); }
    VertexId operator[](std::size_t i) const { return verts_[i]; }
    const Storage& vertices() const { return verts_; }

    /// The faces of codimension 1, each obtained by dropping one vertex.
    std::vector<Simplex> facets() const;

    bool operator==(const Simplex& o) const { return verts_ == o.verts_; }
    bool operator!=(const Simplex& o) const { return verts_ != o.verts_; }
    /// Lexicographic order on the vertex lists.
    bool operator<(const Simplex& o) const { return verts_ < o.verts_; }

private:
    void normalize();
    Storage verts_;
};

std::ostream& operator<<(std::ostream& os, const Simplex& s);

/// Combinatorial-number-system rank of a simplex within its dimension:
/// rank{v_0 < ... < v_p} = C(v_0,1) + C(v_1,2) + ... + C(v_p,p+1).
/// Enumerating ranks 0,1,2,... walks the p-simplices on vertices 0..n-1 in
/// colexicographic order, so builders can address simplices without hashing.
std::uint64_t simplex_rank(const Simplex& s);
Simplex simplex_unrank(std::uint64_t rank, int dim);

/// True when simplex_rank stays within 64 bits for the given top vertex id
/// and dimension.
bool simplex_rank_fits(VertexId max_vertex, int dim);

struct FilteredSimplex {
    Simplex simplex;
    double value;
};

/// Column-major boundary matrix over F2. Column j lists the row indices of
/// the codimension-1 faces of simplex j, strictly increasing.
struct SparseF2Matrix {
    using Row = std::uint32_t;
    std::vector<std::vector<Row>> columns;
    Index n = 0;

    std::size_t size() const { return columns.size(); }
};

/// Reduction of SparseF2Matrix refuses complexes larger than this unless the
/// caller raises the cap; mirrors the desk-scale addressing guard.
inline constexpr Index kDefaultSimplexCap = 200'000'000;

/// A filtered simplicial complex: simplices in a total order compatible with
/// the filtration (value, then dimension, then lexicographic vertex order).
class FilteredComplex {
public:
    struct Unchecked {};

    FilteredComplex() = default;

    /// Takes cells already in filtration order and face-closed; used by the
    /// builders, which construct closed complexes by design.
    FilteredComplex(std::vector<FilteredSimplex> cells, Unchecked);

    Index size() const { return static_cast<Index>(cells_.size()); }
    const Simplex& simplex(Index i) const { return cells_[i].simplex; }
    double value(Index i) const { return cells_[i].value; }
    int dim(Index i) const { return cells_[i].simplex.dim(); }
    const std::vector<FilteredSimplex>& cells() const { return cells_; }

    /// Largest simplex dimension present, or -1 for the empty complex.
    int top_dim() const;

    /// Index of a simplex in the total order, or -1 if absent.
    Index index_of(const Simplex& s) const;

    std::vector<int> dims() const;
    std::vector<double> values() const;

private:
    friend FilteredComplex make_complex(std::vector<FilteredSimplex>);

    void build_lookup();

    std::vector<FilteredSimplex> cells_;
    // Per-dimension indices into cells_, sorted by combinatorial rank when it
    // fits in 64 bits, else by lexicographic vertex order.
    std::vector<std::vector<std::pair<std::uint64_t, Index>>> rank_lookup_;
    std::vector<std::vector<Index>> lex_lookup_;
    bool use_ranks_ = true;
};

/// Sorts the input into a compatible total order and verifies face closure
/// and monotonicity. Throws MissingFace / NonMonotone.
FilteredComplex make_complex(std::vector<FilteredSimplex> cells);

/// Adds any missing faces, each at the smallest value over its cofaces, then
/// builds the complex. Duplicate simplices keep the smallest value.
FilteredComplex close_complex(std::vector<FilteredSimplex> cells);

SparseF2Matrix boundary_matrix(const FilteredComplex& k);

long long euler_characteristic(const FilteredComplex& k);

/// Text format, one simplex per line: `dim v0 v1 ... vdim value`.
FilteredComplex read_complex(std::istream& in);
void write_complex(std::ostream& out, const FilteredComplex& k);

} // namespace ph
