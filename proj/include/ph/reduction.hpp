#pragma once

#include <span>
#include <vector>

#include "ph/simplex.hpp"

namespace ph {

/// Outcome of a boundary-matrix reduction. low maps each column to the row
/// of its last nonzero entry (-1 for zero columns) and is injective on
/// non-empty columns. pairs and essentials partition the column set.
struct ReductionState {
    SparseF2Matrix reduced;
    std::vector<Index> low;
    std::vector<std::pair<Index, Index>> pairs; // (birth index, death index)
    std::vector<Index> essentials;              // unpaired column indices

    void finalize(); // derives pairs/essentials from low, sorted by death
};

/// Left-to-right column reduction: while some earlier column shares the
/// current column's low, add it in.
ReductionState reduce_standard(const SparseF2Matrix& b);

/// Processes dimensions from high to low; after pairing (i, j) the column of
/// the birth simplex i is cleared. Same pairing as reduce_standard.
ReductionState reduce_twist(const SparseF2Matrix& b, std::span<const int> dims);

/// Reduces the anti-transpose of b and maps the pairing back to the original
/// indices (persistent cohomology route). reduced holds the reduced
/// anti-transpose.
ReductionState reduce_dual(const SparseF2Matrix& b, std::span<const int> dims);

SparseF2Matrix anti_transpose(const SparseF2Matrix& b);

struct Interval {
    int dim;
    double birth;
    double death; // +infinity for essential classes

    bool operator==(const Interval&) const = default;
    bool operator<(const Interval& o) const;
};

/// Multiset of (dimension, birth, death) intervals, kept sorted.
struct Barcode {
    std::vector<Interval> intervals;

    std::vector<Interval> in_dim(int d) const;
    void sort();
};

/// Reads intervals off a completed reduction. A pair (i, j) yields
/// [value(i), value(j)) in dimension dim(i); an essential k yields
/// [value(k), inf). With drop_zero, empty intervals are removed.
Barcode extract_barcode(const ReductionState& state, std::span<const int> dims,
                        std::span<const double> values, bool drop_zero = true);

Barcode extract_barcode(const ReductionState& state, const FilteredComplex& k,
                        bool drop_zero = true);

/// Betti numbers of the complex ignoring filtration values; entry p counts
/// the essential classes of dimension p. Length top_dim()+1.
std::vector<Index> betti_numbers(const FilteredComplex& k);

/// Text format: `dim birth death` per line, `inf` for essentials, sorted.
Barcode read_barcode(std::istream& in);
void write_barcode(std::ostream& out, const Barcode& b);

} // namespace ph
