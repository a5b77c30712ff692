#include "ph/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace ph {

namespace {

using Row = SparseF2Matrix::Row;

// Symmetric difference of two sorted columns (F2 addition).
void add_into(std::vector<Row>& target, const std::vector<Row>& other,
              std::vector<Row>& scratch) {
    scratch.clear();
    std::set_symmetric_difference(target.begin(), target.end(), other.begin(),
                                  other.end(), std::back_inserter(scratch));
    target.swap(scratch);
}

// Reduces column j against earlier pivots; registers its pivot when found.
void reduce_column(std::vector<std::vector<Row>>& cols, std::vector<Index>& low,
                   std::vector<Index>& pivot_of, Index j,
                   std::vector<Row>& scratch) {
    auto& col = cols[static_cast<std::size_t>(j)];
    while (!col.empty()) {
        Index l = static_cast<Index>(col.back());
        Index other = pivot_of[static_cast<std::size_t>(l)];
        if (other < 0) {
            pivot_of[static_cast<std::size_t>(l)] = j;
            low[static_cast<std::size_t>(j)] = l;
            return;
        }
        add_into(col, cols[static_cast<std::size_t>(other)], scratch);
    }
    low[static_cast<std::size_t>(j)] = -1;
}

} // namespace

void ReductionState::finalize() {
    pairs.clear();
    essentials.clear();
    std::vector<char> in_pair(low.size(), 0);
    for (std::size_t j = 0; j < low.size(); ++j) {
        if (low[j] >= 0) {
            pairs.emplace_back(low[j], static_cast<Index>(j));
            in_pair[static_cast<std::size_t>(low[j])] = 1;
            in_pair[j] = 1;
        }
    }
    for (std::size_t j = 0; j < low.size(); ++j)
        if (!in_pair[j]) essentials.push_back(static_cast<Index>(j));
    std::sort(pairs.begin(), pairs.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
}

ReductionState reduce_standard(const SparseF2Matrix& b) {
    if (b.n > kDefaultSimplexCap)
        throw ComplexTooLarge("matrix exceeds the simplex cap");
    ReductionState st;
    st.reduced = b;
    std::size_t n = st.reduced.size();
    st.low.assign(n, -1);
    std::vector<Index> pivot_of(n, -1);
    std::vector<Row> scratch;
    for (Index j = 0; j < static_cast<Index>(n); ++j)
        reduce_column(st.reduced.columns, st.low, pivot_of, j, scratch);
    st.finalize();
    return st;
}

ReductionState reduce_twist(const SparseF2Matrix& b, std::span<const int> dims) {
    if (b.n > kDefaultSimplexCap)
        throw ComplexTooLarge("matrix exceeds the simplex cap");
    ReductionState st;
    st.reduced = b;
    std::size_t n = st.reduced.size();
    st.low.assign(n, -1);
    std::vector<Index> pivot_of(n, -1);
    std::vector<Row> scratch;
    int max_dim = 0;
    for (int d : dims) max_dim = std::max(max_dim, d);
    for (int d = max_dim; d >= 0; --d) {
        for (Index j = 0; j < static_cast<Index>(n); ++j) {
            if (dims[static_cast<std::size_t>(j)] != d) continue;
            reduce_column(st.reduced.columns, st.low, pivot_of, j, scratch);
            Index l = st.low[static_cast<std::size_t>(j)];
            if (l >= 0) {
                // The paired birth column is a cycle; clear it.
                auto& cleared = st.reduced.columns[static_cast<std::size_t>(l)];
                cleared.clear();
                cleared.shrink_to_fit();
            }
        }
    }
    st.finalize();
    return st;
}

SparseF2Matrix anti_transpose(const SparseF2Matrix& b) {
    SparseF2Matrix at;
    at.n = b.n;
    std::size_t n = b.size();
    std::vector<std::size_t> counts(n, 0);
    for (std::size_t j = 0; j < n; ++j)
        for (Row i : b.columns[j]) counts[n - 1 - static_cast<std::size_t>(i)]++;
    at.columns.resize(n);
    for (std::size_t c = 0; c < n; ++c) at.columns[c].reserve(counts[c]);
    // Walking j downward emits rows n-1-j in increasing order per column.
    for (std::size_t j = n; j-- > 0;)
        for (Row i : b.columns[j])
            at.columns[n - 1 - static_cast<std::size_t>(i)].push_back(
                static_cast<Row>(n - 1 - j));
    return at;
}

ReductionState reduce_dual(const SparseF2Matrix& b, std::span<const int> dims) {
    std::size_t n = b.size();
    int max_dim = 0;
    for (int d : dims) max_dim = std::max(max_dim, d);
    // In the anti-transpose, the column of simplex i sits at n-1-i and its
    // entries live one "codimension level" down, so twist's clearing applies
    // with flipped dimensions.
    std::vector<int> at_dims(n);
    for (std::size_t i = 0; i < n; ++i)
        at_dims[n - 1 - i] = max_dim - dims[i];
    ReductionState at_state = reduce_twist(anti_transpose(b), at_dims);

    ReductionState st;
    st.reduced = std::move(at_state.reduced);
    st.low.assign(n, -1);
    for (const auto& [r, c] : at_state.pairs) {
        Index i = static_cast<Index>(n) - 1 - c;
        Index j = static_cast<Index>(n) - 1 - r;
        st.low[static_cast<std::size_t>(j)] = i;
    }
    st.finalize();
    return st;
}

bool Interval::operator<(const Interval& o) const {
    if (dim != o.dim) return dim < o.dim;
    if (birth != o.birth) return birth < o.birth;
    return death < o.death;
}

std::vector<Interval> Barcode::in_dim(int d) const {
    std::vector<Interval> out;
    for (const auto& iv : intervals)
        if (iv.dim == d) out.push_back(iv);
    return out;
}

void Barcode::sort() { std::sort(intervals.begin(), intervals.end()); }

Barcode extract_barcode(const ReductionState& state, std::span<const int> dims,
                        std::span<const double> values, bool drop_zero) {
    Barcode bc;
    constexpr double inf = std::numeric_limits<double>::infinity();
    for (const auto& [i, j] : state.pairs) {
        double birth = values[static_cast<std::size_t>(i)];
        double death = values[static_cast<std::size_t>(j)];
        if (drop_zero && birth == death) continue;
        bc.intervals.push_back({dims[static_cast<std::size_t>(i)], birth, death});
    }
    for (Index k : state.essentials)
        bc.intervals.push_back(
            {dims[static_cast<std::size_t>(k)], values[static_cast<std::size_t>(k)], inf});
    bc.sort();
    return bc;
}

Barcode extract_barcode(const ReductionState& state, const FilteredComplex& k,
                        bool drop_zero) {
    return extract_barcode(state, k.dims(), k.values(), drop_zero);
}

std::vector<Index> betti_numbers(const FilteredComplex& k) {
    auto dims = k.dims();
    ReductionState st = reduce_twist(boundary_matrix(k), dims);
    std::vector<Index> betti(static_cast<std::size_t>(k.top_dim()) + 1, 0);
    for (Index e : st.essentials) betti[static_cast<std::size_t>(dims[static_cast<std::size_t>(e)])]++;
    return betti;
}

Barcode read_barcode(std::istream& in) {
    Barcode bc;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        int dim;
        if (!(ls >> dim)) continue;
        double birth;
        std::string death_tok;
        if (!(ls >> birth >> death_tok))
            throw IoError("truncated interval at line " + std::to_string(lineno));
        double death;
        if (death_tok == "inf")
            death = std::numeric_limits<double>::infinity();
        else
            death = std::stod(death_tok);
        bc.intervals.push_back({dim, birth, death});
    }
    bc.sort();
    return bc;
}

void write_barcode(std::ostream& out, const Barcode& b) {
    out.precision(17);
    for (const auto& iv : b.intervals) {
        out << iv.dim << ' ' << iv.birth << ' ';
        if (std::isinf(iv.death))
            out << "inf";
        else
            out << iv.death;
        out << '\n';
    }
}

} // namespace ph
