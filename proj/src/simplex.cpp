#include "ph/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace ph {

namespace {

// C(n, k) saturating at uint64 max.
std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        std::uint64_t num = n - k + i;
        if (r > std::numeric_limits<std::uint64_t>::max() / num)
            return std::numeric_limits<std::uint64_t>::max();
        r = r * num / i;
    }
    return r;
}

std::string to_string(const Simplex& s) {
    std::ostringstream os;
    os << s;
    return os.str();
}

} // namespace

Simplex::Simplex(std::initializer_list<VertexId> vs) : verts_(vs) { normalize(); }

Simplex::Simplex(std::vector<VertexId> vs) : verts_(vs.begin(), vs.end()) { normalize(); }

Simplex::Simplex(Storage vs) : verts_(std::move(vs)) { normalize(); }

void Simplex::normalize() {
    if (verts_.empty()) throw BadParams("simplex must be non-empty");
    std::sort(verts_.begin(), verts_.end());
    for (std::size_t i = 0; i + 1 < verts_.size(); ++i)
        if (verts_[i] == verts_[i + 1])
            throw BadParams("simplex has repeated vertex");
    if (verts_.front() < 0) throw BadParams("vertex ids must be non-negative");
}

std::vector<Simplex> Simplex::facets() const {
    std::vector<Simplex> out;
    if (dim() == 0) return out;
    out.reserve(verts_.size());
    for (std::size_t skip = 0; skip < verts_.size(); ++skip) {
        Storage f;
        f.reserve(verts_.size() - 1);
        for (std::size_t i = 0; i < verts_.size(); ++i)
            if (i != skip) f.push_back(verts_[i]);
        out.emplace_back(std::move(f));
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Simplex& s) {
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) os << ',';
        os << s[i];
    }
    return os << '}';
}

std::uint64_t simplex_rank(const Simplex& s) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        r += binom(static_cast<std::uint64_t>(s[i]), i + 1);
    return r;
}

Simplex simplex_unrank(std::uint64_t rank, int dim) {
    Simplex::Storage verts(static_cast<std::size_t>(dim) + 1, 0);
    for (int i = dim; i >= 0; --i) {
        // Largest v with C(v, i+1) <= rank.
        std::uint64_t lo = i, hi = i;
        while (binom(hi + 1, i + 1) <= rank) hi = hi * 2 + 1;
        while (lo < hi) {
            std::uint64_t mid = lo + (hi - lo + 1) / 2;
            if (binom(mid, i + 1) <= rank)
                lo = mid;
            else
                hi = mid - 1;
        }
        verts[static_cast<std::size_t>(i)] = static_cast<VertexId>(lo);
        rank -= binom(lo, i + 1);
    }
    return Simplex(std::move(verts));
}

bool simplex_rank_fits(VertexId max_vertex, int dim) {
    if (max_vertex < 0) return true;
    std::uint64_t top = binom(static_cast<std::uint64_t>(max_vertex) + 1,
                              static_cast<std::uint64_t>(dim) + 1);
    return top != std::numeric_limits<std::uint64_t>::max();
}

namespace {

bool filtration_less(const FilteredSimplex& a, const FilteredSimplex& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.simplex.dim() != b.simplex.dim()) return a.simplex.dim() < b.simplex.dim();
    return a.simplex < b.simplex;
}

} // namespace

FilteredComplex::FilteredComplex(std::vector<FilteredSimplex> cells, Unchecked)
    : cells_(std::move(cells)) {
    build_lookup();
}

int FilteredComplex::top_dim() const {
    int d = -1;
    for (const auto& c : cells_) d = std::max(d, c.simplex.dim());
    return d;
}

void FilteredComplex::build_lookup() {
    int td = top_dim();
    rank_lookup_.assign(static_cast<std::size_t>(td + 1), {});
    lex_lookup_.assign(static_cast<std::size_t>(td + 1), {});

    VertexId max_v = -1;
    for (const auto& c : cells_)
        max_v = std::max(max_v, c.simplex.vertices().back());
    use_ranks_ = simplex_rank_fits(max_v, td);

    if (use_ranks_) {
        for (Index i = 0; i < size(); ++i)
            rank_lookup_[static_cast<std::size_t>(dim(i))].emplace_back(
                simplex_rank(cells_[i].simplex), i);
        for (auto& v : rank_lookup_) {
            std::sort(v.begin(), v.end());
            v.shrink_to_fit();
        }
    } else {
        for (Index i = 0; i < size(); ++i)
            lex_lookup_[static_cast<std::size_t>(dim(i))].push_back(i);
        for (auto& v : lex_lookup_)
            std::sort(v.begin(), v.end(), [this](Index a, Index b) {
                return cells_[a].simplex < cells_[b].simplex;
            });
    }
}

Index FilteredComplex::index_of(const Simplex& s) const {
    std::size_t d = static_cast<std::size_t>(s.dim());
    if (d >= (use_ranks_ ? rank_lookup_.size() : lex_lookup_.size())) return -1;
    if (use_ranks_) {
        const auto& table = rank_lookup_[d];
        std::uint64_t r = simplex_rank(s);
        auto it = std::lower_bound(table.begin(), table.end(),
                                   std::make_pair(r, Index{-1}));
        if (it == table.end() || it->first != r) return -1;
        return it->second;
    }
    const auto& table = lex_lookup_[d];
    auto it = std::lower_bound(table.begin(), table.end(), s,
                               [this](Index a, const Simplex& q) {
                                   return cells_[a].simplex < q;
                               });
    if (it == table.end() || !(cells_[*it].simplex == s)) return -1;
    return *it;
}

std::vector<int> FilteredComplex::dims() const {
    std::vector<int> out(static_cast<std::size_t>(size()));
    for (Index i = 0; i < size(); ++i) out[static_cast<std::size_t>(i)] = dim(i);
    return out;
}

std::vector<double> FilteredComplex::values() const {
    std::vector<double> out(static_cast<std::size_t>(size()));
    for (Index i = 0; i < size(); ++i) out[static_cast<std::size_t>(i)] = value(i);
    return out;
}

FilteredComplex make_complex(std::vector<FilteredSimplex> cells) {
    if (cells.empty()) throw BadParams("complex must be non-empty");
    for (const auto& c : cells)
        if (!std::isfinite(c.value))
            throw BadParams("filtration values must be finite");
    std::sort(cells.begin(), cells.end(), filtration_less);
    for (std::size_t i = 0; i + 1 < cells.size(); ++i)
        if (cells[i].simplex == cells[i + 1].simplex)
            throw BadParams("duplicate simplex " + to_string(cells[i].simplex));

    FilteredComplex k(std::move(cells), FilteredComplex::Unchecked{});
    for (Index j = 0; j < k.size(); ++j) {
        if (k.dim(j) == 0) continue;
        for (const Simplex& f : k.simplex(j).facets()) {
            Index i = k.index_of(f);
            if (i < 0)
                throw MissingFace("missing face " + to_string(f) + " of " +
                                  to_string(k.simplex(j)));
            if (k.value(i) > k.value(j))
                throw NonMonotone("face " + to_string(f) + " enters after " +
                                  to_string(k.simplex(j)));
        }
    }
    return k;
}

FilteredComplex close_complex(std::vector<FilteredSimplex> cells) {
    std::map<Simplex, double> values;
    for (auto& c : cells) {
        auto [it, inserted] = values.emplace(c.simplex, c.value);
        if (!inserted) it->second = std::min(it->second, c.value);
    }
    // Walk top-down; a missing face enters no later than its earliest coface.
    bool changed = true;
    while (changed) {
        changed = false;
        std::map<Simplex, double> add;
        for (const auto& [s, v] : values) {
            if (s.dim() == 0) continue;
            for (const Simplex& f : s.facets()) {
                auto it = values.find(f);
                if (it != values.end()) {
                    if (it->second > v) {
                        it->second = v;
                        changed = true;
                    }
                } else {
                    auto [ait, inserted] = add.emplace(f, v);
                    if (!inserted) ait->second = std::min(ait->second, v);
                }
            }
        }
        if (!add.empty()) changed = true;
        for (auto& [s, v] : add) values.emplace(s, v);
    }
    std::vector<FilteredSimplex> out;
    out.reserve(values.size());
    for (auto& [s, v] : values) out.push_back({s, v});
    return make_complex(std::move(out));
}

SparseF2Matrix boundary_matrix(const FilteredComplex& k) {
    SparseF2Matrix b;
    b.n = k.size();
    b.columns.resize(static_cast<std::size_t>(k.size()));
    for (Index j = 0; j < k.size(); ++j) {
        if (k.dim(j) == 0) continue;
        auto& col = b.columns[static_cast<std::size_t>(j)];
        col.reserve(static_cast<std::size_t>(k.dim(j)) + 1);
        for (const Simplex& f : k.simplex(j).facets())
            col.push_back(static_cast<SparseF2Matrix::Row>(k.index_of(f)));
        std::sort(col.begin(), col.end());
    }
    return b;
}

long long euler_characteristic(const FilteredComplex& k) {
    long long chi = 0;
    for (Index i = 0; i < k.size(); ++i) chi += (k.dim(i) % 2 == 0) ? 1 : -1;
    return chi;
}

FilteredComplex read_complex(std::istream& in) {
    std::vector<FilteredSimplex> cells;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        int dim;
        if (!(ls >> dim)) continue; // blank or comment line
        if (dim < 0) throw IoError("bad dimension at line " + std::to_string(lineno));
        std::vector<VertexId> verts(static_cast<std::size_t>(dim) + 1);
        for (auto& v : verts)
            if (!(ls >> v)) throw IoError("truncated simplex at line " + std::to_string(lineno));
        double value;
        if (!(ls >> value)) throw IoError("missing value at line " + std::to_string(lineno));
        cells.push_back({Simplex(std::move(verts)), value});
    }
    return make_complex(std::move(cells));
}

void write_complex(std::ostream& out, const FilteredComplex& k) {
    out.precision(17);
    for (Index i = 0; i < k.size(); ++i) {
        out << k.dim(i);
        for (std::size_t v = 0; v < k.simplex(i).size(); ++v)
            out << ' ' << k.simplex(i)[v];
        out << ' ' << k.value(i) << '\n';
    }
}

} // namespace ph
