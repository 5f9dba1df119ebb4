#ifndef SYZYGY_SPARSE_MATRIX_HPP
#define SYZYGY_SPARSE_MATRIX_HPP

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "syzygy/errors.hpp"
#include "syzygy/field.hpp"

namespace syzygy {

/// Exact sparse matrix between two based spaces; the carrier of every map in the system.
/// Entries are stored as (row, col, value) triplets with value != 0 and no duplicates.
template <class F>
struct SparseMatrix {
    using Elt = typename F::Elt;

    struct Entry {
        int row;
        int col;
        Elt val;
    };

    int codomain_dim = 0;  // rows
    int domain_dim = 0;    // cols
    std::vector<Entry> entries;
    FieldSpec field;

    SparseMatrix() = default;
    SparseMatrix(int rows, int cols, FieldSpec fs) : codomain_dim(rows), domain_dim(cols), field(fs) {}

    std::size_t nnz() const { return entries.size(); }

    void push(int r, int c, Elt v) { entries.push_back({r, c, std::move(v)}); }

    /// Column-major view: columns[c] sorted by row.
    std::vector<std::vector<std::pair<int, Elt>>> columns() const {
        std::vector<std::vector<std::pair<int, Elt>>> cols(domain_dim);
        for (const auto& e : entries) cols[e.col].emplace_back(e.row, e.val);
        for (auto& c : cols)
            std::sort(c.begin(), c.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return cols;
    }

    SparseMatrix transposed() const {
        SparseMatrix t(domain_dim, codomain_dim, field);
        t.entries.reserve(entries.size());
        for (const auto& e : entries) t.entries.push_back({e.col, e.row, e.val});
        return t;
    }

    void validate(const F& f) const {
        std::vector<std::pair<int, int>> seen;
        seen.reserve(entries.size());
        for (const auto& e : entries) {
            if (e.row < 0 || e.row >= codomain_dim || e.col < 0 || e.col >= domain_dim)
                throw DimensionMismatch("entry out of range");
            if (f.is_zero(e.val)) throw Error("explicit zero entry in sparse matrix");
            seen.emplace_back(e.row, e.col);
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            throw Error("duplicate (row, col) entry in sparse matrix");
    }

    /// y = M x for a sparse x given as (index, value) pairs; result gathered sparse.
    std::vector<std::pair<int, Elt>> apply_columns(
        const F& f, const std::vector<std::vector<std::pair<int, Elt>>>& cols,
        const std::vector<std::pair<int, Elt>>& x) const {
        std::vector<Elt> acc(codomain_dim, f.zero());
        std::vector<int> touched;
        for (const auto& [ci, cv] : x) {
            for (const auto& [r, v] : cols[ci]) {
                if (f.is_zero(acc[r])) touched.push_back(r);
                acc[r] = f.add(acc[r], f.mul(cv, v));
            }
        }
        std::vector<std::pair<int, Elt>> out;
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        for (int r : touched)
            if (!f.is_zero(acc[r])) out.emplace_back(r, acc[r]);
        return out;
    }
};

template <class F>
SparseMatrix<F> identity_matrix(const F& f, int n) {
    SparseMatrix<F> m(n, n, f.spec());
    for (int i = 0; i < n; ++i) m.push(i, i, f.one());
    return m;
}

template <class F>
SparseMatrix<F> zero_matrix(const F& f, int rows, int cols) {
    return SparseMatrix<F>(rows, cols, f.spec());
}

/// B * A as sparse matrices (used for small composite checks, not for large products).
template <class F>
SparseMatrix<F> compose(const F& f, const SparseMatrix<F>& b, const SparseMatrix<F>& a) {
    if (b.domain_dim != a.codomain_dim)
        throw DimensionMismatch("compose: codomain(A) = " + std::to_string(a.codomain_dim) +
                                " but domain(B) = " + std::to_string(b.domain_dim));
    auto bcols = b.columns();
    auto acols = a.columns();
    SparseMatrix<F> out(b.codomain_dim, a.domain_dim, f.spec());
    for (int c = 0; c < a.domain_dim; ++c) {
        auto col = b.apply_columns(f, bcols, acols[c]);
        for (auto& [r, v] : col) out.push(r, c, std::move(v));
    }
    return out;
}

template <class F>
bool is_zero_matrix(const F& f, const SparseMatrix<F>& m) {
    for (const auto& e : m.entries)
        if (!f.is_zero(e.val)) return false;
    return true;
}

template <class F>
bool equal_matrices(const F& f, const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
    if (a.codomain_dim != b.codomain_dim || a.domain_dim != b.domain_dim) return false;
    auto ac = a.columns(), bc = b.columns();
    for (int c = 0; c < a.domain_dim; ++c) {
        if (ac[c].size() != bc[c].size()) return false;
        for (std::size_t k = 0; k < ac[c].size(); ++k)
            if (ac[c][k].first != bc[c][k].first || !f.is_zero(f.sub(ac[c][k].second, bc[c][k].second)))
                return false;
    }
    return true;
}

/// Integer triplet description of a map given by a universal formula; materialized
/// over any field (entries that vanish in the field are dropped).
struct IntMatrix {
    int codomain_dim = 0;
    int domain_dim = 0;
    std::vector<std::tuple<int, int, std::int64_t>> entries;

    void push(int r, int c, std::int64_t v) {
        if (v != 0) entries.emplace_back(r, c, v);
    }

    template <class F>
    SparseMatrix<F> over(const F& f) const {
        SparseMatrix<F> m(codomain_dim, domain_dim, f.spec());
        for (const auto& [r, c, v] : entries) {
            auto x = f.from_int(v);
            if (!f.is_zero(x)) m.push(r, c, x);
        }
        return m;
    }
};

}  // namespace syzygy

#endif
