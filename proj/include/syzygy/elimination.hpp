#ifndef SYZYGY_ELIMINATION_HPP
#define SYZYGY_ELIMINATION_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <vector>

#include <gmpxx.h>

#include "syzygy/errors.hpp"
#include "syzygy/sparse_matrix.hpp"

namespace syzygy {

template <class F>
using SparseVec = std::vector<std::pair<int, typename F::Elt>>;  // (row, value), sorted by row

/// Streaming left-looking column eliminator.  Columns are fed one at a time and
/// reduced against the pivot columns accumulated so far; each pivot column is
/// normalized to value 1 at its pivot row and has zeros at the pivot rows of all
/// earlier pivots, so reductions apply pivots in insertion order.
template <class F>
class ColumnReducer {
  public:
    ColumnReducer(const F& field, int rows, bool track_combos = false)
        : f_(&field), rows_(rows), track_(track_combos),
          pivot_at_row_(rows, -1), acc_(rows, field.zero()), stamp_(rows, 0) {}

    int rows() const { return rows_; }
    int rank() const { return static_cast<int>(pivots_.size()); }
    const SparseVec<F>& pivot_column(int k) const { return pivots_[k].col; }
    int pivot_row(int k) const { return pivots_[k].row; }

    /// Feed one column.  Returns true if it became a new pivot.  When `coeffs` is
    /// non-null it receives the multipliers c_k over existing pivots such that
    /// input = sum c_k * pivot_k (+ new pivot contribution if independent).
    bool add_column(const SparseVec<F>& col, std::vector<std::pair<int, typename F::Elt>>* coeffs = nullptr) {
        scatter(col);
        reduce_in_place(coeffs);
        return finish_as_pivot();
    }

    /// Reduce a vector without inserting it.  Returns the residual (empty iff in span).
    SparseVec<F> reduce(const SparseVec<F>& col,
                        std::vector<std::pair<int, typename F::Elt>>* coeffs = nullptr) {
        scatter(col);
        reduce_in_place(coeffs);
        SparseVec<F> res = gather();
        clear_workspace();
        return res;
    }

    /// Expression of pivot k as a combination of the original fed columns
    /// (available only when constructed with track_combos).
    const std::vector<std::pair<int, typename F::Elt>>& pivot_combo(int k) const { return pivots_[k].combo; }

    /// Combination of original columns that witnessed the last dependent add_column
    /// (the kernel vector, with the fed column itself carrying coefficient 1).
    const std::vector<std::pair<int, typename F::Elt>>& last_kernel_combo() const { return last_kernel_; }

    void note_fed_index(int original_index) { fed_index_ = original_index; }

  private:
    using Elt = typename F::Elt;

    struct Pivot {
        SparseVec<F> col;
        int row;
        std::vector<std::pair<int, Elt>> combo;  // over original column indices
    };

    void scatter(const SparseVec<F>& col) {
        ++cur_stamp_;
        touched_.clear();
        for (const auto& [r, v] : col) {
            if (r < 0 || r >= rows_) throw DimensionMismatch("column row index out of range");
            acc_[r] = v;
            stamp_[r] = cur_stamp_;
            touched_.push_back(r);
        }
    }

    Elt at(int r) const { return stamp_[r] == cur_stamp_ ? acc_[r] : f_->zero(); }

    void set(int r, Elt v) {
        if (stamp_[r] != cur_stamp_) {
            stamp_[r] = cur_stamp_;
            touched_.push_back(r);
        }
        acc_[r] = std::move(v);
    }

    void reduce_in_place(std::vector<std::pair<int, Elt>>* coeffs) {
        if (coeffs) coeffs->clear();
        if (track_) combo_work_.assign(0, {});
        // min-heap over pivot insertion indices whose pivot row is currently hit
        std::priority_queue<int, std::vector<int>, std::greater<int>> heap;
        for (int r : touched_)
            if (pivot_at_row_[r] >= 0 && !f_->is_zero(acc_[r])) heap.push(pivot_at_row_[r]);
        if (track_) combo_accum_.clear();
        while (!heap.empty()) {
            int k = heap.top();
            heap.pop();
            int prow = pivots_[k].row;
            Elt c = at(prow);
            if (f_->is_zero(c)) continue;  // stale entry
            // subtract c * pivot_k
            for (const auto& [r, v] : pivots_[k].col) {
                Elt nv = f_->sub(at(r), f_->mul(c, v));
                set(r, std::move(nv));
                if (r != prow && pivot_at_row_[r] >= 0 && pivot_at_row_[r] > k && !f_->is_zero(acc_[r]))
                    heap.push(pivot_at_row_[r]);
            }
            if (coeffs) coeffs->emplace_back(k, c);
            if (track_) combo_accum_.emplace_back(k, c);
        }
    }

    SparseVec<F> gather() {
        SparseVec<F> out;
        std::sort(touched_.begin(), touched_.end());
        for (int r : touched_)
            if (stamp_[r] == cur_stamp_ && !f_->is_zero(acc_[r])) out.emplace_back(r, acc_[r]);
        return out;
    }

    void clear_workspace() { ++cur_stamp_; }

    bool finish_as_pivot() {
        SparseVec<F> res = gather();
        clear_workspace();
        if (res.empty()) {
            if (track_) {
                last_kernel_.clear();
                last_kernel_.emplace_back(fed_index_, f_->one());
                for (const auto& [k, c] : combo_accum_)
                    axpy_combo(last_kernel_, f_->neg(c), pivots_[k].combo);
            }
            return false;
        }
        // pivot row choice: least-used row so far, ties by smallest index
        int best = res.front().first;
        std::size_t best_use = row_use_.size() > static_cast<std::size_t>(best) ? row_use_[best] : 0;
        for (const auto& [r, v] : res) {
            std::size_t use = row_use_.size() > static_cast<std::size_t>(r) ? row_use_[r] : 0;
            if (use < best_use || (use == best_use && r < best)) {
                best = r;
                best_use = use;
            }
        }
        Elt pv = f_->zero();
        for (const auto& [r, v] : res)
            if (r == best) pv = v;
        Elt pinv = f_->inv(pv);
        for (auto& [r, v] : res) v = f_->mul(v, pinv);
        if (row_use_.size() < static_cast<std::size_t>(rows_)) row_use_.assign(rows_, 0);
        for (const auto& [r, v] : res) ++row_use_[r];
        Pivot p;
        p.col = std::move(res);
        p.row = best;
        if (track_) {
            p.combo.emplace_back(fed_index_, pinv);
            for (const auto& [k, c] : combo_accum_)
                axpy_combo(p.combo, f_->neg(f_->mul(c, pinv)), pivots_[k].combo);
        }
        pivot_at_row_[best] = static_cast<int>(pivots_.size());
        pivots_.push_back(std::move(p));
        return true;
    }

    void axpy_combo(std::vector<std::pair<int, Elt>>& dst, const Elt& c,
                    const std::vector<std::pair<int, Elt>>& src) {
        // dst += c * src, both sorted by index
        std::vector<std::pair<int, Elt>> out;
        out.reserve(dst.size() + src.size());
        std::size_t i = 0, j = 0;
        while (i < dst.size() || j < src.size()) {
            if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
                out.push_back(dst[i++]);
            } else if (i == dst.size() || src[j].first < dst[i].first) {
                out.emplace_back(src[j].first, f_->mul(c, src[j].second));
                ++j;
            } else {
                Elt v = f_->add(dst[i].second, f_->mul(c, src[j].second));
                if (!f_->is_zero(v)) out.emplace_back(dst[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        dst = std::move(out);
    }

    const F* f_;
    int rows_;
    bool track_;
    std::vector<Pivot> pivots_;
    std::vector<int> pivot_at_row_;
    std::vector<std::size_t> row_use_;
    std::vector<Elt> acc_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t cur_stamp_ = 0;
    std::vector<int> touched_;
    std::vector<std::pair<int, Elt>> combo_accum_;
    std::vector<std::pair<int, Elt>> combo_work_;
    std::vector<std::pair<int, Elt>> last_kernel_;
    int fed_index_ = -1;
};

/// Right-looking sparse Gaussian elimination with Markowitz-style pivoting:
/// pivots are searched in columns of minimal fill-degree, then rows of minimal
/// count within that column.
template <class F>
std::size_t markowitz_rank(const F& f, const SparseMatrix<F>& m) {
    using Elt = typename F::Elt;
    const int nrows = m.codomain_dim;
    const int ncols = m.domain_dim;
    auto cols = m.columns();

    std::vector<int> col_cnt(ncols, 0), row_cnt(nrows, 0);
    std::vector<std::vector<int>> row_cols(nrows);
    for (int c = 0; c < ncols; ++c) {
        col_cnt[c] = static_cast<int>(cols[c].size());
        for (auto& [r, v] : cols[c]) {
            ++row_cnt[r];
            row_cols[r].push_back(c);
        }
    }
    std::vector<bool> col_dead(ncols, false), row_dead(nrows, false);

    using QE = std::pair<int, int>;  // (count, col)
    std::priority_queue<QE, std::vector<QE>, std::greater<QE>> pq;
    for (int c = 0; c < ncols; ++c)
        if (col_cnt[c] > 0) pq.push({col_cnt[c], c});

    std::vector<Elt> acc(nrows, f.zero());
    std::vector<std::uint32_t> stamp(nrows, 0);
    std::uint32_t cur = 0;

    std::size_t rank = 0;
    while (!pq.empty()) {
        auto [cnt, pc] = pq.top();
        pq.pop();
        if (col_dead[pc] || col_cnt[pc] != cnt || cnt == 0) continue;

        // pick entry with minimal live row count
        int prow = -1;
        int best = INT32_MAX;
        for (auto& [r, v] : cols[pc]) {
            if (row_dead[r]) continue;
            if (row_cnt[r] < best || (row_cnt[r] == best && r < prow)) {
                best = row_cnt[r];
                prow = r;
            }
        }
        if (prow < 0) {
            col_dead[pc] = true;
            continue;
        }

        ++rank;

        // normalized live pivot column
        SparseVec<F> piv;
        Elt pval = f.zero();
        for (auto& [r, v] : cols[pc])
            if (!row_dead[r]) {
                piv.emplace_back(r, v);
                if (r == prow) pval = v;
            }
        Elt pinv = f.inv(pval);
        for (auto& [r, v] : piv) v = f.mul(v, pinv);

        col_dead[pc] = true;
        for (auto& [r, v] : piv) --row_cnt[r];
        row_dead[prow] = true;

        // eliminate prow from every other live column touching it
        std::vector<int> targets;
        targets.swap(row_cols[prow]);
        for (int c : targets) {
            if (c == pc || col_dead[c]) continue;
            Elt lead = f.zero();
            bool hit = false;
            for (auto& [r, v] : cols[c])
                if (r == prow) {
                    lead = v;
                    hit = true;
                    break;
                }
            if (!hit) continue;  // stale adjacency entry
            ++cur;
            std::vector<int> support;
            support.reserve(cols[c].size() + piv.size());
            for (auto& [r, v] : cols[c]) {
                if (row_dead[r]) continue;
                acc[r] = v;
                stamp[r] = cur;
                support.push_back(r);
            }
            for (auto& [r, v] : piv) {
                if (row_dead[r]) continue;
                bool was_nonzero = stamp[r] == cur && !f.is_zero(acc[r]);
                Elt old = stamp[r] == cur ? acc[r] : f.zero();
                Elt nv = f.sub(old, f.mul(lead, v));
                if (stamp[r] != cur) {
                    stamp[r] = cur;
                    support.push_back(r);
                }
                acc[r] = std::move(nv);
                bool now_nonzero = !f.is_zero(acc[r]);
                if (!was_nonzero && now_nonzero) {
                    row_cols[r].push_back(c);
                    ++row_cnt[r];
                } else if (was_nonzero && !now_nonzero && row_cnt[r] > 0) {
                    --row_cnt[r];
                }
            }
            SparseVec<F> nc;
            nc.reserve(support.size());
            std::sort(support.begin(), support.end());
            for (int r : support)
                if (!f.is_zero(acc[r])) nc.emplace_back(r, acc[r]);
            cols[c] = std::move(nc);
            col_cnt[c] = static_cast<int>(cols[c].size());
            if (col_cnt[c] > 0) pq.push({col_cnt[c], c});
        }
        cols[pc].clear();
        col_cnt[pc] = 0;
    }
    return rank;
}

/// Rank by streaming the columns through a ColumnReducer; used both as an
/// independent engine and for generator-fed column blocks.
template <class F>
std::size_t left_looking_rank(const F& f, const SparseMatrix<F>& m) {
    ColumnReducer<F> red(f, m.codomain_dim);
    auto cols = m.columns();
    for (auto& c : cols) red.add_column(c);
    return static_cast<std::size_t>(red.rank());
}

/// Union-find split of a matrix into independent row/column blocks; the rank is
/// the sum of block ranks.  Weight-graded matrices fall apart for free here.
template <class F>
std::vector<SparseMatrix<F>> split_components(const F&, const SparseMatrix<F>& m) {
    const int n = m.codomain_dim + m.domain_dim;  // rows then cols
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[a] = b;
    };
    for (const auto& e : m.entries) unite(e.row, m.codomain_dim + e.col);

    std::vector<int> comp_of(n, -1);
    int ncomp = 0;
    for (const auto& e : m.entries) {
        int root = find(e.row);
        if (comp_of[root] < 0) comp_of[root] = ncomp++;
    }
    if (ncomp <= 1) return {m};

    std::vector<SparseMatrix<F>> blocks(ncomp);
    std::vector<int> row_map(m.codomain_dim, -1), col_map(m.domain_dim, -1);
    for (auto& b : blocks) b.field = m.field;
    for (const auto& e : m.entries) {
        int k = comp_of[find(e.row)];
        auto& b = blocks[k];
        if (row_map[e.row] < 0) row_map[e.row] = b.codomain_dim++;
        if (col_map[e.col] < 0) col_map[e.col] = b.domain_dim++;
        b.push(row_map[e.row], col_map[e.col], e.val);
    }
    return blocks;
}

/// Fraction-free Bareiss elimination over the integers; the exact char-0 rank
/// certificate for small matrices.  Rational input rows are scaled integral first.
inline std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> a) {
    const std::size_t nr = a.size();
    if (nr == 0) return 0;
    const std::size_t nc = a[0].size();
    mpz_class prev = 1;
    std::size_t rank = 0;
    std::vector<std::size_t> live_cols(nc);
    for (std::size_t j = 0; j < nc; ++j) live_cols[j] = j;

    for (std::size_t k = 0; rank < nr && k < nc; ++k) {
        // pivot search in the remaining submatrix
        std::size_t pi = nr, pj = nc;
        for (std::size_t i = rank; i < nr && pi == nr; ++i)
            for (std::size_t j = k; j < nc; ++j)
                if (a[i][j] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == nr) break;
        std::swap(a[rank], a[pi]);
        if (pj != k)
            for (std::size_t i = 0; i < nr; ++i) std::swap(a[i][k], a[i][pj]);
        for (std::size_t i = rank + 1; i < nr; ++i) {
            for (std::size_t j = k + 1; j < nc; ++j) {
                mpz_class num = a[rank][k] * a[i][j] - a[i][k] * a[rank][j];
                mpz_class q;
                mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = q;
            }
            a[i][k] = 0;
        }
        prev = a[rank][k];
        ++rank;
    }
    return rank;
}

inline std::size_t bareiss_rank_q(const SparseMatrix<RatField>& m) {
    std::vector<std::vector<mpz_class>> a(m.codomain_dim, std::vector<mpz_class>(m.domain_dim, 0));
    std::vector<mpz_class> denom(m.codomain_dim, 1);
    for (const auto& e : m.entries) denom[e.row] = lcm(denom[e.row], e.val.get_den());
    for (const auto& e : m.entries) {
        mpq_class scaled = e.val * mpq_class(denom[e.row]);
        a[e.row][e.col] = scaled.get_num();
    }
    return bareiss_rank(std::move(a));
}

/// Berlekamp-Massey over F_p.  Returns (L, C) where C(x) = 1 + c_1 x + ... + c_L x^L
/// is the connection polynomial of the shortest LFSR generating the sequence; the
/// minimal polynomial of the projected operator is x^L + c_1 x^{L-1} + ... + c_L.
inline std::pair<std::size_t, std::vector<std::uint64_t>> berlekamp_massey(
    const FpField& f, const std::vector<std::uint64_t>& s) {
    std::vector<std::uint64_t> C{1}, B{1};
    std::size_t L = 0, m = 1;
    std::uint64_t b = 1;
    for (std::size_t n = 0; n < s.size(); ++n) {
        std::uint64_t d = s[n];
        for (std::size_t i = 1; i <= L && i < C.size(); ++i) d = f.add(d, f.mul(C[i], s[n - i]));
        if (f.is_zero(d)) {
            ++m;
            continue;
        }
        std::uint64_t coef = f.div(d, b);
        if (2 * L <= n) {
            auto T = C;
            if (C.size() < B.size() + m) C.resize(B.size() + m, 0);
            for (std::size_t i = 0; i < B.size(); ++i) C[i + m] = f.sub(C[i + m], f.mul(coef, B[i]));
            L = n + 1 - L;
            B = std::move(T);
            b = d;
            m = 1;
        } else {
            if (C.size() < B.size() + m) C.resize(B.size() + m, 0);
            for (std::size_t i = 0; i < B.size(); ++i) C[i + m] = f.sub(C[i + m], f.mul(coef, B[i]));
            ++m;
        }
    }
    C.resize(L + 1, 0);
    return {L, C};
}

struct WiedemannOptions {
    std::uint64_t seed = 1;
    int trials = 2;
};

/// Monte Carlo black-box rank over F_p (Kaltofen-Saunders style): the rank is the
/// degree of the minimal polynomial of D2 A^T D1 A D2, minus one if its constant
/// term vanishes.  Deterministic for a fixed seed; certified only by cross-checks.
std::size_t wiedemann_rank(const FpField& f, const SparseMatrix<FpField>& m, const WiedemannOptions& opt);

}  // namespace syzygy

#endif
