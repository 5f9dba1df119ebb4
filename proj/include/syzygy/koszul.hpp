#ifndef SYZYGY_KOSZUL_HPP
#define SYZYGY_KOSZUL_HPP

#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <thread>
#include <vector>

#include "syzygy/betti_table.hpp"
#include "syzygy/combinatorics.hpp"
#include "syzygy/section_ring.hpp"

namespace syzygy {

struct EngineOptions {
    int jobs = 1;
    bool certify_complex = true;  // check B o A = 0 at every cell
    RankOptions rank_options;
    // above this estimated nonzero count the differential is streamed column by
    // column into the eliminator instead of being materialized
    std::size_t stream_nnz_threshold = 25'000'000;
};

/// Koszul cells of a section-ring model:
///   Wedge^{p+1}V (x) R_{q-1} --delta--> Wedge^pV (x) R_q --delta--> Wedge^{p-1}V (x) R_{q+1}
/// with delta(v_{i0} ^ ... ^ v_{ip} (x) f) = sum_j (-1)^j v_{...^j...} (x) (v_{ij} f).
/// kappa_{p,q} is the homology dimension at the middle.
template <class F>
class KoszulEngine {
  public:
    KoszulEngine(const F& f, const SectionRingModel<F>& model, EngineOptions opts = {})
        : f_(&f), model_(&model), opts_(opts) {}

    long cell_dim(int p, int q) const {
        if (q < 0 || p < 0 || p > model_->dim_v()) return 0;
        return binomial(model_->dim_v(), p) * model_->piece_dim(q);
    }

    /// Differential out of (p, q).  Zero map when either side is trivial.
    SparseMatrix<F> differential(int p, int q) const {
        const int nv = model_->dim_v();
        const long rows = p >= 1 ? cell_dim(p - 1, q + 1) : 0;
        SparseMatrix<F> out(static_cast<int>(rows), static_cast<int>(cell_dim(p, q)), f_->spec());
        if (p < 1 || p > nv || cell_dim(p, q) == 0 || rows == 0) return out;
        build_columns(p, q, [&](int col, const SparseVec<F>& column) {
            for (const auto& [r, v] : column) out.push(r, col, v);
        });
        return out;
    }

    /// rank of differential(p, q), cached; streams columns for very large cells.
    long diff_rank(int p, int q) const {
        const int nv = model_->dim_v();
        if (p < 1 || p > nv || q < 0 || cell_dim(p, q) == 0 || cell_dim(p - 1, q + 1) == 0) return 0;
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = rank_cache_.find({p, q});
            if (it != rank_cache_.end()) return it->second;
        }
        long r;
        std::size_t est = estimated_nnz(p, q);
        if (est > opts_.stream_nnz_threshold) {
            ColumnReducer<F> red(*f_, static_cast<int>(cell_dim(p - 1, q + 1)));
            build_columns(p, q, [&](int, const SparseVec<F>& column) { red.add_column(column); });
            r = red.rank();
        } else {
            r = static_cast<long>(rank(*f_, differential(p, q), opts_.rank_options));
        }
        std::lock_guard<std::mutex> lock(mu_);
        rank_cache_[{p, q}] = r;
        return r;
    }

    /// kappa_{p,q}; certifies the complex property at the cell unless disabled.
    long betti(int p, int q) const {
        if (q < 0 || p < 0) throw InvalidRange("betti expects p, q >= 0");
        if (q + 1 > model_->max_degree())
            throw PieceUnavailable("betti(" + std::to_string(p) + "," + std::to_string(q) +
                                   ") needs the model through degree " + std::to_string(q + 1));
        if (opts_.certify_complex) certify_cell(p, q);
        long middle = cell_dim(p, q);
        return middle - diff_rank(p, q) - diff_rank(p + 1, q - 1);
    }

    /// Full grid 0 <= p <= p_max, 0 <= q <= q_max with the differential ranks
    /// evaluated by a worker pool and assembled deterministically.
    std::map<std::pair<int, int>, long> table_values(int p_max, int q_max) const {
        std::vector<std::pair<int, int>> diffs;
        for (int q = 0; q <= q_max; ++q)
            for (int p = 1; p <= p_max + 1; ++p)
                if (p <= model_->dim_v() && cell_dim(p, q) != 0 && cell_dim(p - 1, q + 1) != 0)
                    diffs.emplace_back(p, q);
        // heaviest first so the pool stays busy
        std::sort(diffs.begin(), diffs.end(), [&](auto a, auto b) {
            return estimated_nnz(a.first, a.second) > estimated_nnz(b.first, b.second);
        });
        const int jobs = std::max(1, opts_.jobs);
        if (jobs > 1) {
            std::atomic<std::size_t> next{0};
            std::vector<std::thread> pool;
            for (int t = 0; t < jobs; ++t)
                pool.emplace_back([&] {
                    for (;;) {
                        std::size_t k = next.fetch_add(1);
                        if (k >= diffs.size()) return;
                        diff_rank(diffs[k].first, diffs[k].second);
                    }
                });
            for (auto& th : pool) th.join();
        }
        std::map<std::pair<int, int>, long> out;
        for (int q = 0; q <= q_max; ++q)
            for (int p = 0; p <= p_max; ++p) out[{p, q}] = betti(p, q);
        return out;
    }

  private:
    std::size_t estimated_nnz(int p, int q) const {
        if (p < 1 || q < 0) return 0;
        std::size_t per_block = model_->piece_dim(q + 1) == 0
                                    ? 0
                                    : model_->mult(q).nnz() / std::max<long>(1, model_->dim_v() * model_->piece_dim(q));
        return static_cast<std::size_t>(cell_dim(p, q)) * p * std::max<std::size_t>(1, per_block);
    }

    template <class Sink>
    void build_columns(int p, int q, Sink&& sink) const {
        const int nv = model_->dim_v();
        const long dim_rq = model_->piece_dim(q);
        const long dim_rq1 = model_->piece_dim(q + 1);
        auto mult_cols = model_->mult(q).columns();

        std::vector<int> subset = first_subset(p);
        long srank = 0;
        SparseVec<F> column;
        do {
            // ranks of the deletions S \ {s_j}
            std::vector<long> del_rank(p);
            std::vector<int> t(p - 1);
            for (int j = 0; j < p; ++j) {
                int w = 0;
                for (int i = 0; i < p; ++i)
                    if (i != j) t[w++] = subset[i];
                del_rank[j] = subset_rank(t, nv);
            }
            for (long fi = 0; fi < dim_rq; ++fi) {
                column.clear();
                for (int j = 0; j < p; ++j) {
                    bool negative = (j % 2) != 0;
                    const auto& prod = mult_cols[subset[j] * dim_rq + fi];
                    for (const auto& [g, c] : prod)
                        column.emplace_back(static_cast<int>(del_rank[j] * dim_rq1 + g),
                                            negative ? f_->neg(c) : c);
                }
                std::sort(column.begin(), column.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                sink(static_cast<int>(srank * dim_rq + fi), column);
            }
            ++srank;
        } while (next_subset(subset, nv));
    }

    void certify_cell(int p, int q) const {
        if (q < 1 || p + 1 > model_->dim_v()) return;
        if (cell_dim(p + 1, q - 1) == 0 || cell_dim(p, q) == 0 || cell_dim(p - 1, q + 1) == 0) return;
        {
            std::lock_guard<std::mutex> lock(mu_);
            if (certified_.count({p, q})) return;
        }
        auto b = differential(p, q);
        auto bcols = b.columns();
        bool ok = true;
        build_columns(p + 1, q - 1, [&](int col, const SparseVec<F>& acol) {
            if (!ok) return;
            if (!b.apply_columns(*f_, bcols, acol).empty()) {
                ok = false;
                throw CompositionNotZero("Koszul cell (" + std::to_string(p) + "," + std::to_string(q) +
                                         ") column " + std::to_string(col));
            }
        });
        std::lock_guard<std::mutex> lock(mu_);
        certified_.insert({p, q});
    }

    const F* f_;
    const SectionRingModel<F>* model_;
    EngineOptions opts_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<int, int>, long> rank_cache_;
    mutable std::set<std::pair<int, int>> certified_;
};

/// kappa_{p,q} of a model in one call.
template <class F>
long koszul_betti(const F& f, const SectionRingModel<F>& model, int p, int q,
                  const EngineOptions& opts = {}) {
    KoszulEngine<F> eng(f, model, opts);
    return eng.betti(p, q);
}

/// kappa_{p,q} = kappa_{g-p-2,3-q} across the computed grid.
inline bool duality_check(const BettiTable& t, long g) {
    if (t.p_max < g - 2 || t.q_max < 3)
        throw InvalidRange("duality_check needs the table through p = g-2, q = 3");
    for (int p = 0; p <= static_cast<int>(g) - 2; ++p)
        for (int q = 0; q <= 3; ++q)
            if (t.at(p, q) != t.at(static_cast<int>(g) - p - 2, 3 - q)) return false;
    return true;
}

/// sum_{p,q} (-1)^p kappa_{p,q} t^{p+q}  ==  (sum_m H(m) t^m) (1-t)^{r+1}
/// as polynomials, checked a little past the table degree.
template <class HilbertFn>
bool hilbert_numerator_check(const BettiTable& t, int r, HilbertFn&& hilbert) {
    const int top = t.p_max + t.q_max + 3;
    std::vector<long> lhs(top + 1, 0);
    for (const auto& [pq, v] : t.entries) {
        int deg = pq.first + pq.second;
        if (deg <= top) lhs[deg] += (pq.first % 2 == 0 ? v : -v);
    }
    for (int k = 0; k <= top; ++k) {
        long rhs = 0;
        for (int j = 0; j <= std::min(k, r + 1); ++j) {
            long c = binomial(r + 1, j);
            long h = hilbert(k - j);
            rhs += (j % 2 == 0 ? 1 : -1) * c * h;
        }
        if (lhs[k] != rhs) return false;
    }
    return true;
}

}  // namespace syzygy

#endif
