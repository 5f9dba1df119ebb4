#ifndef SYZYGY_LINALG_HPP
#define SYZYGY_LINALG_HPP

#include <memory>
#include <string>
#include <vector>

#include "syzygy/elimination.hpp"
#include "syzygy/errors.hpp"
#include "syzygy/sparse_matrix.hpp"

namespace syzygy {

struct RankOptions {
    enum class Engine { Auto, Markowitz, LeftLooking, Wiedemann, Bareiss };
    Engine engine = Engine::Auto;
    bool split_components = true;
    // black-box fallback activates above this nonzero count (F_p only)
    std::size_t wiedemann_nnz_threshold = 40'000'000;
    std::uint64_t seed = 1;
};

namespace detail {

template <class F>
std::size_t rank_one_block(const F& f, const SparseMatrix<F>& m, const RankOptions& opt) {
    switch (opt.engine) {
        case RankOptions::Engine::LeftLooking:
            return left_looking_rank(f, m);
        case RankOptions::Engine::Markowitz:
            return markowitz_rank(f, m);
        default:
            break;
    }
    if constexpr (std::is_same_v<F, FpField>) {
        if (opt.engine == RankOptions::Engine::Wiedemann ||
            (opt.engine == RankOptions::Engine::Auto && m.nnz() > opt.wiedemann_nnz_threshold)) {
            WiedemannOptions wo;
            wo.seed = opt.seed;
            return wiedemann_rank(f, m, wo);
        }
    }
    if constexpr (std::is_same_v<F, RatField>) {
        if (opt.engine == RankOptions::Engine::Bareiss) return bareiss_rank_q(m);
    }
    return markowitz_rank(f, m);
}

}  // namespace detail

/// Exact rank over the matrix's field; deterministic.
template <class F>
std::size_t rank(const F& f, const SparseMatrix<F>& m, const RankOptions& opt = {}) {
    if (m.entries.empty()) return 0;
    if (!opt.split_components) return detail::rank_one_block(f, m, opt);
    std::size_t total = 0;
    for (const auto& block : split_components(f, m)) total += detail::rank_one_block(f, block, opt);
    return total;
}

/// dim ker(B) - rank(A) for a two-step complex A then B, with B o A = 0 checked.
template <class F>
long homology_dim(const F& f, const SparseMatrix<F>& a, const SparseMatrix<F>& b,
                  const RankOptions& opt = {}) {
    if (a.codomain_dim != b.domain_dim)
        throw DimensionMismatch("homology_dim: codomain(A) = " + std::to_string(a.codomain_dim) +
                                ", domain(B) = " + std::to_string(b.domain_dim));
    // certify B o A = 0 column by column
    auto bcols = b.columns();
    auto acols = a.columns();
    for (int c = 0; c < a.domain_dim; ++c) {
        auto img = b.apply_columns(f, bcols, acols[c]);
        if (!img.empty())
            throw CompositionNotZero("B(A e_" + std::to_string(c) + ")) != 0");
    }
    long ra = static_cast<long>(rank(f, a, opt));
    long rb = static_cast<long>(rank(f, b, opt));
    return static_cast<long>(b.domain_dim) - rb - ra;
}

/// Echelonized basis of a span together with the coordinate functional on it.
template <class F>
class SpanBasis {
  public:
    SpanBasis(const F& f, int ambient) : f_(&f), reducer_(std::make_shared<ColumnReducer<F>>(f, ambient)) {}

    int ambient_dim() const { return reducer_->rows(); }
    int size() const { return reducer_->rank(); }
    const SparseVec<F>& basis_vector(int k) const { return reducer_->pivot_column(k); }

    bool insert(const SparseVec<F>& v) { return reducer_->add_column(v); }

    /// Coordinates of v in the echelon basis; throws NotInSpan if v is outside.
    std::vector<typename F::Elt> coordinates(const SparseVec<F>& v) const {
        std::vector<std::pair<int, typename F::Elt>> coeffs;
        auto residual = reducer_->reduce(v, &coeffs);
        if (!residual.empty()) throw NotInSpan("coordinate functional applied outside the span");
        std::vector<typename F::Elt> out(size(), f_->zero());
        for (auto& [k, c] : coeffs) out[k] = c;
        return out;
    }

    /// Sparse variant of coordinates().
    SparseVec<F> coordinates_sparse(const SparseVec<F>& v) const {
        std::vector<std::pair<int, typename F::Elt>> coeffs;
        auto residual = reducer_->reduce(v, &coeffs);
        if (!residual.empty()) throw NotInSpan("coordinate functional applied outside the span");
        std::sort(coeffs.begin(), coeffs.end(), [](auto& a, auto& b) { return a.first < b.first; });
        return coeffs;
    }

    bool contains(const SparseVec<F>& v) const { return reducer_->reduce(v).empty(); }

  private:
    const F* f_;
    mutable std::shared_ptr<ColumnReducer<F>> reducer_;
};

template <class F>
SpanBasis<F> span_reduce(const F& f, int ambient_dim, const std::vector<SparseVec<F>>& vectors) {
    SpanBasis<F> sb(f, ambient_dim);
    for (const auto& v : vectors) sb.insert(v);
    return sb;
}

/// Basis of ker(M) as sparse vectors in the domain coordinates.
template <class F>
std::vector<SparseVec<F>> kernel_basis(const F& f, const SparseMatrix<F>& m) {
    ColumnReducer<F> red(f, m.codomain_dim, /*track_combos=*/true);
    std::vector<SparseVec<F>> out;
    auto cols = m.columns();
    for (int c = 0; c < m.domain_dim; ++c) {
        red.note_fed_index(c);
        if (!red.add_column(cols[c])) out.push_back(red.last_kernel_combo());
    }
    return out;
}

}  // namespace syzygy

#endif
