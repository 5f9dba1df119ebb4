#ifndef SYZYGY_SECTION_RING_HPP
#define SYZYGY_SECTION_RING_HPP

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "syzygy/linalg.hpp"
#include "syzygy/sparse_matrix.hpp"

namespace syzygy {

/// A graded ring presented by its graded pieces and multiplication by the degree-1
/// piece V: mult(m) maps V (x) R_m -> R_{m+1} with columns indexed v * dim R_m + f.
/// Pieces are materialized through some maximum degree at construction time.
template <class F>
struct SectionRingModel {
    std::string model_id;
    long g_or_degree = 0;
    FieldSpec field;
    int depth = 2;  // length of the certified regular linear sequence to quotient by
    std::vector<long> piece_dims;          // m = 0 .. max_degree
    std::vector<SparseMatrix<F>> mults;    // m = 0 .. max_degree-1
    std::function<std::optional<long>(int)> hilbert;  // expected Hilbert values, if declared

    int max_degree() const { return static_cast<int>(piece_dims.size()) - 1; }
    int dim_v() const { return static_cast<int>(piece_dims.at(1)); }

    long piece_dim(int m) const {
        if (m < 0) return 0;
        if (m > max_degree())
            throw PieceUnavailable(model_id + " piece " + std::to_string(m) + " (computed through " +
                                   std::to_string(max_degree()) + ")");
        return piece_dims[m];
    }

    const SparseMatrix<F>& mult(int m) const {
        if (m < 0 || m >= static_cast<int>(mults.size()))
            throw PieceUnavailable(model_id + " multiplication out of degree " + std::to_string(m));
        return mults[m];
    }

    std::optional<long> expected_hilbert(int m) const {
        if (!hilbert) return std::nullopt;
        return hilbert(m);
    }

    void validate_shape() const {
        if (piece_dims.empty() || piece_dims[0] != 1) throw Error(model_id + ": piece(0) must be 1-dimensional");
        if (max_degree() < 1) throw Error(model_id + ": needs at least degree 1");
        for (int m = 0; m + 1 <= max_degree(); ++m) {
            const auto& mu = mults[m];
            if (mu.domain_dim != dim_v() * piece_dims[m] || mu.codomain_dim != piece_dims[m + 1])
                throw DimensionMismatch(model_id + ": mult(" + std::to_string(m) + ") shape");
        }
    }
};

/// v * (w * f) - w * (v * f) = 0 on seeded random triples, evaluated through the
/// multiplication matrices alone.
template <class F>
bool associativity_spot_check(const F& f, const SectionRingModel<F>& model, int m, int ntriples,
                              std::uint64_t seed) {
    if (m + 2 > model.max_degree()) throw PieceUnavailable("associativity check needs degree m+2");
    const int nv = model.dim_v();
    const long dm = model.piece_dim(m);
    if (dm == 0) return true;
    auto cols_m = model.mult(m).columns();
    auto cols_m1 = model.mult(m + 1).columns();
    std::mt19937_64 rng(seed);
    for (int t = 0; t < ntriples; ++t) {
        int v = static_cast<int>(rng() % nv);
        int w = static_cast<int>(rng() % nv);
        int fi = static_cast<int>(rng() % dm);
        // v * (w f) = sum_g c_g * mult(m+1) column (v, g), and symmetrically
        const auto& wf = cols_m[w * dm + fi];
        std::vector<typename F::Elt> acc(model.piece_dim(m + 2), f.zero());
        for (const auto& [g, c] : wf)
            for (const auto& [r, x] : cols_m1[v * model.piece_dim(m + 1) + g])
                acc[r] = f.add(acc[r], f.mul(c, x));
        const auto& vf = cols_m[v * dm + fi];
        for (const auto& [g, c] : vf)
            for (const auto& [r, x] : cols_m1[w * model.piece_dim(m + 1) + g])
                acc[r] = f.sub(acc[r], f.mul(c, x));
        for (const auto& x : acc)
            if (!f.is_zero(x)) return false;
    }
    return true;
}

/// dim piece(m) equals the declared Hilbert value for 1 <= m <= m_max.
template <class F>
bool hilbert_check(const F&, const SectionRingModel<F>& model, int m_max) {
    if (!model.hilbert) throw Error(model.model_id + ": no expected Hilbert function declared");
    for (int m = 1; m <= m_max; ++m) {
        auto expect = model.expected_hilbert(m);
        if (!expect) continue;
        long got = model.piece_dim(m);
        if (got != *expect) throw HilbertMismatch(m, got, *expect);
    }
    return true;
}

}  // namespace syzygy

#endif
