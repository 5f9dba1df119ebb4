#ifndef SYZYGY_REDUCTION_HPP
#define SYZYGY_REDUCTION_HPP

#include <random>

#include "syzygy/section_ring.hpp"

namespace syzygy {

/// Quotient of a model by one linear form l in V, with the multiplication maps
/// rewritten in quotient coordinates.  `injective_through` records the largest m
/// such that l : R_k -> R_{k+1} was verified injective for every k <= m.
template <class F>
struct LinearQuotient {
    SectionRingModel<F> model;
    int injective_through = -1;
};

namespace detail {

template <class F>
LinearQuotient<F> quotient_by_form(const F& f, const SectionRingModel<F>& model,
                                   const std::vector<typename F::Elt>& form) {
    const int nv = model.dim_v();
    const int top = model.max_degree();
    LinearQuotient<F> out;
    out.model.model_id = model.model_id;
    out.model.g_or_degree = model.g_or_degree;
    out.model.field = model.field;
    out.model.depth = model.depth;
    out.model.hilbert = nullptr;

    // multiplication-by-form matrices L_m : R_m -> R_{m+1}, echelonized images,
    // quotient coordinate maps (non-pivot coordinates) per degree
    std::vector<std::shared_ptr<ColumnReducer<F>>> reducers(top + 1);
    std::vector<std::vector<int>> keep(top + 1);          // surviving coordinates of R_m
    std::vector<std::vector<int>> new_index(top + 1);     // old coord -> quotient coord or -1
    std::vector<bool> injective(top + 1, false);          // l : R_{m-1} -> R_m injective
    out.model.piece_dims.assign(top + 1, 0);

    for (int m = 0; m <= top; ++m) {
        reducers[m] = std::make_shared<ColumnReducer<F>>(f, static_cast<int>(model.piece_dim(m)));
        if (m >= 1) {
            long injected = 0;
            auto cols = model.mult(m - 1).columns();
            const long dprev = model.piece_dim(m - 1);
            for (long fi = 0; fi < dprev; ++fi) {
                // l * f = sum_i form_i * mult column (i, f)
                std::vector<typename F::Elt> acc(model.piece_dim(m), f.zero());
                std::vector<int> touched;
                for (int i = 0; i < nv; ++i) {
                    if (f.is_zero(form[i])) continue;
                    for (const auto& [r, v] : cols[i * dprev + fi]) {
                        if (f.is_zero(acc[r])) touched.push_back(r);
                        acc[r] = f.add(acc[r], f.mul(form[i], v));
                    }
                }
                SparseVec<F> lf;
                std::sort(touched.begin(), touched.end());
                touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
                for (int r : touched)
                    if (!f.is_zero(acc[r])) lf.emplace_back(r, acc[r]);
                if (reducers[m]->add_column(lf)) ++injected;
            }
            injective[m] = injected == dprev;
        }
        // surviving coordinates: rows that are not pivot rows of the image echelon
        std::vector<bool> is_pivot(model.piece_dim(m), false);
        for (int k = 0; k < reducers[m]->rank(); ++k) is_pivot[reducers[m]->pivot_row(k)] = true;
        new_index[m].assign(model.piece_dim(m), -1);
        for (long r = 0; r < model.piece_dim(m); ++r)
            if (!is_pivot[r]) {
                new_index[m][r] = static_cast<int>(keep[m].size());
                keep[m].push_back(static_cast<int>(r));
            }
        out.model.piece_dims[m] = static_cast<long>(keep[m].size());
    }
    for (int k = 0; k + 1 <= top && injective[k + 1]; ++k) out.injective_through = k;

    // quotient multiplications: columns (v_bar, f_bar) with lifts = unit vectors at
    // surviving coordinates; products projected by reducing against the image echelon
    const int nv_bar = static_cast<int>(keep[1].size());
    out.model.mults.resize(top);
    for (int m = 0; m + 1 <= top; ++m) {
        const long dbar = out.model.piece_dims[m];
        SparseMatrix<F> q(static_cast<int>(out.model.piece_dims[m + 1]),
                          static_cast<int>(nv_bar * dbar), f.spec());
        auto cols = model.mult(m).columns();
        const long dold = model.piece_dim(m);
        for (int vb = 0; vb < nv_bar; ++vb) {
            const int v_old = keep[1][vb];
            for (long fb = 0; fb < dbar; ++fb) {
                const int f_old = keep[m][fb];
                auto residual = reducers[m + 1]->reduce(cols[v_old * dold + f_old]);
                for (const auto& [r, val] : residual) {
                    int nr = new_index[m + 1][r];
                    if (nr < 0) throw Error("quotient projection hit a pivot coordinate");
                    q.push(nr, static_cast<int>(vb * dbar + fb), val);
                }
            }
        }
        out.model.mults[m] = std::move(q);
    }
    return out;
}

}  // namespace detail

template <class F>
struct ReductionOutcome {
    SectionRingModel<F> model;  // the fully reduced model
    int steps = 0;
    bool certified = false;  // every step verified injective through the window
    std::vector<std::uint64_t> seeds_used;
};

/// Quotient the model by `steps` seeded-random linear forms, verifying at each step
/// that multiplication by the form is injective on every graded piece R_m with
/// m <= window.  Those checks certify that the graded Betti numbers kappa_{p,q} with
/// q <= window are unchanged, so the Koszul cells can be evaluated on the much
/// smaller quotient.  Retries with fresh forms when a check fails.
template <class F>
ReductionOutcome<F> reduce_by_linear_sections(const F& f, const SectionRingModel<F>& model,
                                              int steps, int window, std::uint64_t seed,
                                              int retries = 8) {
    ReductionOutcome<F> out;
    out.model = model;
    out.certified = true;
    std::uint64_t s = seed;
    for (int step = 0; step < steps; ++step) {
        const int nv = out.model.dim_v();
        bool done = false;
        for (int attempt = 0; attempt <= retries && !done; ++attempt, ++s) {
            std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ (s * 2654435761ull + step));
            std::vector<typename F::Elt> form(nv, f.zero());
            bool nonzero = false;
            for (int i = 0; i < nv; ++i) {
                typename F::Elt v;
                if constexpr (std::is_same_v<F, FpField>) {
                    v = rng() % f.characteristic();
                } else {
                    v = f.from_int(static_cast<std::int64_t>(rng() % 2003) - 1001);
                }
                form[i] = v;
                nonzero = nonzero || !f.is_zero(v);
            }
            if (!nonzero) continue;
            auto q = detail::quotient_by_form(f, out.model, form);
            if (q.injective_through >= window) {
                out.model = std::move(q.model);
                out.seeds_used.push_back(s);
                done = true;
            }
        }
        if (!done) {
            out.certified = false;
            out.steps = step;
            return out;
        }
        ++out.steps;
    }
    return out;
}

}  // namespace syzygy

#endif
