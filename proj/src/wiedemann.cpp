#include <random>

#include "syzygy/elimination.hpp"

namespace syzygy {

namespace {

using Vec = std::vector<std::uint64_t>;

void spmv(const FpField& f, const std::vector<SparseVec<FpField>>& cols, const Vec& x, Vec& y) {
    std::fill(y.begin(), y.end(), 0);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        std::uint64_t xc = x[c];
        if (xc == 0) continue;
        for (const auto& [r, v] : cols[c]) y[r] = f.add(y[r], f.mul(xc, v));
    }
}

}  // namespace

std::size_t wiedemann_rank(const FpField& f, const SparseMatrix<FpField>& m, const WiedemannOptions& opt) {
    const int nr = m.codomain_dim;
    const int nc = m.domain_dim;
    if (m.entries.empty()) return 0;
    auto acols = m.columns();
    auto atcols = m.transposed().columns();

    std::size_t best = 0;
    for (int trial = 0; trial < opt.trials; ++trial) {
        std::mt19937_64 rng(opt.seed * 7919 + static_cast<std::uint64_t>(trial) + 1);
        auto rnd_nonzero = [&]() { return 1 + rng() % (f.characteristic() - 1); };
        Vec d1(nr), d2(nc), u(nc), v(nc);
        for (auto& x : d1) x = rnd_nonzero();
        for (auto& x : d2) x = rnd_nonzero();
        for (auto& x : u) x = rng() % f.characteristic();
        for (auto& x : v) x = rng() % f.characteristic();

        // operator B = D2 A^T D1 A D2 on F_p^nc
        Vec t1(nc), t2(nr), t3(nc), cur = v;
        auto apply_b = [&](const Vec& x, Vec& out) {
            for (int i = 0; i < nc; ++i) t1[i] = f.mul(x[i], d2[i]);
            spmv(f, acols, t1, t2);
            for (int i = 0; i < nr; ++i) t2[i] = f.mul(t2[i], d1[i]);
            spmv(f, atcols, t2, t3);
            for (int i = 0; i < nc; ++i) out[i] = f.mul(t3[i], d2[i]);
        };

        const std::size_t len = 2 * static_cast<std::size_t>(std::min(nr, nc)) + 4;
        Vec seq(len);
        Vec next(nc);
        for (std::size_t i = 0; i < len; ++i) {
            std::uint64_t dot = 0;
            for (int j = 0; j < nc; ++j) dot = f.add(dot, f.mul(u[j], cur[j]));
            seq[i] = dot;
            if (i + 1 < len) {
                apply_b(cur, next);
                cur.swap(next);
            }
        }
        auto [deg, conn] = berlekamp_massey(f, seq);
        std::size_t r = deg;
        if (deg > 0 && f.is_zero(conn[deg])) r = deg - 1;
        best = std::max(best, r);
    }
    return best;
}

}  // namespace syzygy
