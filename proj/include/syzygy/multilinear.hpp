#ifndef SYZYGY_MULTILINEAR_HPP
#define SYZYGY_MULTILINEAR_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "syzygy/basis_space.hpp"
#include "syzygy/combinatorics.hpp"
#include "syzygy/linalg.hpp"
#include "syzygy/sparse_matrix.hpp"

namespace syzygy {

/// Tangent selects the smooth-conic geometry, Carpet the double-line geometry.
enum class MapVariant { Tangent, Carpet };

inline std::string variant_name(MapVariant v) { return v == MapVariant::Tangent ? "tangent" : "carpet"; }

/// Dimension identity behind the wedge/divided-power relabeling:
/// dim Wedge^n S^d U and dim S^{d-n+1} D^n U (the two are equal).
inline std::pair<long, long> hermite_dims(int n, int d) {
    if (n < 1 || n > d + 1) throw InvalidRange("hermite_dims expects 1 <= n <= d+1");
    long lhs = binomial(d + 1, n);            // dim Wedge^n of a (d+1)-dim space
    long rhs = binomial((d - n + 1) + n, n);  // dim S^{d-n+1} of an (n+1)-dim space
    return {lhs, rhs};
}

namespace detail {

inline void push_acc(std::map<std::pair<int, int>, std::int64_t>& acc, int r, int c, std::int64_t v) {
    if (v == 0) return;
    auto [it, fresh] = acc.emplace(std::make_pair(r, c), v);
    if (!fresh) {
        it->second += v;
        if (it->second == 0) acc.erase(it);
    }
}

inline IntMatrix from_acc(int rows, int cols, const std::map<std::pair<int, int>, std::int64_t>& acc) {
    IntMatrix m;
    m.codomain_dim = rows;
    m.domain_dim = cols;
    for (const auto& [rc, v] : acc) m.push(rc.first, rc.second, v);
    return m;
}

}  // namespace detail

/// Wedge^2 S^m U -> S^{2m-2} U,  x^i ^ x^j |-> (i-j) x^{i+j-1}.
inline IntMatrix wahl_map_int(int m) {
    if (m < 1) throw InvalidRange("wahl_map expects m >= 1");
    IntMatrix out;
    out.codomain_dim = 2 * m - 1;
    out.domain_dim = wedge2_dim(m);
    for (int i = 1; i <= m; ++i)
        for (int j = 0; j < i; ++j) out.push(i + j - 1, wedge2_index(i, j), i - j);
    return out;
}

template <class F>
SparseMatrix<F> wahl_map(int m, const F& f) {
    return wahl_map_int(m).over(f);
}

/// Wedge^2 S^d U -> Wedge^2 S^{d+2} U for the smooth conic:
/// x^i ^ x^j |-> x^{i+2} ^ x^j - 2 x^{i+1} ^ x^{j+1} + x^i ^ x^{j+2}.
inline IntMatrix conic_inclusion_int(int d) {
    if (d < 0) throw InvalidRange("conic_inclusion expects d >= 0");
    std::map<std::pair<int, int>, std::int64_t> acc;
    auto add = [&](int a, int b, int col, std::int64_t coef) {
        if (a == b) return;
        if (a > b)
            detail::push_acc(acc, wedge2_index(a, b), col, coef);
        else
            detail::push_acc(acc, wedge2_index(b, a), col, -coef);
    };
    for (int i = 1; i <= d; ++i)
        for (int j = 0; j < i; ++j) {
            int col = wedge2_index(i, j);
            add(i + 2, j, col, 1);
            add(i + 1, j + 1, col, -2);
            add(i, j + 2, col, 1);
        }
    return detail::from_acc(wedge2_dim(d + 2), wedge2_dim(d), acc);
}

template <class F>
SparseMatrix<F> conic_inclusion(int d, const F& f) {
    return conic_inclusion_int(d).over(f);
}

/// Same shape for the double line 2l: x^{i+2} ^ x^j + 2 x^{i+1} ^ x^{j+1} + x^i ^ x^{j+2}.
inline IntMatrix double_line_inclusion_int(int d) {
    if (d < 0) throw InvalidRange("double_line_inclusion expects d >= 0");
    std::map<std::pair<int, int>, std::int64_t> acc;
    auto add = [&](int a, int b, int col, std::int64_t coef) {
        if (a == b) return;
        if (a > b)
            detail::push_acc(acc, wedge2_index(a, b), col, coef);
        else
            detail::push_acc(acc, wedge2_index(b, a), col, -coef);
    };
    for (int i = 1; i <= d; ++i)
        for (int j = 0; j < i; ++j) {
            int col = wedge2_index(i, j);
            add(i + 2, j, col, 1);
            add(i + 1, j + 1, col, 2);
            add(i, j + 2, col, 1);
        }
    return detail::from_acc(wedge2_dim(d + 2), wedge2_dim(d), acc);
}

template <class F>
SparseMatrix<F> double_line_inclusion(int d, const F& f) {
    return double_line_inclusion_int(d).over(f);
}

/// Wedge^2 S^m U -> S^{2m-2} U (+) S^{2m} U, the parity-split map through which the
/// restriction to a double line factors:
///   x^i ^ x^j |-> ((-1)^i (i-j) x^{i+j-1}, 0)  for i = j mod 2,
///   x^i ^ x^j |-> (0, (-1)^i x^{i+j})          otherwise.
inline IntMatrix tau_map_int(int m) {
    if (m < 1) throw InvalidRange("tau_map expects m >= 1");
    IntMatrix out;
    const int dim_a = 2 * m - 1;  // S^{2m-2}U block sits first
    out.codomain_dim = dim_a + (2 * m + 1);
    out.domain_dim = wedge2_dim(m);
    for (int i = 1; i <= m; ++i)
        for (int j = 0; j < i; ++j) {
            int col = wedge2_index(i, j);
            std::int64_t sgn = (i % 2 == 0) ? 1 : -1;
            if ((i - j) % 2 == 0)
                out.push(i + j - 1, col, sgn * (i - j));
            else
                out.push(dim_a + i + j, col, sgn);
        }
    return out;
}

template <class F>
SparseMatrix<F> tau_map(int m, const F& f) {
    return tau_map_int(m).over(f);
}

/// Co-Wahl map Delta: W -> Wedge^2 V, V = D^{p+2}U.
/// Tangent: W = D^{2p+2}U and Delta is the transpose of the Wahl map under the
/// monomial dual pairings, Delta(x^(k)) = sum_{i+j=k+1, i>j} (i-j) x^(i) ^ x^(j).
/// Carpet: W is the dual of im(tau_{p+2}); Delta is the transpose of tau
/// corestricted to an echelon basis of its image.
template <class F>
SparseMatrix<F> co_wahl_delta(int p, MapVariant variant, const F& f) {
    if (p < 0) throw InvalidRange("co_wahl_delta expects p >= 0");
    const int m = p + 2;
    if (variant == MapVariant::Tangent) {
        IntMatrix out;
        out.codomain_dim = wedge2_dim(m);
        out.domain_dim = 2 * p + 3;
        for (int k = 0; k <= 2 * p + 2; ++k)
            for (int i = k + 1 >= m ? m : k + 1; i >= 1; --i) {
                int j = k + 1 - i;
                if (j < 0 || j >= i) continue;
                out.push(wedge2_index(i, j), k, i - j);
            }
        return out.over(f);
    }
    // carpet: echelonize im(tau), transpose the corestriction
    auto tau = tau_map(m, f);
    auto cols = tau.columns();
    SpanBasis<F> image(f, tau.codomain_dim);
    for (const auto& c : cols) image.insert(c);
    const int w = image.size();
    SparseMatrix<F> delta(wedge2_dim(m), w, f.spec());
    for (int c = 0; c < tau.domain_dim; ++c) {
        auto coords = image.coordinates_sparse(cols[c]);
        for (auto& [t, v] : coords) delta.push(c, t, v);
    }
    return delta;
}

/// dim W for a variant (rank of tau for the carpet; both are 2p+3 away from char 2).
template <class F>
int co_wahl_w_dim(int p, MapVariant variant, const F& f) {
    if (variant == MapVariant::Tangent) return 2 * p + 3;
    auto tau = tau_map(p + 2, f);
    return static_cast<int>(rank(f, tau));
}

/// Shared monomial tables for the symmetric powers of the abstract (p+3)-dim V.
class SymTables {
  public:
    explicit SymTables(int dim_v) : dim_v_(dim_v) {}
    const MonomialTable& table(int q) {
        while (static_cast<int>(tables_.size()) <= q)
            tables_.push_back(std::make_unique<MonomialTable>(dim_v_, static_cast<int>(tables_.size())));
        return *tables_[q];
    }
    int dim_v() const { return dim_v_; }

  private:
    int dim_v_;
    std::vector<std::unique_ptr<MonomialTable>> tables_;
};

template <class F>
struct KoszulPair {
    SparseMatrix<F> delta;  // S^qV (x) Wedge^2 V -> S^{q+1}V (x) V
    SparseMatrix<F> mult;   // S^{q+1}V (x) V -> S^{q+2}V
};

/// The Koszul differential f (x) (x^(i) ^ x^(j)) |-> f x^(i) (x) x^(j) - f x^(j) (x) x^(i)
/// and the formal symmetric-algebra multiplication out of its target.
template <class F>
KoszulPair<F> koszul_pair(int q, int dim_v, const F& f) {
    if (q < 0 || dim_v < 1) throw InvalidRange("koszul_pair expects q >= 0, dim V >= 1");
    SymTables st(dim_v);
    const auto& sq = st.table(q);
    const auto& sq1 = st.table(q + 1);
    const auto& sq2 = st.table(q + 2);
    const int w2 = wedge2_dim(dim_v - 1);

    KoszulPair<F> out;
    out.delta = SparseMatrix<F>(static_cast<int>(sq1.size()) * dim_v,
                                static_cast<int>(sq.size()) * w2, f.spec());
    const auto one = f.one();
    for (int fi = 0; fi < static_cast<int>(sq.size()); ++fi)
        for (int i = 1; i < dim_v; ++i)
            for (int j = 0; j < i; ++j) {
                int col = fi * w2 + wedge2_index(i, j);
                int fxi = sq.mult_var(sq1, fi, i);
                int fxj = sq.mult_var(sq1, fi, j);
                out.delta.push(fxi * dim_v + j, col, one);
                out.delta.push(fxj * dim_v + i, col, f.neg(one));
            }

    out.mult = SparseMatrix<F>(static_cast<int>(sq2.size()), static_cast<int>(sq1.size()) * dim_v,
                               f.spec());
    for (int fi = 0; fi < static_cast<int>(sq1.size()); ++fi)
        for (int v = 0; v < dim_v; ++v)
            out.mult.push(sq1.mult_var(sq2, fi, v), fi * dim_v + v, one);
    return out;
}

namespace detail {

/// gamma in homogeneous degree k over a prebuilt Delta: S^kV (x) W -> S^{k+1}V (x) V.
/// Columns are (f, w) with f-major order.
template <class F>
SparseMatrix<F> gamma_degree_with(const SparseMatrix<F>& delta, int p, int k, const F& f) {
    const int dim_v = p + 3;
    SymTables st(dim_v);
    const auto& sk = st.table(k);
    const auto& sk1 = st.table(k + 1);
    auto dcols = delta.columns();
    const int dim_w = delta.domain_dim;

    SparseMatrix<F> out(static_cast<int>(sk1.size()) * dim_v,
                        static_cast<int>(sk.size()) * dim_w, f.spec());
    for (long fi = 0; fi < sk.size(); ++fi) {
        std::vector<int> fx(dim_v);
        for (int v = 0; v < dim_v; ++v) fx[v] = sk.mult_var(sk1, static_cast<int>(fi), v);
        for (int w = 0; w < dim_w; ++w) {
            int col = static_cast<int>(fi) * dim_w + w;
            for (const auto& [pair_idx, c] : dcols[w]) {
                // invert pair_idx = i(i-1)/2 + j
                int i = 1;
                while (wedge2_index(i + 1, 0) <= pair_idx) ++i;
                int j = pair_idx - wedge2_index(i, 0);
                out.push(fx[i] * dim_v + j, col, c);
                out.push(fx[j] * dim_v + i, col, f.neg(c));
            }
        }
    }
    return out;
}

}  // namespace detail

template <class F>
SparseMatrix<F> gamma_degree(int p, int k, MapVariant variant, const F& f) {
    auto delta = co_wahl_delta(p, variant, f);
    return detail::gamma_degree_with(delta, p, k, f);
}

/// Lemma-3.1 composite gamma_{p+2} at q = g-p-3, with kappa_{p+1,1} = dim ker.
template <class F>
SparseMatrix<F> gamma_map(int g, int p, MapVariant variant, const F& f) {
    if (p < 0 || p > g - 3) throw InvalidRange("gamma requires 0 <= p <= g-3");
    return gamma_degree(p, g - p - 3, variant, f);
}

/// dim of the degree-q Koszul module W_q(V, W) = homology of gamma followed by mult;
/// equals dim K_{p,2} of the corresponding surface.
template <class F>
long koszul_module_dim(int g, int p, MapVariant variant, const F& f, const RankOptions& opt = {}) {
    if (p < 0 || p > g - 3) throw InvalidRange("koszul_module_dim requires 0 <= p <= g-3");
    const int q = g - p - 3;
    auto g_mat = gamma_map(g, p, variant, f);
    auto pair = koszul_pair(q, p + 3, f);
    return homology_dim(f, g_mat, pair.mult, opt);
}

template <class F>
struct GammaPrime {
    SparseMatrix<F> matrix;  // W (x) S^kV -> ker(mult), w-major columns
    long ker_mult_dim = 0;
};

/// gamma in degree k corestricted to a computed kernel basis of the multiplication
/// S^{k+1}V (x) V -> S^{k+2}V.  Surjectivity onto that kernel at k = g-p-3 is
/// equivalent to the vanishing of the Koszul module in degree q.
template <class F>
GammaPrime<F> gamma_prime(int p, int k, MapVariant variant, const F& f) {
    if (p < 0 || k < 0) throw InvalidRange("gamma_prime expects p, k >= 0");
    const int dim_v = p + 3;
    auto pair = koszul_pair(k, dim_v, f);
    auto ker = kernel_basis(f, pair.mult);
    SpanBasis<F> ker_span(f, pair.mult.domain_dim);
    for (const auto& v : ker) ker_span.insert(v);

    auto delta = co_wahl_delta(p, variant, f);
    const int dim_w = delta.domain_dim;
    auto gk = detail::gamma_degree_with(delta, p, k, f);
    auto gcols = gk.columns();
    const int dim_sk = gk.domain_dim / dim_w;

    GammaPrime<F> out;
    out.ker_mult_dim = static_cast<long>(ker.size());
    out.matrix = SparseMatrix<F>(static_cast<int>(ker.size()), gk.domain_dim, f.spec());
    for (int fi = 0; fi < dim_sk; ++fi)
        for (int w = 0; w < dim_w; ++w) {
            int src = fi * dim_w + w;   // gamma_degree order (f, w)
            int dst = w * dim_sk + fi;  // exposed order (w, f)
            auto coords = ker_span.coordinates_sparse(gcols[src]);
            for (auto& [t, v] : coords) out.matrix.push(static_cast<int>(t), dst, v);
        }
    return out;
}

template <class F>
bool gamma_prime_surjective(const GammaPrime<F>& gp, const F& f, const RankOptions& opt = {}) {
    return static_cast<long>(rank(f, gp.matrix, opt)) == gp.ker_mult_dim;
}

/// Images of the dual vectors v_j = x^j ^ h under the variant's dual map (Wahl map
/// for the tangent surface, tau for the carpet); true iff they stay independent.
template <class F>
bool fiber_dual_injectivity(int p, const std::vector<typename F::Elt>& h, MapVariant variant,
                            const F& f) {
    const int m = p + 2;
    if (static_cast<int>(h.size()) != m + 1)
        throw InvalidRange("h must have " + std::to_string(m + 1) + " coordinates in S^{p+2}U");
    int deg = -1;
    for (int i = 0; i <= m; ++i)
        if (!f.is_zero(h[i])) deg = i;
    if (deg < 0) throw ZeroFunctional("fiber_dual_injectivity requires h != 0");

    const int dim_a = 2 * m - 1;
    const int rows = variant == MapVariant::Tangent ? dim_a : dim_a + 2 * m + 1;
    SparseMatrix<F> img(rows, m, f.spec());
    int col = 0;
    for (int j = 0; j <= m; ++j) {
        if (j == deg) continue;
        std::map<int, typename F::Elt> acc;
        for (int i = 0; i <= m; ++i) {
            if (i == j || f.is_zero(h[i])) continue;
            // x^j ^ x^i normalized to (a, b) = (max, min) with sign
            int a = std::max(i, j), b = std::min(i, j);
            bool flip = j < i;
            typename F::Elt coef;
            int row;
            if (variant == MapVariant::Tangent) {
                coef = f.from_int(a - b);
                row = a + b - 1;
            } else {
                std::int64_t sgn = (a % 2 == 0) ? 1 : -1;
                if ((a - b) % 2 == 0) {
                    coef = f.from_int(sgn * (a - b));
                    row = a + b - 1;
                } else {
                    coef = f.from_int(sgn);
                    row = dim_a + a + b;
                }
            }
            if (flip) coef = f.neg(coef);
            coef = f.mul(coef, h[i]);
            if (f.is_zero(coef)) continue;
            auto [it, fresh] = acc.emplace(row, coef);
            if (!fresh) {
                it->second = f.add(it->second, coef);
                if (f.is_zero(it->second)) acc.erase(it);
            }
        }
        for (auto& [r, v] : acc) img.push(r, col, v);
        ++col;
    }
    return rank(f, img) == static_cast<std::size_t>(m);
}

/// h^i(P^N, O(d)) by the classical formula.
inline long projective_space_cohomology(int N, int i, int d) {
    if (i == 0) return d >= 0 ? binomial(d + N, N) : 0;
    if (i == N) return d <= -N - 1 ? binomial(-d - 1, N) : 0;
    return 0;
}

struct RegularityWitness {
    bool regular = false;
    // (i, m = p+1-i) -> dim H^i of the kernel sheaf twisted by m
    std::vector<std::tuple<int, int, long>> h;
};

/// Castelnuovo-Mumford (p+1)-regularity of the kernel of W (x) O -> M_V(1):
/// H^1 from the cokernel of gamma', H^2 from the cokernel of the multiplication
/// V (x) S^pV -> S^{p+1}V, higher terms from line-bundle cohomology on P^{p+2}
/// (evaluated, then asserted zero, so the reduction is tested rather than trusted).
template <class F>
RegularityWitness kernel_regularity(int p, MapVariant variant, const F& f) {
    if (p < 0) throw InvalidRange("kernel_regularity expects p >= 0");
    const int dim_v = p + 3;
    RegularityWitness out;

    auto gp = gamma_prime(p, p, variant, f);
    long h1 = gp.ker_mult_dim - static_cast<long>(rank(f, gp.matrix));
    out.h.emplace_back(1, p, h1);

    // H^2(K(p-1)) = coker(V (x) S^pV -> S^{p+1}V); for p = 0 the map is V -> S^1V
    SparseMatrix<F> mult2;
    if (p == 0) {
        mult2 = identity_matrix(f, dim_v);
    } else {
        mult2 = koszul_pair(p - 1, dim_v, f).mult;
    }
    long h2 = mult2.codomain_dim - static_cast<long>(rank(f, mult2));
    out.h.emplace_back(2, p - 1, h2);

    for (int i = 3; i <= p + 2; ++i) {
        int mm = p + 1 - i;
        long a = static_cast<long>(dim_v) * projective_space_cohomology(p + 2, i - 1, mm + 1);
        long b = projective_space_cohomology(p + 2, i - 1, mm + 2);
        if (a != 0 || b != 0)
            throw Error("kernel_regularity: unexpected nonzero line-bundle cohomology");
        out.h.emplace_back(i, mm, 0);
    }
    out.regular = h1 == 0 && h2 == 0;
    return out;
}

}  // namespace syzygy

#endif
