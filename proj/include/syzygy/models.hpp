#ifndef SYZYGY_MODELS_HPP
#define SYZYGY_MODELS_HPP

#include <array>
#include <map>

#include "syzygy/section_ring.hpp"

namespace syzygy {

namespace detail {

/// Exponent key (a, b, c) for monomials s^a t^b u^c (or x^a y^b u^c).
using MonoKey = std::array<int, 3>;

/// Function-field element in cleared-denominator form: a monomial map together
/// with a tracked power of the clearing factor (s^denom for the genus-2 curve,
/// trivial elsewhere).  Canonical after reduction; equality is map equality.
template <class F>
struct FnElement {
    std::map<MonoKey, typename F::Elt> monomials;
    int denom = 0;  // value = (sum c * s^a t^b u^c) / s^denom

    bool zero() const { return monomials.empty(); }
};

template <class F>
void fn_add_term(const F& f, FnElement<F>& el, MonoKey k, typename F::Elt v) {
    if (f.is_zero(v)) return;
    auto [it, fresh] = el.monomials.emplace(k, v);
    if (!fresh) {
        it->second = f.add(it->second, v);
        if (f.is_zero(it->second)) el.monomials.erase(it);
    }
}

/// Raw product, denominators added; reduction/canonicalization is model-specific.
template <class F>
FnElement<F> fn_mul(const F& f, const FnElement<F>& x, const FnElement<F>& y) {
    FnElement<F> out;
    out.denom = x.denom + y.denom;
    for (const auto& [kx, vx] : x.monomials)
        for (const auto& [ky, vy] : y.monomials)
            fn_add_term(f, out, {kx[0] + ky[0], kx[1] + ky[1], kx[2] + ky[2]}, f.mul(vx, vy));
    return out;
}

/// y^2 = x^3 - x: eliminate y-powers >= 2 (key slot 1 is the y-exponent).
template <class F>
void reduce_elliptic(const F& f, FnElement<F>& el) {
    for (;;) {
        auto it = std::find_if(el.monomials.begin(), el.monomials.end(),
                               [](const auto& kv) { return kv.first[1] >= 2; });
        if (it == el.monomials.end()) return;
        auto [k, v] = *it;
        el.monomials.erase(it);
        fn_add_term(f, el, {k[0] + 3, k[1] - 2, k[2]}, v);
        fn_add_term(f, el, {k[0] + 1, k[1] - 2, k[2]}, f.neg(v));
    }
}

/// s^2 t^3 + s^2 + t^2 - t = 0: eliminate t-powers >= 3 via t^3 = (t - t^2 - s^2)/s^2,
/// raising the tracked denominator when the s-degree cannot absorb the division.
template <class F>
void reduce_genus2(const F& f, FnElement<F>& el) {
    for (;;) {
        auto it = std::find_if(el.monomials.begin(), el.monomials.end(),
                               [](const auto& kv) { return kv.first[1] >= 3; });
        if (it == el.monomials.end()) break;
        auto k = it->first;
        if (k[0] < 2) {
            // multiply the whole element by s^2
            std::map<MonoKey, typename F::Elt> shifted;
            for (const auto& [kk, vv] : el.monomials) shifted[{kk[0] + 2, kk[1], kk[2]}] = vv;
            el.monomials = std::move(shifted);
            el.denom += 2;
            continue;
        }
        auto v = it->second;
        el.monomials.erase(it);
        fn_add_term(f, el, {k[0] - 2, k[1] - 2, k[2]}, v);
        fn_add_term(f, el, {k[0] - 2, k[1] - 1, k[2]}, f.neg(v));
        fn_add_term(f, el, {k[0], k[1] - 3, k[2]}, f.neg(v));
    }
    // strip the common clearing power
    if (el.denom > 0 && !el.monomials.empty()) {
        int min_a = el.denom;
        for (const auto& [k, v] : el.monomials) min_a = std::min(min_a, k[0]);
        if (min_a > 0) {
            std::map<MonoKey, typename F::Elt> shifted;
            for (const auto& [k, v] : el.monomials) shifted[{k[0] - min_a, k[1], k[2]}] = v;
            el.monomials = std::move(shifted);
            el.denom -= min_a;
        }
    }
}

/// Assemble a SectionRingModel from degree-1 generators of a commutative algebra:
/// piece(m+1) is the span of generator * piece(m) products, echelonized over the
/// monomials actually appearing (coordinates normalized to a common denominator,
/// which is asserted against the declared worst-case bound).
template <class F, class Reduce>
SectionRingModel<F> assemble_model(const F& f, std::vector<FnElement<F>> gens, int max_degree,
                                   Reduce&& reduce, int denom_bound_per_degree,
                                   const std::string& id) {
    SectionRingModel<F> model;
    model.model_id = id;
    model.field = f.spec();
    const int nv = static_cast<int>(gens.size());

    FnElement<F> unit;
    fn_add_term(f, unit, {0, 0, 0}, f.one());
    std::vector<FnElement<F>> basis = {unit};
    model.piece_dims.push_back(1);

    for (int m = 0; m < max_degree; ++m) {
        const long dm = static_cast<long>(basis.size());
        std::vector<FnElement<F>> products;
        products.reserve(nv * dm);
        int common_denom = 0;
        for (int k = 0; k < nv; ++k)
            for (long fi = 0; fi < dm; ++fi) {
                auto prod = fn_mul(f, gens[k], basis[fi]);
                reduce(f, prod);
                if (prod.denom > denom_bound_per_degree * (m + 1))
                    throw Error(id + ": denominator exponent exceeded the declared bound");
                common_denom = std::max(common_denom, prod.denom);
                products.push_back(std::move(prod));
            }
        // common-denominator ambient coordinates, keys ordered lexicographically
        std::map<MonoKey, int> ambient;
        for (const auto& p : products) {
            const int shift = common_denom - p.denom;
            for (const auto& [k, v] : p.monomials) ambient.emplace(MonoKey{k[0] + shift, k[1], k[2]}, 0);
        }
        int next_index = 0;
        for (auto& [k, idx] : ambient) idx = next_index++;
        auto coords = [&](const FnElement<F>& p) {
            SparseVec<F> out;
            const int shift = common_denom - p.denom;
            for (const auto& [k, v] : p.monomials)
                out.emplace_back(ambient.at(MonoKey{k[0] + shift, k[1], k[2]}), v);
            std::sort(out.begin(), out.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            return out;
        };

        SpanBasis<F> span(f, next_index);
        std::vector<FnElement<F>> new_basis;
        std::vector<SparseVec<F>> product_coords(products.size());
        for (std::size_t i = 0; i < products.size(); ++i) {
            product_coords[i] = coords(products[i]);
            if (span.insert(product_coords[i])) new_basis.push_back(products[i]);
        }

        SparseMatrix<F> mult(span.size(), static_cast<int>(nv * dm), f.spec());
        for (std::size_t i = 0; i < products.size(); ++i) {
            auto c = span.coordinates_sparse(product_coords[i]);
            for (auto& [r, v] : c) mult.push(r, static_cast<int>(i), v);
        }
        model.mults.push_back(std::move(mult));
        model.piece_dims.push_back(span.size());
        basis = std::move(new_basis);
    }
    model.validate_shape();
    return model;
}

}  // namespace detail

/// Tangent developable of the rational normal curve of degree g, by the first-jet
/// parametrization phi_i = s^i + i t s^{i-1}.
template <class F>
SectionRingModel<F> rnc_tangent_model(int g, const F& f, int max_degree) {
    if (g < 3) throw InvalidRange("rnc_tangent_model expects g >= 3");
    if (f.characteristic() == 2)
        throw CharTwoUnsupported("the rational-normal-curve tangent model assumes char != 2");
    std::vector<detail::FnElement<F>> gens(g + 1);
    for (int i = 0; i <= g; ++i) {
        detail::fn_add_term(f, gens[i], {i, 0, 0}, f.one());
        if (i >= 1) detail::fn_add_term(f, gens[i], {i - 1, 1, 0}, f.from_int(i));
    }
    auto noop = [](const F&, detail::FnElement<F>&) {};
    auto model = detail::assemble_model(f, std::move(gens), max_degree, noop, 0,
                                        "tangent-rnc:g=" + std::to_string(g));
    model.g_or_degree = g;
    model.depth = 3;  // arithmetically Cohen-Macaulay
    model.hilbert = [g](int m) -> std::optional<long> {
        return m == 0 ? 1 : static_cast<long>(g - 1) * m * m + 2;
    };
    if (model.dim_v() != g + 1) throw Error("rnc generators failed to stay independent");
    return model;
}

/// Tangent developable of the elliptic curve y^2 = x^3 - x embedded by |d O|,
/// O the point at infinity.  Sections are the pole-order monomials x^i y^j,
/// jets use the formal derivative with dy/dx = (3x^2-1)/(2y), denominators
/// cleared into the jet direction by 2(x^3-x).
template <class F>
SectionRingModel<F> elliptic_tangent_model(int d, const F& f, int max_degree) {
    if (d < 7) throw UnsupportedDegree("elliptic_tangent_model expects deg L >= 7");
    if (f.characteristic() != 0 && f.characteristic() <= static_cast<std::uint64_t>(d))
        throw CharTooSmall("elliptic model wants char 0 or a proxy prime > d");
    std::vector<detail::FnElement<F>> gens;
    for (int j = 0; j <= 1; ++j)
        for (int i = 0; 2 * i + 3 * j <= d; ++i) {
            detail::FnElement<F> gkt;
            detail::fn_add_term(f, gkt, {i, j, 0}, f.one());
            // jet direction 2(x^3-x) * d/dx (x^i y^j)
            if (j == 0) {
                // 2i (x^{i+2} - x^i)
                detail::fn_add_term(f, gkt, {i + 2, 0, 1}, f.from_int(2 * i));
                detail::fn_add_term(f, gkt, {i, 0, 1}, f.from_int(-2 * i));
            } else {
                // ((2i+3) x^{i+2} - (2i+1) x^i) y
                detail::fn_add_term(f, gkt, {i + 2, 1, 1}, f.from_int(2 * i + 3));
                detail::fn_add_term(f, gkt, {i, 1, 1}, f.from_int(-(2 * i + 1)));
            }
            gens.push_back(std::move(gkt));
        }
    auto model = detail::assemble_model(
        f, std::move(gens), max_degree,
        [](const F& fld, detail::FnElement<F>& el) { detail::reduce_elliptic(fld, el); }, 0,
        "elliptic:d=" + std::to_string(d));
    model.g_or_degree = d;
    model.depth = 2;  // arithmetically normal but not Cohen-Macaulay
    model.hilbert = [d](int m) -> std::optional<long> {
        return m == 0 ? 1 : static_cast<long>(d) * m * m;
    };
    if (model.dim_v() != d) throw Error("elliptic model: section basis is not independent");
    return model;
}

/// Tangent developable of the genus-2 curve s^2(t^3+1) + t^2 - t = 0 in P^1 x P^1,
/// embedded by the restriction of O(3) x O(2) (degree 13, in P^11).  Jets via
/// dt/ds = -F_s/F_t folded into the direction vector; t^3 reduced with tracked
/// s-power denominators.
template <class F>
SectionRingModel<F> genus2_tangent_model(const F& f, int max_degree) {
    if (f.characteristic() != 0 && f.characteristic() <= 13)
        throw CharTooSmall("genus-2 model wants char 0 or a proxy prime > 13");
    std::vector<detail::FnElement<F>> gens;
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 2; ++b) {
            detail::FnElement<F> gkt;
            detail::fn_add_term(f, gkt, {a, b, 0}, f.one());
            // direction d = ds(phi) F_t - dt(phi) F_s for phi = s^a t^b:
            //   (3a-2b) s^{a+1} t^{b+2} + 2a s^{a-1} t^{b+1} - a s^{a-1} t^b - 2b s^{a+1} t^{b-1}
            detail::fn_add_term(f, gkt, {a + 1, b + 2, 1}, f.from_int(3 * a - 2 * b));
            if (a >= 1) {
                detail::fn_add_term(f, gkt, {a - 1, b + 1, 1}, f.from_int(2 * a));
                detail::fn_add_term(f, gkt, {a - 1, b, 1}, f.from_int(-a));
            }
            if (b >= 1) detail::fn_add_term(f, gkt, {a + 1, b - 1, 1}, f.from_int(-2 * b));
            detail::reduce_genus2(f, gkt);
            gens.push_back(std::move(gkt));
        }
    auto model = detail::assemble_model(
        f, std::move(gens), max_degree,
        [](const F& fld, detail::FnElement<F>& el) { detail::reduce_genus2(fld, el); }, 6,
        "genus2:deg13");
    model.g_or_degree = 13;
    model.depth = 2;
    model.hilbert = [](int m) -> std::optional<long> {
        return m == 0 ? 1 : 14L * m * m - 2;
    };
    if (model.dim_v() != 12) throw Error("genus-2 model: section basis is not independent");
    return model;
}

}  // namespace syzygy

#endif
