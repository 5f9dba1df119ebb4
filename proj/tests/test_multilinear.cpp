#include "doctest.h"
#include "syzygy/multilinear.hpp"

using namespace syzygy;

namespace {

template <class F>
typename F::Elt entry_at(const F& f, const SparseMatrix<F>& m, int r, int c) {
    auto v = f.zero();
    for (const auto& e : m.entries)
        if (e.row == r && e.col == c) v = f.add(v, e.val);
    return v;
}

std::vector<std::uint64_t> small_primes_leq(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p <= bound; ++p)
        if (is_prime_u64(p)) out.push_back(p);
    return out;
}

std::uint64_t first_prime_at_least(std::uint64_t bound) {
    std::uint64_t p = bound < 2 ? 2 : bound;
    while (!is_prime_u64(p)) ++p;
    return p;
}

}  // namespace

TEST_CASE("hermite_dims") {
    CHECK(hermite_dims(2, 3) == std::pair<long, long>{6, 6});
    for (int d = 1; d <= 9; ++d) CHECK(hermite_dims(1, d) == std::pair<long, long>{d + 1, d + 1});
    // the identification used at (g,p) = (7,1): both sides C(7,3) = 35
    auto [a, b] = hermite_dims(1 + 2, 7 - 1);
    CHECK(a == 35);
    CHECK(b == 35);
    CHECK(a == binomial(7, 3));
    // contract: equality across the whole sweep range
    for (int d = 1; d <= 10; ++d)
        for (int n = 1; n <= d + 1; ++n) {
            auto [l, r] = hermite_dims(n, d);
            CHECK(l == r);
        }
    CHECK_THROWS_AS(hermite_dims(5, 3), InvalidRange);
}

TEST_CASE("wahl_map formula at m=2") {
    RatField q;
    auto mu = wahl_map(2, q);
    // x^2 ^ x^0 |-> 2x ; x^1 ^ x^0 |-> 1 ; x^2 ^ x^1 |-> x^2
    CHECK(entry_at(q, mu, 1, wedge2_index(2, 0)) == 2);
    CHECK(entry_at(q, mu, 0, wedge2_index(1, 0)) == 1);
    CHECK(entry_at(q, mu, 2, wedge2_index(2, 1)) == 1);
    CHECK(mu.nnz() == 3);

    FpField f2(2);
    CHECK(rank(f2, wahl_map(2, f2)) == 2);
}

TEST_CASE("conic inclusion: normalization and degenerate domain") {
    RatField q;
    auto inc = conic_inclusion(1, q);
    // x^1 ^ x^0 |-> x^3 ^ x^0 - 3 x^2 ^ x^1 after normalizing x^1 ^ x^2 = -x^2 ^ x^1
    CHECK(inc.domain_dim == 1);
    CHECK(entry_at(q, inc, wedge2_index(3, 0), 0) == 1);
    CHECK(entry_at(q, inc, wedge2_index(2, 1), 0) == -3);
    CHECK(inc.nnz() == 2);

    auto inc0 = conic_inclusion(0, q);
    CHECK(inc0.domain_dim == 0);
    CHECK(inc0.nnz() == 0);
}

TEST_CASE("double line inclusion at d=1 and char 2 coincidence") {
    RatField q;
    auto inc = double_line_inclusion(1, q);
    // x^3 ^ x^0 + 2 x^2 ^ x^1 - x^2 ^ x^1 = x^3 ^ x^0 + x^2 ^ x^1
    CHECK(entry_at(q, inc, wedge2_index(3, 0), 0) == 1);
    CHECK(entry_at(q, inc, wedge2_index(2, 1), 0) == 1);
    CHECK(inc.nnz() == 2);

    FpField f2(2);
    for (int d = 0; d <= 5; ++d)
        CHECK(equal_matrices(f2, double_line_inclusion(d, f2), conic_inclusion(d, f2)));
}

TEST_CASE("tau map formula at m=2") {
    RatField q;
    auto tau = tau_map(2, q);
    // block S^2U sits first (dim 3), block S^4U after (dim 5)
    CHECK(tau.codomain_dim == 8);
    CHECK(entry_at(q, tau, 1, wedge2_index(2, 0)) == 2);        // (2x, 0)
    CHECK(entry_at(q, tau, 3 + 1, wedge2_index(1, 0)) == -1);   // (0, -x)
    CHECK(entry_at(q, tau, 3 + 3, wedge2_index(2, 1)) == 1);    // (0, x^3)
    CHECK(tau.nnz() == 3);
}

TEST_CASE("exactness of the conic sequence: mu o inclusion = 0 and rank sum") {
    RatField q;
    for (int d = 0; d <= 8; ++d) {
        auto inc = conic_inclusion(d, q);
        auto mu = wahl_map(d + 2, q);
        CHECK(is_zero_matrix(q, compose(q, mu, inc)));
        CHECK(rank(q, inc) + rank(q, mu) == static_cast<std::size_t>(wedge2_dim(d + 2)));
    }
}

TEST_CASE("exactness of the double line sequence: tau o inclusion = 0, rank tau = 2d+3") {
    RatField q;
    for (int d = 0; d <= 8; ++d) {
        auto inc = double_line_inclusion(d, q);
        auto tau = tau_map(d + 2, q);
        CHECK(is_zero_matrix(q, compose(q, tau, inc)));
        CHECK(rank(q, tau) == static_cast<std::size_t>(2 * d + 3));
    }
    for (std::uint64_t p : {3ull, 5ull, 7ull, 32003ull}) {
        FpField f(p);
        for (int d = 0; d <= 6; ++d) {
            CHECK(is_zero_matrix(f, compose(f, tau_map(d + 2, f), double_line_inclusion(d, f))));
            CHECK(rank(f, tau_map(d + 2, f)) == static_cast<std::size_t>(2 * d + 3));
        }
    }
}

TEST_CASE("co-Wahl Delta: tangent formula and adjointness with the Wahl map") {
    RatField q;
    auto delta = co_wahl_delta(0, MapVariant::Tangent, q);
    // x^(1) |-> 2 x^(2) ^ x^(0) ; x^(0) |-> x^(1) ^ x^(0)
    CHECK(entry_at(q, delta, wedge2_index(2, 0), 1) == 2);
    CHECK(entry_at(q, delta, wedge2_index(1, 0), 0) == 1);

    // adjointness under the monomial dual pairings is exactly transposition
    for (int p = 0; p <= 6; ++p) {
        auto d_q = co_wahl_delta(p, MapVariant::Tangent, q);
        auto mu_q = wahl_map(p + 2, q);
        CHECK(equal_matrices(q, d_q, mu_q.transposed()));
        for (std::uint64_t pr : {2ull, 5ull, 32003ull}) {
            FpField f(pr);
            CHECK(equal_matrices(f, co_wahl_delta(p, MapVariant::Tangent, f),
                                 wahl_map(p + 2, f).transposed()));
        }
    }
}

TEST_CASE("co-Wahl Delta: injective with rank 2p+3 in char 0, both variants") {
    RatField q;
    for (int p = 0; p <= 6; ++p) {
        for (auto variant : {MapVariant::Tangent, MapVariant::Carpet}) {
            auto d = co_wahl_delta(p, variant, q);
            CHECK(d.domain_dim == 2 * p + 3);
            CHECK(d.codomain_dim == wedge2_dim(p + 2));
            CHECK(rank(q, d) == static_cast<std::size_t>(2 * p + 3));
            // coker dim C(p+1, 2)
            CHECK(d.codomain_dim - 2 * p - 3 == binomial(p + 1, 2));
        }
    }
}

TEST_CASE("koszul_pair: differential formula, complex property, mult surjective") {
    RatField q;
    auto pair = koszul_pair(0, 3, q);
    // delta(1 (x) x^(1) ^ x^(0)) = x^(1) (x) x^(0) - x^(0) (x) x^(1)
    // S^1V basis in lex-descending order: x^(0), x^(1), x^(2)
    int col = wedge2_index(1, 0);
    CHECK(entry_at(q, pair.delta, /*x(1) (x) x(0)*/ 1 * 3 + 0, col) == 1);
    CHECK(entry_at(q, pair.delta, /*x(0) (x) x(1)*/ 0 * 3 + 1, col) == -1);

    // mult(x^(0) (x) x^(1)) = x^(0)x^(1): the middle monomial of S^2V
    MonomialTable s2(3, 2);
    int target = s2.index_of({1, 1, 0});
    CHECK(entry_at(q, pair.mult, target, 0 * 3 + 1) == 1);

    CHECK(is_zero_matrix(q, compose(q, pair.mult, pair.delta)));

    auto pair1 = koszul_pair(1, 3, q);
    CHECK(rank(q, pair1.mult) == 10);  // S^3V has dim 10, mult surjective
    CHECK(is_zero_matrix(q, compose(q, pair1.mult, pair1.delta)));
}

TEST_CASE("gamma: rank at g=3, p=0 and the complex property") {
    FpField f5(5);
    auto g5 = gamma_map(3, 0, MapVariant::Tangent, f5);
    CHECK(g5.codomain_dim == 9);
    CHECK(g5.domain_dim == 3);
    CHECK(rank(f5, g5) == 3);

    FpField f2(2);
    auto g2 = gamma_map(3, 0, MapVariant::Tangent, f2);
    CHECK(rank(f2, g2) == 2);  // Delta(x^(1)) = 2 x^(2) ^ x^(0) dies mod 2

    RatField q;
    for (int g = 3; g <= 8; ++g)
        for (int p = 0; p <= g - 3; ++p)
            for (auto variant : {MapVariant::Tangent, MapVariant::Carpet}) {
                auto gm = gamma_map(g, p, variant, q);
                auto pair = koszul_pair(g - p - 3, p + 3, q);
                CHECK(is_zero_matrix(q, compose(q, pair.mult, gm)));
            }
    CHECK_THROWS_AS(gamma_map(3, 1, MapVariant::Tangent, q), InvalidRange);
}

TEST_CASE("koszul_module_dim: spec instances") {
    RatField q;
    CHECK(koszul_module_dim(3, 0, MapVariant::Tangent, q) == 0);
    FpField f2(2);
    CHECK(koszul_module_dim(3, 0, MapVariant::Tangent, f2) == 1);
    CHECK(koszul_module_dim(7, 2, MapVariant::Carpet, q) == 0);
}

TEST_CASE("theorem boundaries on a moderate sweep") {
    // vanishing for admissible characteristics, nonvanishing at the boundary p
    for (int g = 3; g <= 8; ++g) {
        int pmax = (g - 3) / 2;
        RatField q;
        for (int p = 0; p <= pmax; ++p) {
            CHECK(koszul_module_dim(g, p, MapVariant::Tangent, q) == 0);
            CHECK(koszul_module_dim(g, p, MapVariant::Carpet, q) == 0);
            FpField fbig(first_prime_at_least((g + 2 + 1) / 2));
            CHECK(koszul_module_dim(g, p, MapVariant::Tangent, fbig) == 0);
        }
        for (std::uint64_t ch : small_primes_leq((g + 1) / 2)) {
            FpField f(ch);
            CHECK(koszul_module_dim(g, pmax, MapVariant::Tangent, f) != 0);
        }
    }
}

TEST_CASE("gamma_prime: corestriction reproduces gamma and detects char-2 failure") {
    RatField q;
    // k = q = g-p-3 gives the same rank as gamma
    for (int g : {4, 5, 6}) {
        int p = 1;
        if (p > g - 3) continue;
        auto gm = gamma_map(g, p, MapVariant::Tangent, q);
        auto gp = gamma_prime(p, g - p - 3, MapVariant::Tangent, q);
        CHECK(rank(q, gp.matrix) == rank(q, gm));
    }

    auto gp1 = gamma_prime(1, 1, MapVariant::Tangent, q);
    CHECK(gamma_prime_surjective(gp1, q));

    FpField f2(2);
    auto gp2 = gamma_prime(1, 1, MapVariant::Tangent, f2);
    CHECK_FALSE(gamma_prime_surjective(gp2, f2));
}

TEST_CASE("fiber_dual_injectivity: monomial and binomial functionals") {
    FpField f3(3);
    std::vector<std::uint64_t> h_one = {1, 0, 0, 0};  // h = 1, p = 1
    CHECK_FALSE(fiber_dual_injectivity(1, h_one, MapVariant::Tangent, f3));

    RatField q;
    std::vector<mpq_class> h_x3 = {0, 0, 0, 1};  // h = x^3
    CHECK(fiber_dual_injectivity(1, h_x3, MapVariant::Tangent, q));

    std::vector<mpq_class> h_mix = {0, 1, 0, 1, 0};  // h = x^3 + x, p = 2
    CHECK(fiber_dual_injectivity(2, h_mix, MapVariant::Carpet, q));

    std::vector<mpq_class> h_zero = {0, 0, 0, 0};
    CHECK_THROWS_AS(fiber_dual_injectivity(1, h_zero, MapVariant::Tangent, q), ZeroFunctional);
}

TEST_CASE("kernel_regularity: spec instances") {
    RatField q;
    auto reg = kernel_regularity(1, MapVariant::Tangent, q);
    CHECK(reg.regular);

    FpField f2(2);
    auto reg2 = kernel_regularity(1, MapVariant::Tangent, f2);
    CHECK_FALSE(reg2.regular);

    for (std::uint64_t p : {3ull, 5ull, 7ull}) {
        FpField f(p);
        auto r0 = kernel_regularity(0, MapVariant::Tangent, f);
        CHECK(r0.regular);
        auto r0c = kernel_regularity(0, MapVariant::Carpet, f);
        CHECK(r0c.regular);
    }
}

TEST_CASE("mumford propagation of gamma_prime surjectivity") {
    RatField q;
    FpField f7(7);
    for (int p : {1, 2}) {
        for (auto variant : {MapVariant::Tangent, MapVariant::Carpet}) {
            auto base_q = gamma_prime(p, p, variant, q);
            if (gamma_prime_surjective(base_q, q)) {
                for (int k = p + 1; k <= p + 4; ++k) {
                    auto gk = gamma_prime(p, k, variant, q);
                    CHECK(gamma_prime_surjective(gk, q));
                }
            }
            auto base_7 = gamma_prime(p, p, variant, f7);
            if (gamma_prime_surjective(base_7, f7)) {
                for (int k = p + 1; k <= p + 4; ++k) {
                    auto gk = gamma_prime(p, k, variant, f7);
                    CHECK(gamma_prime_surjective(gk, f7));
                }
            }
        }
    }
}

TEST_CASE("fiber failure forces a bundle-level failure") {
    // whenever some structured h fails the fiber test, either the kernel sheaf is
    // irregular or some gamma' in range fails to surject
    for (std::uint64_t ch : {2ull, 3ull, 5ull}) {
        FpField f(ch);
        for (int p = 0; p <= 3; ++p) {
            for (auto variant : {MapVariant::Tangent, MapVariant::Carpet}) {
                bool some_fiber_fails = false;
                const int m = p + 2;
                for (int d = 0; d <= m && !some_fiber_fails; ++d) {
                    std::vector<std::uint64_t> h(m + 1, 0);
                    h[d] = 1;
                    if (!fiber_dual_injectivity(p, h, variant, f)) some_fiber_fails = true;
                }
                if (!some_fiber_fails) continue;
                bool bundle_failure = !kernel_regularity(p, variant, f).regular;
                for (int k = p; k <= p + 3 && !bundle_failure; ++k) {
                    auto gk = gamma_prime(p, k, variant, f);
                    if (!gamma_prime_surjective(gk, f)) bundle_failure = true;
                }
                CHECK(bundle_failure);
            }
        }
    }
}
