#include <random>

#include "doctest.h"
#include "syzygy/linalg.hpp"
#include "syzygy/multilinear.hpp"

using namespace syzygy;

namespace {

// Independent dense textbook elimination; the oracle for every derived rank below.
template <class F>
std::size_t naive_rank(const F& f, const SparseMatrix<F>& m) {
    std::vector<std::vector<typename F::Elt>> a(m.codomain_dim,
                                                std::vector<typename F::Elt>(m.domain_dim, f.zero()));
    for (const auto& e : m.entries) a[e.row][e.col] = f.add(a[e.row][e.col], e.val);
    std::size_t rank = 0;
    int col = 0;
    while (rank < a.size() && col < m.domain_dim) {
        std::size_t piv = rank;
        while (piv < a.size() && f.is_zero(a[piv][col])) ++piv;
        if (piv == a.size()) {
            ++col;
            continue;
        }
        std::swap(a[piv], a[rank]);
        auto inv = f.inv(a[rank][col]);
        for (int j = col; j < m.domain_dim; ++j) a[rank][j] = f.mul(a[rank][j], inv);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == rank || f.is_zero(a[i][col])) continue;
            auto c = a[i][col];
            for (int j = col; j < m.domain_dim; ++j)
                a[i][j] = f.sub(a[i][j], f.mul(c, a[rank][j]));
        }
        ++rank;
        ++col;
    }
    return rank;
}

template <class F>
SparseMatrix<F> random_sparse(const F& f, int rows, int cols, double density, std::mt19937_64& rng) {
    SparseMatrix<F> m(rows, cols, f.spec());
    std::uniform_real_distribution<double> u(0, 1);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (u(rng) < density) {
                auto v = f.from_int(static_cast<std::int64_t>(rng() % 19) - 9);
                if (!f.is_zero(v)) m.push(r, c, v);
            }
    return m;
}

}  // namespace

TEST_CASE("rank: identity and zero") {
    FpField f5(5);
    CHECK(rank(f5, identity_matrix(f5, 7)) == 7);
    CHECK(rank(f5, zero_matrix(f5, 4, 9)) == 0);
    RatField q;
    CHECK(rank(q, identity_matrix(q, 3)) == 3);
}

TEST_CASE("rank: Wahl mu_2 over F_2 drops to 2") {
    // columns of mu_2 from the explicit formula; the column 2x vanishes mod 2
    FpField f2(2);
    auto mu2 = wahl_map(2, f2);
    CHECK(mu2.domain_dim == 3);
    CHECK(mu2.codomain_dim == 3);
    CHECK(naive_rank(f2, mu2) == 2);
    CHECK(rank(f2, mu2) == 2);

    FpField f5(5);
    CHECK(rank(f5, wahl_map(2, f5)) == 3);
}

TEST_CASE("rank agrees across engines on random instances") {
    std::mt19937_64 rng(20240817);
    FpField f(32003);
    RatField q;
    for (int trial = 0; trial < 12; ++trial) {
        int rows = 2 + static_cast<int>(rng() % 40);
        int cols = 2 + static_cast<int>(rng() % 40);
        auto m = random_sparse(f, rows, cols, 0.15, rng);
        auto expect = naive_rank(f, m);
        RankOptions mk, ll, wd;
        mk.engine = RankOptions::Engine::Markowitz;
        ll.engine = RankOptions::Engine::LeftLooking;
        wd.engine = RankOptions::Engine::Wiedemann;
        wd.seed = trial + 1;
        CHECK(rank(f, m, mk) == expect);
        CHECK(rank(f, m, ll) == expect);
        CHECK(rank(f, m, wd) == expect);

        SparseMatrix<RatField> mq(rows, cols, q.spec());
        for (const auto& e : m.entries) mq.push(e.row, e.col, q.from_int(static_cast<std::int64_t>(e.val)));
        RankOptions br;
        br.engine = RankOptions::Engine::Bareiss;
        CHECK(rank(q, mq, br) == naive_rank(q, mq));
        CHECK(rank(q, mq) == naive_rank(q, mq));
    }
}

TEST_CASE("rank on rank-deficient structured matrices") {
    // products B*A have rank <= rank(A); exercised against the oracle
    std::mt19937_64 rng(99);
    FpField f(13);
    for (int trial = 0; trial < 8; ++trial) {
        auto a = random_sparse(f, 6 + static_cast<int>(rng() % 8), 5, 0.4, rng);
        auto b = random_sparse(f, 9, a.codomain_dim, 0.4, rng);
        auto ba = compose(f, b, a);
        auto expect = naive_rank(f, ba);
        CHECK(rank(f, ba) == expect);
        RankOptions wd;
        wd.engine = RankOptions::Engine::Wiedemann;
        wd.seed = 17 + trial;
        CHECK(rank(f, ba, wd) == expect);
    }
}

TEST_CASE("rank(M) = rank(M^T)") {
    std::mt19937_64 rng(7);
    FpField f(101);
    for (int trial = 0; trial < 10; ++trial) {
        auto m = random_sparse(f, 3 + static_cast<int>(rng() % 30), 3 + static_cast<int>(rng() % 30),
                               0.2, rng);
        CHECK(rank(f, m) == rank(f, m.transposed()));
    }
}

TEST_CASE("semicontinuity: rank over Q >= rank over F_p for integer matrices") {
    // exercised on the paper's integer-entried maps
    RatField q;
    for (int d = 0; d <= 6; ++d) {
        for (auto maker : {&wahl_map_int, &conic_inclusion_int, &double_line_inclusion_int, &tau_map_int}) {
            IntMatrix im = maker(d + 1);
            auto rq = rank(q, im.over(q));
            for (std::uint64_t p : {2ull, 3ull, 5ull, 32003ull}) {
                FpField fp(p);
                CHECK(rank(fp, im.over(fp)) <= rq);
            }
        }
    }
}

TEST_CASE("homology_dim: trivial cases") {
    FpField f(7);
    // A = 0, B = 0 on dims a -> b -> c gives b
    auto a = zero_matrix(f, 5, 3);
    auto b = zero_matrix(f, 2, 5);
    CHECK(homology_dim(f, a, b) == 5);
    // A identity, B = 0 gives 0
    CHECK(homology_dim(f, identity_matrix(f, 5), zero_matrix(f, 2, 5)) == 0);
}

TEST_CASE("homology_dim: gamma_2 and mult for g=3, char 5") {
    FpField f(5);
    auto g = gamma_map(3, 0, MapVariant::Tangent, f);
    auto pair = koszul_pair(0, 3, f);
    CHECK(g.codomain_dim == 9);
    CHECK(g.domain_dim == 3);
    CHECK(pair.mult.domain_dim == 9);
    CHECK(pair.mult.codomain_dim == 6);
    CHECK(naive_rank(f, g) == 3);
    CHECK(naive_rank(f, pair.mult) == 6);
    CHECK(homology_dim(f, g, pair.mult) == 0);
}

TEST_CASE("homology_dim rejects bad complexes") {
    FpField f(7);
    CHECK_THROWS_AS(homology_dim(f, zero_matrix(f, 4, 2), zero_matrix(f, 3, 5)), DimensionMismatch);
    // B*A != 0
    auto a = identity_matrix(f, 3);
    auto b = identity_matrix(f, 3);
    CHECK_THROWS_AS(homology_dim(f, a, b), CompositionNotZero);
}

namespace {

// dense inverse over F_p, test-only
SparseMatrix<FpField> naive_inverse(const FpField& f, const SparseMatrix<FpField>& m) {
    const int n = m.codomain_dim;
    std::vector<std::vector<std::uint64_t>> a(n, std::vector<std::uint64_t>(2 * n, 0));
    for (const auto& e : m.entries) a[e.row][e.col] = f.add(a[e.row][e.col], e.val);
    for (int i = 0; i < n; ++i) a[i][n + i] = 1;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && f.is_zero(a[piv][col])) ++piv;
        REQUIRE(piv < n);
        std::swap(a[piv], a[col]);
        auto inv = f.inv(a[col][col]);
        for (int j = 0; j < 2 * n; ++j) a[col][j] = f.mul(a[col][j], inv);
        for (int i = 0; i < n; ++i) {
            if (i == col || f.is_zero(a[i][col])) continue;
            auto c = a[i][col];
            for (int j = 0; j < 2 * n; ++j) a[i][j] = f.sub(a[i][j], f.mul(c, a[col][j]));
        }
    }
    SparseMatrix<FpField> out(n, n, f.spec());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!f.is_zero(a[i][n + j])) out.push(i, j, a[i][n + j]);
    return out;
}

SparseMatrix<FpField> random_invertible(const FpField& f, int n, std::mt19937_64& rng) {
    for (;;) {
        auto m = random_sparse(f, n, n, 0.5, rng);
        if (naive_rank(f, m) == static_cast<std::size_t>(n)) return m;
    }
}

}  // namespace

TEST_CASE("homology_dim invariant under basis changes of the complex") {
    std::mt19937_64 rng(4242);
    FpField f(11);
    // complex with B*A = 0: A = some kernel vectors of B
    auto b = random_sparse(f, 6, 10, 0.3, rng);
    auto kb = kernel_basis(f, b);
    SparseMatrix<FpField> a(10, static_cast<int>(kb.size()), f.spec());
    for (int c = 0; c < static_cast<int>(kb.size()); ++c)
        if (c % 2 == 0)
            for (auto& [r, v] : kb[c]) a.push(r, c, v);  // half the kernel: homology survives
    long h0 = homology_dim(f, a, b);
    CHECK(h0 >= 0);

    for (int trial = 0; trial < 4; ++trial) {
        auto p_mid = random_invertible(f, 10, rng);
        auto p_mid_inv = naive_inverse(f, p_mid);
        auto p_left = random_invertible(f, static_cast<int>(kb.size()), rng);
        auto p_right = random_invertible(f, 6, rng);
        // A' = P_mid A P_left, B' = P_right B P_mid^{-1}: still a complex, same homology
        auto a2 = compose(f, p_mid, compose(f, a, p_left));
        auto b2 = compose(f, p_right, compose(f, b, p_mid_inv));
        CHECK(homology_dim(f, a2, b2) == h0);
    }
}

TEST_CASE("homology zero iff rank(A) + rank(B) = dim middle") {
    std::mt19937_64 rng(31337);
    FpField f(32003);
    for (int trial = 0; trial < 6; ++trial) {
        auto b = random_sparse(f, 8, 12, 0.35, rng);
        auto kb = kernel_basis(f, b);
        SparseMatrix<FpField> a(12, static_cast<int>(kb.size()), f.spec());
        for (int c = 0; c < static_cast<int>(kb.size()); ++c)
            for (auto& [r, v] : kb[c]) a.push(r, c, v);
        long h = homology_dim(f, a, b);
        CHECK(h >= 0);
        bool sum_full = rank(f, a) + rank(f, b) == 12;
        CHECK((h == 0) == sum_full);
        CHECK(h == 0);  // a spans the whole kernel here
    }
}

TEST_CASE("span_reduce basics") {
    FpField f(7);
    // {(1,0),(0,1),(1,1)} -> basis size 2
    std::vector<SparseVec<FpField>> vecs = {
        {{0, 1}}, {{1, 1}}, {{0, 1}, {1, 1}},
    };
    auto sb = span_reduce(f, 2, vecs);
    CHECK(sb.size() == 2);
    // empty input
    auto sb0 = span_reduce(f, 4, {});
    CHECK(sb0.size() == 0);
    // coordinates of a member
    auto coords = sb.coordinates({{0, 3}, {1, 4}});
    CHECK(coords.size() == 2);
    // NotInSpan on a vector outside
    SpanBasis<FpField> sb2(f, 3);
    sb2.insert({{0, 1}});
    CHECK_THROWS_AS(sb2.coordinates({{2, 1}}), NotInSpan);
}

TEST_CASE("span_reduce reconstructs members from coordinates") {
    std::mt19937_64 rng(5150);
    RatField q;
    std::vector<SparseVec<RatField>> vecs;
    for (int k = 0; k < 8; ++k) {
        SparseVec<RatField> v;
        for (int r = 0; r < 6; ++r) {
            auto val = q.from_int(static_cast<std::int64_t>(rng() % 7) - 3);
            if (!q.is_zero(val)) v.emplace_back(r, val);
        }
        vecs.push_back(v);
    }
    auto sb = span_reduce(q, 6, vecs);
    for (const auto& v : vecs) {
        auto coords = sb.coordinates(v);
        // rebuild sum c_k basis_k and compare
        std::vector<mpq_class> acc(6, 0);
        for (int k = 0; k < sb.size(); ++k)
            for (auto& [r, val] : sb.basis_vector(k)) acc[r] += coords[k] * val;
        std::vector<mpq_class> want(6, 0);
        for (auto& [r, val] : v) want[r] = val;
        CHECK(acc == want);
    }
}

TEST_CASE("kernel_basis gives independent kernel vectors spanning ker") {
    std::mt19937_64 rng(777);
    FpField f(13);
    for (int trial = 0; trial < 6; ++trial) {
        auto m = random_sparse(f, 7, 11, 0.3, rng);
        auto kb = kernel_basis(f, m);
        CHECK(kb.size() == 11 - rank(f, m));
        auto cols = m.columns();
        for (const auto& v : kb) {
            auto img = m.apply_columns(f, cols, v);
            CHECK(img.empty());
        }
        // independence
        SpanBasis<FpField> sb(f, 11);
        int count = 0;
        for (const auto& v : kb) count += sb.insert(v) ? 1 : 0;
        CHECK(count == static_cast<int>(kb.size()));
    }
}

TEST_CASE("bareiss rank on rational matrices with denominators") {
    RatField q;
    // row1 = 3 * row0, so only the third row adds rank
    SparseMatrix<RatField> m(3, 3, q.spec());
    m.push(0, 0, mpq_class(1, 2));
    m.push(0, 1, mpq_class(1, 3));
    m.push(1, 0, mpq_class(3, 2));
    m.push(1, 1, mpq_class(1, 1));
    m.push(2, 2, mpq_class(7, 5));
    CHECK(bareiss_rank_q(m) == 2);
    CHECK(rank(q, m) == 2);
    SparseMatrix<RatField> m2(2, 2, q.spec());
    m2.push(0, 0, mpq_class(1, 2));
    m2.push(0, 1, mpq_class(1, 3));
    m2.push(1, 0, mpq_class(3, 2));
    m2.push(1, 1, mpq_class(2, 1));
    CHECK(bareiss_rank_q(m2) == 2);
}

TEST_CASE("sparse matrix validation") {
    FpField f(5);
    SparseMatrix<FpField> m(2, 2, f.spec());
    m.push(0, 0, 1);
    CHECK_NOTHROW(m.validate(f));
    m.push(0, 0, 2);
    CHECK_THROWS(m.validate(f));
}
