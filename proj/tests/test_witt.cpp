#include <doctest.h>

#include <algorithm>
#include <random>
#include <thread>

#include "wittstack/errors.hpp"
#include "wittstack/witt.hpp"

using namespace wittstack;

namespace {

LaurentSeries t_pow(std::uint32_t p, long long k) {
    return LaurentSeries::monomial(fp_one(p), k);
}

LaurentSeries random_series(std::mt19937& rng, std::uint32_t p) {
    std::uniform_int_distribution<long long> coeff(0, p - 1);
    LaurentSeries s = LaurentSeries::zero(p);
    for (long long k = -3; k <= 2; ++k) {
        long long c = coeff(rng);
        if (c) s = s + LaurentSeries::monomial(Fp(c, p), k);
    }
    return s;
}

WittVector<LaurentSeries> random_witt(std::mt19937& rng, std::uint32_t p, std::uint32_t n) {
    std::vector<LaurentSeries> comps;
    for (std::uint32_t i = 0; i < n; ++i) comps.push_back(random_series(rng, p));
    return WittVector<LaurentSeries>(p, std::move(comps));
}

std::vector<ModMonomial> sorted_terms(std::vector<ModMonomial> t) {
    std::sort(t.begin(), t.end(), [](const ModMonomial& a, const ModMonomial& b) {
        return a.exps != b.exps ? a.exps < b.exps : a.coeff < b.coeff;
    });
    return t;
}

}  // namespace

TEST_CASE("universal addition polynomials for p=2, n=2") {
    auto set = gen_witt_polys(2, 2, WittOpKind::Add);
    // S_0 = X_0 + Y_0
    auto s0 = sorted_terms(set->polys_mod_p[0]);
    REQUIRE(s0.size() == 2);
    CHECK(s0[0].exps == std::vector<std::uint16_t>{0, 0, 1, 0});
    CHECK(s0[1].exps == std::vector<std::uint16_t>{1, 0, 0, 0});
    // S_1 = X_1 + Y_1 + X_0 Y_0 mod 2
    auto s1 = sorted_terms(set->polys_mod_p[1]);
    REQUIRE(s1.size() == 3);
    bool has_x1 = false, has_y1 = false, has_cross = false;
    for (const auto& m : s1) {
        CHECK(m.coeff == 1);
        if (m.exps == std::vector<std::uint16_t>{0, 1, 0, 0}) has_x1 = true;
        if (m.exps == std::vector<std::uint16_t>{0, 0, 0, 1}) has_y1 = true;
        if (m.exps == std::vector<std::uint16_t>{1, 0, 1, 0}) has_cross = true;
    }
    CHECK(has_x1);
    CHECK(has_y1);
    CHECK(has_cross);
}

TEST_CASE("level-1 polynomials are the plain ring operations") {
    auto add = gen_witt_polys(5, 1, WittOpKind::Add);
    CHECK(add->polys[0] == MPolyZ::variable(2, 0) + MPolyZ::variable(2, 1));
    auto neg = gen_witt_polys(3, 1, WittOpKind::Neg);
    CHECK(neg->polys[0] == MPolyZ::zero(1) - MPolyZ::variable(1, 0));
}

TEST_CASE("the polynomial cache is deterministic and shared") {
    auto a = gen_witt_polys(3, 2, WittOpKind::Mul);
    auto b = gen_witt_polys(3, 2, WittOpKind::Mul);
    CHECK(a.get() == b.get());

    std::vector<std::shared_ptr<const WittPolySet>> got(4);
    std::vector<std::thread> threads;
    for (int i = 0; i < 4; ++i)
        threads.emplace_back([&got, i] { got[i] = gen_witt_polys(2, 4, WittOpKind::Add); });
    for (auto& t : threads) t.join();
    for (int i = 1; i < 4; ++i) CHECK(got[i]->polys == got[0]->polys);
}

TEST_CASE("caps are enforced and configurable") {
    CHECK_THROWS_AS(gen_witt_polys(11, 2, WittOpKind::Add), CapExceeded);
    CHECK_THROWS_AS(gen_witt_polys(2, 5, WittOpKind::Add), CapExceeded);
    auto saved = witt_caps();
    witt_caps().max_n = 5;
    CHECK_NOTHROW(gen_witt_polys(2, 5, WittOpKind::Add));
    witt_caps() = saved;
}

TEST_CASE("arithmetic in W_2(F_2)") {
    auto x = witt_fp(2, {1, 0});
    CHECK(witt_add(x, x) == witt_fp(2, {0, 1}));
    CHECK(witt_mul(x, x) == x);
    auto zero = witt_zero(2, 2, fp_zero(2));
    CHECK(witt_add(zero, x) == x);
    CHECK(witt_add(x, witt_neg(x)) == zero);
}

TEST_CASE("frobenius acts componentwise by p-th powers") {
    std::uint32_t p = 3;
    for (long long a = 0; a < p; ++a)
        for (long long b = 0; b < p; ++b) {
            auto x = witt_fp(p, {a, b});
            CHECK(frobenius(x) == x);  // Fermat on F_p coefficients
        }
    WittVector<LaurentSeries> y(p, {t_pow(p, -1), LaurentSeries::zero(p)});
    CHECK(frobenius(y).comp[0] == t_pow(p, -3));
    WittVector<LaurentSeries> z(2, {LaurentSeries::one(2) + t_pow(2, 1), t_pow(2, 1)});
    CHECK(frobenius(z).comp[0] == LaurentSeries::one(2) + t_pow(2, 2));
    CHECK(frobenius(z).comp[1] == t_pow(2, 2));
}

TEST_CASE("verschiebung shifts and truncates") {
    auto x = witt_fp(3, {1, 2});
    CHECK(verschiebung(x) == witt_fp(3, {0, 1}));
    auto v = x;
    for (int i = 0; i < 2; ++i) v = verschiebung(v);
    CHECK(v == witt_zero(3, 2, fp_zero(3)));

    CHECK(truncate(x, 2) == x);
    CHECK(truncate(x, 1) == witt_fp(3, {1}));
    CHECK_THROWS_AS(truncate(x, 3), BadLength);
    CHECK_THROWS_AS(truncate(x, 0), BadLength);
}

TEST_CASE("F(V(x)) is multiplication by p") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        auto x = random_witt(rng, 2, 2);
        auto px = witt_add(x, x);
        CHECK(frobenius(verschiebung(x)) == px);
    }
}

TEST_CASE("truncation is a ring homomorphism") {
    std::mt19937 rng(4);
    for (int trial = 0; trial < 25; ++trial) {
        auto x = random_witt(rng, 2, 3), y = random_witt(rng, 2, 3);
        CHECK(truncate(witt_add(x, y), 2) == witt_add(truncate(x, 2), truncate(y, 2)));
        CHECK(truncate(witt_mul(x, y), 2) == witt_mul(truncate(x, 2), truncate(y, 2)));
    }
}

TEST_CASE("wp kills the constants and only them") {
    for (auto [p, n] :
         std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {3, 3}, {5, 1}}) {
        long long total = 1;
        for (std::uint32_t i = 0; i < n; ++i) total *= p;
        long long kernel = 0;
        for (long long idx = 0; idx < total; ++idx) {
            std::vector<long long> digits;
            long long v = idx;
            for (std::uint32_t i = 0; i < n; ++i) {
                digits.push_back(v % p);
                v /= p;
            }
            if (wp(witt_fp(p, digits)) == witt_zero(p, n, fp_zero(p))) ++kernel;
        }
        CHECK(kernel == total);
    }
}

TEST_CASE("wp on series follows the definition and is additive") {
    std::uint32_t p = 3;
    WittVector<LaurentSeries> x(p, {t_pow(p, -1)});
    CHECK(wp(x).comp[0] == t_pow(p, -3) - t_pow(p, -1));

    std::mt19937 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        auto a = random_witt(rng, 3, 2), b = random_witt(rng, 3, 2);
        CHECK(wp(witt_add(a, b)) == witt_add(wp(a), wp(b)));
    }
}

TEST_CASE("ring axioms for Witt vectors of Laurent series") {
    std::mt19937 rng(6);
    for (auto [p, n] :
         std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {2, 3}, {3, 2}}) {
        for (int trial = 0; trial < 12; ++trial) {
            auto x = random_witt(rng, p, n), y = random_witt(rng, p, n),
                 z = random_witt(rng, p, n);
            CHECK(witt_add(x, y) == witt_add(y, x));
            CHECK(witt_mul(x, y) == witt_mul(y, x));
            CHECK(witt_add(witt_add(x, y), z) == witt_add(x, witt_add(y, z)));
            CHECK(witt_mul(witt_mul(x, y), z) == witt_mul(x, witt_mul(y, z)));
            CHECK(witt_mul(x, witt_add(y, z)) == witt_add(witt_mul(x, y), witt_mul(x, z)));
            std::vector<LaurentSeries> c(n, LaurentSeries::zero(p));
            c[0] = LaurentSeries::one(p);
            WittVector<LaurentSeries> one(p, std::move(c));
            CHECK(witt_mul(one, x) == x);
        }
    }
}

TEST_CASE("frobenius is a ring homomorphism, verschiebung is additive") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        auto x = random_witt(rng, 2, 3), y = random_witt(rng, 2, 3);
        CHECK(frobenius(witt_add(x, y)) == witt_add(frobenius(x), frobenius(y)));
        CHECK(frobenius(witt_mul(x, y)) == witt_mul(frobenius(x), frobenius(y)));
        CHECK(verschiebung(witt_add(x, y)) == witt_add(verschiebung(x), verschiebung(y)));
    }
}

TEST_CASE("ghost map on integer lifts") {
    WittVector<BigInt> a(2, {BigInt(1), BigInt(0)});
    CHECK(ghost_map(a) == std::vector<BigInt>{BigInt(1), BigInt(1)});
    WittVector<BigInt> b(2, {BigInt(0), BigInt(1)});
    CHECK(ghost_map(b) == std::vector<BigInt>{BigInt(0), BigInt(2)});

    std::mt19937 rng(8);
    std::uniform_int_distribution<long long> val(-40, 40);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<BigInt> xs{val(rng), val(rng), val(rng)}, ys{val(rng), val(rng), val(rng)};
        WittVector<BigInt> x(2, xs), y(2, ys);
        auto gx = ghost_map(x), gy = ghost_map(y);
        auto gs = ghost_map(witt_binary_z(x, y, WittOpKind::Add));
        auto gp = ghost_map(witt_binary_z(x, y, WittOpKind::Mul));
        for (std::size_t k = 0; k < 3; ++k) {
            CHECK(gs[k] == gx[k] + gy[k]);
            CHECK(gp[k] == gx[k] * gy[k]);
        }
    }
}

TEST_CASE("W_n(F_p) = Z/p^n Z via Teichmueller digits") {
    CHECK(to_zpn(witt_zero(2, 2, fp_zero(2))) == 0);
    CHECK(to_zpn(witt_fp(2, {0, 1})) == 2);

    // Round trip for every p^n <= 125.
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {2, 2}, {2, 3}, {3, 2}, {3, 3}, {5, 2}, {5, 3}, {7, 2}}) {
        BigInt total = pow_bi(BigInt(p), n);
        for (BigInt r = 0; r < total; ++r) CHECK(to_zpn(from_zpn(r, p, n)) == r);
    }

    // Exhaustive ring-isomorphism check for (3, 2): all 81 pairs.
    for (long long i = 0; i < 9; ++i)
        for (long long j = 0; j < 9; ++j) {
            auto x = from_zpn(BigInt(i), 3, 2), y = from_zpn(BigInt(j), 3, 2);
            CHECK(to_zpn(witt_add(x, y)) == (i + j) % 9);
            CHECK(to_zpn(witt_mul(x, y)) == (i * j) % 9);
        }
}

TEST_CASE("mismatched operands are rejected") {
    CHECK_THROWS_AS(witt_add(witt_fp(2, {1, 0}), witt_fp(3, {1, 0})), MismatchedRing);
    CHECK_THROWS_AS(witt_add(witt_fp(2, {1, 0}), witt_fp(2, {1})), MismatchedRing);
}
