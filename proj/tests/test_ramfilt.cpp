#include <doctest.h>

#include <random>

#include "wittstack/errors.hpp"
#include "wittstack/ramfilt.hpp"

using namespace wittstack;

namespace {
std::vector<BigRat> rats(const std::vector<long long>& v) {
    std::vector<BigRat> out;
    for (long long x : v) out.emplace_back(x);
    return out;
}
}  // namespace

TEST_CASE("phi of basic filtration shapes") {
    // Single jump at m: phi is the identity up to m, slope 1/p beyond.
    std::uint32_t p = 3;
    long long m = 4;
    std::vector<long long> orders(m + 1, p);
    Filtration f(p, 1, orders);
    PLFunction phi = phi_from_filtration(f);
    for (long long i = 0; i <= m; ++i) CHECK(phi.eval(BigRat(i)) == BigRat(i));
    CHECK(phi.eval(BigRat(m + 3)) == BigRat(m) + BigRat(3, p));

    CHECK(phi_from_filtration(Filtration::trivial(5)) == PLFunction::identity());

    // |G_0| = p^2 with lower jumps (l1, l2): slope 1/p strictly between them.
    Filtration g = filtration_from_upper(rats({2, 6}), 1, 3);
    PLFunction phig = phi_from_filtration(g);
    auto jumps = g.lower_jumps();
    REQUIRE(jumps.size() == 2);
    CHECK(phig.eval(BigRat(jumps[0] + 1)) - phig.eval(BigRat(jumps[0])) == BigRat(1, 3));
}

TEST_CASE("herbrand translation of the two-level family") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        long long j = (p == 3) ? 2 : 3;
        long long pl = p;
        auto lower = upper_to_lower(rats({j, pl * j}), 1, p);
        CHECK(lower == rats({j, j * (pl * pl - pl + 1)}));
        CHECK(lower_to_upper(lower, 1, p) == rats({j, pl * j}));

        // n = 1 is the identity translation for r = 1.
        CHECK(lower_to_upper(rats({j}), 1, p) == rats({j}));

        // Lower jumps (m, m(p^2+1)) translate up to (m, m(p+1)).
        long long mm = j;
        auto up = lower_to_upper(rats({mm, mm * (pl * pl + 1)}), 1, p);
        CHECK(up == rats({mm, mm * (pl + 1)}));
    }
}

TEST_CASE("non-integer upper jumps are values, not errors") {
    auto up = lower_to_upper(rats({1, 2}), 2, 3);
    CHECK(up[0] == BigRat(1, 2));
    CHECK(up[1] == BigRat(1, 2) + BigRat(1, 6));
    CHECK(upper_to_lower(up, 2, 3) == rats({1, 2}));
}

TEST_CASE("filtration assembly from upper jumps") {
    // (j, pj) for r = 1: orders p^2 through j, then p through j(p^2-p+1).
    std::uint32_t p = 3;
    long long j = 2;
    Filtration f = filtration_from_upper(rats({j, p * j}), 1, p);
    long long l2 = j * (static_cast<long long>(p) * p - p + 1);
    CHECK(f.order_at(0) == p * p);
    CHECK(f.order_at(j) == p * p);
    CHECK(f.order_at(j + 1) == p);
    CHECK(f.order_at(l2) == p);
    CHECK(f.order_at(l2 + 1) == 1);
    CHECK(f.lower_jumps() == std::vector<long long>({j, l2}));

    // Single level: orders p through m, then 1.
    Filtration g = filtration_from_upper(rats({5}), 1, 2);
    CHECK(g.order_at(5) == 2);
    CHECK(g.order_at(6) == 1);

    // A leading zero skips the level: the group is effectively Z/p.
    Filtration h = filtration_from_upper(rats({0, 5}), 1, 2);
    CHECK(h.order0() == 2);
    CHECK(h.lower_jumps() == std::vector<long long>{5});

    // Herbrand with r = 2 at u = 1 lands on the lower jump 2, so the orders
    // run (6, 3, 3, 1); the (6, 3, 1) filtration instead has upper jump 1/2.
    Filtration s3 = filtration_from_upper(rats({1}), 2, 3);
    CHECK(s3.orders() == std::vector<long long>({6, 3, 3}));
    Filtration s3_direct(3, 2, {6, 3, 1});
    CHECK(phi_from_filtration(s3_direct).eval(BigRat(1)) == BigRat(1, 2));

    CHECK_THROWS_AS(filtration_from_upper({BigRat(1, 2)}, 1, 3), NonIntegralLowerJump);
}

TEST_CASE("structural clause validation") {
    Filtration f = filtration_from_upper(rats({2, 6}), 1, 3);
    CHECK(validate_filtration(f).empty());

    Filtration s3(3, 2, {6, 3, 1});
    CHECK(validate_filtration(s3).empty());

    // |G_0|/|G_1| = 1 but r = 2: clause (b).
    Filtration bad(3, 2, {9, 9, 3, 1});
    auto v = validate_filtration(bad);
    REQUIRE(!v.empty());
    bool found_b = false;
    for (const auto& s : v) found_b = found_b || s.rfind("b:", 0) == 0;
    CHECK(found_b);

    // |G_1| not the p-part of |G_0|: clause (a/c).
    Filtration bad2(3, 1, {9, 3, 1});
    auto v2 = validate_filtration(bad2);
    bool found_a = false;
    for (const auto& s : v2) found_a = found_a || s.rfind("a/c", 0) == 0;
    CHECK(found_a);
}

TEST_CASE("ramification sum agrees with its closed form") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> step(1, 4), npick(1, 3);
    for (int trial = 0; trial < 50; ++trial) {
        std::uint32_t p = trial % 2 ? 2 : 3;
        std::uint32_t n = static_cast<std::uint32_t>(npick(rng));
        long long r = (p == 2) ? 3 : 2;
        std::vector<BigRat> lower;
        long long cur = step(rng), pk = r;
        lower.emplace_back(cur);
        for (std::uint32_t k = 1; k < n; ++k) {
            pk *= p;
            cur += pk * step(rng);
            lower.emplace_back(cur);
        }
        Filtration f = filtration_from_upper(lower_to_upper(lower, r, p), r, p);
        auto jumps = f.lower_jumps();
        REQUIRE(jumps.size() == n);

        // (l_1+1)(|G_1|-1) + sum_k (l_{k+1}-l_k)(p^{n-k}-1) + (|G_0|-1) - (|G_1|-1),
        // assembled independently of the stored orders.
        BigInt pn = 1;
        for (std::uint32_t i = 0; i < n; ++i) pn *= p;
        BigInt closed = (BigInt(jumps[0]) + 1) * (pn - 1);
        BigInt level = pn;
        for (std::uint32_t k = 1; k < n; ++k) {
            level /= p;
            closed += BigInt(jumps[k] - jumps[k - 1]) * (level - 1);
        }
        closed += BigInt(r) * pn - 1 - (pn - 1);
        CHECK(f.ramification_sum() == closed);
    }
}

TEST_CASE("assembly and phi agree with the translation at every jump") {
    std::mt19937 rng(18);
    std::uniform_int_distribution<int> step(1, 5);
    for (int trial = 0; trial < 40; ++trial) {
        std::uint32_t p = trial % 2 ? 3 : 2;
        long long r = trial % 3 == 0 ? 1 : (p == 2 ? 3 : 2);
        std::uint32_t n = 1 + trial % 3;
        std::vector<BigRat> lower;
        long long cur = step(rng), pk = r;
        lower.emplace_back(cur);
        for (std::uint32_t k = 1; k < n; ++k) {
            pk *= p;
            cur += pk * step(rng);
            lower.emplace_back(cur);
        }
        auto upper = lower_to_upper(lower, r, p);
        Filtration f = filtration_from_upper(upper, r, p);
        PLFunction phi = phi_from_filtration(f);
        auto jumps = f.lower_jumps();
        for (std::size_t k = 0; k < jumps.size(); ++k) {
            CHECK(BigRat(jumps[k]) == lower[k]);
            CHECK(phi.eval(BigRat(jumps[k])) == upper[k]);
        }
        // Re-extracting upper jumps through phi returns the input.
        CHECK(upper_to_lower(upper, r, p) == lower);
    }
}

TEST_CASE("degenerate and invalid inputs") {
    CHECK_THROWS_AS(Filtration(3, 3, {9, 3}), DomainError);   // r divisible by p
    CHECK_THROWS_AS(Filtration(3, 1, {3, 9}), DomainError);   // increasing orders
    CHECK_THROWS_AS(lower_to_upper(rats({3, 2}), 1, 3), DomainError);
    CHECK_THROWS_AS(lower_to_upper(rats({0}), 1, 3), DomainError);
    Filtration tame = filtration_from_upper(rats({0, 0}), 5, 3);
    CHECK(tame.order0() == 5);
    CHECK(tame.lower_jumps().empty());
}
