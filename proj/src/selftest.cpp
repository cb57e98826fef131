#include "wittstack/selftest.hpp"

#include <chrono>
#include <random>

#include "wittstack/asw.hpp"
#include "wittstack/cover.hpp"
#include "wittstack/garuti.hpp"
#include "wittstack/ramfilt.hpp"
#include "wittstack/stacky.hpp"
#include "wittstack/witt.hpp"

namespace wittstack {

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& msg) {
        if (!cond && ok) {
            ok = false;
            detail = msg;
        }
    }
    void note(const std::string& msg) {
        if (!detail.empty()) detail += "; ";
        detail += msg;
    }
};

WittVector<Fp> nth_witt_fp(std::uint32_t p, std::uint32_t n, long long index) {
    std::vector<Fp> comps;
    comps.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        comps.push_back(Fp(index % p, p));
        index /= p;
    }
    return WittVector<Fp>(p, std::move(comps));
}

LaurentSeries t_pow(std::uint32_t p, long long k) {
    return LaurentSeries::monomial(fp_one(p), k);
}

LaurentSeries random_laurent(std::mt19937& rng, std::uint32_t p, long long lo, long long hi) {
    LaurentSeries s = LaurentSeries::zero(p);
    std::uniform_int_distribution<long long> coeff(0, p - 1);
    for (long long k = lo; k <= hi; ++k) {
        long long c = coeff(rng);
        if (c) s = s + LaurentSeries::monomial(Fp(c, p), k);
    }
    return s;
}

// ---- criterion bodies ----

Check c1_zpn_iso() {
    Check ch;
    const std::pair<std::uint32_t, std::uint32_t> cases[] = {{2, 2}, {2, 3}, {3, 2}, {5, 2}};
    for (auto [p, n] : cases) {
        BigInt mod = pow_bi(BigInt(p), n);
        long long count = pow_bi(BigInt(p), n).convert_to<long long>();
        std::vector<bool> hit(static_cast<std::size_t>(count), false);
        for (long long i = 0; i < count; ++i) {
            auto x = nth_witt_fp(p, n, i);
            BigInt rx = to_zpn(x);
            hit[rx.convert_to<std::size_t>()] = true;
            ch.require(from_zpn(rx, p, n) == x, "from_zpn(to_zpn) != id");
            for (long long j = 0; j < count; ++j) {
                auto y = nth_witt_fp(p, n, j);
                BigInt ry = to_zpn(y);
                ch.require(to_zpn(witt_add(x, y)) == (rx + ry) % mod,
                           "addition not preserved at p=" + std::to_string(p));
                ch.require(to_zpn(witt_mul(x, y)) == (rx * ry) % mod,
                           "multiplication not preserved at p=" + std::to_string(p));
            }
        }
        for (bool h : hit) ch.require(h, "to_zpn not surjective");
    }
    if (ch.ok) ch.note("all pairs for (2,2),(2,3),(3,2),(5,2)");
    return ch;
}

Check c2_ghost_oracle() {
    Check ch;
    std::mt19937 rng(20260810);
    std::uniform_int_distribution<long long> val(-50, 50);
    const std::pair<std::uint32_t, std::uint32_t> cases[] = {{2, 3}, {3, 2}};
    for (auto [p, n] : cases) {
        for (int trial = 0; trial < 500; ++trial) {
            std::vector<BigInt> xs, ys;
            for (std::uint32_t i = 0; i < n; ++i) {
                xs.emplace_back(val(rng));
                ys.emplace_back(val(rng));
            }
            WittVector<BigInt> x(p, xs), y(p, ys);
            auto gx = ghost_map(x), gy = ghost_map(y);
            auto sum = ghost_map(witt_binary_z(x, y, WittOpKind::Add));
            auto prod = ghost_map(witt_binary_z(x, y, WittOpKind::Mul));
            for (std::uint32_t k = 0; k < n; ++k) {
                ch.require(sum[k] == gx[k] + gy[k], "ghost(add) mismatch");
                ch.require(prod[k] == gx[k] * gy[k], "ghost(mul) mismatch");
            }
        }
    }
    if (ch.ok) ch.note("500 integer-lift pairs per (p,n), add and mul");
    return ch;
}

Check c3_key_jumps() {
    Check ch;
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (long long j = 1; j <= 20; ++j) {
            if (j % p == 0) continue;
            LocalWitt x(WittVector<LaurentSeries>(
                p, {t_pow(p, -j), LaurentSeries::zero(p)}));
            auto u = upper_jumps(x);
            ch.require(u.size() == 2 && u[0] == j && u[1] == static_cast<long long>(p) * j,
                       "jumps((t^-" + std::to_string(j) + ",0)) != (j, pj) at p=" +
                           std::to_string(p));
        }
    }
    if (ch.ok) ch.note("(j, pj) reproduced for p in {2,3,5}, j <= 20");
    return ch;
}

Check c4_galois_oracle() {
    Check ch;
    for (std::uint32_t p : {2u, 3u}) {
        for (long long m : {1LL, 2LL, 4LL, 5LL, 7LL}) {
            if (m % p == 0) continue;
            long long got = as_lower_jump_oracle(p, m, 4 * p * m);
            ch.require(got == m, "oracle(" + std::to_string(p) + "," + std::to_string(m) +
                                     ") = " + std::to_string(got));
            LocalWitt x(WittVector<LaurentSeries>(p, {t_pow(p, -m)}));
            ch.require(upper_jumps(x)[0] == m, "n=1 upper jump != m");
        }
    }
    if (ch.ok) ch.note("lower jump oracle equals m and the n=1 upper jump");
    return ch;
}

Check c5_gauge_invariance() {
    Check ch;
    std::mt19937 rng(5);
    const std::pair<std::uint32_t, std::uint32_t> cases[] = {{2, 2}, {2, 3}, {3, 2}};
    for (int trial = 0; trial < 200; ++trial) {
        auto [p, n] = cases[trial % 3];
        std::vector<LaurentSeries> xc, bc;
        for (std::uint32_t i = 0; i < n; ++i) {
            xc.push_back(random_laurent(rng, p, -4, 2));
            bc.push_back(random_laurent(rng, p, -3, 2));
        }
        WittVector<LaurentSeries> x(p, xc), b(p, bc);
        auto shifted = witt_add(x, wp(b));
        ch.require(upper_jumps(LocalWitt(x)) == upper_jumps(LocalWitt(shifted)),
                   "jumps changed after adding wp(b) at trial " + std::to_string(trial));
    }
    if (ch.ok) ch.note("200 randomized wp-shift trials");
    return ch;
}

Check c6_herbrand_roundtrip() {
    Check ch;
    std::mt19937 rng(6);
    std::uniform_int_distribution<int> rpick(0, 2), npick(1, 4), step(1, 5);
    const std::uint32_t primes[] = {2, 3, 5};
    for (int trial = 0; trial < 200; ++trial) {
        std::uint32_t p = primes[trial % 3];
        long long r = 1 + rpick(rng);
        if (r % p == 0) r = 1;
        std::uint32_t n = static_cast<std::uint32_t>(npick(rng));

        // Jumps spaced by multiples of p^k r so the uppers land on integers.
        std::vector<BigRat> lower;
        long long cur = step(rng), pk = r;
        lower.emplace_back(cur);
        for (std::uint32_t k = 1; k < n; ++k) {
            pk *= p;
            cur += pk * step(rng);
            lower.emplace_back(cur);
        }
        auto up = lower_to_upper(lower, r, p);
        ch.require(upper_to_lower(up, r, p) == lower, "round trip failed (integer case)");

        Filtration f = filtration_from_upper(up, r, p);
        PLFunction phi = phi_from_filtration(f);
        auto jumps = f.lower_jumps();
        ch.require(jumps.size() == up.size(), "wrong jump count after assembly");
        for (std::size_t k = 0; k < jumps.size(); ++k) {
            ch.require(BigRat(jumps[k]) == lower[k], "assembled lower jumps disagree");
            ch.require(phi.eval(BigRat(jumps[k])) == up[k],
                       "phi disagrees with the Herbrand translation at a jump");
        }

        // Ragged spacing: uppers are genuine rationals, round trip stays exact.
        std::vector<BigRat> ragged;
        cur = step(rng);
        ragged.emplace_back(cur);
        for (std::uint32_t k = 1; k < n; ++k) {
            cur += step(rng);
            ragged.emplace_back(cur);
        }
        auto up2 = lower_to_upper(ragged, r, p);
        ch.require(upper_to_lower(up2, r, p) == ragged, "round trip failed (rational case)");
    }
    if (ch.ok) ch.note("200 random sequences, n <= 4, r in {1,2,3}");
    return ch;
}

Check c7_garuti() {
    Check ch;
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (std::uint32_t n = 1; n <= 6; ++n) {
            TowerDivisor b = boundary(n, p);
            ch.require(b == boundary_closed_form(n, p), "recursion != closed form");
            ch.require(pull_psi(b, p) == b.scaled(p), "Psi pullback is not multiplication by p");
            ch.require(pull_r(pull_psi(b, p)) == pull_psi(pull_r(b), p),
                       "pullbacks fail to commute");
        }
    }
    if (ch.ok) ch.note("n <= 6, p in {2,3,5}, exact coefficients");
    return ch;
}

StackyCurveData p23_model() {
    StackyCurveData c;
    c.p = 0;
    c.coarse_genus = 0;
    c.points = {StackyPoint{"P", Place::finite(0), 3, Filtration::tame(0, 3)},
                StackyPoint{"Q", Place::finite(1), 2, Filtration::tame(0, 2)},
                StackyPoint{"C", Place::finite(2), 1, Filtration::tame(0, 1)}};
    c.log_points = {"C"};
    return c;
}

Check c8_p23() {
    Check ch;
    StackyCurveData c = p23_model();
    QDivisor k = canonical_divisor(c);
    ch.require(k.coarse == -2 && k.coeff("P") == 2 && k.coeff("Q") == 1 && k.coeff("C") == 0,
               "K != -2H + 2P + Q");
    // Free algebra on degrees {2,3}: coefficients of 1/((1-q^2)(1-q^3)).
    std::vector<long long> series(25, 0);
    series[0] = 1;
    for (long long d : {2LL, 3LL})
        for (std::size_t i = static_cast<std::size_t>(d); i < series.size(); ++i)
            series[i] += series[i - d];
    auto table = hilbert_table(c, 24, true);
    ch.require(table.size() == series.size(), "hilbert table length");
    for (std::size_t i = 0; i < series.size() && ch.ok; ++i)
        ch.require(table[i] == series[i],
                   "log Hilbert table deviates from the free algebra at degree " +
                       std::to_string(i));
    auto gens = canring_generators(c, 24, true);
    ch.require(gens.size() == 2 && gens.count(2) && gens.at(2) == 1 && gens.count(3) &&
                   gens.at(3) == 1,
               "log canonical ring generators != {2:1, 3:1}");
    if (ch.ok) ch.note("K, Hilbert table to degree 24, generators {2:1,3:1}");
    return ch;
}

StackyCurveData asw_quotient_model(std::uint32_t p, long long m) {
    // Lower jumps (m, m(p^2+1)) with stabilizer p^2.
    long long l2 = m * (static_cast<long long>(p) * p + 1);
    std::vector<long long> orders(static_cast<std::size_t>(l2) + 1, p);
    for (long long i = 0; i <= m; ++i) orders[static_cast<std::size_t>(i)] =
        static_cast<long long>(p) * p;
    StackyCurveData c;
    c.p = p;
    c.coarse_genus = 0;
    c.points = {StackyPoint{"Q", Place::infinity(), static_cast<long long>(p) * p,
                            Filtration(p, 1, orders)}};
    return c;
}

Check c9_asw_quotient() {
    Check ch;
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const BigInt P(p);
        for (long long m = 1; m < static_cast<long long>(p) * p; ++m) {
            if (m % p == 0) continue;
            StackyCurveData c = asw_quotient_model(p, m);
            BigInt ram = m * P * P * P + P * P - m - 1;
            ch.require(genus(c) == BigRat(ram, 2 * P * P),
                       "genus mismatch at p=" + std::to_string(p) + ", m=" + std::to_string(m));
            ch.require(h0(c, 1) == m * p, "h0(K) != mp at p=" + std::to_string(p) +
                                              ", m=" + std::to_string(m));
            for (long long nn = 2; nn <= 10; ++nn) {
                BigInt direct = -2 * nn + floor_rat(BigRat(nn * ram, P * P)) + 1;
                ch.require(h0(c, nn) == direct.convert_to<long long>(),
                           "h0(nK) != -2n + floor(n deg) + 1 at n=" + std::to_string(nn));
            }
        }
    }
    // The simplified closed form n(mp-1) + floor(-n(m+1)/p^2) sits one below
    // the direct evaluation; checked here and reported, never asserted equal.
    bool off_by_one_everywhere = true;
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const BigInt P(p);
        for (long long m : {1LL, 2LL}) {
            if (m % p == 0) continue;
            BigInt ram = m * P * P * P + P * P - m - 1;
            for (long long nn = 2; nn <= 10; ++nn) {
                BigInt direct = -2 * nn + floor_rat(BigRat(nn * ram, P * P)) + 1;
                BigInt simplified =
                    nn * (m * p - 1) + floor_rat(BigRat(-nn * (m + 1), P * P));
                if (direct != simplified + 1) off_by_one_everywhere = false;
            }
        }
    }
    ch.note(off_by_one_everywhere
                ? "note: simplified closed form = direct evaluation - 1 throughout"
                : "note: simplified closed form deviates irregularly from direct evaluation");
    return ch;
}

StackyCurveData xp_psl2_model(long long p_level) {
    StackyCurveData c;
    c.p = 3;
    c.coarse_genus = 0;
    c.points = {StackyPoint{"P", Place::finite(0), p_level, Filtration::tame(3, p_level)},
                StackyPoint{"Q", Place::finite(1), 6, Filtration(3, 2, {6, 3, 1})}};
    return c;
}

Check c10_xp_psl2() {
    Check ch;
    for (long long p_level : {7LL, 11LL}) {
        StackyCurveData c = xp_psl2_model(p_level);
        QDivisor k = canonical_divisor(c);
        ch.require(k.coarse == -2 && k.coeff("P") == p_level - 1 && k.coeff("Q") == 7,
                   "K != -2H + (p-1)P + 7Q at p=" + std::to_string(p_level));
        auto gens = canring_generators(c, p_level, false);
        bool clean_below = true;
        for (long long d = 1; d < p_level; ++d) clean_below = clean_below && !gens.count(d);
        ch.require(gens.count(p_level) && gens.at(p_level) == 1,
                   "expected exactly 1 generator in degree " + std::to_string(p_level));
        ch.require(clean_below,
                   "generators below degree " + std::to_string(p_level) + " exist");
        if (!clean_below || !gens.count(p_level)) {
            std::string got = "p=" + std::to_string(p_level) + " computed generators:";
            for (const auto& [d, cnt] : gens)
                got += " " + std::to_string(d) + ":" + std::to_string(cnt);
            ch.note(got + " (deg floor(6K) = 0 forces a section in degree 6)");
        }
    }
    if (ch.ok) ch.note("generator pattern for p = 7 and 11");
    return ch;
}

Check c11_pipeline() {
    Check ch;
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (long long m : {1LL, 2LL, 3LL}) {
            if (m % p == 0) continue;
            CoverSpec spec;
            spec.p = p;
            spec.n = 2;
            spec.components = {RatFunc::var(p).pow(-m), RatFunc::zero(p)};
            QuotientReport rep = quotient_report(spec, 6);
            ch.require(rep.degree == BigRat(2) * rep.genus_value - 2, "deg K != 2g - 2");
            ch.require(rep.analysis.branch.size() == 1, "expected a single branch point");
            const auto& bd = rep.analysis.branch[0];
            ch.require(bd.upper_jumps == std::vector<long long>(
                                             {m, static_cast<long long>(p) * m}),
                       "upper jumps != (m, pm)");
            long long l2 = m * (static_cast<long long>(p) * p - p + 1);
            ch.require(bd.filtration.lower_jumps() == std::vector<long long>({m, l2}),
                       "lower jumps are not Herbrand-consistent");
            bool flagged = false;
            for (const auto& note : rep.notes)
                if (note.find("DISAGREE") != std::string::npos) flagged = true;
            ch.require(flagged, "jump-convention cross-check flag missing");
        }
    }
    if (ch.ok) ch.note("deg K = 2g-2, Herbrand jumps, deterministic DISAGREE flag");
    return ch;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::ostream& progress) {
    struct Entry {
        int id;
        const char* name;
        Check (*body)();
    };
    const Entry entries[] = {
        {1, "W_n(F_p) = Z/p^n Z ring isomorphism (exhaustive)", c1_zpn_iso},
        {2, "ghost-component oracle for universal polynomials", c2_ghost_oracle},
        {3, "upper jumps (j, pj) for (t^-j, 0)", c3_key_jumps},
        {4, "n=1 Galois-action lower-jump oracle", c4_galois_oracle},
        {5, "wp-gauge invariance of upper jumps", c5_gauge_invariance},
        {6, "Herbrand round trip and phi agreement", c6_herbrand_roundtrip},
        {7, "boundary-divisor recursion, closed form, Psi scaling", c7_garuti},
        {8, "tame stacky P(2,3): K, log Hilbert series, generators", c8_p23},
        {9, "wild quotient family: genus, h0(K), h0(nK)", c9_asw_quotient},
        {10, "X(p)/PSL2 char-3 model: K and generator pattern", c10_xp_psl2},
        {11, "cover pipeline consistency and convention flag", c11_pipeline},
    };

    std::vector<CriterionResult> results;
    long long total_ms = 0;
    for (const auto& e : entries) {
        auto start = std::chrono::steady_clock::now();
        CriterionResult r;
        r.id = e.id;
        r.name = e.name;
        try {
            Check ch = e.body();
            r.pass = ch.ok;
            r.detail = ch.detail;
        } catch (const std::exception& ex) {
            r.pass = false;
            r.detail = std::string("exception: ") + ex.what();
        }
        r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
        total_ms += r.millis;
        // Per-check wall-clock budgets: the exhaustive isomorphism check must
        // stay under 10 s, the generator computation under 60 s.
        if (r.id == 1 && r.millis >= 10'000) {
            r.pass = false;
            r.detail += "; exceeded the 10 s budget";
        }
        if (r.id == 10 && r.millis >= 60'000) {
            r.pass = false;
            r.detail += "; exceeded the 60 s budget";
        }
        progress << "criterion " << r.id << " [" << r.name << "] "
                 << (r.pass ? "PASS" : "FAIL") << " (" << r.millis << " ms)";
        if (!r.detail.empty()) progress << " -- " << r.detail;
        progress << "\n";
        results.push_back(std::move(r));
    }

    CriterionResult timing;
    timing.id = 12;
    timing.name = "selftest wall clock under 5 minutes, exact arithmetic only";
    timing.pass = total_ms < 300'000;
    timing.detail = "total " + std::to_string(total_ms) + " ms; no floating point in any path";
    timing.millis = 0;
    progress << "criterion 12 [" << timing.name << "] " << (timing.pass ? "PASS" : "FAIL")
             << " -- " << timing.detail << "\n";
    results.push_back(timing);
    return results;
}

}  // namespace wittstack
