#include "wittstack/asw.hpp"

#include <algorithm>

#include "wittstack/errors.hpp"

namespace wittstack {

LocalWitt::LocalWitt(WittVector<LaurentSeries> w_) : w(std::move(w_)) {
    for (const auto& c : w.comp) {
        if (c.modulus() != w.p)
            throw MismatchedRing("LocalWitt components must live over F_p((t))");
        if (!c.is_exact_zero() && c.known_nonzero() && c.effective_precision() < 1)
            throw PrecisionExhausted("LocalWitt component carries no significant term");
    }
}

namespace {

// Trivial here means: contributes no wild ramification at this level. A
// component that is zero to available precision with a nonnegative cutoff is
// regular as far as the reduction can tell.
bool component_settled(const LaurentSeries& c, long long* pole_order) {
    *pole_order = 0;
    if (c.is_exact_zero()) return true;
    if (!c.known_nonzero()) {
        if (c.tail() >= 0) return true;
        throw PrecisionExhausted("component valuation undecidable at this precision");
    }
    long long v = c.val();
    if (v >= 0) return true;
    *pole_order = -v;
    return false;
}

}  // namespace

ReducedForm asw_reduce(const LocalWitt& x) {
    const std::uint32_t p = x.p(), n = x.n();
    WittVector<LaurentSeries> y = x.w;

    long long max_pole = 1;
    for (const auto& c : y.comp)
        if (c.known_nonzero() && c.val() < 0) max_pole = std::max(max_pole, -c.val());
    const long long guard = static_cast<long long>(n) * max_pole + n + 8;

    std::vector<long long> orders(n, 0);
    std::vector<bool> trivial(n, true);
    std::vector<std::string> steps;
    WittVector<LaurentSeries> gauge = witt_zero(p, n, LaurentSeries::zero(p));
    long long iters = 0;

    for (std::uint32_t i = 0; i < n; ++i) {
        while (true) {
            long long m = 0;
            if (component_settled(y.comp[i], &m)) break;
            if (m % p != 0) {
                orders[i] = m;
                trivial[i] = false;
                break;
            }
            if (++iters > guard)
                throw NonTerminating("ASW reduction exceeded its iteration guard");
            // Subtract wp(V^i(c t^{-m/p})); over F_p the p-th root of the
            // leading coefficient c is c itself. Components below i are
            // untouched and the pole order at level i strictly drops.
            Fp c = y.comp[i].lead();
            std::vector<LaurentSeries> bc(n, LaurentSeries::zero(p));
            bc[i] = LaurentSeries::monomial(c, -m / p);
            WittVector<LaurentSeries> b(p, std::move(bc));
            y = witt_sub(y, wp(b));
            gauge = witt_add(gauge, b);
            steps.push_back("level " + std::to_string(i + 1) + ": subtracted wp(V^" +
                            std::to_string(i) + "(" + c.str() + "*t^" +
                            std::to_string(-m / p) + ")), pole " + std::to_string(m));
        }
    }
    return ReducedForm{LocalWitt(std::move(y)), std::move(orders), std::move(trivial),
                       std::move(gauge), std::move(steps)};
}

std::vector<long long> upper_jumps(const ReducedForm& r) {
    const std::uint32_t p = r.witt.p(), n = r.witt.n();
    std::vector<long long> u(n, 0);
    for (std::uint32_t k = 0; k < n; ++k) {
        long long best = 0;
        long long pk = 1;
        // i runs downward from k so p^{k-i} builds up incrementally.
        for (std::uint32_t i = k + 1; i-- > 0;) {
            if (r.pole_orders[i] > 0) best = std::max(best, pk * r.pole_orders[i]);
            pk *= p;
        }
        u[k] = best;
    }
    return u;
}

std::vector<long long> upper_jumps(const LocalWitt& x) { return upper_jumps(asw_reduce(x)); }

bool is_admissible(const std::vector<long long>& u, std::uint32_t p) {
    if (u.empty()) return false;
    for (long long v : u)
        if (v <= 0) return false;
    if (u[0] % p == 0) return false;
    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
        long long lo = static_cast<long long>(p) * u[i];
        if (u[i + 1] < lo) return false;
        if (u[i + 1] > lo && u[i + 1] % p == 0) return false;
    }
    return true;
}

namespace {

// Element of F_p((t))[y]/(y^p - y - t^-m): coefficients of y^0..y^{p-1}.
using BiElem = std::vector<LaurentSeries>;

BiElem bi_zero(std::uint32_t p) { return BiElem(p, LaurentSeries::zero(p)); }

BiElem bi_mul(const BiElem& a, const BiElem& b, std::uint32_t p, long long m) {
    std::vector<LaurentSeries> raw(2 * p - 1, LaurentSeries::zero(p));
    for (std::uint32_t i = 0; i < p; ++i) {
        if (a[i].is_exact_zero()) continue;
        for (std::uint32_t j = 0; j < p; ++j) raw[i + j] = raw[i + j] + a[i] * b[j];
    }
    // Reduce with y^p = y + t^-m, top degree first.
    for (std::size_t d = raw.size(); d-- > p;) {
        if (raw[d].is_exact_zero()) continue;
        raw[d - p + 1] = raw[d - p + 1] + raw[d];
        raw[d - p] = raw[d - p] + raw[d] * LaurentSeries::monomial(fp_one(p), -m);
        raw[d] = LaurentSeries::zero(p);
    }
    raw.erase(raw.begin() + p, raw.end());
    return raw;
}

BiElem bi_pow(BiElem base, unsigned long long e, std::uint32_t p, long long m) {
    BiElem acc = bi_zero(p);
    acc[0] = LaurentSeries::one(p);
    while (e > 0) {
        if (e & 1ULL) acc = bi_mul(acc, base, p, m);
        if (e >>= 1) base = bi_mul(base, base, p, m);
    }
    return acc;
}

// sigma(y) = y + 1: substitute binomially, exact in char p.
BiElem bi_sigma(const BiElem& a, std::uint32_t p) {
    BiElem out = bi_zero(p);
    std::vector<std::vector<Fp>> binom(p);
    for (std::uint32_t j = 0; j < p; ++j) {
        binom[j].assign(j + 1, fp_one(p));
        for (std::uint32_t k = 1; k < j; ++k) binom[j][k] = binom[j - 1][k - 1] + binom[j - 1][k];
    }
    for (std::uint32_t j = 0; j < p; ++j) {
        if (a[j].is_exact_zero()) continue;
        for (std::uint32_t k = 0; k <= j; ++k) out[k] = out[k] + a[j].scale(binom[j][k]);
    }
    return out;
}

// v_L on representatives: v_L(c(t) y^j) = p v(c) - m j, and the candidate
// valuations are distinct mod p across j, so the minimum is exact.
long long bi_valuation(const BiElem& a, std::uint32_t p, long long m) {
    bool found = false;
    long long best = 0;
    for (std::uint32_t j = 0; j < p; ++j) {
        if (!a[j].known_nonzero()) {
            if (a[j].is_exact_zero()) continue;
            throw PrecisionExhausted("bivariate valuation undecidable");
        }
        long long v = static_cast<long long>(p) * a[j].val() - m * static_cast<long long>(j);
        if (!found || v < best) best = v;
        found = true;
    }
    if (!found) throw DomainError("valuation of zero in the Galois oracle");
    return best;
}

}  // namespace

long long as_lower_jump_oracle(std::uint32_t p, long long m, long long prec) {
    require_prime(p);
    if (m <= 0 || m % p == 0) throw DomainError("oracle needs m >= 1 with p not dividing m");
    if (prec < 1) throw PrecisionExhausted("oracle needs prec >= 1");

    // pa - mb = 1 with 0 < b < p, i.e. b = -m^{-1} mod p.
    std::uint32_t b = (-Fp(m, p).inv()).value();
    if (b == 0) throw DomainError("no uniformizer exponent found");
    long long a = (1 + m * static_cast<long long>(b)) / p;
    if (static_cast<long long>(p) * a - m * b != 1)
        throw DomainError("uniformizer exponents failed pa - mb = 1");

    BiElem y = bi_zero(p);
    y[1] = LaurentSeries::one(p);
    BiElem pi = bi_pow(y, b, p, m);
    for (auto& c : pi) c = c * LaurentSeries::monomial(fp_one(p), a);

    BiElem diff = bi_sigma(pi, p);
    for (std::uint32_t j = 0; j < p; ++j) diff[j] = diff[j] - pi[j];
    return bi_valuation(diff, p, m) - 1;
}

}  // namespace wittstack
