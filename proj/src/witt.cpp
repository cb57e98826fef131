#include "wittstack/witt.hpp"

namespace wittstack {

namespace {

BigInt eval_int_poly(const MPolyZ& f, const std::vector<BigInt>& vars) {
    std::vector<std::vector<BigInt>> pows(vars.size());
    auto power = [&](std::size_t i, std::uint16_t e) -> const BigInt& {
        auto& tab = pows[i];
        if (tab.empty()) tab.push_back(BigInt(1));
        while (tab.size() <= e) tab.push_back(tab.back() * vars[i]);
        return tab[e];
    };
    BigInt acc = 0;
    for (const auto& [key, c] : f.terms()) {
        BigInt term = c;
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (key[i] != 0) term *= power(i, key[i]);
        acc += term;
    }
    return acc;
}

}  // namespace

WittVector<BigInt> witt_binary_z(const WittVector<BigInt>& x, const WittVector<BigInt>& y,
                                 WittOpKind kind) {
    check_compatible(x, y);
    auto set = gen_witt_polys(x.p, x.n(), kind);
    std::vector<BigInt> vars = x.comp;
    vars.insert(vars.end(), y.comp.begin(), y.comp.end());
    std::vector<BigInt> out;
    out.reserve(x.n());
    for (std::uint32_t k = 0; k < x.n(); ++k) out.push_back(eval_int_poly(set->polys[k], vars));
    return WittVector<BigInt>(x.p, std::move(out));
}

std::vector<BigInt> ghost_map(const WittVector<BigInt>& x) { return ghost_of(x.comp, x.p); }

BigInt teichmueller_digit(std::uint32_t c, std::uint32_t p, std::uint32_t n) {
    BigInt mod = pow_bi(BigInt(p), n);
    BigInt base = c % p, acc = 1;
    unsigned long e = pow_bi(BigInt(p), n - 1).convert_to<unsigned long>();
    while (e > 0) {
        if (e & 1UL) acc = acc * base % mod;
        base = base * base % mod;
        e >>= 1;
    }
    return acc;
}

BigInt to_zpn(const WittVector<Fp>& x) {
    if (x.comp[0].modulus() != x.p)
        throw MismatchedRing("to_zpn needs coefficients in F_p itself");
    const std::uint32_t n = x.n();
    BigInt mod = pow_bi(BigInt(x.p), n), acc = 0, pi = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        acc = (acc + teichmueller_digit(x.comp[i].value(), x.p, n) * pi) % mod;
        pi *= x.p;
    }
    return acc;
}

WittVector<Fp> from_zpn(const BigInt& r0, std::uint32_t p, std::uint32_t n) {
    require_prime(p);
    BigInt mod = pow_bi(BigInt(p), n);
    BigInt r = ((r0 % mod) + mod) % mod;
    std::vector<Fp> comps;
    comps.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        auto digit = (r % p).convert_to<std::uint32_t>();
        comps.push_back(Fp(digit, p));
        // tau_n(c) = tau_{n-i}(c) mod p^{n-i}, so reducing mod the current
        // modulus keeps the digit peeling consistent.
        BigInt t = teichmueller_digit(digit, p, n) % mod;
        r = (r - t + mod) % mod;
        if (r % p != 0)
            throw DomainError("from_zpn digit extraction lost divisibility by p");
        r /= p;
        mod /= p;
    }
    return WittVector<Fp>(p, std::move(comps));
}

WittVector<Fp> witt_fp(std::uint32_t p, const std::vector<long long>& comps) {
    std::vector<Fp> v;
    v.reserve(comps.size());
    for (long long c : comps) v.push_back(Fp(c, p));
    return WittVector<Fp>(p, std::move(v));
}

}  // namespace wittstack
