#ifndef WITTSTACK_WITT_HPP
#define WITTSTACK_WITT_HPP

#include <cstdint>
#include <vector>

#include "wittstack/bigint.hpp"
#include "wittstack/errors.hpp"
#include "wittstack/fp.hpp"
#include "wittstack/laurent.hpp"
#include "wittstack/ratfunc.hpp"
#include "wittstack/wittpoly.hpp"

namespace wittstack {

// Componentwise Frobenius lift c -> c^p for the supported coefficient rings.
inline Fp frob_elem(const Fp& x, std::uint32_t p) { return x.pow(p); }
inline LaurentSeries frob_elem(const LaurentSeries& x, std::uint32_t) { return x.pth_power(); }
inline RatFunc frob_elem(const RatFunc& x, std::uint32_t) {
    return RatFunc(x.num().pth_power(), x.den().pth_power());
}

inline Fp zero_like(const Fp& m) { return fp_zero(m.modulus()); }
inline Fp one_like(const Fp& m) { return fp_one(m.modulus()); }
inline Fp scale(const Fp& x, std::uint32_t c) { return x * Fp(c, x.modulus()); }
inline bool same_ring(const Fp& a, const Fp& b) { return a.modulus() == b.modulus(); }

inline BigInt zero_like(const BigInt&) { return BigInt(0); }
inline BigInt one_like(const BigInt&) { return BigInt(1); }
inline bool same_ring(const BigInt&, const BigInt&) { return true; }
inline BigInt scale(const BigInt& x, std::uint32_t c) { return x * c; }

// An element of W_n(A): length-n vector of coefficient-ring elements with a
// fixed prime p. Values are immutable once built.
template <class R>
struct WittVector {
    std::uint32_t p;
    std::vector<R> comp;

    WittVector(std::uint32_t p_, std::vector<R> comp_) : p(p_), comp(std::move(comp_)) {
        require_prime(p);
        if (comp.empty()) throw BadLength("Witt vector needs length >= 1");
        for (std::size_t i = 1; i < comp.size(); ++i)
            if (!same_ring(comp[0], comp[i]))
                throw MismatchedRing("Witt components live in different rings");
    }

    std::uint32_t n() const { return static_cast<std::uint32_t>(comp.size()); }
    bool operator==(const WittVector& o) const { return p == o.p && comp == o.comp; }
    bool operator!=(const WittVector& o) const { return !(*this == o); }
};

template <class R>
WittVector<R> witt_zero(std::uint32_t p, std::uint32_t n, const R& model) {
    return WittVector<R>(p, std::vector<R>(n, zero_like(model)));
}

// Evaluate a mod-p reduced universal polynomial on ring elements with a
// per-variable power cache.
template <class R>
R eval_witt_poly(const std::vector<ModMonomial>& terms, const std::vector<R>& vars,
                 const R& model) {
    std::vector<std::vector<R>> pows(vars.size());
    auto power = [&](std::size_t i, std::uint16_t e) -> const R& {
        auto& tab = pows[i];
        if (tab.empty()) tab.push_back(one_like(model));
        while (tab.size() <= e) tab.push_back(tab.back() * vars[i]);
        return tab[e];
    };
    R acc = zero_like(model);
    for (const auto& mono : terms) {
        R term = one_like(model);
        bool trivial = true;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (mono.exps[i] == 0) continue;
            term = trivial ? power(i, mono.exps[i]) : term * power(i, mono.exps[i]);
            trivial = false;
        }
        acc = acc + scale(term, mono.coeff);
    }
    return acc;
}

template <class R>
void check_compatible(const WittVector<R>& x, const WittVector<R>& y) {
    if (x.p != y.p || x.n() != y.n() || !same_ring(x.comp[0], y.comp[0]))
        throw MismatchedRing("Witt vectors with mismatched (p, n) or coefficient ring");
}

template <class R>
WittVector<R> witt_binary(const WittVector<R>& x, const WittVector<R>& y, WittOpKind kind) {
    check_compatible(x, y);
    auto set = gen_witt_polys(x.p, x.n(), kind);
    std::vector<R> vars = x.comp;
    vars.insert(vars.end(), y.comp.begin(), y.comp.end());
    std::vector<R> out;
    out.reserve(x.n());
    for (std::uint32_t k = 0; k < x.n(); ++k)
        out.push_back(eval_witt_poly(set->polys_mod_p[k], vars, x.comp[0]));
    return WittVector<R>(x.p, std::move(out));
}

template <class R>
WittVector<R> witt_add(const WittVector<R>& x, const WittVector<R>& y) {
    return witt_binary(x, y, WittOpKind::Add);
}

template <class R>
WittVector<R> witt_mul(const WittVector<R>& x, const WittVector<R>& y) {
    return witt_binary(x, y, WittOpKind::Mul);
}

template <class R>
WittVector<R> witt_neg(const WittVector<R>& x) {
    auto set = gen_witt_polys(x.p, x.n(), WittOpKind::Neg);
    std::vector<R> out;
    out.reserve(x.n());
    for (std::uint32_t k = 0; k < x.n(); ++k)
        out.push_back(eval_witt_poly(set->polys_mod_p[k], x.comp, x.comp[0]));
    return WittVector<R>(x.p, std::move(out));
}

template <class R>
WittVector<R> witt_sub(const WittVector<R>& x, const WittVector<R>& y) {
    return witt_add(x, witt_neg(y));
}

template <class R>
WittVector<R> frobenius(const WittVector<R>& x) {
    std::vector<R> out;
    out.reserve(x.n());
    for (const auto& c : x.comp) out.push_back(frob_elem(c, x.p));
    return WittVector<R>(x.p, std::move(out));
}

// (a_0, ..., a_{n-1}) -> (0, a_0, ..., a_{n-2}); the last component drops,
// matching W_n = W/V^n W.
template <class R>
WittVector<R> verschiebung(const WittVector<R>& x) {
    std::vector<R> out;
    out.reserve(x.n());
    out.push_back(zero_like(x.comp[0]));
    for (std::uint32_t i = 0; i + 1 < x.n(); ++i) out.push_back(x.comp[i]);
    return WittVector<R>(x.p, std::move(out));
}

template <class R>
WittVector<R> truncate(const WittVector<R>& x, std::uint32_t m) {
    if (m < 1 || m > x.n()) throw BadLength("truncation length out of range");
    return WittVector<R>(x.p, std::vector<R>(x.comp.begin(), x.comp.begin() + m));
}

// The Artin-Schreier-Witt isogeny: F - id.
template <class R>
WittVector<R> wp(const WittVector<R>& x) {
    return witt_sub(frobenius(x), x);
}

// --- integer lifts (testing oracle) ---

// Binary operation on integer lifts, evaluating the universal polynomials
// over Z; the ghost map turns these into plain componentwise arithmetic.
WittVector<BigInt> witt_binary_z(const WittVector<BigInt>& x, const WittVector<BigInt>& y,
                                 WittOpKind kind);
std::vector<BigInt> ghost_map(const WittVector<BigInt>& x);

// --- W_n(F_p) = Z/p^n Z ---

// Teichmueller digit tau(c) = c^{p^{n-1}} mod p^n.
BigInt teichmueller_digit(std::uint32_t c, std::uint32_t p, std::uint32_t n);
// Ring isomorphism x -> sum_i tau(x_i) p^i mod p^n and its inverse.
BigInt to_zpn(const WittVector<Fp>& x);
WittVector<Fp> from_zpn(const BigInt& r, std::uint32_t p, std::uint32_t n);

WittVector<Fp> witt_fp(std::uint32_t p, const std::vector<long long>& comps);

}  // namespace wittstack

#endif
