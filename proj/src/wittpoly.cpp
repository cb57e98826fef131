#include "wittstack/wittpoly.hpp"

#include <mutex>

#include "wittstack/errors.hpp"
#include "wittstack/fp.hpp"

namespace wittstack {

WittCaps& witt_caps() {
    static WittCaps caps;
    return caps;
}

MPolyZ MPolyZ::constant(std::size_t nvars, BigInt c) {
    MPolyZ f(nvars);
    if (c != 0) f.t_.emplace(Key(nvars, 0), std::move(c));
    return f;
}

MPolyZ MPolyZ::variable(std::size_t nvars, std::size_t i, std::uint16_t e) {
    MPolyZ f(nvars);
    Key k(nvars, 0);
    k[i] = e;
    f.t_.emplace(std::move(k), BigInt(1));
    return f;
}

void MPolyZ::add_term(const Key& k, const BigInt& c) {
    auto it = t_.find(k);
    if (it == t_.end()) {
        if (c != 0) t_.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second == 0) t_.erase(it);
}

MPolyZ MPolyZ::operator+(const MPolyZ& o) const {
    MPolyZ r = *this;
    for (const auto& [k, c] : o.t_) r.add_term(k, c);
    return r;
}

MPolyZ MPolyZ::operator-(const MPolyZ& o) const {
    MPolyZ r = *this;
    for (const auto& [k, c] : o.t_) r.add_term(k, -c);
    return r;
}

MPolyZ MPolyZ::operator*(const MPolyZ& o) const {
    MPolyZ r(nvars_);
    Key k(nvars_);
    for (const auto& [ka, ca] : t_) {
        for (const auto& [kb, cb] : o.t_) {
            for (std::size_t i = 0; i < nvars_; ++i) {
                unsigned e = unsigned(ka[i]) + unsigned(kb[i]);
                if (e > 0xffff) throw DomainError("monomial exponent overflow");
                k[i] = static_cast<std::uint16_t>(e);
            }
            r.add_term(k, ca * cb);
        }
    }
    return r;
}

MPolyZ MPolyZ::scaled(const BigInt& c) const {
    MPolyZ r(nvars_);
    if (c == 0) return r;
    for (const auto& [k, a] : t_) r.t_.emplace(k, a * c);
    return r;
}

MPolyZ MPolyZ::pow(unsigned long e) const {
    MPolyZ acc = constant(nvars_, 1), b = *this;
    while (e > 0) {
        if (e & 1UL) acc = acc * b;
        if (e >>= 1) b = b * b;
    }
    return acc;
}

MPolyZ MPolyZ::exact_div(const BigInt& d) const {
    MPolyZ r(nvars_);
    for (const auto& [k, c] : t_) {
        BigInt q = c / d;
        if (q * d != c)
            throw DomainError("non-exact division while solving the ghost identity");
        r.t_.emplace(k, std::move(q));
    }
    return r;
}

std::string MPolyZ::str(std::size_t n_x_vars) const {
    if (t_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : t_) {
        if (!s.empty()) s += " + ";
        std::string mono;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (k[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += (i < n_x_vars ? "X" : "Y") + std::to_string(i < n_x_vars ? i : i - n_x_vars);
            if (k[i] > 1) mono += "^" + std::to_string(k[i]);
        }
        if (mono.empty()) {
            s += c.str();
        } else {
            if (c == 1)
                s += mono;
            else if (c == -1)
                s += "-" + mono;
            else
                s += c.str() + "*" + mono;
        }
    }
    return s;
}

std::vector<BigInt> ghost_of(const std::vector<BigInt>& z, std::uint32_t p) {
    std::vector<BigInt> w(z.size());
    for (std::size_t k = 0; k < z.size(); ++k) {
        BigInt acc = 0;
        for (std::size_t i = 0; i <= k; ++i)
            acc += pow_bi(BigInt(p), static_cast<unsigned long>(i)) *
                   pow_bi(z[i], static_cast<unsigned long>(
                                    pow_bi(BigInt(p), static_cast<unsigned long>(k - i))
                                        .convert_to<unsigned long>()));
        w[k] = acc;
    }
    return w;
}

namespace {

// Ghost polynomial w_k over the slice of variables starting at `base`.
MPolyZ ghost_poly(std::size_t nvars, std::size_t base, std::uint32_t p, std::size_t k) {
    MPolyZ w = MPolyZ::zero(nvars);
    BigInt pk = 1;
    for (std::size_t i = 0; i <= k; ++i) {
        unsigned long e = pow_bi(BigInt(p), static_cast<unsigned long>(k - i))
                              .convert_to<unsigned long>();
        w = w + MPolyZ::variable(nvars, base + i, static_cast<std::uint16_t>(e)).scaled(pk);
        pk *= p;
    }
    return w;
}

std::vector<ModMonomial> reduce_mod_p(const MPolyZ& f, std::uint32_t p) {
    std::vector<ModMonomial> out;
    for (const auto& [k, c] : f.terms()) {
        BigInt r = c % p;
        if (r < 0) r += p;
        auto cv = r.convert_to<std::uint32_t>();
        if (cv != 0) out.push_back(ModMonomial{k, cv});
    }
    return out;
}

WittPolySet build(std::uint32_t p, std::uint32_t n, WittOpKind kind) {
    const std::size_t nvars = (kind == WittOpKind::Neg) ? n : 2 * n;
    WittPolySet set{p, n, kind, {}, {}};

    // Solve w_k(S_0..S_k) = w_k(X) o w_k(Y) for S_k, level by level:
    //   S_k = (RHS_k - sum_{i<k} p^i S_i^{p^{k-i}}) / p^k
    // with every division exact over Z. The powers S_i^{p^{k-i}} computed
    // here are reused to re-assert the ghost identity for each level.
    for (std::size_t k = 0; k < n; ++k) {
        MPolyZ rhs = MPolyZ::zero(nvars);
        switch (kind) {
            case WittOpKind::Add:
                rhs = ghost_poly(nvars, 0, p, k) + ghost_poly(nvars, n, p, k);
                break;
            case WittOpKind::Mul:
                rhs = ghost_poly(nvars, 0, p, k) * ghost_poly(nvars, n, p, k);
                break;
            case WittOpKind::Neg:
                rhs = MPolyZ::zero(nvars) - ghost_poly(nvars, 0, p, k);
                break;
        }
        MPolyZ lower = MPolyZ::zero(nvars);
        BigInt pi = 1;
        for (std::size_t i = 0; i < k; ++i) {
            unsigned long e = pow_bi(BigInt(p), static_cast<unsigned long>(k - i))
                                  .convert_to<unsigned long>();
            lower = lower + set.polys[i].pow(e).scaled(pi);
            pi *= p;
        }
        MPolyZ sk = (rhs - lower).exact_div(pi);  // pi == p^k here
        // Ghost identity check, never post-hoc: w_k(S) must equal RHS_k.
        if (!(lower + sk.scaled(pi) == rhs))
            throw DomainError("ghost identity violated during Witt polynomial generation");
        set.polys.push_back(std::move(sk));
    }
    for (const auto& f : set.polys) set.polys_mod_p.push_back(reduce_mod_p(f, p));
    return set;
}

}  // namespace

std::shared_ptr<const WittPolySet> gen_witt_polys(std::uint32_t p, std::uint32_t n,
                                                  WittOpKind kind) {
    require_prime(p);
    if (n < 1) throw DomainError("Witt length must be >= 1");
    const WittCaps caps = witt_caps();
    if (p > caps.max_p || n > caps.max_n)
        throw CapExceeded("(p=" + std::to_string(p) + ", n=" + std::to_string(n) +
                          ") outside configured Witt caps (max_p=" + std::to_string(caps.max_p) +
                          ", max_n=" + std::to_string(caps.max_n) + ")");

    // Single-writer-per-key, idempotent fill: the builder is deterministic,
    // so a duplicated computation yields an identical value.
    using KeyT = std::tuple<std::uint32_t, std::uint32_t, WittOpKind>;
    static std::mutex mtx;
    static std::map<KeyT, std::shared_ptr<const WittPolySet>> cache;
    KeyT key{p, n, kind};
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto built = std::make_shared<const WittPolySet>(build(p, n, kind));
    std::lock_guard<std::mutex> lock(mtx);
    auto [it, inserted] = cache.emplace(key, built);
    return it->second;
}

}  // namespace wittstack
