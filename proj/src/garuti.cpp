#include "wittstack/garuti.hpp"

#include "wittstack/errors.hpp"
#include "wittstack/fp.hpp"

namespace wittstack {

void TowerDivisor::set(std::uint32_t i, BigInt c) {
    if (i < 1 || i > level) throw DomainError("generator index outside the tower level");
    if (c == 0)
        coeffs.erase(i);
    else
        coeffs[i] = std::move(c);
}

TowerDivisor TowerDivisor::operator+(const TowerDivisor& o) const {
    if (level != o.level) throw DomainError("tower divisors at different levels");
    TowerDivisor r = *this;
    for (const auto& [i, c] : o.coeffs) r.set(i, r.coeff(i) + c);
    return r;
}

TowerDivisor TowerDivisor::scaled(const BigInt& c) const {
    TowerDivisor r(level);
    if (c == 0) return r;
    for (const auto& [i, a] : coeffs) r.coeffs.emplace(i, a * c);
    return r;
}

std::string TowerDivisor::str() const {
    if (coeffs.empty()) return "0";
    std::string s;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        if (!s.empty()) s += " + ";
        if (it->second != 1) s += it->second.str() + "·";
        s += "Σ_" + std::to_string(it->first);
    }
    return s;
}

TowerDivisor sigma(std::uint32_t i, std::uint32_t level) {
    TowerDivisor d(level);
    d.set(i, 1);
    return d;
}

TowerDivisor pull_r(const TowerDivisor& d) {
    TowerDivisor r(d.level + 1);
    r.coeffs = d.coeffs;
    return r;
}

TowerDivisor pull_psi(const TowerDivisor& d, std::uint32_t p) {
    require_prime(p);
    return d.scaled(p);
}

TowerDivisor boundary(std::uint32_t n, std::uint32_t p) {
    require_prime(p);
    if (n < 1) throw DomainError("boundary divisor needs n >= 1");
    TowerDivisor b = sigma(1, 1);
    for (std::uint32_t k = 2; k <= n; ++k) b = sigma(k, k) + pull_r(b).scaled(p);
    return b;
}

TowerDivisor boundary_closed_form(std::uint32_t n, std::uint32_t p) {
    require_prime(p);
    if (n < 1) throw DomainError("boundary divisor needs n >= 1");
    TowerDivisor b(n);
    for (std::uint32_t i = 1; i <= n; ++i) b.set(i, pow_bi(BigInt(p), n - i));
    return b;
}

}  // namespace wittstack
