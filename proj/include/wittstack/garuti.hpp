#ifndef WITTSTACK_GARUTI_HPP
#define WITTSTACK_GARUTI_HPP

#include <cstdint>
#include <map>
#include <string>

#include "wittstack/bigint.hpp"

namespace wittstack {

// Formal integer combination of the classes Sigma_1..Sigma_n on the level-n
// compactification; generator i stands for the total transform
// (r^{n-i})* Sigma_i.
struct TowerDivisor {
    std::uint32_t level = 1;
    std::map<std::uint32_t, BigInt> coeffs;  // generator index -> coefficient

    TowerDivisor() = default;
    explicit TowerDivisor(std::uint32_t lvl) : level(lvl) {}

    BigInt coeff(std::uint32_t i) const {
        auto it = coeffs.find(i);
        return it == coeffs.end() ? BigInt(0) : it->second;
    }
    void set(std::uint32_t i, BigInt c);

    TowerDivisor operator+(const TowerDivisor& o) const;
    TowerDivisor scaled(const BigInt& c) const;
    bool operator==(const TowerDivisor& o) const {
        return level == o.level && coeffs == o.coeffs;
    }

    std::string str() const;
};

TowerDivisor sigma(std::uint32_t i, std::uint32_t level);

// Boundary divisor by the recursion B_1 = Sigma_1, B_n = Sigma_n + p r*B_{n-1}.
TowerDivisor boundary(std::uint32_t n, std::uint32_t p);
// Closed form sum_i p^{n-i} (r^{n-i})* Sigma_i; equals boundary(n, p).
TowerDivisor boundary_closed_form(std::uint32_t n, std::uint32_t p);
// Total-transform pullback along the bundle map to the next level.
TowerDivisor pull_r(const TowerDivisor& d);
// Pullback along the degree-p^n cover Psi: every Sigma_i scales by p.
TowerDivisor pull_psi(const TowerDivisor& d, std::uint32_t p);

}  // namespace wittstack

#endif
