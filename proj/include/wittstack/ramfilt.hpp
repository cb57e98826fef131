#ifndef WITTSTACK_RAMFILT_HPP
#define WITTSTACK_RAMFILT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "wittstack/bigint.hpp"
#include "wittstack/plfunc.hpp"

namespace wittstack {

// Ramification filtration stored by group orders: orders[i] = |G_i| for
// i = 0..last jump, implicitly 1 afterwards. Orders are non-increasing;
// |G_0| = r p^a with r the tame order and |G_1| the p-part of |G_0|.
class Filtration {
public:
    Filtration(std::uint32_t p, long long r, std::vector<long long> orders);

    // Tame point of order e: filtration (e, 1).
    static Filtration tame(std::uint32_t p, long long e);
    static Filtration trivial(std::uint32_t p) { return tame(p, 1); }

    std::uint32_t p() const { return p_; }
    long long r() const { return r_; }
    const std::vector<long long>& orders() const { return orders_; }
    long long order_at(long long i) const;
    long long order0() const { return orders_[0]; }

    // Wild jumps: indices i >= 1 with |G_i| > |G_{i+1}|.
    std::vector<long long> lower_jumps() const;
    // sum_{i>=0} (|G_i| - 1), the local canonical-divisor coefficient.
    BigInt ramification_sum() const;

    bool operator==(const Filtration& o) const {
        return p_ == o.p_ && r_ == o.r_ && orders_ == o.orders_;
    }

private:
    std::uint32_t p_;
    long long r_;
    std::vector<long long> orders_;  // trailing 1 kept explicit
};

// Herbrand function phi(i) = (1/|G_0|) (|G_1| + ... + |G_m| + (i-m)|G_{m+1}|)
// as an exact piecewise-linear function with phi(0) = 0.
PLFunction phi_from_filtration(const Filtration& f);

// Jump translation for the cyclic-by-tame model with u_0 = m_0 = 0:
//   u_k - u_{k-1} = (m_k - m_{k-1}) / (p^{k-1} r).
// Exact rationals both ways; the maps are mutually inverse.
std::vector<BigRat> lower_to_upper(const std::vector<BigRat>& lower, long long r, std::uint32_t p);
std::vector<BigRat> upper_to_lower(const std::vector<BigRat>& upper, long long r, std::uint32_t p);

// Assemble the order filtration from upper jumps. Zero entries mark levels
// with no wild contribution and skip a level of the p-power; the remaining
// (positive) jumps must be strictly increasing. Throws NonIntegralLowerJump
// when Herbrand translation does not land on integers.
Filtration filtration_from_upper(const std::vector<BigRat>& upper, long long r, std::uint32_t p);

// Order-level shadows of the structural clauses: (a/c) |G_1| is the p-part
// of |G_0|; (b) |G_0|/|G_1| = r; (d) |G_i|/|G_{i+1}| is a power of p for
// i >= 1; (e) lower jumps pairwise congruent mod r; (f) upper jumps pairwise
// congruent mod r. Returns the violated clause names, empty when all hold.
std::vector<std::string> validate_filtration(const Filtration& f);

}  // namespace wittstack

#endif
