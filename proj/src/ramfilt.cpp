#include "wittstack/ramfilt.hpp"

#include <algorithm>

#include "wittstack/errors.hpp"
#include "wittstack/fp.hpp"

namespace wittstack {

namespace {
constexpr long long kMaxDenseIndex = 5'000'000;

long long p_part(long long v, std::uint32_t p) {
    if (p == 0) return 1;
    long long q = 1;
    while (v % p == 0) {
        v /= p;
        q *= p;
    }
    return q;
}

bool is_p_power(long long v, std::uint32_t p) {
    if (p == 0) return v == 1;
    while (v % p == 0) v /= p;
    return v == 1;
}
}  // namespace

// p = 0 marks a characteristic-zero (hence tame-only) filtration.
Filtration::Filtration(std::uint32_t p, long long r, std::vector<long long> orders)
    : p_(p), r_(r), orders_(std::move(orders)) {
    if (p_ != 0) require_prime(p_);
    if (r_ < 1 || (p_ != 0 && r_ % p_ == 0))
        throw DomainError("tame order r must be positive and prime to p");
    if (orders_.empty()) throw DomainError("filtration needs at least |G_0|");
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        if (orders_[i] < 1) throw DomainError("group orders must be positive");
        if (i > 0 && orders_[i] > orders_[i - 1])
            throw DomainError("group orders must be non-increasing");
    }
    // Canonical form: implicit trailing 1s.
    while (orders_.size() > 1 && orders_.back() == 1) orders_.pop_back();
    if (p_ == 0 && orders_.size() > 1)
        throw DomainError("wild filtration requires positive characteristic");
    if (static_cast<long long>(orders_.size()) > kMaxDenseIndex)
        throw DomainError("filtration too deep for the dense representation");
}

Filtration Filtration::tame(std::uint32_t p, long long e) {
    return Filtration(p, e == 0 ? 1 : e, std::vector<long long>{std::max(e, 1LL)});
}

long long Filtration::order_at(long long i) const {
    if (i < 0) throw DomainError("filtration index must be >= 0");
    if (i >= static_cast<long long>(orders_.size())) return 1;
    return orders_[static_cast<std::size_t>(i)];
}

std::vector<long long> Filtration::lower_jumps() const {
    std::vector<long long> jumps;
    for (long long i = 1; i <= static_cast<long long>(orders_.size()); ++i)
        if (order_at(i) > order_at(i + 1)) jumps.push_back(i);
    return jumps;
}

BigInt Filtration::ramification_sum() const {
    BigInt s = 0;
    for (long long v : orders_) s += v - 1;
    return s;
}

PLFunction phi_from_filtration(const Filtration& f) {
    std::vector<BigRat> xs{BigRat(0)};
    std::vector<BigRat> slopes{BigRat(f.order_at(1), f.order0())};
    for (long long i = 1; i <= static_cast<long long>(f.orders().size()); ++i) {
        if (f.order_at(i) > f.order_at(i + 1)) {
            xs.push_back(BigRat(i));
            slopes.push_back(BigRat(f.order_at(i + 1), f.order0()));
        }
    }
    return PLFunction(BigRat(0), std::move(xs), std::move(slopes));
}

namespace {
void check_strict_increasing_positive(const std::vector<BigRat>& v, const char* what) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!(v[i] > 0)) throw DomainError(std::string(what) + " jumps must be positive");
        if (i > 0 && !(v[i] > v[i - 1]))
            throw DomainError(std::string(what) + " jumps must strictly increase");
    }
}
}  // namespace

std::vector<BigRat> lower_to_upper(const std::vector<BigRat>& lower, long long r,
                                   std::uint32_t p) {
    check_strict_increasing_positive(lower, "lower");
    std::vector<BigRat> upper;
    upper.reserve(lower.size());
    BigRat u(0), m(0);
    BigInt denom = r;  // p^{k-1} r
    for (const auto& mk : lower) {
        u += (mk - m) / BigRat(denom);
        m = mk;
        upper.push_back(u);
        denom *= p;
    }
    return upper;
}

std::vector<BigRat> upper_to_lower(const std::vector<BigRat>& upper, long long r,
                                   std::uint32_t p) {
    check_strict_increasing_positive(upper, "upper");
    std::vector<BigRat> lower;
    lower.reserve(upper.size());
    BigRat u(0), m(0);
    BigInt denom = r;
    for (const auto& uk : upper) {
        m += (uk - u) * BigRat(denom);
        u = uk;
        lower.push_back(m);
        denom *= p;
    }
    return lower;
}

Filtration filtration_from_upper(const std::vector<BigRat>& upper, long long r,
                                 std::uint32_t p) {
    if (upper.empty()) throw DomainError("empty jump list");
    // Zero entries (trivial levels) must precede the positive suffix.
    std::vector<BigRat> positive;
    for (const auto& u : upper) {
        if (u < 0) throw DomainError("upper jumps must be >= 0");
        if (u > 0)
            positive.push_back(u);
        else if (!positive.empty())
            throw DomainError("a zero jump cannot follow a positive one");
    }
    const auto n_eff = static_cast<std::uint32_t>(positive.size());
    if (n_eff == 0) return Filtration::tame(p, r);

    std::vector<BigRat> lower = upper_to_lower(positive, r, p);
    std::vector<long long> jumps;
    jumps.reserve(lower.size());
    for (const auto& m : lower) {
        if (!is_integer(m))
            throw NonIntegralLowerJump("Herbrand translation of (" + rat_str(m) +
                                       ") is not an integer");
        jumps.push_back(num(m).convert_to<long long>());
    }
    if (jumps.back() > kMaxDenseIndex) throw DomainError("lower jumps too large");

    long long pk = 1;
    for (std::uint32_t i = 0; i < n_eff; ++i) pk *= p;
    std::vector<long long> orders(static_cast<std::size_t>(jumps.back()) + 1, 0);
    orders[0] = r * pk;
    long long level = 0;  // how many jumps passed
    for (long long i = 1; i <= jumps.back(); ++i) {
        if (level < static_cast<long long>(jumps.size()) && i > jumps[level]) ++level;
        long long o = pk;
        for (long long k = 0; k < level; ++k) o /= p;
        orders[static_cast<std::size_t>(i)] = o;
    }
    return Filtration(p, r, std::move(orders));
}

std::vector<std::string> validate_filtration(const Filtration& f) {
    std::vector<std::string> bad;
    const std::uint32_t p = f.p();
    if (f.order_at(1) != p_part(f.order0(), p)) bad.push_back("a/c: |G_1| is not the p-part of |G_0|");
    if (f.order0() % f.order_at(1) != 0 || f.order0() / f.order_at(1) != f.r())
        bad.push_back("b: |G_0|/|G_1| != r");
    for (long long i = 1; i <= static_cast<long long>(f.orders().size()); ++i) {
        long long a = f.order_at(i), b = f.order_at(i + 1);
        if (a % b != 0 || !is_p_power(a / b, p)) {
            bad.push_back("d: |G_i|/|G_{i+1}| not a p-power at i=" + std::to_string(i));
            break;
        }
    }
    auto jumps = f.lower_jumps();
    for (std::size_t i = 1; i < jumps.size(); ++i)
        if ((jumps[i] - jumps[0]) % f.r() != 0) {
            bad.push_back("e: lower jumps not congruent mod r");
            break;
        }
    if (jumps.size() > 1) {
        PLFunction phi = phi_from_filtration(f);
        BigRat u0 = phi.eval(BigRat(jumps[0]));
        for (std::size_t i = 1; i < jumps.size(); ++i) {
            BigRat d = (phi.eval(BigRat(jumps[i])) - u0) / BigRat(f.r());
            if (!is_integer(d)) {
                bad.push_back("f: upper jumps not congruent mod r");
                break;
            }
        }
    }
    return bad;
}

}  // namespace wittstack
