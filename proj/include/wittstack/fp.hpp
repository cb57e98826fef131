#ifndef WITTSTACK_FP_HPP
#define WITTSTACK_FP_HPP

#include <cstdint>
#include <string>

#include "wittstack/errors.hpp"

namespace wittstack {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline void require_prime(std::uint64_t p) {
    if (!is_prime(p)) throw DomainError("modulus " + std::to_string(p) + " is not prime");
}

// An element of the prime field F_p, value reduced to [0, p). The modulus is
// carried by the element; mixed-modulus arithmetic is a logic error.
class Fp {
public:
    Fp(long long v, std::uint32_t p) : p_(p) {
        if (p < 2) throw DomainError("Fp modulus must be >= 2");
        long long r = v % static_cast<long long>(p);
        if (r < 0) r += p;
        v_ = static_cast<std::uint32_t>(r);
    }

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator+(Fp o) const { check(o); return raw((v_ + o.v_) % p_, p_); }
    Fp operator-(Fp o) const { check(o); return raw((v_ + p_ - o.v_) % p_, p_); }
    Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
    Fp operator*(Fp o) const {
        check(o);
        return raw(static_cast<std::uint32_t>(
                       (static_cast<std::uint64_t>(v_) * o.v_) % p_),
                   p_);
    }
    Fp inv() const {
        if (v_ == 0) throw DomainError("division by zero in F_p");
        return pow(static_cast<long long>(p_) - 2);  // Fermat
    }
    Fp operator/(Fp o) const { return *this * o.inv(); }

    Fp pow(long long e) const {
        if (e < 0) return inv().pow(-e);
        Fp acc = raw(1 % p_, p_), b = *this;
        while (e > 0) {
            if (e & 1) acc = acc * b;
            b = b * b;
            e >>= 1;
        }
        return acc;
    }

    bool operator==(const Fp& o) const { return p_ == o.p_ && v_ == o.v_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    std::string str() const { return std::to_string(v_); }

private:
    static Fp raw(std::uint32_t v, std::uint32_t p) {
        Fp x;
        x.v_ = v;
        x.p_ = p;
        return x;
    }
    Fp() : v_(0), p_(2) {}
    void check(const Fp& o) const {
        if (p_ != o.p_) throw MismatchedRing("F_p elements with different moduli");
    }

    std::uint32_t v_;
    std::uint32_t p_;
};

inline Fp fp_zero(std::uint32_t p) { return Fp(0, p); }
inline Fp fp_one(std::uint32_t p) { return Fp(1, p); }

}  // namespace wittstack

#endif
