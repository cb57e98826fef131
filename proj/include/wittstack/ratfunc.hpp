#ifndef WITTSTACK_RATFUNC_HPP
#define WITTSTACK_RATFUNC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wittstack/laurent.hpp"
#include "wittstack/poly.hpp"

namespace wittstack {

// A place of the x-line: a finite F_p-rational point x = a, or infinity
// (localized through the substitution x = 1/t). The coordinate is stored as
// a plain integer so the same type serves char-0 curve descriptions.
struct Place {
    bool infinite = false;
    long long a = 0;

    static Place finite(long long a) { return Place{false, a}; }
    static Place infinity() { return Place{true, 0}; }

    bool operator==(const Place& o) const {
        return infinite == o.infinite && (infinite || a == o.a);
    }
    // Finite places by coordinate, infinity last.
    bool operator<(const Place& o) const {
        if (infinite != o.infinite) return !infinite;
        return !infinite && a < o.a;
    }
    std::string str() const { return infinite ? "inf" : std::to_string(a); }
};

// Rational function over F_p in canonical form: denominator monic and
// coprime to the numerator; zero is 0/1.
class RatFunc {
public:
    explicit RatFunc(std::uint32_t p)
        : num_(Poly::zero(p)), den_(Poly::constant(fp_one(p))) {}
    RatFunc(Poly num, Poly den);

    static RatFunc zero(std::uint32_t p) { return RatFunc(p); }
    static RatFunc one(std::uint32_t p) { return from_poly(Poly::constant(fp_one(p))); }
    static RatFunc from_poly(Poly f) { return RatFunc(std::move(f), Poly::constant(fp_one(f.modulus()))); }
    static RatFunc var(std::uint32_t p) { return from_poly(Poly::var(p)); }

    std::uint32_t modulus() const { return num_.modulus(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc scale(Fp c) const;
    RatFunc inv() const;
    RatFunc pow(long long e) const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    // f(x + c) and f(1/x): the coordinate changes used by the pipeline's
    // invariance checks.
    RatFunc shift(Fp c) const;
    RatFunc invert_var() const;

    std::string str(char var = 'x') const;

private:
    Poly num_, den_;
};

// Order of vanishing of f at the place (negative = pole order); the +inf of
// the zero function is reported through the optional.
std::optional<long long> valuation(const RatFunc& f, const Place& place);

// Local expansion of f at the place in the uniformizer t (x = a + t at a
// finite place, x = 1/t at infinity), carrying prec known terms past the
// valuation. The zero function expands to the exact zero sentinel.
LaurentSeries laurent_expand(const RatFunc& f, const Place& place, long long prec);

inline RatFunc zero_like(const RatFunc& m) { return RatFunc::zero(m.modulus()); }
inline RatFunc one_like(const RatFunc& m) { return RatFunc::one(m.modulus()); }
inline RatFunc scale(const RatFunc& x, std::uint32_t c) { return x.scale(Fp(c, x.modulus())); }
inline bool same_ring(const RatFunc& a, const RatFunc& b) { return a.modulus() == b.modulus(); }

}  // namespace wittstack

#endif
