#ifndef WITTSTACK_POLY_HPP
#define WITTSTACK_POLY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "wittstack/fp.hpp"

namespace wittstack {

// Dense univariate polynomial over F_p, coefficients lowest degree first.
// Canonical form: no trailing zero coefficients; the zero polynomial stores
// an empty coefficient list.
class Poly {
public:
    explicit Poly(std::uint32_t p) : p_(p) {}
    Poly(std::uint32_t p, std::vector<Fp> coeffs);

    static Poly zero(std::uint32_t p) { return Poly(p); }
    static Poly constant(Fp c);
    static Poly monomial(Fp c, std::size_t k);
    // x as a polynomial over F_p.
    static Poly var(std::uint32_t p) { return monomial(fp_one(p), 1); }
    static Poly from_ints(std::uint32_t p, const std::vector<long long>& cs);

    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    long long degree() const { return static_cast<long long>(c_.size()) - 1; }
    Fp coeff(std::size_t k) const { return k < c_.size() ? c_[k] : fp_zero(p_); }
    Fp lead() const;
    const std::vector<Fp>& coeffs() const { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(Fp c) const;
    bool operator==(const Poly& o) const { return p_ == o.p_ && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Quotient/remainder with remainder degree < divisor degree.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    static Poly gcd(Poly a, Poly b);  // monic gcd; gcd(0,0) = 0

    Poly monic() const;
    Fp eval(Fp x) const;
    // f(x + c): localization shift used for Laurent expansions.
    Poly shift(Fp c) const;
    // x^deg * f(1/x); pairs with the x = 1/t convention at infinity.
    Poly reverse() const;
    // Multiplicity of the root x = a (0 when f(a) != 0); f must be nonzero.
    long long root_multiplicity(Fp a) const;
    // Char-p Frobenius: f(x)^p = sum c_i x^{p i}.
    Poly pth_power() const;

    std::string str(char var = 'x') const;

private:
    void normalize();

    std::uint32_t p_;
    std::vector<Fp> c_;
};

}  // namespace wittstack

#endif
