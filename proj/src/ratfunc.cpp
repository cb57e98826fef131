#include "wittstack/ratfunc.hpp"

#include "wittstack/errors.hpp"

namespace wittstack {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.modulus() != den_.modulus()) throw MismatchedRing("rational function modulus mismatch");
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(fp_one(num_.modulus()));
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Poly::divmod(num_, g).first;
        den_ = Poly::divmod(den_, g).first;
    }
    Fp lead_inv = den_.lead().inv();
    num_ = num_ * lead_inv;
    den_ = den_ * lead_inv;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inv(); }

RatFunc RatFunc::scale(Fp c) const { return RatFunc(num_ * c, den_); }

RatFunc RatFunc::inv() const {
    if (is_zero()) throw DomainError("inverse of zero rational function");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long long e) const {
    if (e < 0) return inv().pow(-e);
    RatFunc acc = one(modulus()), b = *this;
    while (e > 0) {
        if (e & 1) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

RatFunc RatFunc::shift(Fp c) const { return RatFunc(num_.shift(c), den_.shift(c)); }

RatFunc RatFunc::invert_var() const {
    if (is_zero()) return *this;
    // f(1/x) = x^{deg den - deg num} rev(num)(x) / rev(den)(x).
    long long d = den_.degree() - num_.degree();
    Poly n = num_.reverse(), dn = den_.reverse();
    if (d >= 0)
        n = n * Poly::monomial(fp_one(modulus()), static_cast<std::size_t>(d));
    else
        dn = dn * Poly::monomial(fp_one(modulus()), static_cast<std::size_t>(-d));
    return RatFunc(n, dn);
}

std::string RatFunc::str(char var) const {
    if (den_ == Poly::constant(fp_one(modulus()))) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

std::optional<long long> valuation(const RatFunc& f, const Place& place) {
    if (f.is_zero()) return std::nullopt;  // +infinity
    if (place.infinite) return f.den().degree() - f.num().degree();
    Fp a(place.a, f.modulus());
    return f.num().root_multiplicity(a) - f.den().root_multiplicity(a);
}

LaurentSeries laurent_expand(const RatFunc& f, const Place& place, long long prec) {
    if (prec < 1) throw DomainError("laurent_expand needs prec >= 1");
    if (f.is_zero()) return LaurentSeries::zero(f.modulus());
    LaurentSeries n = LaurentSeries::zero(f.modulus()), d = n;
    if (place.infinite) {
        long long shift = f.den().degree() - f.num().degree();
        n = LaurentSeries::from_poly(f.num().reverse(), std::max(shift, 0LL));
        d = LaurentSeries::from_poly(f.den().reverse(), std::max(-shift, 0LL));
    } else {
        Fp a(place.a, f.modulus());
        n = LaurentSeries::from_poly(f.num().shift(a));
        d = LaurentSeries::from_poly(f.den().shift(a));
    }
    return LaurentSeries::div(n, d, prec);
}

}  // namespace wittstack
