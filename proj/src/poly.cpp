#include "wittstack/poly.hpp"

#include "wittstack/errors.hpp"

namespace wittstack {

Poly::Poly(std::uint32_t p, std::vector<Fp> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (const auto& c : c_)
        if (c.modulus() != p_) throw MismatchedRing("polynomial coefficient modulus mismatch");
    normalize();
}

Poly Poly::constant(Fp c) {
    Poly f(c.modulus());
    f.c_.push_back(c);
    f.normalize();
    return f;
}

Poly Poly::monomial(Fp c, std::size_t k) {
    Poly f(c.modulus());
    if (!c.is_zero()) {
        f.c_.assign(k, fp_zero(c.modulus()));
        f.c_.push_back(c);
    }
    return f;
}

Poly Poly::from_ints(std::uint32_t p, const std::vector<long long>& cs) {
    std::vector<Fp> v;
    v.reserve(cs.size());
    for (long long c : cs) v.push_back(Fp(c, p));
    return Poly(p, std::move(v));
}

Fp Poly::lead() const {
    if (is_zero()) throw DomainError("leading coefficient of zero polynomial");
    return c_.back();
}

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
    if (p_ != o.p_) throw MismatchedRing("polynomial modulus mismatch");
    Poly r(p_);
    std::size_t n = std::max(c_.size(), o.c_.size());
    r.c_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) r.c_.push_back(coeff(i) + o.coeff(i));
    r.normalize();
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    Poly r(p_);
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(-c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (p_ != o.p_) throw MismatchedRing("polynomial modulus mismatch");
    if (is_zero() || o.is_zero()) return zero(p_);
    Poly r(p_);
    r.c_.assign(c_.size() + o.c_.size() - 1, fp_zero(p_));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
    r.normalize();
    return r;
}

Poly Poly::operator*(Fp c) const {
    Poly r(p_);
    r.c_.reserve(c_.size());
    for (const auto& a : c_) r.c_.push_back(a * c);
    r.normalize();
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (a.p_ != b.p_) throw MismatchedRing("polynomial modulus mismatch");
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    Poly q(a.p_), r = a;
    if (r.degree() >= b.degree()) q.c_.assign(r.c_.size() - b.c_.size() + 1, fp_zero(a.p_));
    Fp inv_lead = b.lead().inv();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        std::size_t k = static_cast<std::size_t>(r.degree() - b.degree());
        Fp c = r.lead() * inv_lead;
        q.c_[k] = q.c_[k] + c;
        for (std::size_t i = 0; i < b.c_.size(); ++i)
            r.c_[k + i] = r.c_[k + i] - c * b.c_[i];
        r.normalize();
    }
    q.normalize();
    return {q, r};
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = b;
        b = r;
    }
    return a.is_zero() ? a : a.monic();
}

Poly Poly::monic() const {
    if (is_zero()) throw DomainError("monic of zero polynomial");
    return *this * lead().inv();
}

Fp Poly::eval(Fp x) const {
    Fp acc = fp_zero(p_);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Poly Poly::shift(Fp c) const {
    // Horner in (x + c).
    Poly xc = var(p_) + constant(c);
    Poly acc = zero(p_);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * xc + constant(c_[i]);
    return acc;
}

Poly Poly::reverse() const {
    Poly r(p_);
    r.c_.assign(c_.rbegin(), c_.rend());
    r.normalize();
    return r;
}

long long Poly::root_multiplicity(Fp a) const {
    if (is_zero()) throw DomainError("root multiplicity of zero polynomial");
    Poly f = *this;
    Poly lin = var(p_) - constant(a);
    long long mult = 0;
    while (f.eval(a).is_zero()) {
        f = divmod(f, lin).first;
        ++mult;
    }
    return mult;
}

Poly Poly::pth_power() const {
    Poly r(p_);
    if (is_zero()) return r;
    r.c_.assign(c_.size() * p_ - (p_ - 1), fp_zero(p_));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * p_] = c_[i];
    r.normalize();
    return r;
}

std::string Poly::str(char var) const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        if (i == 0 || c_[i].value() != 1) s += c_[i].str();
        if (i > 0) {
            if (c_[i].value() != 1) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

}  // namespace wittstack
