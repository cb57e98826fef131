#include "wittstack/laurent.hpp"

#include <algorithm>

#include "wittstack/errors.hpp"

namespace wittstack {

namespace {
long long sat_add(long long a, long long b) {
    if (a == LaurentSeries::kExactTail || b == LaurentSeries::kExactTail)
        return LaurentSeries::kExactTail;
    return a + b;
}
}  // namespace

LaurentSeries LaurentSeries::zero(std::uint32_t p) { return LaurentSeries(p); }

LaurentSeries LaurentSeries::monomial(Fp c, long long k) {
    LaurentSeries s(c.modulus());
    if (!c.is_zero()) {
        s.lo_ = k;
        s.c_.push_back(c);
    }
    return s;
}

LaurentSeries LaurentSeries::from_poly(const Poly& f, long long shift) {
    LaurentSeries s(f.modulus());
    if (!f.is_zero()) {
        s.lo_ = shift;
        s.c_ = f.coeffs();
        s.normalize();
    }
    return s;
}

LaurentSeries LaurentSeries::unknown_tail(std::uint32_t p, long long tail) {
    LaurentSeries s(p);
    s.lo_ = tail;
    s.tail_ = tail;
    return s;
}

void LaurentSeries::normalize() {
    std::size_t b = 0;
    while (b < c_.size() && c_[b].is_zero()) ++b;
    std::size_t e = c_.size();
    while (e > b && c_[e - 1].is_zero()) --e;
    if (b > 0 || e < c_.size()) {
        lo_ += static_cast<long long>(b);
        c_ = std::vector<Fp>(c_.begin() + b, c_.begin() + e);
    }
    if (c_.empty()) lo_ = tail_;  // exact zero keeps lo_ == tail_ == kExactTail
}

void LaurentSeries::check(const LaurentSeries& o) const {
    if (p_ != o.p_) throw MismatchedRing("Laurent series over different F_p");
}

long long LaurentSeries::val() const {
    if (c_.empty())
        throw PrecisionExhausted(exact() ? "valuation of exact zero series"
                                         : "valuation unknown at this precision");
    return lo_;
}

long long LaurentSeries::effective_precision() const {
    if (c_.empty()) return 0;
    if (exact()) return kExactTail;
    return tail_ - lo_;
}

Fp LaurentSeries::lead() const {
    if (c_.empty()) throw PrecisionExhausted("leading coefficient unavailable");
    return c_.front();
}

Fp LaurentSeries::coeff(long long k) const {
    if (k >= tail_) throw PrecisionExhausted("coefficient beyond precision window");
    if (k < lo_ || k >= known_end()) return fp_zero(p_);
    return c_[static_cast<std::size_t>(k - lo_)];
}

bool LaurentSeries::is_regular() const {
    if (!c_.empty() && lo_ < 0) return false;
    if (c_.empty() && !exact() && tail_ < 0)
        throw PrecisionExhausted("regularity undecidable at this precision");
    return true;
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
    check(o);
    if (is_exact_zero()) return o;
    if (o.is_exact_zero()) return *this;
    LaurentSeries r(p_);
    r.tail_ = std::min(tail_, o.tail_);
    long long start = std::min(c_.empty() ? r.tail_ : lo_, o.c_.empty() ? r.tail_ : o.lo_);
    long long end = std::max(known_end(), o.known_end());
    if (r.tail_ != kExactTail) end = std::min(end, r.tail_);
    if (start < end) {
        r.lo_ = start;
        r.c_.reserve(static_cast<std::size_t>(end - start));
        for (long long k = start; k < end; ++k) r.c_.push_back(coeff(k) + o.coeff(k));
    } else {
        r.lo_ = r.tail_;
    }
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const { return *this + (-o); }

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
    check(o);
    if (is_exact_zero() || o.is_exact_zero()) return zero(p_);
    LaurentSeries r(p_);
    r.tail_ = std::min(sat_add(tail_, o.c_.empty() ? o.tail_ : o.lo_),
                       sat_add(o.tail_, c_.empty() ? tail_ : lo_));
    if (c_.empty() || o.c_.empty()) {
        r.lo_ = r.tail_;
        return r;
    }
    long long lo = lo_ + o.lo_;
    long long end = lo + static_cast<long long>(c_.size() + o.c_.size()) - 1;
    if (r.tail_ != kExactTail) end = std::min(end, r.tail_);
    if (lo < end) {
        r.lo_ = lo;
        r.c_.assign(static_cast<std::size_t>(end - lo), fp_zero(p_));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            long long base = lo_ + static_cast<long long>(i) + o.lo_;
            for (std::size_t j = 0; j < o.c_.size(); ++j) {
                long long k = base + static_cast<long long>(j);
                if (k >= end) break;
                auto idx = static_cast<std::size_t>(k - lo);
                r.c_[idx] = r.c_[idx] + c_[i] * o.c_[j];
            }
        }
    } else {
        r.lo_ = r.tail_;
    }
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::scale(Fp c) const {
    if (c.modulus() != p_) throw MismatchedRing("scalar modulus mismatch");
    if (c.is_zero()) return zero(p_);
    LaurentSeries r = *this;
    for (auto& a : r.c_) a = a * c;
    return r;
}

LaurentSeries LaurentSeries::pow(unsigned long long e) const {
    LaurentSeries acc = one(p_), b = *this;
    while (e > 0) {
        if (e & 1ULL) acc = acc * b;
        if (e >>= 1) b = b * b;
    }
    return acc;
}

LaurentSeries LaurentSeries::pth_power() const {
    LaurentSeries r(p_);
    r.tail_ = exact() ? kExactTail : tail_ * static_cast<long long>(p_);
    if (c_.empty()) {
        r.lo_ = r.tail_;
        return r;
    }
    r.lo_ = lo_ * p_;
    r.c_.assign((c_.size() - 1) * p_ + 1, fp_zero(p_));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * p_] = c_[i];  // c^p = c in F_p
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::div(const LaurentSeries& a, const LaurentSeries& b,
                                 long long want_terms) {
    a.check(b);
    if (b.is_exact_zero()) throw DomainError("Laurent division by zero");
    if (!b.known_nonzero())
        throw PrecisionExhausted("divisor has no known leading term");
    if (a.is_exact_zero()) return zero(a.p_);
    if (want_terms < 1) throw PrecisionExhausted("Laurent division asked for < 1 term");
    if (!a.known_nonzero()) {
        // O(t^T) / b = O(t^{T - v(b)}).
        return unknown_tail(a.p_, a.tail_ - b.lo_);
    }

    long long qval = a.lo_ - b.lo_;
    long long qstop = qval + want_terms;  // produce exponents < qstop
    Fp binv = b.lead().inv();
    LaurentSeries r = a;
    std::vector<Fp> qc;
    long long qlo = qval;
    long long qtail = qstop;
    bool exact_result = false;
    while (true) {
        if (r.is_exact_zero()) {
            exact_result = true;
            break;
        }
        if (!r.known_nonzero()) {
            qtail = std::min(qtail, r.tail_ - b.lo_);
            break;
        }
        long long e = r.val() - b.lo_;
        if (e >= qstop) break;
        while (qlo + static_cast<long long>(qc.size()) < e) qc.push_back(fp_zero(a.p_));
        Fp c = r.lead() * binv;
        qc.push_back(c);
        r = r - (b * monomial(c, e));
    }

    LaurentSeries q(a.p_);
    q.tail_ = exact_result ? kExactTail : qtail;
    if (!qc.empty()) {
        q.lo_ = qlo;
        q.c_ = std::move(qc);
    } else {
        q.lo_ = q.tail_;
    }
    q.normalize();
    return q;
}

bool LaurentSeries::operator==(const LaurentSeries& o) const {
    return p_ == o.p_ && lo_ == o.lo_ && tail_ == o.tail_ && c_ == o.c_;
}

std::string LaurentSeries::str() const {
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        long long k = lo_ + static_cast<long long>(i);
        if (k == 0) {
            s += c_[i].str();
        } else {
            if (c_[i].value() != 1) s += c_[i].str() + "*";
            s += "t";
            if (k != 1) s += "^" + std::to_string(k);
        }
    }
    if (!exact()) {
        if (!s.empty()) s += " + ";
        s += "O(t^" + std::to_string(tail_) + ")";
    } else if (s.empty()) {
        s = "0";
    }
    return s;
}

}  // namespace wittstack
