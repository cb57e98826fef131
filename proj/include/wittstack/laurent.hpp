#ifndef WITTSTACK_LAURENT_HPP
#define WITTSTACK_LAURENT_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "wittstack/fp.hpp"
#include "wittstack/poly.hpp"

namespace wittstack {

// Finite-precision Laurent series over F_p.
//
// A value knows its coefficients for all exponents below `tail()`: exponents
// below `lo` are exactly zero, the window [lo, lo+size) is stored, and
// [window end, tail) is known zero. Exponents >= tail() are unknown, except
// when the series is exact (tail() == kExactTail), in which case every
// higher coefficient is exactly zero. Arithmetic propagates the unknown-tail
// cutoff pessimistically; exact inputs stay exact through ring operations.
class LaurentSeries {
public:
    static constexpr long long kExactTail = std::numeric_limits<long long>::max();

    static LaurentSeries zero(std::uint32_t p);
    static LaurentSeries one(std::uint32_t p) { return monomial(fp_one(p), 0); }
    static LaurentSeries monomial(Fp c, long long k);
    // Exact series sum_i f_i t^{shift + i}.
    static LaurentSeries from_poly(const Poly& f, long long shift = 0);
    // Zero known only up to O(t^tail).
    static LaurentSeries unknown_tail(std::uint32_t p, long long tail);

    std::uint32_t modulus() const { return p_; }
    bool exact() const { return tail_ == kExactTail; }
    bool is_exact_zero() const { return c_.empty() && exact(); }
    // True when at least one coefficient is known nonzero.
    bool known_nonzero() const { return !c_.empty(); }

    // Valuation; requires a known nonzero coefficient (exact-zero and
    // zero-to-precision series have no finite valuation).
    long long val() const;
    long long tail() const { return tail_; }
    // Known terms past the valuation.
    long long effective_precision() const;
    Fp lead() const;
    Fp coeff(long long k) const;  // requires k < tail()

    // Regular means no pole: every known coefficient sits at exponent >= 0
    // and no negative exponent can hide below the precision cutoff.
    bool is_regular() const;

    LaurentSeries operator+(const LaurentSeries& o) const;
    LaurentSeries operator-(const LaurentSeries& o) const;
    LaurentSeries operator-() const;
    LaurentSeries operator*(const LaurentSeries& o) const;
    LaurentSeries scale(Fp c) const;
    LaurentSeries pow(unsigned long long e) const;
    // Char-p Frobenius: exponents dilate by p, so known precision grows.
    LaurentSeries pth_power() const;
    // Long division producing at most `want_terms` terms past the quotient's
    // valuation; the quotient is exact when the division terminates.
    static LaurentSeries div(const LaurentSeries& a, const LaurentSeries& b,
                             long long want_terms);

    bool operator==(const LaurentSeries& o) const;
    bool operator!=(const LaurentSeries& o) const { return !(*this == o); }

    std::string str() const;

private:
    // Canonical exact zero: empty window with lo_ == tail_ == kExactTail.
    explicit LaurentSeries(std::uint32_t p) : p_(p), lo_(kExactTail), tail_(kExactTail) {}
    void normalize();
    void check(const LaurentSeries& o) const;
    long long known_end() const { return lo_ + static_cast<long long>(c_.size()); }

    std::uint32_t p_;
    long long lo_;            // exponent of c_[0]; equals tail_ when c_ is empty
    long long tail_;          // first unknown exponent (kExactTail: none)
    std::vector<Fp> c_;       // c_.front() and c_.back() nonzero when nonempty
};

inline LaurentSeries zero_like(const LaurentSeries& m) { return LaurentSeries::zero(m.modulus()); }
inline LaurentSeries one_like(const LaurentSeries& m) { return LaurentSeries::one(m.modulus()); }
inline LaurentSeries scale(const LaurentSeries& x, std::uint32_t c) { return x.scale(Fp(c, x.modulus())); }
inline bool same_ring(const LaurentSeries& a, const LaurentSeries& b) {
    return a.modulus() == b.modulus();
}

}  // namespace wittstack

#endif
