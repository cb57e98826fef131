#ifndef WITTSTACK_BIGINT_HPP
#define WITTSTACK_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "wittstack/errors.hpp"

namespace wittstack {

// Exact coefficients everywhere: arbitrary-precision integers for Witt
// polynomial coefficients and divisor arithmetic, rationals for Q-divisors,
// Herbrand functions, degrees and genera. No floating point in the artifact.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt num(const BigRat& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const BigRat& r) { return boost::multiprecision::denominator(r); }

inline BigInt pow_bi(const BigInt& b, unsigned long e) {
    return boost::multiprecision::pow(b, e);
}

// Floor of an exact rational.
inline BigInt floor_rat(const BigRat& r) {
    BigInt n = num(r), d = den(r);  // d > 0 by cpp_rational invariant
    BigInt q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

inline bool is_integer(const BigRat& r) { return den(r) == 1; }

// "num/den" (plain integer when den == 1); the one serialization used for
// rationals in every output format.
inline std::string rat_str(const BigRat& r) {
    if (is_integer(r)) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

inline BigRat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return BigRat(BigInt(s));
        BigInt n(s.substr(0, slash)), d(s.substr(slash + 1));
        if (d == 0) throw ParseError("zero denominator in rational: " + s);
        return BigRat(n, d);
    } catch (const std::runtime_error&) {
        throw ParseError("bad rational literal: " + s);
    }
}

}  // namespace wittstack

#endif
