#ifndef WITTSTACK_STACKY_HPP
#define WITTSTACK_STACKY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wittstack/bigint.hpp"
#include "wittstack/ramfilt.hpp"
#include "wittstack/ratfunc.hpp"

namespace wittstack {

struct StackyPoint {
    std::string label;
    Place place;
    long long stab_order = 1;  // |G_0|
    Filtration filtration;
};

// A stacky curve presented by its coarse space data: characteristic (0 for
// tame-only sanity runs), coarse genus, the stacky points with their
// ramification filtrations, and an optional log divisor given by labels.
struct StackyCurveData {
    std::uint32_t p = 0;
    long long coarse_genus = 0;
    std::vector<StackyPoint> points;
    std::vector<std::string> log_points;

    void validate() const;
    const StackyPoint* find(const std::string& label) const;
    bool is_log_point(const std::string& label) const;
};

// Rational divisor on the stack. Stacky labels carry coefficients understood
// with degree weight 1/e; the reserved coarse class (printed H) has weight 1
// and holds pullbacks from the coarse space.
struct QDivisor {
    BigRat coarse;
    std::map<std::string, BigRat> entries;  // label -> coefficient

    QDivisor operator+(const QDivisor& o) const;
    QDivisor scaled(const BigRat& c) const;
    BigRat coeff(const std::string& label) const;
    std::string str() const;
};

// Integer divisor on the coarse space: the reserved class plus the coarse
// points underneath the stacky labels.
struct CoarseDivisor {
    BigInt coarse;
    std::map<std::string, BigInt> entries;

    BigInt degree() const;
    std::string str() const;
};

// K = pi* K_coarse + sum_x sum_i (|G_{x,i}| - 1) x. The coarse part stays on
// the reserved class with weight 1; each stacky point carries its
// ramification sum.
QDivisor canonical_divisor(const StackyCurveData& c);
// The log divisor Delta: coefficient 1 on each log point.
QDivisor log_delta(const StackyCurveData& c);

BigRat divisor_degree(const StackyCurveData& c, const QDivisor& d);

// Genus from 2g - 2 = deg K.
BigRat genus(const StackyCurveData& c);

// Floor divisor of nD: stacky coefficient c at stabilizer e contributes
// floor(n c / e) at the underlying coarse point; coarse coefficients scale
// and floor.
CoarseDivisor floor_divisor(const StackyCurveData& c, const QDivisor& d, long long n);

// Graded dimensions by stacky Riemann-Roch,
//   h^0(nK') = deg floor(nK') - g_0 + 1 + h^0(K - nK'),
// with K' = K (or K + Delta for the log ring) and the correction term
// evaluated directly on its floor divisor. Coarse genus 0 is fully
// supported; higher genus only where degree bounds decide the answer.
long long h0(const StackyCurveData& c, long long n, bool log_divisor = false);

// [h^0(0), h^0(K'), ..., h^0(NK')].
std::vector<long long> hilbert_table(const StackyCurveData& c, long long N,
                                     bool log_divisor = false);

// Minimal generator count of the (log-)canonical ring per degree 1..N,
// computed from concrete section spaces L(floor(nK')) = {u(x)/v_n(x)} by
// exact linear algebra over F_p (or Q when p = 0). Requires coarse P^1.
std::map<long long, long long> canring_generators(const StackyCurveData& c, long long N,
                                                  bool log_divisor = false);

// Concrete section-space dimensions used by canring_generators (these are
// dim L(floor(nK')), which at n = 1 can sit below the h0 convention for
// wild non-log curves).
std::vector<long long> section_dims(const StackyCurveData& c, long long N,
                                    bool log_divisor = false);

}  // namespace wittstack

#endif
