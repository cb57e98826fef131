#ifndef WITTSTACK_ASW_HPP
#define WITTSTACK_ASW_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "wittstack/witt.hpp"

namespace wittstack {

// A Witt vector over F_p((t)): the local datum classifying a cyclic
// p^n-extension of the Laurent series field.
struct LocalWitt {
    WittVector<LaurentSeries> w;

    explicit LocalWitt(WittVector<LaurentSeries> w_);
    std::uint32_t p() const { return w.p; }
    std::uint32_t n() const { return w.n(); }
};

// Distinguished coset representative mod wp(W_n): every component is either
// regular (no wild contribution at that level) or has pole order prime to p.
struct ReducedForm {
    LocalWitt witt;
    // m_i per component: the pole order for wild components, 0 for trivial.
    std::vector<long long> pole_orders;
    std::vector<bool> trivial_mask;
    // Accumulated gauge vector b with input = witt + wp(b); exposes the coset
    // relation for direct verification.
    WittVector<LaurentSeries> gauge;
    // One line per subtraction performed, for pipeline diagnostics.
    std::vector<std::string> steps;
};

ReducedForm asw_reduce(const LocalWitt& x);

// Upper-numbering ramification jumps, level by level:
//   u_k = max{ p^{k-i} m_i : 1 <= i <= k, m_i > 0 },  0 when empty.
// Levels are reported 1..n so the output length always equals n.
std::vector<long long> upper_jumps(const ReducedForm& r);
std::vector<long long> upper_jumps(const LocalWitt& x);

// Whether u can occur as the upper jumps of a cyclic p^n-extension:
// p does not divide u_1, u_{i+1} >= p u_i, and p does not divide u_{i+1}
// whenever the inequality is strict.
bool is_admissible(const std::vector<long long>& u, std::uint32_t p);

// Direct Galois-action oracle for n = 1: in L = F_p((t))[y]/(y^p - y - t^-m)
// build the uniformizer pi = t^a y^b with pa - mb = 1, apply sigma(y) = y+1
// and return v_L(sigma(pi) - pi) - 1, computed by bivariate arithmetic
// modulo the defining relation. Must equal m.
long long as_lower_jump_oracle(std::uint32_t p, long long m, long long prec);

}  // namespace wittstack

#endif
