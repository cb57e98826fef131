#ifndef WITTSTACK_WITTPOLY_HPP
#define WITTSTACK_WITTPOLY_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "wittstack/bigint.hpp"

namespace wittstack {

// Configured caps on the universal-polynomial generator; monomial counts
// grow superpolynomially in (p, n), so desk-scale limits are enforced and
// overridable (CLI flags / WITTSTACK_MAX_P / WITTSTACK_MAX_N).
struct WittCaps {
    std::uint32_t max_p = 7;
    std::uint32_t max_n = 4;
};
WittCaps& witt_caps();

// Sparse multivariate polynomial over Z. Exponent vectors have fixed arity:
// variables 0..n-1 are X_0..X_{n-1} and n..2n-1 are Y_0..Y_{n-1}.
class MPolyZ {
public:
    using Key = std::vector<std::uint16_t>;

    explicit MPolyZ(std::size_t nvars) : nvars_(nvars) {}

    static MPolyZ zero(std::size_t nvars) { return MPolyZ(nvars); }
    static MPolyZ constant(std::size_t nvars, BigInt c);
    static MPolyZ variable(std::size_t nvars, std::size_t i, std::uint16_t e = 1);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return t_.empty(); }
    const std::map<Key, BigInt>& terms() const { return t_; }

    MPolyZ operator+(const MPolyZ& o) const;
    MPolyZ operator-(const MPolyZ& o) const;
    MPolyZ operator*(const MPolyZ& o) const;
    MPolyZ scaled(const BigInt& c) const;
    MPolyZ pow(unsigned long e) const;
    // Divide every coefficient by d; throws unless the division is exact.
    MPolyZ exact_div(const BigInt& d) const;
    bool operator==(const MPolyZ& o) const { return t_ == o.t_; }

    void add_term(const Key& k, const BigInt& c);
    std::string str(std::size_t n_x_vars) const;

private:
    std::size_t nvars_;
    std::map<Key, BigInt> t_;
};

// One monomial of a mod-p reduced universal polynomial; coefficient in
// [1, p).
struct ModMonomial {
    std::vector<std::uint16_t> exps;
    std::uint32_t coeff;
};

enum class WittOpKind { Add, Mul, Neg };

// The universal polynomials S_0..S_{n-1} for one ring operation on length-n
// p-typical Witt vectors, together with their mod-p reductions. The defining
// ghost identity w_k(S_0..S_k) = w_k(X) o w_k(Y) is asserted exactly over Z
// during generation.
struct WittPolySet {
    std::uint32_t p;
    std::uint32_t n;
    WittOpKind kind;
    std::vector<MPolyZ> polys;
    std::vector<std::vector<ModMonomial>> polys_mod_p;
};

// Cached, deterministic; throws CapExceeded outside the configured bounds.
std::shared_ptr<const WittPolySet> gen_witt_polys(std::uint32_t p, std::uint32_t n,
                                                  WittOpKind kind);

// Ghost components w_k(z) = sum_{i<=k} p^i z_i^{p^{k-i}} of an integer lift.
std::vector<BigInt> ghost_of(const std::vector<BigInt>& z, std::uint32_t p);

}  // namespace wittstack

#endif
