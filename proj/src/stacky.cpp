#include "wittstack/stacky.hpp"

#include <algorithm>
#include <set>

#include "wittstack/errors.hpp"
#include "wittstack/fp.hpp"

namespace wittstack {

void StackyCurveData::validate() const {
    if (p != 0) require_prime(p);
    if (coarse_genus < 0) throw DomainError("coarse genus must be >= 0");
    std::set<std::string> labels;
    std::set<std::pair<bool, long long>> places;
    for (const auto& pt : points) {
        if (pt.label.empty()) throw DomainError("stacky point needs a label");
        if (!labels.insert(pt.label).second)
            throw DomainError("duplicate stacky point label: " + pt.label);
        long long coord = pt.place.infinite ? 0 : pt.place.a;
        if (!pt.place.infinite && p != 0) coord = ((coord % p) + p) % p;
        if (!places.insert({pt.place.infinite, coord}).second)
            throw DomainError("two stacky points share the place " + pt.place.str());
        if (pt.stab_order < 1) throw DomainError("stabilizer order must be >= 1");
        if (pt.filtration.order0() != pt.stab_order)
            throw DomainError("filtration |G_0| disagrees with the stabilizer order at " +
                              pt.label);
        if (pt.filtration.p() != p)
            throw MismatchedRing("filtration characteristic disagrees with the curve at " +
                                 pt.label);
        if (p == 0 && pt.filtration.orders().size() > 1)
            throw DomainError("wild filtration in characteristic zero at " + pt.label);
    }
    for (const auto& l : log_points)
        if (!labels.count(l)) throw DomainError("log point " + l + " is not a point label");
}

const StackyPoint* StackyCurveData::find(const std::string& label) const {
    for (const auto& pt : points)
        if (pt.label == label) return &pt;
    return nullptr;
}

bool StackyCurveData::is_log_point(const std::string& label) const {
    return std::find(log_points.begin(), log_points.end(), label) != log_points.end();
}

QDivisor QDivisor::operator+(const QDivisor& o) const {
    QDivisor r = *this;
    r.coarse += o.coarse;
    for (const auto& [l, c] : o.entries) {
        auto it = r.entries.find(l);
        if (it == r.entries.end())
            r.entries.emplace(l, c);
        else {
            it->second += c;
            if (it->second == 0) r.entries.erase(it);
        }
    }
    return r;
}

QDivisor QDivisor::scaled(const BigRat& c) const {
    QDivisor r;
    if (c == 0) return r;
    r.coarse = coarse * c;
    for (const auto& [l, a] : entries)
        if (a * c != 0) r.entries.emplace(l, a * c);
    return r;
}

BigRat QDivisor::coeff(const std::string& label) const {
    auto it = entries.find(label);
    return it == entries.end() ? BigRat(0) : it->second;
}

std::string QDivisor::str() const {
    std::string s = rat_str(coarse) + "·H";
    for (const auto& [l, c] : entries) s += " + " + rat_str(c) + "·" + l;
    return s;
}

BigInt CoarseDivisor::degree() const {
    BigInt d = coarse;
    for (const auto& [l, c] : entries) d += c;
    return d;
}

std::string CoarseDivisor::str() const {
    std::string s = coarse.str() + "·H";
    for (const auto& [l, c] : entries) s += " + " + c.str() + "·" + l;
    return s;
}

QDivisor canonical_divisor(const StackyCurveData& c) {
    c.validate();
    QDivisor k;
    k.coarse = BigRat(2 * c.coarse_genus - 2);
    for (const auto& pt : c.points) {
        BigInt ram = pt.filtration.ramification_sum();
        if (ram != 0) k.entries.emplace(pt.label, BigRat(ram));
    }
    return k;
}

QDivisor log_delta(const StackyCurveData& c) {
    QDivisor d;
    for (const auto& l : c.log_points) d.entries.emplace(l, BigRat(1));
    return d;
}

BigRat divisor_degree(const StackyCurveData& c, const QDivisor& d) {
    BigRat deg = d.coarse;
    for (const auto& [label, coeff] : d.entries) {
        const StackyPoint* pt = c.find(label);
        if (!pt) throw DomainError("divisor entry at unknown label " + label);
        deg += coeff / BigRat(pt->stab_order);
    }
    return deg;
}

BigRat genus(const StackyCurveData& c) {
    return (divisor_degree(c, canonical_divisor(c)) + 2) / 2;
}

CoarseDivisor floor_divisor(const StackyCurveData& c, const QDivisor& d, long long n) {
    CoarseDivisor out;
    out.coarse = floor_rat(d.coarse * n);
    for (const auto& [label, coeff] : d.entries) {
        const StackyPoint* pt = c.find(label);
        if (!pt) throw DomainError("divisor entry at unknown label " + label);
        BigInt f = floor_rat(coeff * n / BigRat(pt->stab_order));
        if (f != 0) out.entries.emplace(label, f);
    }
    return out;
}

namespace {

// h^0 of a coarse divisor decided by its degree: exact on P^1, and on higher
// genus only outside the degree window where the divisor class matters.
long long coarse_h0_by_degree(long long g0, const BigInt& deg) {
    if (deg < 0) return 0;
    if (g0 == 0) return (deg + 1).convert_to<long long>();
    if (deg > 2 * g0 - 2) return (deg + 1 - g0).convert_to<long long>();
    throw UnsupportedBase("h^0 on a genus-" + std::to_string(g0) +
                          " coarse space needs more than degree data");
}

}  // namespace

long long h0(const StackyCurveData& c, long long n, bool log_divisor) {
    QDivisor k = canonical_divisor(c);
    QDivisor kp = log_divisor ? k + log_delta(c) : k;
    if (n == 0) return 1;
    if (n < 0) return coarse_h0_by_degree(c.coarse_genus, floor_divisor(c, kp, n).degree());

    BigInt d = floor_divisor(c, kp, n).degree();
    if (c.coarse_genus > 0) return coarse_h0_by_degree(c.coarse_genus, d);
    // Serre-duality correction h^0(K - nK'), evaluated on its floor.
    QDivisor corr = k + kp.scaled(BigRat(-n));
    long long corr_h0 = 0;
    BigInt dc = floor_divisor(c, corr, 1).degree();
    if (dc >= 0) corr_h0 = (dc + 1).convert_to<long long>();
    return (d + 1).convert_to<long long>() + corr_h0;
}

std::vector<long long> hilbert_table(const StackyCurveData& c, long long N, bool log_divisor) {
    if (N < 0) throw DomainError("hilbert_table needs N >= 0");
    std::vector<long long> t;
    t.reserve(static_cast<std::size_t>(N) + 1);
    for (long long n = 0; n <= N; ++n) t.push_back(h0(c, n, log_divisor));
    return t;
}

namespace {

// ---- concrete section spaces over F_p or Q ----

inline BigRat inv_of(const BigRat& x) { return BigRat(1) / x; }
inline Fp inv_of(const Fp& x) { return x.inv(); }
inline bool is_zero_of(const BigRat& x) { return x == 0; }
inline bool is_zero_of(const Fp& x) { return x.is_zero(); }

template <class K>
using DPoly = std::vector<K>;  // dense, lowest degree first, no trailing zeros

template <class K>
void trim(DPoly<K>& f) {
    while (!f.empty() && is_zero_of(f.back())) f.pop_back();
}

template <class K>
DPoly<K> pmul(const DPoly<K>& a, const DPoly<K>& b, const K& zero) {
    if (a.empty() || b.empty()) return {};
    DPoly<K> r(a.size() + b.size() - 1, zero);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    trim(r);
    return r;
}

// One place's data for the section-space model.
struct PlaceExp {
    bool infinite;
    long long coord;
    BigRat weight;  // c / e, the per-degree rational coefficient
};

template <class K, class MakeScalar>
class CanringWorker {
public:
    CanringWorker(const StackyCurveData& c, bool log_divisor, MakeScalar make, K zero, K one)
        : make_(make), zero_(zero), one_(one) {
        QDivisor kp = canonical_divisor(c);
        if (log_divisor) kp = kp + log_delta(c);
        coarse_per_degree_ = 2 * c.coarse_genus - 2;
        for (const auto& pt : c.points) {
            BigRat coeff = kp.coeff(pt.label);
            if (coeff == 0) continue;
            long long coord = pt.place.infinite ? 0 : pt.place.a;
            places_.push_back(PlaceExp{pt.place.infinite, coord,
                                       coeff / BigRat(pt.stab_order)});
        }
    }

    long long exp_at(const PlaceExp& pl, long long n) const {
        return floor_rat(pl.weight * n).convert_to<long long>();
    }

    // deg bound for numerators of L_n = { u(x) / v_n(x) }: deg v_n plus the
    // pole budget at infinity. dim L_n = dn + 1 when nonnegative.
    long long numerator_degree_bound(long long n) {
        long long deg_v = 0, c_inf = coarse_per_degree_ * n;
        for (const auto& pl : places_) {
            long long e = exp_at(pl, n);
            if (pl.infinite) {
                c_inf += e;
                continue;
            }
            if (e < 0)
                throw UnsupportedBase(
                    "section space with a forced zero at a finite place is out of scope");
            deg_v += e;
        }
        return deg_v + c_inf;
    }

    // v_n / (v_a v_b) as a polynomial; floors are superadditive so every
    // exponent difference is >= 0.
    DPoly<K> bridge(long long n, long long a, long long b) {
        DPoly<K> w{one_};
        for (const auto& pl : places_) {
            if (pl.infinite) continue;
            long long e = exp_at(pl, n) - exp_at(pl, a) - exp_at(pl, b);
            DPoly<K> lin{make_(-pl.coord), one_};
            for (long long t = 0; t < e; ++t) w = pmul(w, lin, zero_);
        }
        return w;
    }

    // Row-reduce rows into the running echelon basis; returns the rank gain.
    long long absorb(std::vector<DPoly<K>>& echelon, DPoly<K> row) {
        trim(row);
        for (const auto& piv : echelon) {
            if (row.size() < piv.size()) continue;
            if (row.size() == piv.size()) {
                K factor = row.back() * inv_of(piv.back());
                for (std::size_t i = 0; i < piv.size(); ++i)
                    row[row.size() - piv.size() + i] =
                        row[row.size() - piv.size() + i] - factor * piv[i];
                trim(row);
            }
        }
        if (row.empty()) return 0;
        echelon.push_back(std::move(row));
        std::sort(echelon.begin(), echelon.end(),
                  [](const DPoly<K>& x, const DPoly<K>& y) { return x.size() > y.size(); });
        return 1;
    }

    std::map<long long, long long> run(long long N) {
        std::map<long long, long long> gens;
        std::vector<long long> dims(static_cast<std::size_t>(N) + 1, 0);
        for (long long n = 1; n <= N; ++n) {
            long long dim = numerator_degree_bound(n) + 1;
            if (dim <= 0) continue;
            dims[static_cast<std::size_t>(n)] = dim;

            std::vector<DPoly<K>> echelon;
            long long rank = 0;
            for (long long a = 1; a <= n - 1 && rank < dim; ++a) {
                long long b = n - a;
                if (a > b) break;
                if (dims[static_cast<std::size_t>(a)] <= 0 ||
                    dims[static_cast<std::size_t>(b)] <= 0)
                    continue;
                // span{ x^s w : s = 0..da+db } covers all pairwise products.
                DPoly<K> row = bridge(n, a, b);
                long long da = dims[static_cast<std::size_t>(a)] - 1;
                long long db = dims[static_cast<std::size_t>(b)] - 1;
                for (long long s = 0; s <= da + db && rank < dim; ++s) {
                    if (s > 0) row = pmul(row, DPoly<K>{zero_, one_}, zero_);
                    rank += absorb(echelon, row);
                }
            }
            if (dim > rank) gens[n] = dim - rank;
        }
        return gens;
    }

    std::vector<long long> dims_only(long long N) {
        std::vector<long long> out;
        out.reserve(static_cast<std::size_t>(N) + 1);
        out.push_back(1);
        for (long long n = 1; n <= N; ++n)
            out.push_back(std::max(numerator_degree_bound(n) + 1, 0LL));
        return out;
    }

private:
    MakeScalar make_;
    K zero_, one_;
    long long coarse_per_degree_ = -2;
    std::vector<PlaceExp> places_;
};

void require_p1(const StackyCurveData& c, long long N) {
    c.validate();
    if (c.coarse_genus != 0)
        throw UnsupportedBase("canonical-ring computations need coarse space P^1");
    if (N < 1) throw DomainError("canonical-ring degree bound must be >= 1");
}

}  // namespace

std::map<long long, long long> canring_generators(const StackyCurveData& c, long long N,
                                                  bool log_divisor) {
    require_p1(c, N);
    if (c.p == 0) {
        auto make = [](long long v) { return BigRat(v); };
        CanringWorker<BigRat, decltype(make)> w(c, log_divisor, make, BigRat(0), BigRat(1));
        return w.run(N);
    }
    std::uint32_t p = c.p;
    auto make = [p](long long v) { return Fp(v, p); };
    CanringWorker<Fp, decltype(make)> w(c, log_divisor, make, fp_zero(p), fp_one(p));
    return w.run(N);
}

std::vector<long long> section_dims(const StackyCurveData& c, long long N, bool log_divisor) {
    require_p1(c, N);
    if (c.p == 0) {
        auto make = [](long long v) { return BigRat(v); };
        CanringWorker<BigRat, decltype(make)> w(c, log_divisor, make, BigRat(0), BigRat(1));
        return w.dims_only(N);
    }
    std::uint32_t p = c.p;
    auto make = [p](long long v) { return Fp(v, p); };
    CanringWorker<Fp, decltype(make)> w(c, log_divisor, make, fp_zero(p), fp_one(p));
    return w.dims_only(N);
}

}  // namespace wittstack
