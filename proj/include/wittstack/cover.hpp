#ifndef WITTSTACK_COVER_HPP
#define WITTSTACK_COVER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wittstack/asw.hpp"
#include "wittstack/stacky.hpp"

namespace wittstack {

// A global Z/p^n Z-cover of P^1 presented by a Witt vector of rational
// functions.
struct CoverSpec {
    std::uint32_t p = 2;
    std::uint32_t n = 1;
    std::vector<RatFunc> components;
    std::optional<long long> precision_hint;

    void validate() const;
};

struct BranchPointData {
    Place place;
    std::vector<long long> upper_jumps;
    long long stab_order = 1;
    Filtration filtration;
    std::vector<std::string> reduction_steps;
};

struct CoverAnalysis {
    std::vector<BranchPointData> branch;
    StackyCurveData curve;
    std::vector<std::string> notes;
};

// Poles of the components over F_p-rational places and infinity, sorted
// (finite by representative, infinity last). A denominator factor of degree
// > 1 raises IrrationalBranchPoint.
std::vector<Place> branch_places(const CoverSpec& spec);

CoverAnalysis analyze_cover(const CoverSpec& spec);

struct QuotientReport {
    CoverAnalysis analysis;
    QDivisor canonical;
    BigRat degree;
    BigRat genus_value;
    std::vector<long long> hilbert;
    std::vector<std::string> notes;
};

QuotientReport quotient_report(const CoverSpec& spec, long long hilbert_degree = 10);

}  // namespace wittstack

#endif
