#ifndef WITTSTACK_JSONIO_HPP
#define WITTSTACK_JSONIO_HPP

#include <json.hpp>

#include <string>

#include "wittstack/cover.hpp"
#include "wittstack/stacky.hpp"

namespace wittstack {

using Json = nlohmann::json;

// Curve-spec schema:
// {
//   "p": int, "coarse_genus": int,
//   "points": [ { "label": str,
//                 "place": {"finite": int} | "infinity",
//                 "filtration": {"orders": [int...], "r": int}
//                            | {"upper_jumps": [int...], "r": int}
//                            | {"tame": int} } ],
//   "log_points": [str...]
// }
StackyCurveData curve_from_json(const Json& j);
StackyCurveData curve_from_file(const std::string& path);

Json place_to_json(const Place& pl);
Json qdivisor_to_json(const QDivisor& d);
Json coarse_divisor_to_json(const CoarseDivisor& d);
Json quotient_report_to_json(const QuotientReport& rep);
Json cover_analysis_to_json(const CoverAnalysis& a);

}  // namespace wittstack

#endif
