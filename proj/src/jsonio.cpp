#include "wittstack/jsonio.hpp"

#include <fstream>

#include "wittstack/errors.hpp"

namespace wittstack {

namespace {

Place place_from_json(const Json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "infinity" || j.get<std::string>() == "inf")
            return Place::infinity();
        throw ParseError("place string must be \"infinity\"");
    }
    if (j.is_object() && j.contains("finite") && j["finite"].is_number_integer())
        return Place::finite(j["finite"].get<long long>());
    throw ParseError("place must be {\"finite\": int} or \"infinity\"");
}

Filtration filtration_from_json(const Json& j, std::uint32_t p) {
    if (!j.is_object()) throw ParseError("filtration must be an object");
    if (j.contains("tame")) return Filtration::tame(p, j["tame"].get<long long>());
    if (j.contains("orders")) {
        if (!j.contains("r")) throw ParseError("filtration with orders needs r");
        return Filtration(p, j["r"].get<long long>(),
                          j["orders"].get<std::vector<long long>>());
    }
    if (j.contains("upper_jumps")) {
        if (!j.contains("r")) throw ParseError("filtration with upper_jumps needs r");
        if (p == 0)
            throw ParseError("upper_jumps input needs positive characteristic");
        std::vector<BigRat> u;
        for (const auto& e : j["upper_jumps"]) {
            if (e.is_number_integer())
                u.emplace_back(e.get<long long>());
            else if (e.is_string())
                u.push_back(parse_rat(e.get<std::string>()));
            else
                throw ParseError("upper jump entries must be integers or \"num/den\"");
        }
        return filtration_from_upper(u, j["r"].get<long long>(), p);
    }
    throw ParseError("filtration needs orders, upper_jumps, or tame");
}

}  // namespace

StackyCurveData curve_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("curve spec must be a JSON object");
    StackyCurveData c;
    c.p = j.value("p", 0);
    c.coarse_genus = j.value("coarse_genus", 0LL);
    if (j.contains("points")) {
        for (const auto& pj : j["points"]) {
            StackyPoint pt{pj.value("label", std::string{}), place_from_json(pj.at("place")), 1,
                           filtration_from_json(pj.at("filtration"), c.p)};
            pt.stab_order = pt.filtration.order0();
            c.points.push_back(std::move(pt));
        }
    }
    if (j.contains("log_points"))
        c.log_points = j["log_points"].get<std::vector<std::string>>();
    c.validate();
    return c;
}

StackyCurveData curve_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open curve spec " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError("bad JSON in " + path + ": " + e.what());
    }
    return curve_from_json(j);
}

Json place_to_json(const Place& pl) {
    if (pl.infinite) return Json("infinity");
    return Json{{"finite", pl.a}};
}

Json qdivisor_to_json(const QDivisor& d) {
    Json points = Json::object();
    for (const auto& [l, c] : d.entries) points[l] = rat_str(c);
    return Json{{"coarse", rat_str(d.coarse)}, {"points", points}};
}

Json coarse_divisor_to_json(const CoarseDivisor& d) {
    Json points = Json::object();
    for (const auto& [l, c] : d.entries) points[l] = c.str();
    return Json{{"coarse", d.coarse.str()}, {"points", points}};
}

Json cover_analysis_to_json(const CoverAnalysis& a) {
    Json branches = Json::array();
    for (const auto& b : a.branch) {
        Json orders = Json::array();
        for (long long o : b.filtration.orders()) orders.push_back(o);
        branches.push_back(Json{{"place", place_to_json(b.place)},
                                {"upper_jumps", b.upper_jumps},
                                {"stab_order", b.stab_order},
                                {"filtration_orders", orders}});
    }
    return Json{{"branch_points", branches}, {"notes", a.notes}};
}

Json quotient_report_to_json(const QuotientReport& rep) {
    return Json{{"analysis", cover_analysis_to_json(rep.analysis)},
                {"K", qdivisor_to_json(rep.canonical)},
                {"deg_K", rat_str(rep.degree)},
                {"genus", rat_str(rep.genus_value)},
                {"hilbert", rep.hilbert},
                {"notes", rep.notes}};
}

}  // namespace wittstack
