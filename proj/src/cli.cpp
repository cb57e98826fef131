#include "wittstack/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>

#include "wittstack/asw.hpp"
#include "wittstack/cover.hpp"
#include "wittstack/errors.hpp"
#include "wittstack/garuti.hpp"
#include "wittstack/jsonio.hpp"
#include "wittstack/parse.hpp"
#include "wittstack/ramfilt.hpp"
#include "wittstack/selftest.hpp"
#include "wittstack/witt.hpp"

namespace wittstack {

namespace {

struct Options {
    std::uint32_t max_p = 7;
    std::uint32_t max_n = 4;
    long long default_precision = 64;
};

bool uses_t(const std::string& s) { return s.find('t') != std::string::npos; }

std::vector<LaurentSeries> expand_components(const std::string& text, std::uint32_t p,
                                             std::uint32_t n, long long precision) {
    std::vector<RatFunc> fs = parse_components(text, p, 't');
    if (fs.size() != n)
        throw UsageError("expected " + std::to_string(n) + " components, got " +
                         std::to_string(fs.size()));
    long long max_pole = 1;
    for (const auto& f : fs) {
        auto v = valuation(f, Place::finite(0));
        if (v && *v < 0) max_pole = std::max(max_pole, -*v);
    }
    long long prec = precision > 0 ? precision
                                   : static_cast<long long>(n) * p * max_pole + 8;
    std::vector<LaurentSeries> out;
    out.reserve(n);
    for (const auto& f : fs) out.push_back(laurent_expand(f, Place::finite(0), prec));
    return out;
}

void emit_kv_table(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
    std::size_t w = 0;
    for (const auto& [k, v] : rows) w = std::max(w, k.size());
    for (const auto& [k, v] : rows)
        out << k << std::string(w - k.size() + 2, ' ') << v << "\n";
}

template <class T>
std::string join(const std::vector<T>& v, const std::string& sep,
                 std::string (*fmt)(const T&)) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += fmt(v[i]);
    }
    return s;
}

std::string fmt_ll(const long long& v) { return std::to_string(v); }
std::string fmt_rat(const BigRat& v) { return rat_str(v); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"wittstack: wild ramification invariants and stacky Riemann-Hurwitz"};
    app.require_subcommand(0, 1);

    Options opts;
    app.add_option("--max-p", opts.max_p, "cap on the prime p for Witt arithmetic");
    app.add_option("--max-n", opts.max_n, "cap on the Witt length n");
    if (const char* e = std::getenv("WITTSTACK_MAX_P")) opts.max_p = std::stoul(e);
    if (const char* e = std::getenv("WITTSTACK_MAX_N")) opts.max_n = std::stoul(e);
    // Flags beat the environment, which beats the defaults; caps must be in
    // place before any callback touches the Witt layer.
    auto apply_caps = [&] {
        witt_caps().max_p = opts.max_p;
        witt_caps().max_n = opts.max_n;
    };

    // ---- witt ----
    auto* witt = app.add_subcommand("witt", "Witt vector arithmetic");
    auto* witt_eval = witt->add_subcommand("eval", "evaluate one ring operation");
    struct {
        std::uint32_t p = 2, n = 1;
        std::string op, lhs, rhs, format = "table";
        long long precision = 0;
    } we;
    witt_eval->add_option("--p", we.p, "prime")->required();
    witt_eval->add_option("--n", we.n, "Witt length")->required();
    witt_eval->add_option("--op", we.op, "add|mul|neg|frob|versch|wp")
        ->required()
        ->check(CLI::IsMember({"add", "mul", "neg", "frob", "versch", "wp"}));
    witt_eval->add_option("--lhs", we.lhs, "left operand, comma-separated components")
        ->required();
    witt_eval->add_option("--rhs", we.rhs, "right operand (add/mul)");
    witt_eval->add_option("--precision", we.precision, "series precision for t-literals");
    witt_eval->add_option("--format", we.format)->check(CLI::IsMember({"table", "json"}));
    witt_eval->callback([&] {
        apply_caps();
        bool binary = we.op == "add" || we.op == "mul";
        if (binary && we.rhs.empty()) throw UsageError("--rhs required for " + we.op);
        std::vector<std::string> comps;
        if (uses_t(we.lhs) || uses_t(we.rhs)) {
            long long prec = we.precision > 0 ? we.precision : opts.default_precision;
            auto lhs = WittVector<LaurentSeries>(we.p, expand_components(we.lhs, we.p, we.n, prec));
            WittVector<LaurentSeries> res = lhs;
            if (binary) {
                auto rhs =
                    WittVector<LaurentSeries>(we.p, expand_components(we.rhs, we.p, we.n, prec));
                res = we.op == "add" ? witt_add(lhs, rhs) : witt_mul(lhs, rhs);
            } else if (we.op == "neg") {
                res = witt_neg(lhs);
            } else if (we.op == "frob") {
                res = frobenius(lhs);
            } else if (we.op == "versch") {
                res = verschiebung(lhs);
            } else {
                res = wp(lhs);
            }
            for (const auto& c : res.comp) comps.push_back(c.str());
        } else {
            auto lhs = witt_fp(we.p, parse_int_list(we.lhs));
            if (lhs.n() != we.n) throw UsageError("component count disagrees with --n");
            WittVector<Fp> res = lhs;
            if (binary) {
                auto rhs = witt_fp(we.p, parse_int_list(we.rhs));
                res = we.op == "add" ? witt_add(lhs, rhs) : witt_mul(lhs, rhs);
            } else if (we.op == "neg") {
                res = witt_neg(lhs);
            } else if (we.op == "frob") {
                res = frobenius(lhs);
            } else if (we.op == "versch") {
                res = verschiebung(lhs);
            } else {
                res = wp(lhs);
            }
            for (const auto& c : res.comp) comps.push_back(c.str());
        }
        if (we.format == "json") {
            out << Json{{"components", comps}}.dump(2) << "\n";
        } else {
            std::string s;
            for (std::size_t i = 0; i < comps.size(); ++i) s += (i ? ", " : "") + comps[i];
            out << "(" << s << ")\n";
        }
    });

    // ---- asw ----
    auto* asw = app.add_subcommand("asw", "Artin-Schreier-Witt local analysis");
    struct {
        std::uint32_t p = 2, n = 1;
        std::string components, format = "table";
        long long precision = 0;
    } aswo;
    auto add_asw_flags = [&](CLI::App* sub) {
        sub->add_option("--p", aswo.p, "prime")->required();
        sub->add_option("--n", aswo.n, "Witt length")->required();
        sub->add_option("--components", aswo.components, "Witt components over F_p((t))")
            ->required();
        sub->add_option("--precision", aswo.precision, "series precision");
        sub->add_option("--format", aswo.format)->check(CLI::IsMember({"table", "json"}));
    };
    auto* asw_jumps = asw->add_subcommand("jumps", "upper ramification jumps");
    add_asw_flags(asw_jumps);
    auto* asw_reduce_cmd = asw->add_subcommand("reduce", "reduce mod wp(W_n)");
    add_asw_flags(asw_reduce_cmd);
    auto run_asw = [&](bool full_reduction_output) {
        LocalWitt x(WittVector<LaurentSeries>(
            aswo.p, expand_components(aswo.components, aswo.p, aswo.n, aswo.precision)));
        ReducedForm red = asw_reduce(x);
        std::vector<long long> jumps = upper_jumps(red);
        std::vector<std::string> reduced;
        for (const auto& c : red.witt.w.comp) reduced.push_back(c.str());
        if (aswo.format == "json") {
            Json j{{"upper_jumps", jumps}};
            if (full_reduction_output) {
                j["reduced_components"] = reduced;
                j["pole_orders"] = red.pole_orders;
            }
            out << j.dump(2) << "\n";
        } else {
            std::vector<std::pair<std::string, std::string>> rows;
            if (full_reduction_output) {
                for (std::size_t i = 0; i < reduced.size(); ++i)
                    rows.push_back({"component " + std::to_string(i + 1), reduced[i]});
                rows.push_back({"pole_orders", join(red.pole_orders, ", ", fmt_ll)});
            }
            rows.push_back({"upper_jumps", join(jumps, ", ", fmt_ll)});
            emit_kv_table(out, rows);
        }
    };
    asw_jumps->callback([&] {
        apply_caps(); run_asw(false); });
    asw_reduce_cmd->callback([&] {
        apply_caps(); run_asw(true); });

    auto* asw_adm = asw->add_subcommand("admissible", "check an upper-jump sequence");
    struct {
        std::uint32_t p = 2;
        std::string jumps, format = "table";
    } admo;
    asw_adm->add_option("--p", admo.p, "prime")->required();
    asw_adm->add_option("--jumps", admo.jumps, "comma-separated jumps")->required();
    asw_adm->add_option("--format", admo.format)->check(CLI::IsMember({"table", "json"}));
    asw_adm->callback([&] {
        apply_caps();
        require_prime(admo.p);
        bool ok = is_admissible(parse_int_list(admo.jumps), admo.p);
        if (admo.format == "json")
            out << Json{{"admissible", ok}}.dump(2) << "\n";
        else
            out << (ok ? "admissible" : "not admissible") << "\n";
    });

    // ---- ram ----
    auto* ram = app.add_subcommand("ram", "ramification filtrations and Herbrand translation");
    auto* ram_convert = ram->add_subcommand("convert", "translate jumps between numberings");
    struct {
        std::string direction, jumps, format = "table";
        long long r = 1;
        std::uint32_t p = 2;
    } rco;
    ram_convert->add_option("--direction", rco.direction, "up|down")
        ->required()
        ->check(CLI::IsMember({"up", "down"}));
    ram_convert->add_option("--jumps", rco.jumps, "comma-separated jumps (num/den allowed)")
        ->required();
    ram_convert->add_option("--r", rco.r, "tame order");
    ram_convert->add_option("--p", rco.p, "prime")->required();
    ram_convert->add_option("--format", rco.format)->check(CLI::IsMember({"table", "json"}));
    ram_convert->callback([&] {
        apply_caps();
        std::vector<BigRat> in;
        for (const auto& s : split_components(rco.jumps)) in.push_back(parse_rat(s));
        std::vector<BigRat> res = rco.direction == "up" ? lower_to_upper(in, rco.r, rco.p)
                                                        : upper_to_lower(in, rco.r, rco.p);
        std::vector<std::string> strs;
        for (const auto& v : res) strs.push_back(rat_str(v));
        if (rco.format == "json")
            out << Json{{"jumps", strs}}.dump(2) << "\n";
        else
            out << join(res, ", ", fmt_rat) << "\n";
    });

    auto* ram_phi = ram->add_subcommand("phi", "Herbrand function of a filtration");
    struct {
        std::string orders, format = "table";
        long long r = 1;
        std::uint32_t p = 2;
    } rpo;
    ram_phi->add_option("--orders", rpo.orders, "group orders |G_0|,|G_1|,...")->required();
    ram_phi->add_option("--r", rpo.r, "tame order");
    ram_phi->add_option("--p", rpo.p, "prime")->required();
    ram_phi->add_option("--format", rpo.format)->check(CLI::IsMember({"table", "json"}));
    ram_phi->callback([&] {
        apply_caps();
        Filtration f(rpo.p, rpo.r, parse_int_list(rpo.orders));
        PLFunction phi = phi_from_filtration(f);
        std::vector<std::string> bps, slopes;
        for (const auto& x : phi.breakpoints()) bps.push_back(rat_str(x));
        for (const auto& s : phi.slopes()) slopes.push_back(rat_str(s));
        if (rpo.format == "json") {
            out << Json{{"breakpoints", bps}, {"slopes", slopes},
                        {"lower_jumps", f.lower_jumps()}}
                       .dump(2)
                << "\n";
        } else {
            emit_kv_table(out, {{"breakpoints", join(phi.breakpoints(), ", ", fmt_rat)},
                                {"slopes", join(phi.slopes(), ", ", fmt_rat)},
                                {"lower_jumps", join(f.lower_jumps(), ", ", fmt_ll)}});
        }
    });

    // ---- garuti ----
    auto* garuti = app.add_subcommand("garuti", "boundary divisors on the compactified tower");
    auto* gb = garuti->add_subcommand("boundary", "B_n in the Sigma basis");
    struct {
        std::uint32_t n = 1, p = 2;
        bool closed = false, psi = false;
        std::string format = "table";
    } gbo;
    gb->add_option("--n", gbo.n, "tower level")->required();
    gb->add_option("--p", gbo.p, "prime")->required();
    gb->add_flag("--closed-form", gbo.closed, "use the closed form instead of the recursion");
    gb->add_flag("--psi", gbo.psi, "apply the Psi pullback");
    gb->add_option("--format", gbo.format)->check(CLI::IsMember({"table", "json"}));
    gb->callback([&] {
        apply_caps();
        TowerDivisor d = gbo.closed ? boundary_closed_form(gbo.n, gbo.p) : boundary(gbo.n, gbo.p);
        if (gbo.psi) d = pull_psi(d, gbo.p);
        if (gbo.format == "json") {
            Json coeffs = Json::object();
            for (const auto& [i, c] : d.coeffs) coeffs["Sigma_" + std::to_string(i)] = c.str();
            out << Json{{"level", d.level}, {"coeffs", coeffs}}.dump(2) << "\n";
        } else {
            out << d.str() << "\n";
        }
    });

    // ---- stacky ----
    auto* stacky = app.add_subcommand("stacky", "stacky curve computations from a JSON spec");
    struct {
        std::string file, format = "table";
        long long max_degree = 10;
        bool log = false;
    } sto;
    auto add_stacky_flags = [&](CLI::App* sub, bool with_degree) {
        sub->add_option("spec", sto.file, "curve spec JSON file")->required();
        if (with_degree) sub->add_option("--max-degree", sto.max_degree, "largest degree");
        sub->add_flag("--log", sto.log, "use K + Delta");
        sub->add_option("--format", sto.format)->check(CLI::IsMember({"table", "json"}));
    };
    auto* st_canonical = stacky->add_subcommand("canonical", "canonical divisor");
    add_stacky_flags(st_canonical, false);
    st_canonical->callback([&] {
        apply_caps();
        StackyCurveData c = curve_from_file(sto.file);
        QDivisor k = canonical_divisor(c);
        if (sto.log) k = k + log_delta(c);
        if (sto.format == "json")
            out << Json{{"divisor", qdivisor_to_json(k)},
                        {"degree", rat_str(divisor_degree(c, k))}}
                       .dump(2)
                << "\n";
        else
            emit_kv_table(out, {{"divisor", k.str()},
                                {"degree", rat_str(divisor_degree(c, k))}});
    });
    auto* st_genus = stacky->add_subcommand("genus", "stacky genus");
    add_stacky_flags(st_genus, false);
    st_genus->callback([&] {
        apply_caps();
        StackyCurveData c = curve_from_file(sto.file);
        if (sto.format == "json")
            out << Json{{"genus", rat_str(genus(c))}}.dump(2) << "\n";
        else
            out << rat_str(genus(c)) << "\n";
    });
    auto* st_hilbert = stacky->add_subcommand("hilbert", "graded dimensions h^0(nK)");
    add_stacky_flags(st_hilbert, true);
    st_hilbert->callback([&] {
        apply_caps();
        StackyCurveData c = curve_from_file(sto.file);
        auto t = hilbert_table(c, sto.max_degree, sto.log);
        if (sto.format == "json")
            out << Json{{"hilbert", t}}.dump(2) << "\n";
        else
            out << join(t, ", ", fmt_ll) << "\n";
    });
    auto* st_gens = stacky->add_subcommand("generators", "minimal generator degrees");
    add_stacky_flags(st_gens, true);
    st_gens->callback([&] {
        apply_caps();
        StackyCurveData c = curve_from_file(sto.file);
        auto gens = canring_generators(c, sto.max_degree, sto.log);
        if (sto.format == "json") {
            Json j = Json::object();
            for (const auto& [d, k] : gens) j[std::to_string(d)] = k;
            out << Json{{"generators", j},
                        {"section_dims", section_dims(c, sto.max_degree, sto.log)}}
                       .dump(2)
                << "\n";
        } else if (gens.empty()) {
            out << "no generators in degrees 1.." << sto.max_degree << "\n";
        } else {
            for (const auto& [d, k] : gens)
                out << "degree " << d << ": " << k << "\n";
        }
    });

    // ---- cover ----
    auto* cover = app.add_subcommand("cover", "global covers of P^1");
    struct {
        std::uint32_t p = 2, n = 1;
        std::string components, format = "table";
        long long precision = 0, max_degree = 10;
    } cvo;
    auto add_cover_flags = [&](CLI::App* sub) {
        sub->add_option("--p", cvo.p, "prime")->required();
        sub->add_option("--n", cvo.n, "Witt length")->required();
        sub->add_option("--components", cvo.components, "rational functions in x")->required();
        sub->add_option("--precision", cvo.precision, "series precision hint");
        sub->add_option("--format", cvo.format)->check(CLI::IsMember({"table", "json"}));
    };
    auto make_spec = [&] {
        CoverSpec spec;
        spec.p = cvo.p;
        spec.n = cvo.n;
        spec.components = parse_components(cvo.components, cvo.p, 'x');
        if (cvo.precision > 0) spec.precision_hint = cvo.precision;
        spec.validate();
        return spec;
    };
    auto* cv_analyze = cover->add_subcommand("analyze", "branch points, jumps, filtrations");
    add_cover_flags(cv_analyze);
    cv_analyze->callback([&] {
        apply_caps();
        CoverAnalysis a = analyze_cover(make_spec());
        if (cvo.format == "json") {
            out << cover_analysis_to_json(a).dump(2) << "\n";
        } else {
            for (const auto& b : a.branch)
                emit_kv_table(out, {{"place", "x=" + b.place.str()},
                                    {"upper_jumps", join(b.upper_jumps, ", ", fmt_ll)},
                                    {"stab_order", std::to_string(b.stab_order)}});
            for (const auto& nline : a.notes) out << "note: " << nline << "\n";
        }
    });
    auto* cv_report = cover->add_subcommand("report", "canonical divisor, genus, Hilbert table");
    add_cover_flags(cv_report);
    cv_report->add_option("--max-degree", cvo.max_degree, "largest Hilbert degree");
    cv_report->callback([&] {
        apply_caps();
        QuotientReport rep = quotient_report(make_spec(), cvo.max_degree);
        if (cvo.format == "json") {
            out << quotient_report_to_json(rep).dump(2) << "\n";
        } else {
            emit_kv_table(out, {{"K", rep.canonical.str()},
                                {"deg K", rat_str(rep.degree)},
                                {"genus", rat_str(rep.genus_value)},
                                {"hilbert", join(rep.hilbert, ", ", fmt_ll)}});
            for (const auto& nline : rep.notes) out << "note: " << nline << "\n";
        }
    });

    // ---- selftest ----
    auto* st = app.add_subcommand("selftest", "run the acceptance checks");
    st->callback([&] {
        apply_caps();
        auto results = run_acceptance(out);
        bool all = true;
        for (const auto& r : results) all = all && r.pass;
        if (!all) throw DomainError("selftest reported failures");
    });

    // Caps are process-global; restore them so embedding callers (tests,
    // repeated invocations) see no leakage.
    struct CapsGuard {
        WittCaps saved = witt_caps();
        ~CapsGuard() { witt_caps() = saved; }
    } caps_guard;

    std::vector<const char*> argv;
    argv.push_back("wittstack");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (app.get_subcommands().empty()) {
            out << app.help();
            return 0;
        }
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace wittstack
