#include "cli.hpp"

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wallcross/wallcross.hpp"

namespace wallcross::cli {

namespace {

struct Options {
    std::string e = "inf";
    std::string s;
    std::string m;
    std::string m2;
    std::string kappa;
    std::string kappa2;
    std::string s2;
    std::string lp;
    std::string format = "json";
    std::string order = "m";
    int n = -1;
    int l = 0;
    bool trace = false;
};

Modulus parse_modulus(const std::string& text)
{
    if (text == "inf" || text == "infinity" || text == "oo")
        return Modulus::infinite();
    auto v = detail::parse_int(detail::trim(text));
    if (v < 2 || v > 1'000'000)
        throw ParseError("--e must be an integer >= 2 or 'inf', got '" + text + "'");
    return Modulus::finite(static_cast<int>(v));
}

Multicharge parse_charge(const std::string& text)
{
    if (text.empty())
        throw ParseError("--s is required");
    Multicharge out;
    for (const auto& x : parse_rational_list(text)) {
        if (!is_integer(x) || x.numerator() > 1'000'000 || x.numerator() < -1'000'000)
            throw ParseError("--s must be a list of integers here, got " + to_string(x));
        out.push_back(static_cast<int>(x.numerator()));
    }
    return out;
}

OrderVector parse_order_vector(const std::string& text, const char* flag, std::size_t level)
{
    if (text.empty())
        throw ParseError(std::string(flag) + " is required");
    auto v = parse_rational_list(text);
    if (v.size() != level)
        throw ParseError(std::string(flag) + " has " + std::to_string(v.size()) + " entries, expected " +
                         std::to_string(level));
    return v;
}

std::size_t resolve_level(const Options& o, std::size_t from_charge)
{
    if (o.l != 0 && static_cast<std::size_t>(o.l) != from_charge)
        throw ParseError("--l " + std::to_string(o.l) + " does not match --s of length " +
                         std::to_string(from_charge));
    return from_charge;
}

LPartition require_lp(const Options& o, std::size_t level)
{
    if (o.lp.empty())
        throw ParseError("--lp is required");
    auto lp = parse_lpartition(o.lp);
    if (lp.level() != level)
        throw ParseError("--lp has " + std::to_string(lp.level()) + " components, expected " + std::to_string(level));
    return lp;
}

void check_format(const Options& o, std::initializer_list<const char*> allowed)
{
    for (const auto* f : allowed)
        if (o.format == f)
            return;
    throw ParseError("unsupported --format '" + o.format + "' for this command");
}

nlohmann::json rationals_json(const RationalVector& v)
{
    auto out = nlohmann::json::array();
    for (const auto& x : v)
        out.push_back(to_string(x));
    return out;
}

std::string rationals_text(const RationalVector& v)
{
    std::string out = "(";
    for (std::size_t k = 0; k < v.size(); ++k)
        out += (k ? ", " : "") + to_string(v[k]);
    return out + ")";
}

nlohmann::json symbol_json(const Symbol& sym)
{
    return {{"baseline", sym.baseline}, {"charge", sym.charge()}, {"rows", sym.rows}};
}

template <class Color>
void print_graph(const CrystalGraph<Color>& g, const Options& o, std::ostream& out)
{
    if (o.format == "json") {
        out << g.to_json().dump() << '\n';
    } else if (o.format == "dot") {
        out << g.to_dot();
    } else {
        out << g.vertices().size() << " vertices, " << g.edges().size() << " edges\n";
        for (const auto& e : g.edges())
            out << g.vertices()[e.src].to_string() << " -" << color_label(e.color) << "-> "
                << g.vertices()[e.dst].to_string() << '\n';
        out << "highest weight:";
        for (const auto& v : g.highest_weight_vertices())
            out << ' ' << v.to_string();
        out << '\n';
    }
}

int cmd_graph(const Options& o, std::ostream& out)
{
    check_format(o, {"json", "dot", "text"});
    if (o.n < 0)
        throw ParseError("--n is required");
    if (!o.kappa.empty()) {
        CherednikParams p{parse_rational(o.kappa), parse_rational_list(o.s)};
        print_graph(cherednik_order_graph(resolve_level(o, p.level()), o.n, p), o, out);
        return ok;
    }
    auto s = parse_charge(o.s);
    auto level = resolve_level(o, s.size());
    auto e = parse_modulus(o.e);
    OrderVector m = o.m.empty() && level == 1 ? OrderVector{Rational(0)} : parse_order_vector(o.m, "--m", level);
    NodeOrder order = NodeOrder::m_order(m);
    if (o.order == "reversed")
        order = NodeOrder::m_order_reversed(m);
    else if (o.order != "m")
        throw ParseError("--order must be 'm' or 'reversed'");
    print_graph(build_graph(level, o.n, e, s, order), o, out);
    return ok;
}

void print_lp(const LPartition& lp, const Options& o, std::ostream& out)
{
    if (o.format == "json")
        out << to_json(lp).dump() << '\n';
    else
        out << lp.to_string() << '\n';
}

int cmd_wall_cross(const Options& o, std::ostream& out)
{
    check_format(o, {"json", "text"});
    auto s = parse_charge(o.s);
    auto level = resolve_level(o, s.size());
    auto e = parse_modulus(o.e);
    auto lp = require_lp(o, level);
    auto m = parse_order_vector(o.m, "--m", level);
    auto m2 = parse_order_vector(o.m2, "--m2", level);
    print_lp(wall_cross(lp, s, e, m, m2), o, out);
    return ok;
}

int cmd_wc(const Options& o, std::ostream& out)
{
    check_format(o, {"json", "text"});
    if (o.kappa.empty())
        throw ParseError("--kappa is required");
    CherednikParams p{parse_rational(o.kappa), parse_rational_list(o.s)};
    CherednikParams q{parse_rational(o.kappa2.empty() ? o.kappa : o.kappa2), parse_rational_list(o.s2.empty() ? o.s : o.s2)};
    auto lp = require_lp(o, resolve_level(o, p.level()));
    print_lp(wall_crossing_bijection(lp, p, q), o, out);
    return ok;
}

int cmd_highest_weight(const Options& o, std::ostream& out)
{
    check_format(o, {"json", "text"});
    auto s = parse_charge(o.s);
    auto level = resolve_level(o, s.size());
    auto e = parse_modulus(o.e);
    if (!e.is_finite())
        throw ParseError("highest-weight needs a finite --e");
    auto lp = require_lp(o, level);
    auto m = parse_order_vector(o.m, "--m", level);
    auto result = is_highest_weight_traced(lp, s, e, m);
    if (o.format == "text") {
        if (o.trace)
            out << render_trace(result);
        else
            out << (result.highest_weight ? "true" : "false") << '\n';
        return ok;
    }
    if (!o.trace) {
        out << (result.highest_weight ? "true" : "false") << '\n';
        return ok;
    }
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& step : result.steps) {
        auto j = symbol_json(step.symbol);
        if (step.period) {
            auto boxes = nlohmann::json::array();
            for (const auto& b : step.period->boxes)
                boxes.push_back({{"row", b.row}, {"entry", b.entry}});
            j["period"] = std::move(boxes);
        }
        steps.push_back(std::move(j));
    }
    std::vector<std::size_t> sigma;
    for (std::size_t k = 1; k <= result.decomposition.sigma.size(); ++k)
        sigma.push_back(result.decomposition.sigma(k));
    nlohmann::json j{{"highest_weight", result.highest_weight},
                     {"shifted_charge", result.decomposition.shifted_charge},
                     {"delta", rationals_json(result.decomposition.delta)},
                     {"sigma", sigma},
                     {"steps", std::move(steps)}};
    out << j.dump() << '\n';
    return ok;
}

int cmd_chambers(const Options& o, std::ostream& out)
{
    check_format(o, {"json", "text"});
    if (o.n < 0)
        throw ParseError("--n is required");
    auto s = parse_charge(o.s);
    auto level = resolve_level(o, s.size());
    auto e = parse_modulus(o.e);
    auto walls = essential_walls(level, o.n, e, s);
    auto chambers = enumerate_chambers(level, o.n, e, s);
    std::optional<ChamberSignature> own;
    if (!o.m.empty())
        own = signature(parse_order_vector(o.m, "--m", level), walls);

    if (o.format == "json") {
        auto jw = nlohmann::json::array();
        for (const auto& w : walls)
            jw.push_back({{"i", w.i}, {"j", w.j}, {"N", w.N}, {"offset", w.offset()}});
        auto jc = nlohmann::json::array();
        for (const auto& c : chambers)
            jc.push_back({{"signature", signature_string(c.signature)}, {"sample", rationals_json(c.sample)}});
        nlohmann::json j{{"walls", std::move(jw)}, {"chambers", std::move(jc)}};
        if (own)
            j["signature"] = signature_string(*own);
        out << j.dump() << '\n';
        return ok;
    }
    out << walls.size() << " walls\n";
    for (const auto& w : walls)
        out << "  " << w.to_string() << ": m_" << w.j << " - m_" << w.i << " = " << w.offset() << '\n';
    out << chambers.size() << " chambers\n";
    for (const auto& c : chambers)
        out << "  " << signature_string(c.signature) << "  " << rationals_text(c.sample) << '\n';
    if (own)
        out << "m lies in " << signature_string(*own) << '\n';
    return ok;
}

int cmd_symbol(const Options& o, std::ostream& out)
{
    check_format(o, {"json", "text"});
    auto s = parse_charge(o.s);
    auto level = resolve_level(o, s.size());
    auto lp = require_lp(o, level);
    auto charge = s;
    if (!o.m.empty()) {
        auto e = parse_modulus(o.e);
        if (!e.is_finite())
            throw ParseError("--m with symbol needs a finite --e");
        charge = jmmo_decompose(parse_order_vector(o.m, "--m", level), s, e).shifted_charge;
    }
    auto sym = symbol_of(lp, charge);
    if (o.format == "json")
        out << symbol_json(sym).dump() << '\n';
    else
        out << render(sym);
    return ok;
}

void add_common(CLI::App* app, Options& o)
{
    app->add_option("--e", o.e, "modulus: integer >= 2 or 'inf'");
    app->add_option("--s", o.s, "charge, comma separated (rationals in Cherednik mode)");
    app->add_option("--m", o.m, "order vector, comma separated rationals");
    app->add_option("--n", o.n, "rank bound");
    app->add_option("--l", o.l, "level");
    app->add_option("--lp", o.lp, "l-partition as JSON, e.g. [[3,1],[2]]");
    app->add_option("--format", o.format, "json, text (graph: also dot)");
}

} // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Crystal combinatorics of level-l Fock spaces and wall-crossing bijections", "wallcross"};
    app.require_subcommand(1);
    Options o;

    auto* graph = app.add_subcommand("graph", "build the colored crystal graph on l-partitions of rank <= n");
    add_common(graph, o);
    graph->add_option("--order", o.order, "m or reversed");
    graph->add_option("--kappa", o.kappa, "use the Cherednik order for (kappa, s)");

    auto* cross = app.add_subcommand("wall-cross", "map an l-partition from the chamber of m to that of m2");
    add_common(cross, o);
    cross->add_option("--m2", o.m2, "target order vector");

    auto* wc = app.add_subcommand("wc", "wall-crossing bijection between Cherednik parameters");
    add_common(wc, o);
    wc->add_option("--kappa", o.kappa, "kappa, e.g. 1/2");
    wc->add_option("--kappa2", o.kappa2, "target kappa (defaults to --kappa)");
    wc->add_option("--s2", o.s2, "target charge (defaults to --s)");

    auto* hw = app.add_subcommand("highest-weight", "period-deletion highest weight test");
    add_common(hw, o);
    hw->add_flag("--trace", o.trace, "show every deletion step");

    auto* chambers = app.add_subcommand("chambers", "essential walls and one sample point per chamber");
    add_common(chambers, o);

    auto* symbol = app.add_subcommand("symbol", "print the symbol of an l-partition");
    add_common(symbol, o);

    auto* self = app.add_subcommand("selftest", "check the worked examples");

    std::vector<std::string> rev(argv.rbegin(), argv.rend());
    if (!rev.empty())
        rev.pop_back(); // program name
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : parse_error;
    }

    try {
        if (graph->parsed())
            return cmd_graph(o, out);
        if (cross->parsed())
            return cmd_wall_cross(o, out);
        if (wc->parsed())
            return cmd_wc(o, out);
        if (hw->parsed())
            return cmd_highest_weight(o, out);
        if (chambers->parsed())
            return cmd_chambers(o, out);
        if (symbol->parsed())
            return cmd_symbol(o, out);
        if (self->parsed())
            return selftest(out) == 0 ? ok : selftest_failed;
    } catch (const ConfigurationError& e) {
        err << "configuration error: " << e.what() << '\n';
        return configuration_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return parse_error;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return parse_error;
    }
    return parse_error;
}

} // namespace wallcross::cli
