#include <algorithm>
#include <functional>
#include <iostream>
#include <string>

#include "cli.hpp"
#include "reference_table.hpp"
#include "wallcross/wallcross.hpp"

namespace wallcross::cli {

namespace {

LPartition bp(Partition a, Partition b) { return LPartition{std::move(a), std::move(b)}; }

OrderVector ov(std::initializer_list<std::int64_t> xs)
{
    OrderVector out;
    for (auto x : xs)
        out.emplace_back(x);
    return out;
}

} // namespace

int selftest(std::ostream& out)
{
    int failures = 0;
    auto check = [&](const std::string& name, const std::function<bool()>& body) {
        bool good = false;
        std::string why;
        try {
            good = body();
        } catch (const std::exception& e) {
            why = std::string(" (") + e.what() + ")";
        }
        out << (good ? "PASS " : "FAIL ") << name << why << '\n';
        failures += good ? 0 : 1;
    };

    const auto two = Modulus::finite(2);
    const auto three = Modulus::finite(3);

    check("symbol of (6.5.5.4, 5.5.3.3.2) for (0,3)", [] {
        auto sym = symbol_of(bp({6, 5, 5, 4}, {5, 5, 3, 3, 2}), {0, 3});
        return sym.rows[0] == std::vector<std::int64_t>{-4, 1, 3, 4, 6} &&
               sym.rows[1] == std::vector<std::int64_t>{-4, -3, -2, 1, 3, 4, 7, 8} && bipartition_width(sym) == 7;
    });
    check("matching picks -4 1 3 4 -2", [] {
        auto res = match_and_swap(symbol_of(bp({6, 5, 5, 4}, {5, 5, 3, 3, 2}), {0, 3}));
        return res.matched == std::vector<std::int64_t>{-4, 1, 3, 4, -2} &&
               res.swapped.rows[0] == std::vector<std::int64_t>{-4, -2, 1, 3, 4} &&
               res.swapped.rows[1] == std::vector<std::int64_t>{-4, -3, 1, 3, 4, 6, 7, 8};
    });
    check("Phi^(0,3) gives (4.4.3.1, 5.5.5.4.4.3)", [] {
        return phi_bipartition(bp({6, 5, 5, 4}, {5, 5, 3, 3, 2}), 0, 3) == bp({4, 4, 3, 1}, {5, 5, 5, 4, 4, 3});
    });
    check("R-matrix gives (5.5.5.4.4.3, 4.4.3.1)", [] {
        return r_matrix(bp({6, 5, 5, 4}, {5, 5, 3, 3, 2}), 0, 3) == bp({5, 5, 5, 4, 4, 3}, {4, 4, 3, 1});
    });
    check("JMMO decomposition of (1,3) and (0,4)", [&] {
        auto a = jmmo_decompose(ov({1, 3}), {0, 0}, three);
        auto b = jmmo_decompose(ov({0, 4}), {0, 0}, three);
        return a.shifted_charge == Multicharge{0, 3} && a.sigma.is_identity() &&
               b.shifted_charge == Multicharge{0, 3} && b.sigma == Permutation::from_images({2, 1});
    });
    check("(3.1, 2.2.1.1) highest weight at m = (1,3)", [&] {
        auto r = is_highest_weight_traced(bp({3, 1}, {2, 2, 1, 1}), {0, 0}, three, ov({1, 3}));
        return r.highest_weight && r.steps.size() == 3 &&
               r.steps[1].symbol.rows[0] == std::vector<std::int64_t>{-2, 0} &&
               r.steps[1].symbol.rows[1] == std::vector<std::int64_t>{-2, -1, 1, 2} &&
               r.steps[2].symbol.rows[0] == std::vector<std::int64_t>{-2} &&
               r.steps[2].symbol.rows[1] == std::vector<std::int64_t>{-2, -1};
    });
    check("(3.1, 2.2.1.1) not highest weight at m = (0,4)", [&] {
        return !is_highest_weight(bp({3, 1}, {2, 2, 1, 1}), {0, 0}, three, ov({0, 4}));
    });
    check("three essential walls for e = 2, n = 3", [&] {
        auto w = essential_walls(2, 3, two, {0, 0});
        return w.size() == 3 && w[0].offset() == -2 && w[1].offset() == 0 && w[2].offset() == 2;
    });
    check("four chambers for e = 2, n = 3", [&] { return enumerate_chambers(2, 3, two, {0, 0}).size() == 4; });

    const auto points = reference::chamber_points();
    const auto table = reference::orbit_table();
    check("orbit table, 10 rows x 4 chambers", [&] {
        for (const auto& row : table)
            for (std::size_t c = 0; c < 4; ++c)
                for (std::size_t d = 0; d < 4; ++d)
                    if (wall_cross(row.columns[c], {0, 0}, two, points[c], points[d]) != row.columns[d])
                        return false;
        return true;
    });
    check("starred rows are the rank 3 highest weight vertices", [&] {
        for (std::size_t c = 0; c < 4; ++c) {
            auto g = build_graph(2, 3, two, {0, 0}, NodeOrder::m_order(points[c]));
            std::vector<LPartition> hw;
            for (const auto& v : g.highest_weight_vertices())
                if (v.rank() == 3)
                    hw.push_back(v);
            std::vector<LPartition> starred;
            for (const auto& row : table)
                if (row.highest_weight)
                    starred.push_back(row.columns[c]);
            std::sort(hw.begin(), hw.end());
            std::sort(starred.begin(), starred.end());
            if (hw != starred)
                return false;
        }
        return true;
    });
    check("Cherednik wc from (1/2,(0,0)) to (1/2,(0,2)) sends (1,2) to (2,1)", [] {
        CherednikParams p{Rational(1, 2), {Rational(0), Rational(0)}};
        CherednikParams q{Rational(1, 2), {Rational(0), Rational(2)}};
        return wall_crossing_bijection(bp({1}, {2}), p, q) == bp({2}, {1});
    });
    return failures;
}

} // namespace wallcross::cli
