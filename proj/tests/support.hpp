#pragma once

// Shared helpers and brute-force oracles for the test binaries. Nothing in
// here calls the library routine it is meant to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "wallcross/wallcross.hpp"

namespace wallcross::testing {

inline LPartition bp(Partition a, Partition b) { return LPartition{std::move(a), std::move(b)}; }

inline OrderVector ov(std::initializer_list<Rational> xs) { return OrderVector(xs); }

inline Rational q(std::int64_t p, std::int64_t d = 1) { return Rational(p, d); }

// ---- nodes by scanning a box around the diagram

inline bool is_partition(const std::vector<int>& parts)
{
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i] < 0 || (i && parts[i] > parts[i - 1]))
            return false;
    return true;
}

struct OracleNode {
    int row, col, comp;
    bool addable;
    bool operator<(const OracleNode& o) const
    {
        return std::tie(comp, row, col, addable) < std::tie(o.comp, o.row, o.col, o.addable);
    }
};

inline std::vector<OracleNode> scan_nodes(const LPartition& lp)
{
    std::vector<OracleNode> out;
    for (std::size_t c = 1; c <= lp.level(); ++c) {
        auto parts = lp.component(c).parts();
        const int rows = static_cast<int>(parts.size()) + 1;
        const int cols = (parts.empty() ? 0 : parts[0]) + 1;
        for (int a = 1; a <= rows; ++a)
            for (int b = 1; b <= cols; ++b) {
                auto grown = parts;
                grown.resize(static_cast<std::size_t>(rows), 0);
                auto& cell = grown[static_cast<std::size_t>(a - 1)];
                if (cell == b - 1) {
                    ++cell;
                    if (is_partition(grown))
                        out.push_back({a, b, static_cast<int>(c), true});
                } else if (cell == b) {
                    --cell;
                    if (is_partition(grown))
                        out.push_back({a, b, static_cast<int>(c), false});
                }
            }
    }
    return out;
}

// ---- crystal operators: literal repeated deletion of adjacent "RA"

struct OracleLetter {
    Rational key;
    Node node;
    bool addable;
};

template <class KeyFn, class ColorFn, class Color>
std::vector<OracleLetter> oracle_word(const LPartition& lp, KeyFn key, ColorFn color, const Color& z)
{
    std::vector<OracleLetter> w;
    for (const auto& n : scan_nodes(lp)) {
        Node node{n.row, n.col, n.comp};
        if (color(node) == z)
            w.push_back({key(node), node, n.addable});
    }
    std::sort(w.begin(), w.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
    return w;
}

inline std::vector<OracleLetter> cancel_ra(std::vector<OracleLetter> w)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (!w[i].addable && w[i + 1].addable) {
                w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i + 2));
                changed = true;
                break;
            }
    }
    return w;
}

inline LPartition oracle_apply(const LPartition& lp, const Node& n, int delta)
{
    auto parts = lp.component(static_cast<std::size_t>(n.comp)).parts();
    parts.resize(std::max<std::size_t>(parts.size(), static_cast<std::size_t>(n.row)), 0);
    parts[static_cast<std::size_t>(n.row - 1)] += delta;
    return lp.with_component(static_cast<std::size_t>(n.comp), Partition(parts));
}

template <class KeyFn, class ColorFn, class Color>
std::optional<LPartition> oracle_f(const LPartition& lp, KeyFn key, ColorFn color, const Color& z)
{
    auto w = cancel_ra(oracle_word(lp, key, color, z));
    std::optional<Node> last;
    for (const auto& l : w)
        if (l.addable)
            last = l.node;
    if (!last)
        return std::nullopt;
    return oracle_apply(lp, *last, +1);
}

template <class KeyFn, class ColorFn, class Color>
std::optional<LPartition> oracle_e(const LPartition& lp, KeyFn key, ColorFn color, const Color& z)
{
    auto w = cancel_ra(oracle_word(lp, key, color, z));
    for (const auto& l : w)
        if (!l.addable)
            return oracle_apply(lp, l.node, -1);
    return std::nullopt;
}

// m-order data for integer charges
struct MOrderOracle {
    Multicharge s;
    Modulus e;
    OrderVector m;

    Rational key(const Node& n) const { return Rational(n.col - n.row) + m[static_cast<std::size_t>(n.comp - 1)]; }
    Residue color(const Node& n) const
    {
        return Residue(e, n.col - n.row + s[static_cast<std::size_t>(n.comp - 1)]);
    }
    std::optional<LPartition> f(const LPartition& lp, const Residue& z) const
    {
        return oracle_f(lp, [this](const Node& n) { return key(n); }, [this](const Node& n) { return color(n); }, z);
    }
    std::optional<LPartition> e_op(const LPartition& lp, const Residue& z) const
    {
        return oracle_e(lp, [this](const Node& n) { return key(n); }, [this](const Node& n) { return color(n); }, z);
    }
    // colors that can possibly act on lp
    std::set<Residue> colors(const LPartition& lp) const
    {
        std::set<Residue> out;
        for (const auto& n : scan_nodes(lp))
            out.insert(color(Node{n.row, n.col, n.comp}));
        return out;
    }
    bool highest_weight(const LPartition& lp) const
    {
        for (const auto& z : colors(lp))
            if (e_op(lp, z))
                return false;
        return true;
    }
};

// ---- symbols: beta-sets at a fixed generous width

inline std::vector<std::int64_t> beta_set(const Partition& p, std::int64_t charge, std::int64_t width)
{
    std::vector<std::int64_t> out;
    for (std::int64_t k = 1; k <= width; ++k)
        out.push_back(charge - k + 1 + p.part(static_cast<std::size_t>(k)));
    std::reverse(out.begin(), out.end());
    return out;
}

// ---- enumeration

inline std::vector<LPartition> all_up_to(std::size_t level, int n)
{
    std::vector<LPartition> out;
    for (int k = 0; k <= n; ++k)
        for (auto& lp : lpartitions_of(level, k))
            out.push_back(lp);
    return out;
}

// The empty set of walls has one chamber; otherwise the chamber samples.
inline std::vector<OrderVector> chamber_samples(std::size_t level, int n, Modulus e, const Multicharge& s)
{
    std::vector<OrderVector> out;
    for (const auto& c : enumerate_chambers(level, n, e, s))
        out.push_back(c.sample);
    return out;
}

// ---- brute-force search for rank- and color-preserving bijections

struct BijectionCount {
    std::size_t count = 0; // capped
    bool capped = false;
};

// Counts bijections V(g1) -> V(g2) that keep rank, colored edges and, for
// every color, the string lengths (epsilon, phi) supplied by `profile`.
template <class Color, class Profile>
BijectionCount count_isomorphisms(const CrystalGraph<Color>& g1, const CrystalGraph<Color>& g2, Profile profile,
                                  std::size_t cap = 1000)
{
    BijectionCount out;
    const auto& v1 = g1.vertices();
    const auto& v2 = g2.vertices();
    if (v1.size() != v2.size())
        return out;
    std::set<Color> colors;
    for (const auto& e : g1.edges())
        colors.insert(e.color);
    for (const auto& e : g2.edges())
        colors.insert(e.color);

    std::vector<std::string> prof1, prof2;
    for (const auto& v : v1)
        prof1.push_back(profile(v, true));
    for (const auto& v : v2)
        prof2.push_back(profile(v, false));

    std::vector<std::size_t> image(v1.size(), SIZE_MAX);
    std::vector<bool> used(v2.size(), false);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (out.capped)
            return;
        if (k == v1.size()) {
            if (++out.count >= cap)
                out.capped = true;
            return;
        }
        for (std::size_t w = 0; w < v2.size(); ++w) {
            if (used[w] || v2[w].rank() != v1[k].rank() || prof1[k] != prof2[w])
                continue;
            bool fits = true;
            for (const auto& z : colors) {
                auto p1 = g1.predecessor(k, z);
                auto p2 = g2.predecessor(w, z);
                if (p1.has_value() != p2.has_value() || (p1 && image[*p1] != *p2)) {
                    fits = false;
                    break;
                }
            }
            if (!fits)
                continue;
            image[k] = w;
            used[w] = true;
            rec(k + 1);
            used[w] = false;
            image[k] = SIZE_MAX;
        }
    };
    rec(0);
    return out;
}

// True iff the vertex map f sends g1 onto g2 keeping colored edges both ways.
template <class Color, class Map>
bool is_graph_isomorphism(const CrystalGraph<Color>& g1, const CrystalGraph<Color>& g2, Map f)
{
    if (g1.vertices().size() != g2.vertices().size() || g1.edges().size() != g2.edges().size())
        return false;
    std::set<LPartition> seen;
    for (const auto& v : g1.vertices()) {
        auto w = f(v);
        if (w.rank() != v.rank() || !g2.index_of(w) || !seen.insert(w).second)
            return false;
    }
    for (const auto& e : g1.edges()) {
        auto a = *g2.index_of(f(g1.vertices()[e.src]));
        auto b = *g2.index_of(f(g1.vertices()[e.dst]));
        if (!g2.has_edge(a, b, e.color))
            return false;
    }
    return true;
}

} // namespace wallcross::testing
