#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "wallcross/partition.hpp"
#include "wallcross/rational.hpp"

namespace wallcross {

/// Integer multicharge (s_1, ..., s_l).
using Multicharge = std::vector<int>;

/// A box (row, col, comp) of the Young diagram of an l-partition. All three
/// coordinates are 1-based.
struct Node {
    int row = 1;
    int col = 1;
    int comp = 1;

    auto operator<=>(const Node&) const = default;
    bool operator==(const Node&) const = default;

    int diagonal() const { return col - row; }

    std::string to_string() const
    {
        return "(" + std::to_string(row) + "," + std::to_string(col) + "," + std::to_string(comp) + ")";
    }
};

inline std::ostream& operator<<(std::ostream& os, const Node& n) { return os << n.to_string(); }

inline bool contains(const LPartition& lp, const Node& n)
{
    return n.comp >= 1 && static_cast<std::size_t>(n.comp) <= lp.level() && n.row >= 1 && n.col >= 1 &&
           n.col <= lp.component(static_cast<std::size_t>(n.comp)).part(static_cast<std::size_t>(n.row));
}

/// Either a finite modulus e >= 2 or infinity.
class Modulus {
public:
    static Modulus infinite() { return Modulus(0); }
    static Modulus finite(int e)
    {
        if (e < 2)
            throw std::invalid_argument("modulus must be at least 2");
        return Modulus(e);
    }

    bool is_finite() const { return e_ != 0; }
    bool is_infinite() const { return e_ == 0; }

    /// Only meaningful when finite.
    int value() const
    {
        if (!is_finite())
            throw std::logic_error("infinite modulus has no value");
        return e_;
    }

    std::int64_t reduce(std::int64_t x) const
    {
        if (!is_finite())
            return x;
        auto r = x % e_;
        return r < 0 ? r + e_ : r;
    }

    std::string to_string() const { return is_finite() ? std::to_string(e_) : "inf"; }

    auto operator<=>(const Modulus&) const = default;
    bool operator==(const Modulus&) const = default;

private:
    explicit Modulus(int e) : e_(e) {}
    int e_ = 0;
};

/// Residue of an integer content modulo e (or the content itself when e is infinite).
class Residue {
public:
    Residue(Modulus e, std::int64_t value) : e_(e), value_(e.reduce(value)) {}

    Modulus modulus() const { return e_; }
    std::int64_t value() const { return value_; }

    std::string to_string() const { return std::to_string(value_); }

    auto operator<=>(const Residue&) const = default;
    bool operator==(const Residue&) const = default;

private:
    Modulus e_;
    std::int64_t value_;
};

inline std::ostream& operator<<(std::ostream& os, const Residue& r) { return os << r.value(); }

/// Charged content b - a + s_c. Works for integer or rational charges.
template <class Charge>
Charge content(const Node& n, const std::vector<Charge>& s)
{
    if (n.comp < 1 || static_cast<std::size_t>(n.comp) > s.size())
        throw std::out_of_range("node component " + std::to_string(n.comp) + " outside charge of length " +
                                std::to_string(s.size()));
    return Charge(n.col - n.row) + s[static_cast<std::size_t>(n.comp - 1)];
}

inline Residue residue(const Node& n, const Multicharge& s, Modulus e) { return Residue(e, content(n, s)); }

/// Every addable node of lp, ordered by (comp, row).
inline std::vector<Node> all_addable_nodes(const LPartition& lp)
{
    std::vector<Node> out;
    for (std::size_t c = 1; c <= lp.level(); ++c) {
        const auto& p = lp.component(c);
        for (std::size_t r = 1; r <= p.length() + 1; ++r) {
            int col = p.part(r) + 1;
            if (r == 1 || p.part(r - 1) >= col)
                out.push_back(Node{static_cast<int>(r), col, static_cast<int>(c)});
        }
    }
    return out;
}

/// Every removable node of lp, ordered by (comp, row).
inline std::vector<Node> all_removable_nodes(const LPartition& lp)
{
    std::vector<Node> out;
    for (std::size_t c = 1; c <= lp.level(); ++c) {
        const auto& p = lp.component(c);
        for (std::size_t r = 1; r <= p.length(); ++r)
            if (p.part(r) > p.part(r + 1))
                out.push_back(Node{static_cast<int>(r), p.part(r), static_cast<int>(c)});
    }
    return out;
}

namespace detail {

inline void check_level(const LPartition& lp, std::size_t charge_size)
{
    if (lp.level() != charge_size)
        throw std::invalid_argument("l-partition of level " + std::to_string(lp.level()) +
                                    " used with charge of length " + std::to_string(charge_size));
}

} // namespace detail

inline std::vector<Node> addable_nodes(const LPartition& lp, const Multicharge& s, Modulus e, const Residue& z)
{
    detail::check_level(lp, s.size());
    std::vector<Node> out;
    for (const auto& n : all_addable_nodes(lp))
        if (residue(n, s, e) == z)
            out.push_back(n);
    return out;
}

inline std::vector<Node> removable_nodes(const LPartition& lp, const Multicharge& s, Modulus e, const Residue& z)
{
    detail::check_level(lp, s.size());
    std::vector<Node> out;
    for (const auto& n : all_removable_nodes(lp))
        if (residue(n, s, e) == z)
            out.push_back(n);
    return out;
}

inline LPartition add_node(const LPartition& lp, const Node& n)
{
    const auto& p = lp.component(static_cast<std::size_t>(n.comp));
    auto parts = p.parts();
    if (static_cast<std::size_t>(n.row) == parts.size() + 1 && n.col == 1)
        parts.push_back(1);
    else if (static_cast<std::size_t>(n.row) <= parts.size() && parts[static_cast<std::size_t>(n.row - 1)] + 1 == n.col)
        ++parts[static_cast<std::size_t>(n.row - 1)];
    else
        throw std::invalid_argument("node " + n.to_string() + " is not addable");
    try {
        return lp.with_component(static_cast<std::size_t>(n.comp), Partition(std::move(parts)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("node " + n.to_string() + " is not addable");
    }
}

inline LPartition remove_node(const LPartition& lp, const Node& n)
{
    const auto& p = lp.component(static_cast<std::size_t>(n.comp));
    if (p.part(static_cast<std::size_t>(n.row)) != n.col || p.part(static_cast<std::size_t>(n.row) + 1) >= n.col)
        throw std::invalid_argument("node " + n.to_string() + " is not removable");
    auto parts = p.parts();
    --parts[static_cast<std::size_t>(n.row - 1)];
    return lp.with_component(static_cast<std::size_t>(n.comp), Partition(std::move(parts)));
}

} // namespace wallcross
