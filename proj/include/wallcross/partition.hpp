#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "wallcross/errors.hpp"
#include "wallcross/rational.hpp"

namespace wallcross {

/// An integer partition, stored weakly decreasing with no zero parts.
class Partition {
public:
    Partition() = default;

    /// Accepts trailing zeros and drops them; throws on negative or increasing parts.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        while (!parts_.empty() && parts_.back() == 0)
            parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0)
                throw std::invalid_argument("partition parts must be nonnegative");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
        // zeros in the middle cannot occur after the checks above
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int rank() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    /// 1-based part lookup, zero past the end.
    int part(std::size_t row) const { return row >= 1 && row <= parts_.size() ? parts_[row - 1] : 0; }

    Partition transpose() const
    {
        std::vector<int> t;
        if (!parts_.empty()) {
            t.resize(static_cast<std::size_t>(parts_.front()), 0);
            for (int p : parts_)
                for (int c = 0; c < p; ++c)
                    ++t[static_cast<std::size_t>(c)];
        }
        return Partition(std::move(t));
    }

    /// Dotted form "6.5.5.4"; the empty partition prints as "-".
    std::string to_string() const
    {
        if (parts_.empty())
            return "-";
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i)
                out += '.';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

inline Partition parse_partition(std::string_view text)
{
    text = detail::trim(text);
    if (text == "-" || text.empty() || text == "0")
        return {};
    std::vector<int> parts;
    std::size_t start = 0;
    while (true) {
        auto dot = text.find('.', start);
        auto item = text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
        auto v = detail::parse_int(item);
        if (v < 0 || v > 1'000'000)
            throw ParseError("partition part out of range in '" + std::string(text) + "'");
        parts.push_back(static_cast<int>(v));
        if (dot == std::string_view::npos)
            break;
        start = dot + 1;
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string(e.what()) + " in '" + std::string(text) + "'");
    }
}

/// An l-tuple of partitions. The level is fixed at construction.
class LPartition {
public:
    LPartition() = default;
    explicit LPartition(std::vector<Partition> components) : components_(std::move(components)) {}
    LPartition(std::initializer_list<Partition> components) : components_(components) {}

    static LPartition empty(std::size_t level) { return LPartition(std::vector<Partition>(level)); }

    std::size_t level() const { return components_.size(); }
    const std::vector<Partition>& components() const { return components_; }

    /// 1-based component access, matching node coordinates.
    const Partition& component(std::size_t c) const { return components_.at(c - 1); }
    const Partition& operator[](std::size_t index) const { return components_[index]; }

    int rank() const
    {
        int r = 0;
        for (const auto& p : components_)
            r += p.rank();
        return r;
    }

    LPartition with_component(std::size_t c, Partition p) const
    {
        auto copy = components_;
        copy.at(c - 1) = std::move(p);
        return LPartition(std::move(copy));
    }

    /// "(6.5.5.4, 5.5.3.3.2)"
    std::string to_string() const
    {
        std::string out = "(";
        for (std::size_t i = 0; i < components_.size(); ++i) {
            if (i)
                out += ", ";
            out += components_[i].to_string();
        }
        return out + ")";
    }

    auto operator<=>(const LPartition&) const = default;
    bool operator==(const LPartition&) const = default;

private:
    std::vector<Partition> components_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const LPartition& p) { return os << p.to_string(); }

inline nlohmann::json to_json(const LPartition& lp)
{
    auto out = nlohmann::json::array();
    for (const auto& p : lp.components())
        out.push_back(p.parts());
    return out;
}

/// Parses the array-of-arrays form [[6,5,5,4],[5,5,3,3,2]].
inline LPartition lpartition_from_json(const nlohmann::json& j)
{
    if (!j.is_array())
        throw ParseError("l-partition must be a JSON array of arrays");
    std::vector<Partition> comps;
    for (const auto& row : j) {
        if (!row.is_array())
            throw ParseError("l-partition component must be a JSON array");
        std::vector<int> parts;
        for (const auto& v : row) {
            if (!v.is_number_integer())
                throw ParseError("l-partition parts must be integers");
            parts.push_back(v.get<int>());
        }
        try {
            comps.emplace_back(std::move(parts));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    if (comps.empty())
        throw ParseError("l-partition must have at least one component");
    return LPartition(std::move(comps));
}

inline LPartition parse_lpartition(std::string_view text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid l-partition JSON: ") + e.what());
    }
    return lpartition_from_json(j);
}

/// All partitions of n, in lexicographically increasing order of parts.
inline std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    rec(n, n);
    std::sort(out.begin(), out.end());
    return out;
}

/// All l-partitions of rank exactly n, sorted.
inline std::vector<LPartition> lpartitions_of(std::size_t level, int n)
{
    std::vector<std::vector<Partition>> by_rank;
    for (int k = 0; k <= n; ++k)
        by_rank.push_back(partitions_of(k));

    std::vector<LPartition> out;
    std::vector<Partition> current;
    std::function<void(std::size_t, int)> rec = [&](std::size_t comp, int remaining) {
        if (comp + 1 == level) {
            for (const auto& p : by_rank[static_cast<std::size_t>(remaining)]) {
                current.push_back(p);
                out.emplace_back(current);
                current.pop_back();
            }
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            for (const auto& p : by_rank[static_cast<std::size_t>(k)]) {
                current.push_back(p);
                rec(comp + 1, remaining - k);
                current.pop_back();
            }
        }
    };
    if (level == 0)
        throw std::invalid_argument("level must be at least 1");
    rec(0, n);
    std::sort(out.begin(), out.end());
    return out;
}

/// All l-partitions of rank 0..n, ordered by rank and then lexicographically.
inline std::vector<LPartition> lpartitions_up_to(std::size_t level, int n)
{
    std::vector<LPartition> out;
    for (int k = 0; k <= n; ++k) {
        auto layer = lpartitions_of(level, k);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

} // namespace wallcross
