#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "wallcross/node.hpp"
#include "wallcross/partition.hpp"

namespace wallcross {

/// An l-row tableau of charged beta-numbers.
///
/// rows[j] lists the entries of the row for component j+1 in increasing
/// order. Every row is read against the common baseline: a row of length L
/// encodes a partition of charge baseline + L - 1, whose p-th part is
/// (p-th largest entry) - charge + p - 1.
struct Symbol {
    std::vector<std::vector<std::int64_t>> rows;
    std::int64_t baseline = 0;

    std::size_t level() const { return rows.size(); }

    std::int64_t row_charge(std::size_t j) const
    {
        return baseline + static_cast<std::int64_t>(rows.at(j).size()) - 1;
    }

    Multicharge charge() const
    {
        Multicharge out;
        for (std::size_t j = 0; j < rows.size(); ++j)
            out.push_back(static_cast<int>(row_charge(j)));
        return out;
    }

    /// Width parameter u of the l-row form: row j has length s_j + u.
    std::int64_t u() const { return 1 - baseline; }

    bool operator==(const Symbol&) const = default;
};

/// Symbol of lp for the charge s, with the shortest rows such that every row
/// starts at the common baseline with a zero part.
inline Symbol symbol_of(const LPartition& lp, const Multicharge& s)
{
    detail::check_level(lp, s.size());
    Symbol sym;
    sym.baseline = INT64_MAX;
    for (std::size_t j = 0; j < s.size(); ++j)
        sym.baseline = std::min<std::int64_t>(sym.baseline, s[j] - static_cast<std::int64_t>(lp[j].length()));
    for (std::size_t j = 0; j < s.size(); ++j) {
        auto len = static_cast<std::size_t>(s[j] - sym.baseline + 1);
        std::vector<std::int64_t> row(len);
        for (std::size_t k = 0; k < len; ++k) // k counts from the right
            row[len - 1 - k] = s[j] - static_cast<std::int64_t>(k) + lp[j].part(k + 1);
        sym.rows.push_back(std::move(row));
    }
    return sym;
}

/// The l-row symbol used by the highest-weight test (same as symbol_of).
inline Symbol general_symbol(const LPartition& lp, const Multicharge& shifted_charge)
{
    return symbol_of(lp, shifted_charge);
}

/// Two-row symbol of (lambda1, lambda2) for (s1, s2); width d = max(s1, s2) - baseline.
inline Symbol symbol_of_bipartition(const Partition& lambda1, const Partition& lambda2, int s1, int s2)
{
    return symbol_of(LPartition{lambda1, lambda2}, Multicharge{s1, s2});
}

inline std::int64_t bipartition_width(const Symbol& sym)
{
    return std::max(sym.row_charge(0), sym.row_charge(1)) - sym.baseline;
}

/// Reads the l-partition back. Throws if a row is not strictly increasing or
/// dips below the baseline.
inline LPartition lpartition_of(const Symbol& sym)
{
    std::vector<Partition> comps;
    for (std::size_t j = 0; j < sym.rows.size(); ++j) {
        const auto& row = sym.rows[j];
        const auto charge = sym.row_charge(j);
        std::vector<int> parts;
        for (std::size_t p = 1; p <= row.size(); ++p) {
            auto entry = row[row.size() - p];
            if (p > 1 && entry >= row[row.size() - p + 1])
                throw std::invalid_argument("symbol row is not strictly increasing");
            auto part = entry - charge + static_cast<std::int64_t>(p) - 1;
            if (part < 0)
                throw std::invalid_argument("symbol entry below the baseline");
            parts.push_back(static_cast<int>(part));
        }
        comps.emplace_back(std::move(parts));
    }
    return LPartition(std::move(comps));
}

/// Lowers the baseline by k, prepending k entries to every row. The encoded
/// l-partition and charge are unchanged.
inline Symbol pad(const Symbol& sym, std::int64_t k)
{
    Symbol out;
    out.baseline = sym.baseline - k;
    for (const auto& row : sym.rows) {
        std::vector<std::int64_t> r;
        for (std::int64_t x = out.baseline; x < sym.baseline; ++x)
            r.push_back(x);
        r.insert(r.end(), row.begin(), row.end());
        out.rows.push_back(std::move(r));
    }
    return out;
}

/// True iff every row is the run baseline, baseline+1, ... (the empty l-partition).
inline bool is_empty_symbol(const Symbol& sym)
{
    for (const auto& row : sym.rows)
        for (std::size_t k = 0; k < row.size(); ++k)
            if (row[k] != sym.baseline + static_cast<std::int64_t>(k))
                return false;
    return true;
}

/// Rows printed top to bottom, i.e. the last component first, left-aligned columns.
inline std::string render(const Symbol& sym)
{
    std::size_t width = 1;
    for (const auto& row : sym.rows)
        for (auto x : row)
            width = std::max(width, std::to_string(x).size());
    std::ostringstream os;
    for (std::size_t j = sym.rows.size(); j-- > 0;) {
        const auto& row = sym.rows[j];
        for (std::size_t k = 0; k < row.size(); ++k) {
            auto text = std::to_string(row[k]);
            os << std::string(width - text.size(), ' ') << text;
            if (k + 1 < row.size())
                os << ' ';
        }
        os << '\n';
    }
    return os.str();
}

} // namespace wallcross
