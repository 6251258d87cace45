#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wallcross/jmmo.hpp"
#include "wallcross/symbol.hpp"

namespace wallcross {

struct PeriodBox {
    std::size_t row = 1;      // 1-based, bottom row first
    std::size_t position = 0; // 0-based index in the row
    std::int64_t entry = 0;

    bool operator==(const PeriodBox&) const = default;
};

struct PeriodCandidate {
    std::vector<PeriodBox> boxes; // entries k, k-1, ..., k-e+1
};

/// The e-period twisted by sigma whose sequence sigma^{-1}(row of b_1), ...,
/// sigma^{-1}(row of b_e) is lexicographically smallest. Entries run k, k-1,
/// ..., k-e+1 from the largest entry k, and sigma^{-1} of the rows never
/// increases. Depth-first, smallest sigma^{-1} first, so the first complete
/// sequence is the one returned.
///
/// Taking the largest admissible sigma^{-1} at each step instead looks
/// natural but is wrong from level 3 on: it can dead-end where another
/// choice deletes down to the empty symbol.
inline std::optional<PeriodCandidate> find_e_period(const Symbol& sym, int e, const Permutation& sigma)
{
    if (e < 2)
        throw std::invalid_argument("e-periods need e >= 2");
    if (sigma.size() != sym.level())
        throw std::invalid_argument("permutation size differs from symbol level");
    std::optional<std::int64_t> top;
    for (const auto& row : sym.rows)
        if (!row.empty())
            top = top ? std::max(*top, row.back()) : row.back();
    if (!top)
        return std::nullopt;

    // rows in increasing sigma^{-1}
    std::vector<std::size_t> by_rank(sym.level());
    for (std::size_t k = 1; k <= sym.level(); ++k)
        by_rank[k - 1] = sigma(k);

    PeriodCandidate out;
    std::function<bool(int, std::size_t)> extend = [&](int step, std::size_t bound) {
        if (step == e)
            return true;
        const auto value = *top - step;
        for (std::size_t rank = 1; rank <= bound; ++rank) {
            const auto r = by_rank[rank - 1];
            const auto& row = sym.rows[r - 1];
            auto it = std::lower_bound(row.begin(), row.end(), value);
            if (it == row.end() || *it != value)
                continue;
            out.boxes.push_back(PeriodBox{r, static_cast<std::size_t>(it - row.begin()), value});
            if (extend(step + 1, rank))
                return true;
            out.boxes.pop_back();
        }
        return false;
    };
    if (!extend(0, sym.level()))
        return std::nullopt;
    return out;
}

inline Symbol delete_period(const Symbol& sym, const PeriodCandidate& period)
{
    Symbol out = sym;
    for (const auto& box : period.boxes) {
        auto& row = out.rows.at(box.row - 1);
        auto it = std::find(row.begin(), row.end(), box.entry);
        if (it == row.end())
            throw std::invalid_argument("period box not in symbol");
        row.erase(it);
    }
    return out;
}

struct ReductionStep {
    Symbol symbol;                         // minimal symbol of the current l-partition
    std::optional<PeriodCandidate> period; // what was deleted next, if anything
};

struct HighestWeightResult {
    bool highest_weight = false;
    JmmoDecomposition decomposition;
    std::vector<ReductionStep> steps;
};

/// Period deletion on symbols for the charge s' of the JMMO decomposition of m.
///
/// Entries below the baseline are implicitly present (a row is a truncated
/// beta-set), so the search runs on the symbol padded by e - 1 columns. The
/// minimal symbol can miss periods that dip under the baseline.
inline HighestWeightResult is_highest_weight_traced(const LPartition& lp, const Multicharge& s, Modulus e,
                                                    const OrderVector& m)
{
    detail::check_level(lp, s.size());
    HighestWeightResult out{false, jmmo_decompose(m, s, e), {}};
    const int ev = e.value();
    LPartition current = lp;
    Multicharge charge = out.decomposition.shifted_charge;
    // guard only; in practice the number of steps is at most the rank
    const std::size_t cap = 16 + static_cast<std::size_t>(lp.rank() + 1) * (lp.level() + 1) * static_cast<std::size_t>(ev);
    for (std::size_t iter = 0; iter <= cap; ++iter) {
        ReductionStep step{symbol_of(current, charge), std::nullopt};
        if (current.rank() == 0) {
            out.steps.push_back(std::move(step));
            out.highest_weight = true;
            return out;
        }
        auto padded = pad(step.symbol, ev - 1);
        auto period = find_e_period(padded, ev, out.decomposition.sigma);
        step.period = period;
        out.steps.push_back(std::move(step));
        if (!period)
            return out;
        auto reduced = delete_period(padded, *period);
        current = lpartition_of(reduced);
        charge = reduced.charge();
    }
    throw std::logic_error("period deletion did not terminate");
}

inline bool is_highest_weight(const LPartition& lp, const Multicharge& s, Modulus e, const OrderVector& m)
{
    return is_highest_weight_traced(lp, s, e, m).highest_weight;
}

/// One block per step: the symbol, then the period deleted from it.
inline std::string render_trace(const HighestWeightResult& result)
{
    std::ostringstream os;
    os << "s' = (";
    for (std::size_t k = 0; k < result.decomposition.shifted_charge.size(); ++k)
        os << (k ? "," : "") << result.decomposition.shifted_charge[k];
    os << ")  sigma = (";
    for (std::size_t k = 1; k <= result.decomposition.sigma.size(); ++k)
        os << (k > 1 ? "," : "") << result.decomposition.sigma(k);
    os << ")\n";
    for (std::size_t k = 0; k < result.steps.size(); ++k) {
        const auto& step = result.steps[k];
        os << "step " << k + 1 << ":\n" << render(step.symbol);
        if (step.period) {
            os << "period:";
            for (const auto& b : step.period->boxes)
                os << ' ' << b.entry << "@row" << b.row;
            os << '\n';
        }
    }
    os << (result.highest_weight ? "highest weight\n" : "not highest weight\n");
    return os.str();
}

} // namespace wallcross
