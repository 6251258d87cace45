#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

#include "wallcross/crystal.hpp"
#include "wallcross/errors.hpp"
#include "wallcross/symbol.hpp"

namespace wallcross {

struct MatchResult {
    Symbol swapped;
    std::vector<std::int64_t> matched; // y_1, y_2, ... in the order they were picked
};

/// The matching step of the canonical bipartition isomorphism.
///
/// With L1 the bottom row and L2 the top row: if L1 is not longer than L2,
/// each minimum x of what is left of L1 is matched with the largest
/// remaining z <= x in L2, wrapping around to the largest remaining entry of
/// L2 when there is none. The matched entries form the new bottom row and the
/// rest of L2 together with L1 the new top row. The other case is dual, with
/// the rows exchanged and the inequalities reversed.
inline MatchResult match_and_swap(const Symbol& sym)
{
    if (sym.level() != 2)
        throw std::invalid_argument("match_and_swap needs a two-row symbol");
    const auto& l1 = sym.rows[0];
    const auto& l2 = sym.rows[1];
    const bool bottom_shorter = sym.row_charge(1) >= sym.row_charge(0); // s2 >= s1

    MatchResult out;
    out.swapped.baseline = sym.baseline;
    const auto& shorter = bottom_shorter ? l1 : l2;
    std::vector<std::int64_t> pool = bottom_shorter ? l2 : l1; // sorted
    assert(shorter.size() <= pool.size());

    for (auto x : shorter) { // increasing, so always the minimum of what is left
        std::vector<std::int64_t>::iterator pick;
        if (bottom_shorter) {
            // largest z <= x, else the largest element
            auto it = std::upper_bound(pool.begin(), pool.end(), x);
            pick = it == pool.begin() ? std::prev(pool.end()) : std::prev(it);
        } else {
            // smallest z >= x, else the smallest element
            auto it = std::lower_bound(pool.begin(), pool.end(), x);
            pick = it == pool.end() ? pool.begin() : it;
        }
        out.matched.push_back(*pick);
        pool.erase(pick);
    }

    std::vector<std::int64_t> new_short = out.matched;
    std::sort(new_short.begin(), new_short.end());
    std::vector<std::int64_t> new_long = pool;
    new_long.insert(new_long.end(), shorter.begin(), shorter.end());
    std::sort(new_long.begin(), new_long.end());

    if (bottom_shorter)
        out.swapped.rows = {std::move(new_short), std::move(new_long)};
    else
        out.swapped.rows = {std::move(new_long), std::move(new_short)};
    return out;
}

namespace detail {

inline void check_bipartition(const LPartition& bp)
{
    if (bp.level() != 2)
        throw std::invalid_argument("expected a bipartition, got level " + std::to_string(bp.level()));
}

} // namespace detail

/// F(mu1, mu2) = (mu2, mu1).
inline LPartition flip(const LPartition& bp)
{
    detail::check_bipartition(bp);
    return LPartition{bp[1], bp[0]};
}

/// The canonical isomorphism Phi^{(s1,s2)} for e = infinity.
inline LPartition phi_bipartition(const LPartition& bp, int s1, int s2)
{
    detail::check_bipartition(bp);
    auto result = match_and_swap(symbol_of(bp, {s1, s2}));
    return lpartition_of(result.swapped);
}

/// Phi^{-1} = R_{(s2,s1)} o F.
inline LPartition phi_bipartition_inverse(const LPartition& bp, int s1, int s2)
{
    return flip(phi_bipartition(flip(bp), s2, s1));
}

/// Combinatorial R-matrix R_{(s1,s2)} = F o Phi^{(s1,s2)}.
inline LPartition r_matrix(const LPartition& bp, int s1, int s2) { return flip(phi_bipartition(bp, s1, s2)); }

namespace detail {

/// s_i - m_i - (s_j - m_j) for 1-based i, j.
template <class Charge>
Rational wall_expression(const std::vector<Charge>& s, const OrderVector& m, std::size_t i, std::size_t j)
{
    return Rational(s.at(i - 1)) - m.at(i - 1) - (Rational(s.at(j - 1)) - m.at(j - 1));
}

inline void check_pair(std::size_t level, std::size_t i, std::size_t j)
{
    if (i < 1 || j > level || i >= j)
        throw std::invalid_argument("wall indices must satisfy 1 <= i < j <= l");
}

} // namespace detail

/// Crosses the e = infinity wall s_i - m_i = s_j - m_j from m to m'. Applies
/// Phi^{(s_i,s_j)} to components (i, j) when m_i - s_i - (m_j - s_j) > 0 at m,
/// its inverse otherwise; other components are untouched.
inline LPartition phi_infinity_wall(const LPartition& lp, const Multicharge& s, const OrderVector& m,
                                    const OrderVector& m_prime, std::size_t i, std::size_t j)
{
    detail::check_level(lp, s.size());
    detail::check_pair(lp.level(), i, j);
    if (m.size() != s.size() || m_prime.size() != s.size())
        throw std::invalid_argument("order vectors must have length l");
    auto before = detail::wall_expression(s, m, i, j);
    auto after = detail::wall_expression(s, m_prime, i, j);
    if (sign(before) == 0 || sign(after) == 0)
        throw ConfigurationError("order vector lies on the wall (" + std::to_string(i) + "," + std::to_string(j) + ")");
    if (sign(before) == sign(after))
        throw ConfigurationError("order vectors lie on the same side of the wall (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
    LPartition pair{lp.component(i), lp.component(j)};
    // before = -(m_i - s_i - (m_j - s_j))
    auto mapped = sign(before) < 0 ? phi_bipartition(pair, s[i - 1], s[j - 1])
                             : phi_bipartition_inverse(pair, s[i - 1], s[j - 1]);
    return lp.with_component(i, mapped[0]).with_component(j, mapped[1]);
}

/// Crosses the finite-e wall s_i - m_i - (s_j - m_j) = N e from m to m' by
/// crossing the e = infinity wall for the shifted charge (..., s_i - N e, ...).
inline LPartition psi_single_wall(const LPartition& lp, const Multicharge& s, Modulus e, const OrderVector& m,
                                  const OrderVector& m_prime, std::size_t i, std::size_t j, int N)
{
    detail::check_level(lp, s.size());
    detail::check_pair(lp.level(), i, j);
    auto shifted = s;
    if (e.is_finite())
        shifted[i - 1] -= N * e.value();
    else if (N != 0)
        throw std::invalid_argument("walls for e = infinity have N = 0");
    return phi_infinity_wall(lp, shifted, m, m_prime, i, j);
}

} // namespace wallcross
