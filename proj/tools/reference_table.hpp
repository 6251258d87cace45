#pragma once

#include <array>

#include "wallcross/wallcross.hpp"

// e = 2, s = (0,0), rank 3: one representative per chamber of the three
// walls m_2 - m_1 in {-2, 0, 2}, and the orbit of every bipartition of 3
// under the wall-crossing maps between them.
namespace wallcross::reference {

inline std::array<OrderVector, 4> chamber_points()
{
    return {OrderVector{Rational(0), Rational(-3)}, OrderVector{Rational(0), Rational(-1)},
            OrderVector{Rational(0), Rational(1)}, OrderVector{Rational(0), Rational(3)}};
}

struct OrbitRow {
    bool highest_weight;
    std::array<LPartition, 4> columns;
};

inline std::array<OrbitRow, 10> orbit_table()
{
    using P = Partition;
    auto bp = [](P a, P b) { return LPartition{std::move(a), std::move(b)}; };
    const P e{};
    const P p1{1}, p2{2}, p3{3}, p11{1, 1}, p21{2, 1}, p111{1, 1, 1};
    return {{
        {true, {bp(e, p111), bp(e, p111), bp(p111, e), bp(p111, e)}},
        {false, {bp(e, p21), bp(e, p21), bp(p21, e), bp(p21, e)}},
        {true, {bp(e, p3), bp(p111, e), bp(e, p111), bp(p3, e)}},
        {false, {bp(p1, p11), bp(p1, p11), bp(p11, p1), bp(p11, p1)}},
        {false, {bp(p1, p2), bp(e, p3), bp(p3, e), bp(p2, p1)}},
        {true, {bp(p11, p1), bp(p1, p2), bp(p2, p1), bp(p1, p11)}},
        {false, {bp(p111, e), bp(p11, p1), bp(p1, p11), bp(e, p111)}},
        {false, {bp(p2, p1), bp(p2, p1), bp(p1, p2), bp(p1, p2)}},
        {false, {bp(p21, e), bp(p21, e), bp(e, p21), bp(e, p21)}},
        {false, {bp(p3, e), bp(p3, e), bp(e, p3), bp(e, p3)}},
    }};
}

} // namespace wallcross::reference
