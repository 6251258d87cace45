#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wallcross/crystal.hpp"
#include "wallcross/errors.hpp"
#include "wallcross/rmatrix.hpp"

namespace wallcross {

/// The hyperplane s_i - m_i - (s_j - m_j) = N e in order-vector space
/// (N = 0 and no e term when e is infinite). Indices are 1-based, i < j.
struct Wall {
    std::size_t i = 1;
    std::size_t j = 2;
    int N = 0;
    Multicharge s;
    Modulus e = Modulus::infinite();

    /// s_i - m_i - (s_j - m_j) - N e; zero exactly on the wall.
    Rational value(const OrderVector& m) const
    {
        auto v = detail::wall_expression(s, m, i, j);
        if (e.is_finite())
            v -= Rational(static_cast<std::int64_t>(N) * e.value());
        return v;
    }

    bool contains(const OrderVector& m) const { return sign(value(m)) == 0; }

    /// N e + (s_j - s_i): the wall is m_j - m_i = offset().
    std::int64_t offset() const
    {
        return (e.is_finite() ? static_cast<std::int64_t>(N) * e.value() : 0) + s.at(j - 1) - s.at(i - 1);
    }

    bool essential_for(int n) const { return std::abs(offset()) <= n; }

    std::string to_string() const
    {
        std::string out = "(" + std::to_string(i) + "," + std::to_string(j);
        if (e.is_finite())
            out += "," + std::to_string(N);
        return out + ")";
    }

    bool operator==(const Wall&) const = default;
};

/// Walls (i, j, N), i < j, with |N e + s_j - s_i| <= n; sorted by (i, j, N).
inline std::vector<Wall> essential_walls(std::size_t level, int n, Modulus e, const Multicharge& s)
{
    if (s.size() != level)
        throw std::invalid_argument("multicharge length differs from level");
    std::vector<Wall> out;
    for (std::size_t i = 1; i <= level; ++i) {
        for (std::size_t j = i + 1; j <= level; ++j) {
            const std::int64_t d = s[j - 1] - s[i - 1];
            if (!e.is_finite()) {
                if (std::abs(d) <= n)
                    out.push_back(Wall{i, j, 0, s, e});
                continue;
            }
            const std::int64_t ev = e.value();
            // N e + d in [-n, n]
            auto lo = floor(Rational(-n - d, ev));
            if (Rational(-n - d, ev) != Rational(lo))
                ++lo;
            auto hi = floor(Rational(n - d, ev));
            for (auto N = lo; N <= hi; ++N)
                out.push_back(Wall{i, j, static_cast<int>(N), s, e});
        }
    }
    return out;
}

/// One sign (+1 or -1) per wall.
using ChamberSignature = std::vector<int>;

inline ChamberSignature signature(const OrderVector& m, const std::vector<Wall>& walls)
{
    ChamberSignature sig;
    sig.reserve(walls.size());
    for (const auto& w : walls) {
        auto v = w.value(m);
        if (sign(v) == 0)
            throw ConfigurationError("order vector lies on the wall " + w.to_string());
        sig.push_back(sign(v));
    }
    return sig;
}

inline std::string signature_string(const ChamberSignature& sig)
{
    std::string out;
    for (int x : sig)
        out += x > 0 ? '+' : '-';
    return out;
}

struct Crossing {
    Wall wall;
    int from_sign = 0; // sign of the wall value on the side being left
    Rational t;        // crossing parameter on the segment, in (0, 1)
};

struct CrossingPath {
    OrderVector start; // possibly perturbed copies of the endpoints
    OrderVector end;
    std::vector<Crossing> crossings;
};

namespace detail {

inline int odd_prime(std::size_t k)
{
    static const int primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73};
    return primes[k % (sizeof(primes) / sizeof(primes[0]))];
}

/// (1, 1/p_2, ..., 1/p_l) with p_k the k-th odd prime when shift = 0;
/// (1/q_1, ..., 1/q_l) with primes further down the list otherwise.
inline OrderVector perturbation_direction(std::size_t level, std::size_t shift)
{
    OrderVector v;
    for (std::size_t k = 0; k < level; ++k) {
        if (shift == 0)
            v.push_back(k == 0 ? Rational(1) : Rational(1, odd_prime(k - 1)));
        else
            v.push_back(Rational(1, odd_prime(k + shift)));
    }
    return v;
}

inline Rational min_wall_distance(const OrderVector& m, const std::vector<Wall>& walls)
{
    std::optional<Rational> best;
    for (const auto& w : walls) {
        auto v = abs(w.value(m));
        if (!best || v < *best)
            best = v;
    }
    return best.value_or(Rational(1));
}

inline OrderVector axpy(const OrderVector& m, const Rational& eps, const OrderVector& v)
{
    OrderVector out = m;
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] += eps * v[k];
    return out;
}

inline std::optional<std::vector<Crossing>> crossings_if_simple(const OrderVector& a, const OrderVector& b,
                                                               const std::vector<Wall>& walls)
{
    std::vector<Crossing> out;
    for (const auto& w : walls) {
        auto va = w.value(a);
        auto vb = w.value(b);
        if (sign(va) != sign(vb))
            out.push_back(Crossing{w, sign(va), va / (va - vb)});
    }
    std::sort(out.begin(), out.end(), [](const Crossing& x, const Crossing& y) { return x.t < y.t; });
    for (std::size_t k = 1; k < out.size(); ++k)
        if (out[k].t == out[k - 1].t)
            return std::nullopt;
    return out;
}

} // namespace detail

/// Moves m by a small multiple of a fixed generic direction without leaving its chamber.
inline OrderVector nudge_within_chamber(const OrderVector& m, const std::vector<Wall>& walls, std::size_t shift = 0)
{
    signature(m, walls); // throws when m is on a wall
    auto eps = detail::min_wall_distance(m, walls) / 4;
    return detail::axpy(m, eps, detail::perturbation_direction(m.size(), shift));
}

/// Walls crossed by the segment m -> m', ordered along the segment. When two
/// walls are hit at the same point the endpoints are moved within their
/// chambers until the crossings separate.
inline CrossingPath crossing_path(const OrderVector& m, const OrderVector& m_prime, const std::vector<Wall>& walls)
{
    if (m.size() != m_prime.size())
        throw std::invalid_argument("order vectors of different lengths");
    signature(m, walls);
    signature(m_prime, walls);
    if (auto simple = detail::crossings_if_simple(m, m_prime, walls))
        return CrossingPath{m, m_prime, std::move(*simple)};

    const auto v = detail::perturbation_direction(m.size(), 0);
    const auto w = detail::perturbation_direction(m.size(), m.size());
    auto eps = detail::min_wall_distance(m, walls) / 2;
    auto eps_prime = detail::min_wall_distance(m_prime, walls) / 2;
    for (int attempt = 0; attempt < 16; ++attempt) {
        auto a = detail::axpy(m, eps, v);
        auto b = detail::axpy(m_prime, eps_prime, w);
        if (auto simple = detail::crossings_if_simple(a, b, walls))
            return CrossingPath{a, b, std::move(*simple)};
        eps /= 3;
        eps_prime /= 2;
    }
    throw ConfigurationError("could not separate simultaneous wall crossings");
}

inline LPartition psi_single_wall(const LPartition& lp, const OrderVector& m, const OrderVector& m_prime,
                                  const Wall& wall)
{
    return psi_single_wall(lp, wall.s, wall.e, m, m_prime, wall.i, wall.j, wall.N);
}

/// Composes the single-wall bijections along the segment m -> m', routing
/// through the walls essential for the rank of lp.
inline LPartition wall_cross(const LPartition& lp, const Multicharge& s, Modulus e, const OrderVector& m,
                             const OrderVector& m_prime)
{
    detail::check_level(lp, s.size());
    auto walls = essential_walls(lp.level(), lp.rank(), e, s);
    auto path = crossing_path(m, m_prime, walls);
    const auto k = path.crossings.size();
    std::vector<OrderVector> points{path.start};
    for (std::size_t r = 1; r < k; ++r) {
        auto t = (path.crossings[r - 1].t + path.crossings[r].t) / 2;
        OrderVector p = path.start;
        for (std::size_t c = 0; c < p.size(); ++c)
            p[c] += t * (path.end[c] - path.start[c]);
        points.push_back(std::move(p));
    }
    points.push_back(path.end);

    LPartition current = lp;
    for (std::size_t r = 0; r < k; ++r)
        current = psi_single_wall(current, points[r], points[r + 1], path.crossings[r].wall);
    return current;
}

struct Chamber {
    ChamberSignature signature;
    OrderVector sample;
};

/// One sample point for every chamber of the essential arrangement.
///
/// Every wall is m_j - m_i = c with c an integer, so each chamber contains an
/// alcove of the affine braid arrangement, and alcove barycenters have
/// coordinates in (1/l)Z with pairwise distinct residues mod 1. With m_1 = 0
/// and gaps capped at max|c| + 1 every chamber is reached. The sample
/// reported is the one with the smallest sup-norm.
inline std::vector<Chamber> enumerate_chambers(std::size_t level, int n, Modulus e, const Multicharge& s)
{
    auto walls = essential_walls(level, n, e, s);
    std::int64_t bound = 0;
    for (const auto& w : walls)
        bound = std::max<std::int64_t>(bound, std::abs(w.offset()));
    const auto l = static_cast<std::int64_t>(level);
    const std::int64_t reach = (l - 1) * (bound + 1) * l; // in units of 1/l

    std::map<ChamberSignature, std::pair<Rational, OrderVector>> found;
    std::vector<std::int64_t> numer(level, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == level) {
            OrderVector m;
            Rational norm(0);
            for (auto a : numer) {
                m.emplace_back(a, l);
                norm = std::max(norm, abs(Rational(a, l)));
            }
            auto sig = signature(m, walls);
            auto it = found.find(sig);
            if (it == found.end() || norm < it->second.first)
                found[sig] = {norm, m};
            return;
        }
        for (std::int64_t a = -reach; a <= reach; ++a) {
            auto r = ((a % l) + l) % l;
            bool distinct = true;
            for (std::size_t q = 0; q < k; ++q)
                if (((numer[q] % l) + l) % l == r)
                    distinct = false;
            if (!distinct)
                continue;
            numer[k] = a;
            rec(k + 1);
        }
    };
    rec(1); // m_1 = 0

    std::vector<Chamber> out;
    for (auto& [sig, entry] : found)
        out.push_back(Chamber{sig, entry.second});
    std::sort(out.begin(), out.end(), [](const Chamber& a, const Chamber& b) {
        return a.sample < b.sample;
    });
    return out;
}

} // namespace wallcross
