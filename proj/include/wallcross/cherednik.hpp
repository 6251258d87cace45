#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wallcross/crystal.hpp"
#include "wallcross/errors.hpp"
#include "wallcross/graph.hpp"
#include "wallcross/walls.hpp"

namespace wallcross {

/// s = (kappa, s_1, ..., s_l) with kappa = r/e (lowest terms) and r s_j integral.
struct CherednikParams {
    Rational kappa;
    RationalVector s;

    std::size_t level() const { return s.size(); }

    /// |numerator of kappa|.
    std::int64_t r() const { return kappa.numerator() < 0 ? -kappa.numerator() : kappa.numerator(); }
    std::int64_t e() const { return kappa.denominator(); }

    /// Throws ConfigurationError when the parameter conditions fail.
    void validate() const
    {
        if (sign(kappa) == 0)
            throw ConfigurationError("kappa must be nonzero");
        if (s.empty())
            throw ConfigurationError("the charge vector is empty");
        if (e() < 2)
            throw ConfigurationError("kappa = " + to_string(kappa) + " has denominator 1; need e >= 2");
        for (std::size_t j = 0; j < s.size(); ++j)
            if (!is_integer(Rational(r()) * s[j]))
                throw ConfigurationError("r s_" + std::to_string(j + 1) + " = " + to_string(Rational(r()) * s[j]) +
                                         " is not an integer");
    }

    bool operator==(const CherednikParams&) const = default;
};

inline nlohmann::json to_json(const CherednikParams& p)
{
    nlohmann::json s = nlohmann::json::array();
    for (const auto& x : p.s)
        s.push_back(to_string(x));
    return {{"kappa", to_string(p.kappa)}, {"s", std::move(s)}};
}

namespace detail {

inline Rational rational_from_json(const nlohmann::json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<std::int64_t>());
    throw ParseError("expected a rational string such as \"3/2\"");
}

} // namespace detail

/// {"kappa": "3/2", "s": ["1/3", "2/3"]}
inline CherednikParams params_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("kappa") || !j.contains("s") || !j.at("s").is_array())
        throw ParseError("parameters must be an object with \"kappa\" and an \"s\" array");
    CherednikParams p{detail::rational_from_json(j.at("kappa")), {}};
    for (const auto& x : j.at("s"))
        p.s.push_back(detail::rational_from_json(x));
    return p;
}

inline CherednikParams parse_params(const std::string& text)
{
    try {
        return params_from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("bad parameter JSON: ") + ex.what());
    }
}

/// A class x + (1/|kappa|) Z, stored by its representative in [0, 1/|kappa|).
class CherResidue {
public:
    CherResidue(Rational value, Rational modulus) : modulus_(modulus), rep_(reduce_mod(value, modulus)) {}

    const Rational& representative() const { return rep_; }
    const Rational& modulus() const { return modulus_; }

    CherResidue operator-() const { return CherResidue(-rep_, modulus_); }

    std::string to_string() const { return wallcross::to_string(rep_); }

    bool operator==(const CherResidue& o) const { return modulus_ == o.modulus_ && rep_ == o.rep_; }
    bool operator<(const CherResidue& o) const
    {
        if (modulus_ != o.modulus_)
            return modulus_ < o.modulus_;
        return rep_ < o.rep_;
    }

private:
    Rational modulus_;
    Rational rep_;
};

inline nlohmann::json color_json(const CherResidue& r) { return r.to_string(); }
inline std::string color_label(const CherResidue& r) { return r.to_string(); }

/// Colors b - a + s_c mod 1/kappa, nodes ordered by kappa l (b - a + s_c) - c.
class CherednikFock {
public:
    using color_type = CherResidue;

    explicit CherednikFock(CherednikParams p)
        : p_(std::move(p)), order_(NodeOrder::cherednik(p_.kappa, p_.s))
    {
        p_.validate();
    }

    std::size_t level() const { return p_.level(); }
    const CherednikParams& params() const { return p_; }

    CherResidue color(const Node& n) const { return CherResidue(content(n, p_.s), Rational(p_.e(), p_.r())); }
    Rational order_key(const Node& n) const { return order_.key(n); }

private:
    CherednikParams p_;
    NodeOrder order_;
};

static_assert(FockStructure<CherednikFock>);

struct CrystalData {
    Multicharge c;   // in {0, ..., e-1}
    std::vector<std::int64_t> d;
    OrderVector m;   // m_j = s_j - j e / (r l)
    RationalVector h; // kappa m_j
    Modulus e = Modulus::infinite();
};

namespace detail {

inline std::int64_t mod_inverse(std::int64_t a, std::int64_t mod)
{
    // extended Euclid; gcd(a, mod) = 1 is a precondition
    std::int64_t t = 0, new_t = 1, r = mod, new_r = ((a % mod) + mod) % mod;
    while (new_r != 0) {
        auto q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (r != 1)
        throw std::logic_error("not invertible");
    return ((t % mod) + mod) % mod;
}

inline void require_positive(const CherednikParams& p)
{
    if (sign(p.kappa) <= 0)
        throw ConfigurationError("kappa = " + to_string(p.kappa) + " is not positive; conjugate by # first");
}

} // namespace detail

/// r s_j = e d_j + r c_j with c_j in {0, ..., e-1}.
inline CrystalData derive_crystal_data(const CherednikParams& p)
{
    p.validate();
    detail::require_positive(p);
    const auto r = p.r();
    const auto e = p.e();
    const auto l = static_cast<std::int64_t>(p.level());
    const auto r_inv = detail::mod_inverse(r, e);
    CrystalData out;
    out.e = Modulus::finite(static_cast<int>(e));
    for (std::size_t j = 0; j < p.level(); ++j) {
        const auto a = (Rational(r) * p.s[j]).numerator();
        const auto c = (((a % e) * r_inv) % e + e) % e;
        out.c.push_back(static_cast<int>(c));
        out.d.push_back((a - r * c) / e);
        const auto jj = static_cast<std::int64_t>(j + 1);
        out.m.push_back(p.s[j] - Rational(jj * e, r * l));
        out.h.push_back(p.kappa * out.m.back());
    }
    return out;
}

/// psi : Z/eZ -> I_s, i mod e |-> i mod (1/kappa) Z.
inline auto psi_color_map(const CherednikParams& p)
{
    const Rational modulus(p.e(), p.r());
    return [modulus](const Residue& i) { return CherResidue(Rational(i.value()), modulus); };
}

inline Partition conjugate(const Partition& p) { return p.transpose(); }

/// lambda^# = ((lambda^l)^t, ..., (lambda^1)^t).
inline LPartition sharp_conjugate(const LPartition& lp)
{
    std::vector<Partition> comps;
    for (std::size_t c = lp.level(); c >= 1; --c)
        comps.push_back(lp.component(c).transpose());
    return LPartition(std::move(comps));
}

/// (kappa, s) -> (-kappa, (-s_l, ..., -s_1)).
inline CherednikParams sharp_params(const CherednikParams& p)
{
    CherednikParams out{-p.kappa, {}};
    for (auto it = p.s.rbegin(); it != p.s.rend(); ++it)
        out.s.push_back(-*it);
    return out;
}

/// Node (a, b, c) of lambda goes to (b, a, l + 1 - c) of lambda^#.
inline Node sharp_node(const Node& n, std::size_t level)
{
    return Node{n.col, n.row, static_cast<int>(level) + 1 - n.comp};
}

/// The graph G_s. For kappa < 0 the order is not built directly: the graph
/// is transported from G_{s#} through #, with colors negated.
inline CrystalGraph<CherResidue> cherednik_order_graph(std::size_t level, int n, const CherednikParams& p)
{
    p.validate();
    if (p.level() != level)
        throw std::invalid_argument("parameter charge length differs from level");
    if (sign(p.kappa) > 0)
        return build_graph(CherednikFock(p), n);
    auto dual = build_graph(CherednikFock(sharp_params(p)), n);
    CrystalGraph<CherResidue> g(level, n);
    for (const auto& edge : dual.edges()) {
        auto src = sharp_conjugate(dual.vertices()[edge.src]);
        auto dst = sharp_conjugate(dual.vertices()[edge.dst]);
        g.add_edge(*g.index_of(src), *g.index_of(dst), -edge.color);
    }
    return g;
}

struct EssentialWallWitness {
    bool essential = false;
    std::optional<std::int64_t> a; // m_i - m_j when integral
};

/// The definition: an integer a with |a| < n, m_i - m_j = a and
/// s_i - s_j - a in (1/kappa) Z.
inline EssentialWallWitness essential_wall_test(const CherednikParams& p, int n, std::size_t i, std::size_t j)
{
    if (i == j || i < 1 || j < 1 || i > p.level() || j > p.level())
        throw std::invalid_argument("essential wall needs distinct indices in 1..l");
    auto data = derive_crystal_data(p);
    const auto diff = data.m[i - 1] - data.m[j - 1];
    EssentialWallWitness out;
    if (!is_integer(diff))
        return out;
    out.a = diff.numerator();
    const auto a = *out.a;
    const auto gap = (p.s[i - 1] - p.s[j - 1] - Rational(a)) * p.kappa;
    out.essential = (a < n && -a < n) && is_integer(gap);
    return out;
}

/// The same test phrased through the crystal data: |m_i - m_j| < n and
/// c_j - m_j - (c_i - m_i) in e Z.
inline bool essential_wall_test_congruence(const CherednikParams& p, int n, std::size_t i, std::size_t j)
{
    if (i == j || i < 1 || j < 1 || i > p.level() || j > p.level())
        throw std::invalid_argument("essential wall needs distinct indices in 1..l");
    auto data = derive_crystal_data(p);
    const auto gap = Rational(data.c[j - 1]) - data.m[j - 1] - (Rational(data.c[i - 1]) - data.m[i - 1]);
    const auto diff = abs(data.m[i - 1] - data.m[j - 1]);
    return is_integer(gap / Rational(data.e.value())) && diff < Rational(n);
}

/// kappa - kappa' in Z and kappa s_j - kappa' s'_j in Z for every j.
inline bool params_compatible(const CherednikParams& p, const CherednikParams& q)
{
    if (p.level() != q.level())
        return false;
    if (!is_integer(p.kappa - q.kappa))
        return false;
    for (std::size_t j = 0; j < p.level(); ++j)
        if (!is_integer(p.kappa * p.s[j] - q.kappa * q.s[j]))
            return false;
    return true;
}

/// wc_{p -> p'} as Psi^c_{m, m'}. Refuses when more than one essential wall
/// separates m and m'; route those through wall_cross directly.
inline LPartition wall_crossing_bijection(const LPartition& lp, const CherednikParams& p, const CherednikParams& q)
{
    p.validate();
    q.validate();
    detail::check_level(lp, p.level());
    if (!params_compatible(p, q))
        throw ConfigurationError("parameters are not compatible: need kappa - kappa' and kappa s_j - kappa' s'_j "
                                 "to be integers");
    if (sign(p.kappa) != sign(q.kappa))
        throw ConfigurationError("kappa and kappa' have opposite signs");
    if (sign(p.kappa) < 0)
        return sharp_conjugate(wall_crossing_bijection(sharp_conjugate(lp), sharp_params(p), sharp_params(q)));

    auto from = derive_crystal_data(p);
    auto to = derive_crystal_data(q);
    if (from.c != to.c)
        throw std::logic_error("compatible parameters gave different c");
    auto walls = essential_walls(lp.level(), lp.rank(), from.e, from.c);
    auto a = signature(from.m, walls);
    auto b = signature(to.m, walls);
    std::size_t separating = 0;
    for (std::size_t k = 0; k < walls.size(); ++k)
        separating += a[k] != b[k];
    if (separating > 1)
        throw ConfigurationError(std::to_string(separating) +
                                 " essential walls separate the parameters; use wall-cross on (m, m') instead");
    return wall_cross(lp, from.c, from.e, from.m, to.m);
}

} // namespace wallcross
