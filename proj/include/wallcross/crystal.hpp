#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wallcross/errors.hpp"
#include "wallcross/node.hpp"
#include "wallcross/partition.hpp"
#include "wallcross/rational.hpp"

namespace wallcross {

/// Order vector m = (m_1, ..., m_l).
using OrderVector = RationalVector;

/// Total order on nodes of equal residue, expressed through a rational sort key.
///
/// m-order: key b - a + m_c. The reversed m-order negates it. The Cherednik
/// order uses kappa * l * (b - a + s_c) - c.
class NodeOrder {
public:
    enum class Kind { m_order, m_order_reversed, cherednik };

    static NodeOrder m_order(OrderVector m) { return NodeOrder(Kind::m_order, std::move(m), Rational(0)); }
    static NodeOrder m_order_reversed(OrderVector m)
    {
        return NodeOrder(Kind::m_order_reversed, std::move(m), Rational(0));
    }
    static NodeOrder cherednik(Rational kappa, RationalVector s)
    {
        if (sign(kappa) <= 0)
            throw ConfigurationError("the Cherednik node order needs kappa > 0; conjugate negative kappa first");
        return NodeOrder(Kind::cherednik, std::move(s), kappa);
    }

    Kind kind() const { return kind_; }
    std::size_t level() const { return vec_.size(); }

    /// m for the m-orders, s for the Cherednik order.
    const RationalVector& vector() const { return vec_; }
    const Rational& kappa() const { return kappa_; }

    Rational key(const Node& n) const
    {
        switch (kind_) {
        case Kind::m_order:
            return content(n, vec_);
        case Kind::m_order_reversed:
            return -content(n, vec_);
        case Kind::cherednik:
            return kappa_ * Rational(static_cast<std::int64_t>(vec_.size())) * content(n, vec_) - Rational(n.comp);
        }
        return Rational(0);
    }

private:
    NodeOrder(Kind kind, RationalVector v, Rational kappa) : kind_(kind), vec_(std::move(v)), kappa_(kappa) {}

    Kind kind_;
    RationalVector vec_;
    Rational kappa_;
};

/// A Fock space datum: something that colors nodes and orders nodes of the same color.
template <class F>
concept FockStructure = requires(const F& f, const Node& n) {
    typename F::color_type;
    { f.level() } -> std::convertible_to<std::size_t>;
    { f.color(n) } -> std::same_as<typename F::color_type>;
    { f.order_key(n) } -> std::same_as<Rational>;
};

/// Integer multicharge s, modulus e, node order. Colors are residues mod e.
class JmmoFock {
public:
    using color_type = Residue;

    JmmoFock(Modulus e, Multicharge s, NodeOrder order) : e_(e), s_(std::move(s)), order_(std::move(order))
    {
        if (order_.level() != s_.size())
            throw std::invalid_argument("order vector and multicharge have different lengths");
    }

    std::size_t level() const { return s_.size(); }
    Modulus modulus() const { return e_; }
    const Multicharge& charge() const { return s_; }
    const NodeOrder& order() const { return order_; }

    Residue color(const Node& n) const { return residue(n, s_, e_); }
    Rational order_key(const Node& n) const { return order_.key(n); }

private:
    Modulus e_;
    Multicharge s_;
    NodeOrder order_;
};

static_assert(FockStructure<JmmoFock>);

/// A letter of a z-word: an addable (A) or removable (R) node.
struct Letter {
    Node node;
    bool addable = false;
    Rational key;

    char symbol() const { return addable ? 'A' : 'R'; }
    bool operator==(const Letter& o) const { return node == o.node && addable == o.addable; }
};

using Word = std::vector<Letter>;

inline std::string word_string(const Word& w)
{
    std::string out;
    for (const auto& l : w)
        out += l.symbol();
    return out;
}

/// Addable and removable z-nodes of lp in increasing order.
template <FockStructure F>
Word z_word(const F& fock, const LPartition& lp, const typename F::color_type& z)
{
    detail::check_level(lp, fock.level());
    Word w;
    for (const auto& n : all_addable_nodes(lp))
        if (fock.color(n) == z)
            w.push_back(Letter{n, true, fock.order_key(n)});
    for (const auto& n : all_removable_nodes(lp))
        if (fock.color(n) == z)
            w.push_back(Letter{n, false, fock.order_key(n)});
    std::sort(w.begin(), w.end(), [](const Letter& a, const Letter& b) { return a.key < b.key; });
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i].key == w[i - 1].key)
            throw ConfigurationError("node order is not total: " + w[i - 1].node.to_string() + " and " +
                                     w[i].node.to_string() +
                                     " compare equal (the order vector lies on a wall)");
    return w;
}

struct ReducedWord {
    Word letters; // A^p R^q
    std::size_t p = 0;
    std::size_t q = 0;
};

/// Cancels adjacent RA pairs until the word has the shape A^p R^q.
inline ReducedWord reduced_word(const Word& word)
{
    ReducedWord out;
    for (const auto& letter : word) {
        if (letter.addable && !out.letters.empty() && !out.letters.back().addable)
            out.letters.pop_back();
        else
            out.letters.push_back(letter);
    }
    for (const auto& l : out.letters)
        (l.addable ? out.p : out.q) += 1;
    return out;
}

template <FockStructure F>
std::optional<Node> good_addable_node(const F& fock, const LPartition& lp, const typename F::color_type& z)
{
    auto red = reduced_word(z_word(fock, lp, z));
    if (red.p == 0)
        return std::nullopt;
    return red.letters[red.p - 1].node;
}

template <FockStructure F>
std::optional<Node> good_removable_node(const F& fock, const LPartition& lp, const typename F::color_type& z)
{
    auto red = reduced_word(z_word(fock, lp, z));
    if (red.q == 0)
        return std::nullopt;
    return red.letters[red.p].node;
}

template <FockStructure F>
std::optional<LPartition> f_tilde(const F& fock, const LPartition& lp, const typename F::color_type& z)
{
    if (auto n = good_addable_node(fock, lp, z))
        return add_node(lp, *n);
    return std::nullopt;
}

template <FockStructure F>
std::optional<LPartition> e_tilde(const F& fock, const LPartition& lp, const typename F::color_type& z)
{
    if (auto n = good_removable_node(fock, lp, z))
        return remove_node(lp, *n);
    return std::nullopt;
}

/// (epsilon_z, phi_z): surviving R and A counts of the reduced z-word.
template <FockStructure F>
std::pair<std::size_t, std::size_t> string_lengths(const F& fock, const LPartition& lp,
                                                   const typename F::color_type& z)
{
    auto red = reduced_word(z_word(fock, lp, z));
    return {red.q, red.p};
}

/// Colors carried by addable or removable nodes of lp; every other color acts by zero.
template <FockStructure F>
std::set<typename F::color_type> active_colors(const F& fock, const LPartition& lp)
{
    std::set<typename F::color_type> out;
    for (const auto& n : all_addable_nodes(lp))
        out.insert(fock.color(n));
    for (const auto& n : all_removable_nodes(lp))
        out.insert(fock.color(n));
    return out;
}

// Convenience overloads taking the raw (s, e, order) data.

inline Word z_word(const LPartition& lp, const Multicharge& s, Modulus e, const Residue& z, const NodeOrder& order)
{
    return z_word(JmmoFock(e, s, order), lp, z);
}

inline std::optional<LPartition> f_tilde(const LPartition& lp, const Multicharge& s, Modulus e, const Residue& z,
                                         const NodeOrder& order)
{
    return f_tilde(JmmoFock(e, s, order), lp, z);
}

inline std::optional<LPartition> e_tilde(const LPartition& lp, const Multicharge& s, Modulus e, const Residue& z,
                                         const NodeOrder& order)
{
    return e_tilde(JmmoFock(e, s, order), lp, z);
}

} // namespace wallcross
