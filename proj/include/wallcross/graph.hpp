#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "wallcross/crystal.hpp"
#include "wallcross/partition.hpp"

namespace wallcross {

inline nlohmann::json color_json(const Residue& r) { return r.value(); }
inline std::string color_label(const Residue& r) { return r.to_string(); }

/// Colored directed graph on all l-partitions of rank 0..n.
///
/// Vertices are ordered by rank, then lexicographically. Edges are the
/// arrows lambda -z-> mu with f_z(lambda) = mu.
template <class Color>
class CrystalGraph {
public:
    struct Edge {
        std::size_t src;
        std::size_t dst;
        Color color;

        bool operator==(const Edge&) const = default;
    };

    CrystalGraph(std::size_t level, int bound) : level_(level), bound_(bound)
    {
        vertices_ = lpartitions_up_to(level, bound);
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            index_.emplace(vertices_[i], i);
        incoming_.assign(vertices_.size(), false);
    }

    std::size_t level() const { return level_; }
    int bound() const { return bound_; }
    const std::vector<LPartition>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    std::optional<std::size_t> index_of(const LPartition& lp) const
    {
        auto it = index_.find(lp);
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    void add_edge(std::size_t src, std::size_t dst, const Color& color)
    {
        auto [it, inserted] = out_.emplace(std::make_pair(src, color), dst);
        if (!inserted)
            throw std::logic_error("duplicate outgoing edge of one color");
        if (!in_.emplace(std::make_pair(dst, color), src).second)
            throw std::logic_error("duplicate incoming edge of one color");
        edges_.push_back(Edge{src, dst, color});
        incoming_[dst] = true;
    }

    std::optional<std::size_t> successor(std::size_t v, const Color& c) const
    {
        auto it = out_.find({v, c});
        if (it == out_.end())
            return std::nullopt;
        return it->second;
    }

    std::optional<std::size_t> predecessor(std::size_t v, const Color& c) const
    {
        auto it = in_.find({v, c});
        if (it == in_.end())
            return std::nullopt;
        return it->second;
    }

    bool has_edge(std::size_t src, std::size_t dst, const Color& c) const
    {
        auto s = successor(src, c);
        return s && *s == dst;
    }

    bool has_incoming(std::size_t v) const { return incoming_.at(v); }

    /// Vertices without incoming edges.
    std::vector<LPartition> highest_weight_vertices() const
    {
        std::vector<LPartition> out;
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            if (!incoming_[i])
                out.push_back(vertices_[i]);
        return out;
    }

    /// {"vertices": [[[..],[..]], ...], "edges": [{"src": i, "dst": j, "color": c}, ...]}
    nlohmann::json to_json() const
    {
        nlohmann::json j;
        j["level"] = level_;
        j["bound"] = bound_;
        auto verts = nlohmann::json::array();
        for (const auto& v : vertices_)
            verts.push_back(wallcross::to_json(v));
        j["vertices"] = std::move(verts);
        auto es = nlohmann::json::array();
        for (const auto& e : edges_)
            es.push_back({{"src", e.src}, {"dst", e.dst}, {"color", color_json(e.color)}});
        j["edges"] = std::move(es);
        return j;
    }

    std::string to_dot() const
    {
        std::ostringstream os;
        os << "digraph crystal {\n";
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            os << "  v" << i << " [label=\"" << vertices_[i].to_string() << "\"];\n";
        for (const auto& e : edges_)
            os << "  v" << e.src << " -> v" << e.dst << " [label=\"" << color_label(e.color) << "\"];\n";
        os << "}\n";
        return os.str();
    }

private:
    std::size_t level_;
    int bound_;
    std::vector<LPartition> vertices_;
    std::map<LPartition, std::size_t> index_;
    std::vector<Edge> edges_;
    std::map<std::pair<std::size_t, Color>, std::size_t> out_;
    std::map<std::pair<std::size_t, Color>, std::size_t> in_;
    std::vector<bool> incoming_;
};

/// Builds the full colored graph on l-partitions of rank 0..n.
template <FockStructure F>
CrystalGraph<typename F::color_type> build_graph(const F& fock, int n)
{
    if (n < 0)
        throw std::invalid_argument("graph bound must be nonnegative");
    CrystalGraph<typename F::color_type> g(fock.level(), n);
    const auto& verts = g.vertices();
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (verts[i].rank() >= n)
            continue;
        std::set<typename F::color_type> colors;
        for (const auto& node : all_addable_nodes(verts[i]))
            colors.insert(fock.color(node));
        for (const auto& z : colors) {
            if (auto target = f_tilde(fock, verts[i], z))
                g.add_edge(i, *g.index_of(*target), z);
        }
    }
    return g;
}

inline CrystalGraph<Residue> build_graph(std::size_t level, int n, Modulus e, const Multicharge& s,
                                         const NodeOrder& order)
{
    if (s.size() != level)
        throw std::invalid_argument("multicharge length differs from level");
    return build_graph(JmmoFock(e, s, order), n);
}

/// True iff both graphs have the same vertices, the identity maps every
/// i-colored edge of g1 to a psi(i)-colored edge of g2 and back, and the
/// highest-weight vertices agree.
template <class C1, class C2, class ColorMap>
bool graphs_equivalent(const CrystalGraph<C1>& g1, const CrystalGraph<C2>& g2, ColorMap psi)
{
    if (g1.vertices() != g2.vertices() || g1.edges().size() != g2.edges().size())
        return false;
    for (const auto& e : g1.edges())
        if (!g2.has_edge(e.src, e.dst, psi(e.color)))
            return false;
    return g1.highest_weight_vertices() == g2.highest_weight_vertices();
}

} // namespace wallcross
