#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "wallcross/crystal.hpp"
#include "wallcross/errors.hpp"
#include "wallcross/partition.hpp"

namespace wallcross {

/// A permutation of {1..l}, stored 0-based: image[k] = sigma(k+1) - 1.
class Permutation {
public:
    static Permutation identity(std::size_t l)
    {
        std::vector<std::size_t> v(l);
        std::iota(v.begin(), v.end(), 0);
        return Permutation(std::move(v));
    }

    /// From 1-based images (sigma(1), ..., sigma(l)).
    static Permutation from_images(const std::vector<int>& one_based)
    {
        std::vector<std::size_t> v;
        for (int x : one_based) {
            if (x < 1)
                throw std::invalid_argument("permutation images are 1-based");
            v.push_back(static_cast<std::size_t>(x - 1));
        }
        return Permutation(std::move(v));
    }

    explicit Permutation(std::vector<std::size_t> image) : image_(std::move(image))
    {
        std::vector<bool> seen(image_.size(), false);
        for (auto x : image_) {
            if (x >= image_.size() || seen[x])
                throw std::invalid_argument("not a permutation");
            seen[x] = true;
        }
    }

    std::size_t size() const { return image_.size(); }

    /// 1-based application.
    std::size_t operator()(std::size_t k) const { return image_.at(k - 1) + 1; }

    Permutation inverse() const
    {
        std::vector<std::size_t> inv(image_.size());
        for (std::size_t k = 0; k < image_.size(); ++k)
            inv[image_[k]] = k;
        return Permutation(std::move(inv));
    }

    bool is_identity() const
    {
        for (std::size_t k = 0; k < image_.size(); ++k)
            if (image_[k] != k)
                return false;
        return true;
    }

    const std::vector<std::size_t>& zero_based() const { return image_; }

    bool operator==(const Permutation&) const = default;

    /// Output position k holds input entry sigma(k).
    template <class T>
    std::vector<T> apply(const std::vector<T>& v) const
    {
        if (v.size() != image_.size())
            throw std::invalid_argument("permutation size mismatch");
        std::vector<T> out;
        out.reserve(v.size());
        for (auto x : image_)
            out.push_back(v[x]);
        return out;
    }

private:
    std::vector<std::size_t> image_;
};

inline LPartition permute_components(const LPartition& lp, const Permutation& sigma)
{
    return LPartition(sigma.apply(lp.components()));
}

struct JmmoDecomposition {
    Multicharge shifted_charge; // s' with s' = s (mod e) and m = s' + delta'
    RationalVector delta;       // delta'_c in [0, e)
    Permutation sigma;          // delta'_{sigma(1)} > ... > delta'_{sigma(l)}
};

/// Writes m = s' + delta' with delta' in [0, e)^l and finds the permutation
/// sorting delta' strictly decreasingly.
inline JmmoDecomposition jmmo_decompose(const OrderVector& m, const Multicharge& s, Modulus e)
{
    if (!e.is_finite())
        throw std::invalid_argument("jmmo_decompose needs a finite modulus");
    if (m.size() != s.size())
        throw std::invalid_argument("order vector and multicharge have different lengths");
    const Rational period(e.value());
    JmmoDecomposition out{{}, {}, Permutation::identity(m.size())};
    for (std::size_t c = 0; c < m.size(); ++c) {
        auto delta = reduce_mod(m[c] - Rational(s[c]), period);
        auto shifted = m[c] - delta;
        out.delta.push_back(delta);
        out.shifted_charge.push_back(static_cast<int>(shifted.numerator()));
    }
    std::vector<std::size_t> order(m.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return out.delta[a] > out.delta[b]; });
    for (std::size_t k = 1; k < order.size(); ++k)
        if (out.delta[order[k]] == out.delta[order[k - 1]])
            throw ConfigurationError("order vector lies on a wall: components " + std::to_string(order[k - 1] + 1) +
                                     " and " + std::to_string(order[k] + 1) + " have congruent m - s mod " +
                                     e.to_string());
    out.sigma = Permutation(std::move(order));
    return out;
}

} // namespace wallcross
