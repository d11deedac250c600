#pragma once

#include <magiclab/error.hpp>
#include <magiclab/graph.hpp>
#include <magiclab/labeling.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace magiclab {

/// Exact fraction num/den with den > 0, kept reduced.
class Rational {
public:
    constexpr Rational() = default;

    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den)
    {
        if (den_ == 0)
            throw ParameterError("zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        auto g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    std::int64_t floor() const noexcept
    {
        auto d = num_ / den_;
        return (num_ % den_ != 0 && num_ < 0) ? d - 1 : d;
    }

    std::int64_t ceil() const noexcept
    {
        auto d = num_ / den_;
        return (num_ % den_ != 0 && num_ > 0) ? d + 1 : d;
    }

    std::string to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    friend bool operator==(const Rational &, const Rational &) = default;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

struct Extrema {
    std::int64_t min = 0;
    std::int64_t max = 0;

    friend bool operator==(const Extrema &, const Extrema &) = default;
};

/// Extremes of sum w_i * g(i) over all bijections g onto 1..m, m = weights.size().
/// Minimum pairs descending weights with ascending labels; maximum pairs both ascending.
inline Extrema weighted_extrema(std::span<const std::int64_t> weights, std::int64_t m)
{
    if (static_cast<std::int64_t>(weights.size()) != m)
        throw ParameterError("weighted_extrema: " + std::to_string(weights.size()) + " weights for a pool of "
                             + std::to_string(m) + " labels");
    std::vector<std::int64_t> w(weights.begin(), weights.end());
    std::ranges::sort(w);
    Extrema out;
    for (std::int64_t i = 0; i < m; ++i) {
        out.max += w[static_cast<std::size_t>(i)] * (i + 1);
        out.min += w[static_cast<std::size_t>(m - 1 - i)] * (i + 1);
    }
    return out;
}

/// Raw valence extremes and the integer interval between them.
struct IntervalReport {
    Mode kind = Mode::sem;
    Rational min_raw;
    Rational max_raw;

    /// [ceil(min_raw), floor(max_raw)], or nullopt when empty.
    std::optional<std::pair<int, int>> interval() const
    {
        auto lo = min_raw.ceil();
        auto hi = max_raw.floor();
        if (lo > hi)
            return std::nullopt;
        return std::pair{static_cast<int>(lo), static_cast<int>(hi)};
    }

    bool contains(int k) const
    {
        auto iv = interval();
        return iv && iv->first <= k && k <= iv->second;
    }

    /// Number of integers in the interval.
    int width() const
    {
        auto iv = interval();
        return iv ? iv->second - iv->first + 1 : 0;
    }
};

namespace detail {

    inline void require_edges(const Graph & g)
    {
        if (g.size() == 0)
            throw IntervalError("valence interval is undefined for a graph without edges");
    }

    inline std::vector<std::int64_t> vertex_weights(const Graph & g)
    {
        return {g.degrees().begin(), g.degrees().end()};
    }

} // namespace detail

/// Super edge-magic interval: vertex weights deg(u) over labels 1..p, plus the edge labels p+1..p+q.
inline IntervalReport sem_interval(const Graph & g)
{
    detail::require_edges(g);
    const std::int64_t p = g.order();
    const std::int64_t q = g.size();
    auto w = detail::vertex_weights(g);
    auto ex = weighted_extrema(w, p);
    const std::int64_t edge_part = (p + 1 + p + q) * q / 2;
    return {Mode::sem, Rational(ex.min + edge_part, q), Rational(ex.max + edge_part, q)};
}

/// Edge-magic interval: weights deg(u) on vertices and 1 on edges over labels 1..p+q.
inline IntervalReport em_interval(const Graph & g)
{
    detail::require_edges(g);
    const std::int64_t p = g.order();
    const std::int64_t q = g.size();
    auto w = detail::vertex_weights(g);
    w.insert(w.end(), static_cast<std::size_t>(q), 1);
    auto ex = weighted_extrema(w, p + q);
    return {Mode::em, Rational(ex.min, q), Rational(ex.max, q)};
}

inline IntervalReport interval(const Graph & g, Mode kind)
{
    return kind == Mode::sem ? sem_interval(g) : em_interval(g);
}

/// Largest p+q accepted by brute_extrema.
inline constexpr int brute_extrema_limit = 10;

/// Exhaustive extremes of the valence expression over every bijection (oracle for the
/// rearrangement computation). Refuses graphs with p+q above brute_extrema_limit.
inline std::pair<Rational, Rational> brute_extrema(const Graph & g, Mode kind)
{
    detail::require_edges(g);
    const int p = g.order();
    const int q = g.size();
    if (p + q > brute_extrema_limit)
        throw GuardError("brute_extrema refuses p+q = " + std::to_string(p + q) + " > "
                         + std::to_string(brute_extrema_limit));

    // Items 0..p-1 are vertices (weight deg), p..p+q-1 edges (weight 1).
    const int items = kind == Mode::sem ? p : p + q;
    std::vector<int> labels(static_cast<std::size_t>(items));
    std::iota(labels.begin(), labels.end(), 1);
    std::int64_t lo = std::numeric_limits<std::int64_t>::max();
    std::int64_t hi = std::numeric_limits<std::int64_t>::min();
    do {
        std::int64_t total = 0;
        for (int i = 0; i < items; ++i)
            total += (i < p ? g.degree(i + 1) : 1) * static_cast<std::int64_t>(labels[static_cast<std::size_t>(i)]);
        lo = std::min(lo, total);
        hi = std::max(hi, total);
    } while (std::next_permutation(labels.begin(), labels.end()));

    if (kind == Mode::sem) {
        std::int64_t edge_part = 0;
        for (int i = p + 1; i <= p + q; ++i)
            edge_part += i;
        lo += edge_part;
        hi += edge_part;
    }
    return {Rational(lo, q), Rational(hi, q)};
}

} // namespace magiclab
