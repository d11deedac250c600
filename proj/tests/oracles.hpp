#pragma once

// Slow, straightforward reference computations used to cross-check the library.
// They share only the Graph type with the code under test.

#include <magiclab/graph.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using magiclab::Graph;

struct Spectrum {
    std::set<int> valences;
    /// Labelings grouped by (vertex label set, labeled edge pairs).
    std::size_t classes = 0;
};

using Key = std::pair<std::vector<int>, std::vector<std::pair<int, int>>>;

inline Key key_of(const Graph & g, const std::vector<int> & vertex_labels)
{
    Key k;
    k.first = vertex_labels;
    std::ranges::sort(k.first);
    for (const auto & e : g.edges()) {
        int a = vertex_labels[e.u - 1];
        int b = vertex_labels[e.v - 1];
        k.second.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::ranges::sort(k.second);
    return k;
}

/// Tries every vertex labeling with labels drawn from `pool` (injectively) and every valence:
/// the edge labels k - f(u) - f(v) must be exactly the unused labels of 1..p+q.
inline Spectrum naive(const Graph & g, bool super_only)
{
    const int p = g.order();
    const int q = g.size();
    const int total = p + q;
    Spectrum out;
    std::set<Key> classes;

    // Choose the vertex label set as a bitmask, then permute it.
    for (std::uint32_t mask = 0; mask < (1U << total); ++mask) {
        if (std::popcount(mask) != p)
            continue;
        if (super_only && mask != (1U << p) - 1)
            continue;
        std::vector<int> chosen;
        std::vector<int> rest;
        for (int x = 1; x <= total; ++x)
            ((mask >> (x - 1)) & 1U ? chosen : rest).push_back(x);
        do {
            std::vector<int> sums;
            for (const auto & e : g.edges())
                sums.push_back(chosen[e.u - 1] + chosen[e.v - 1]);
            // k - s must run over `rest`; the largest sum pairs with the smallest free label.
            const int k = *std::ranges::max_element(sums) + rest.front();
            std::vector<int> labels;
            for (int s : sums)
                labels.push_back(k - s);
            std::ranges::sort(labels);
            if (labels == rest) {
                out.valences.insert(k);
                classes.insert(key_of(g, chosen));
            }
        } while (std::ranges::next_permutation(chosen).found);
    }
    out.classes = classes.size();
    return out;
}

inline Spectrum naive_sem(const Graph & g) { return naive(g, true); }
inline Spectrum naive_em(const Graph & g) { return naive(g, false); }

/// Extremes of the edge-sum total sum_e (f(u) + f(v) + f(e)) over all total labelings
/// (super: vertex labels 1..p), returned as numerators over q.
inline std::pair<std::int64_t, std::int64_t> naive_extrema(const Graph & g, bool super_only)
{
    const int p = g.order();
    const int q = g.size();
    std::vector<int> labels(static_cast<std::size_t>(p + q));
    std::iota(labels.begin(), labels.end(), 1);
    std::int64_t lo = std::numeric_limits<std::int64_t>::max();
    std::int64_t hi = std::numeric_limits<std::int64_t>::min();
    do {
        if (super_only && ! std::all_of(labels.begin(), labels.begin() + p, [p](int x) { return x <= p; }))
            continue;
        std::int64_t total = 0;
        auto edges = g.edges();
        for (std::size_t i = 0; i < edges.size(); ++i)
            total += labels[edges[i].u - 1] + labels[edges[i].v - 1] + labels[p + i];
        lo = std::min(lo, total);
        hi = std::max(hi, total);
    } while (std::ranges::next_permutation(labels).found);
    return {lo, hi};
}

} // namespace oracle
