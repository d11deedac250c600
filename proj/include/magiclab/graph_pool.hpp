#pragma once

#include <magiclab/error.hpp>
#include <magiclab/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace magiclab {

/// Largest order accepted by small_graphs.
inline constexpr int small_graph_limit = 7;

/// Every simple graph on exactly p vertices up to isomorphism, isolated vertices included.
/// Each class is represented by its smallest edge mask over all vertex relabelings, so the
/// output is ordered by that mask and is reproducible.
inline std::vector<Graph> small_graphs(int p)
{
    if (p < 1 || p > small_graph_limit)
        throw GuardError("small_graphs supports 1 <= p <= " + std::to_string(small_graph_limit));

    std::vector<std::pair<int, int>> pairs;
    std::vector<std::vector<int>> index(static_cast<std::size_t>(p), std::vector<int>(static_cast<std::size_t>(p), -1));
    for (int a = 0; a < p; ++a)
        for (int b = a + 1; b < p; ++b) {
            index[a][b] = index[b][a] = static_cast<int>(pairs.size());
            pairs.emplace_back(a, b);
        }
    const int slots = static_cast<int>(pairs.size());

    // Edge-slot image of every vertex permutation.
    std::vector<std::vector<int>> slot_maps;
    std::vector<int> perm(static_cast<std::size_t>(p));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> m(static_cast<std::size_t>(slots));
        for (int s = 0; s < slots; ++s)
            m[s] = index[perm[pairs[s].first]][perm[pairs[s].second]];
        slot_maps.push_back(std::move(m));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<bool> seen(std::size_t{1} << slots, false);
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << slots); ++mask) {
        if (seen[mask])
            continue;
        for (const auto & m : slot_maps) {
            std::uint32_t image = 0;
            for (int s = 0; s < slots; ++s)
                if (mask >> s & 1U)
                    image |= std::uint32_t{1} << m[s];
            seen[image] = true;
        }
        std::vector<Edge> edges;
        for (int s = 0; s < slots; ++s)
            if (mask >> s & 1U)
                edges.push_back({pairs[s].first + 1, pairs[s].second + 1});
        out.emplace_back(p, std::move(edges), "pool p=" + std::to_string(p) + " mask=" + std::to_string(mask));
    }
    return out;
}

/// small_graphs(p) for every p in [lo, hi].
inline std::vector<Graph> small_graph_pool(int lo, int hi)
{
    std::vector<Graph> out;
    for (int p = lo; p <= hi; ++p)
        for (auto & g : small_graphs(p))
            out.push_back(std::move(g));
    return out;
}

} // namespace magiclab
