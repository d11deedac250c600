#pragma once

#include <magiclab/error.hpp>
#include <magiclab/graph.hpp>

#include <algorithm>
#include <compare>
#include <limits>
#include <memory>
#include <numeric>
#include <utility>
#include <vector>

namespace magiclab {

/// Labeling kind: super edge-magic (vertex labels are exactly 1..p) or plain edge-magic.
enum class Mode { sem, em };

inline const char * to_string(Mode m) { return m == Mode::sem ? "sem" : "em"; }

/// Labeled adjacency structure of a labeling: which labels sit on vertices and which
/// label pairs are joined. Two labelings are isomorphic iff their signatures are equal.
struct Signature {
    std::vector<int> vertex_label_set;
    std::vector<std::pair<int, int>> labeled_edges;

    auto operator<=>(const Signature &) const = default;
};

/// Bijection from V(G) to 1..p.
class VertexLabeling {
public:
    VertexLabeling(std::shared_ptr<const Graph> graph, std::vector<int> labels)
        : graph_(std::move(graph)), labels_(std::move(labels))
    {
        if (! graph_)
            throw ParameterError("vertex labeling needs a graph");
        const int p = graph_->order();
        if (static_cast<int>(labels_.size()) != p)
            throw ParameterError("vertex labeling has " + std::to_string(labels_.size()) + " labels for "
                                 + std::to_string(p) + " vertices");
        std::vector<bool> seen(static_cast<std::size_t>(p) + 1, false);
        for (int x : labels_) {
            if (x < 1 || x > p || seen[x])
                throw ParameterError("vertex labeling is not a bijection onto 1.." + std::to_string(p));
            seen[x] = true;
        }
    }

    const Graph & graph() const noexcept { return *graph_; }
    const std::shared_ptr<const Graph> & graph_ptr() const noexcept { return graph_; }
    int operator()(Vertex v) const { return labels_.at(static_cast<std::size_t>(v - 1)); }
    const std::vector<int> & labels() const noexcept { return labels_; }

    /// Induced edge sums in graph edge order.
    std::vector<int> edge_sums() const
    {
        std::vector<int> out;
        for (const auto & e : graph_->edges())
            out.push_back((*this)(e.u) + (*this)(e.v));
        return out;
    }

private:
    std::shared_ptr<const Graph> graph_;
    std::vector<int> labels_;
};

/// Bijection from V(G) ∪ E(G) to 1..p+q. Edge labels follow graph edge order.
/// Bijectivity is checked on construction; edge-magic validity is checked by valence().
class TotalLabeling {
public:
    TotalLabeling(std::shared_ptr<const Graph> graph, std::vector<int> vertex_labels, std::vector<int> edge_labels)
        : graph_(std::move(graph)), vertex_labels_(std::move(vertex_labels)), edge_labels_(std::move(edge_labels))
    {
        if (! graph_)
            throw ParameterError("total labeling needs a graph");
        const int p = graph_->order();
        const int q = graph_->size();
        if (static_cast<int>(vertex_labels_.size()) != p || static_cast<int>(edge_labels_.size()) != q)
            throw ParameterError("total labeling shape does not match the graph");
        std::vector<bool> seen(static_cast<std::size_t>(p + q) + 1, false);
        auto mark = [&](int x) {
            if (x < 1 || x > p + q || seen[x])
                throw ParameterError("labels are not a bijection onto 1.." + std::to_string(p + q));
            seen[x] = true;
        };
        std::ranges::for_each(vertex_labels_, mark);
        std::ranges::for_each(edge_labels_, mark);
    }

    const Graph & graph() const noexcept { return *graph_; }
    const std::shared_ptr<const Graph> & graph_ptr() const noexcept { return graph_; }
    int vertex(Vertex v) const { return vertex_labels_.at(static_cast<std::size_t>(v - 1)); }
    int edge(std::size_t index) const { return edge_labels_.at(index); }
    const std::vector<int> & vertex_labels() const noexcept { return vertex_labels_; }
    const std::vector<int> & edge_labels() const noexcept { return edge_labels_; }

    /// Vertex labels are exactly 1..p.
    bool is_super() const noexcept
    {
        const int p = graph_->order();
        return std::ranges::all_of(vertex_labels_, [p](int x) { return x <= p; });
    }

    friend bool operator==(const TotalLabeling & a, const TotalLabeling & b)
    {
        return same_structure(*a.graph_, *b.graph_) && a.vertex_labels_ == b.vertex_labels_
               && a.edge_labels_ == b.edge_labels_;
    }

private:
    std::shared_ptr<const Graph> graph_;
    std::vector<int> vertex_labels_;
    std::vector<int> edge_labels_;
};

/// The magic constant k = f(u) + f(v) + f(uv). Throws NotEdgeMagicError naming two
/// edges with different sums.
inline int valence(const TotalLabeling & f)
{
    const auto & g = f.graph();
    if (g.size() == 0)
        throw IntervalError("valence is undefined for a graph without edges");

    auto edges = g.edges();
    auto sum_of = [&](std::size_t i) { return f.vertex(edges[i].u) + f.vertex(edges[i].v) + f.edge(i); };
    const int k = sum_of(0);
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (int s = sum_of(i); s != k)
            throw NotEdgeMagicError({edges[0].u, edges[0].v}, k, {edges[i].u, edges[i].v}, s);

    // k q = sum deg(u) f(u) + sum f(e)
    long long weighted = 0;
    for (Vertex v = 1; v <= g.order(); ++v)
        weighted += static_cast<long long>(g.degree(v)) * f.vertex(v);
    weighted += std::accumulate(f.edge_labels().begin(), f.edge_labels().end(), 0LL);
    if (weighted != static_cast<long long>(k) * g.size())
        throw std::logic_error("valence sum formula violated");
    return k;
}

inline bool is_edge_magic(const TotalLabeling & f)
{
    try {
        valence(f);
        return true;
    }
    catch (const Error &) {
        return false;
    }
}

/// Extends a vertex bijection with consecutive edge sums to a super edge-magic labeling:
/// edge uv gets k - g(u) - g(v) with k = p + q + min(S).
inline TotalLabeling extend_sem(const VertexLabeling & g)
{
    const auto & graph = g.graph();
    auto sums = g.edge_sums();
    auto sorted = sums;
    std::ranges::sort(sorted);
    bool ok = ! sorted.empty();
    for (std::size_t i = 1; ok && i < sorted.size(); ++i)
        ok = sorted[i] == sorted[i - 1] + 1;
    if (! ok)
        throw NotExtendableError(sorted);

    const int k = graph.order() + graph.size() + sorted.front();
    std::vector<int> edge_labels;
    for (int s : sums)
        edge_labels.push_back(k - s);
    return TotalLabeling(g.graph_ptr(), g.labels(), std::move(edge_labels));
}

/// Complementary labeling. sem: p+1-f on vertices, 2p+q+1-f on edges; em: p+q+1-f everywhere.
inline TotalLabeling complement(const TotalLabeling & f, Mode mode)
{
    const int p = f.graph().order();
    const int q = f.graph().size();
    std::vector<int> vertices = f.vertex_labels();
    std::vector<int> edges = f.edge_labels();
    if (mode == Mode::sem) {
        if (! f.is_super())
            throw ModeError("super complement requires vertex labels 1..p");
        for (int & x : vertices)
            x = p + 1 - x;
        for (int & x : edges)
            x = 2 * p + q + 1 - x;
    }
    else {
        for (int & x : vertices)
            x = p + q + 1 - x;
        for (int & x : edges)
            x = p + q + 1 - x;
    }
    return TotalLabeling(f.graph_ptr(), std::move(vertices), std::move(edges));
}

/// Low and high characteristic of a super edge-magic labeling.
struct Characteristics {
    int low = 0;
    int high = 0;
};

inline Characteristics characteristics(const TotalLabeling & f)
{
    if (! f.is_super())
        throw ModeError("characteristics are defined for super edge-magic labelings only");
    valence(f);
    Characteristics c{std::numeric_limits<int>::max(), std::numeric_limits<int>::min()};
    for (const auto & e : f.graph().edges()) {
        int s = f.vertex(e.u) + f.vertex(e.v);
        c.low = std::min(c.low, s);
        c.high = std::max(c.high, s);
    }
    return c;
}

/// Signature from raw vertex labels; used by the enumerators to avoid building labelings.
inline Signature signature_of(const Graph & g, std::span<const int> vertex_labels)
{
    Signature sig;
    sig.vertex_label_set.assign(vertex_labels.begin(), vertex_labels.end());
    std::ranges::sort(sig.vertex_label_set);
    sig.labeled_edges.reserve(static_cast<std::size_t>(g.size()));
    for (const auto & e : g.edges()) {
        int a = vertex_labels[static_cast<std::size_t>(e.u - 1)];
        int b = vertex_labels[static_cast<std::size_t>(e.v - 1)];
        sig.labeled_edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::ranges::sort(sig.labeled_edges);
    return sig;
}

inline Signature signature(const TotalLabeling & f) { return signature_of(f.graph(), f.vertex_labels()); }

inline bool isomorphic(const TotalLabeling & f, const TotalLabeling & g)
{
    if (! same_structure(f.graph(), g.graph()))
        throw ComparisonError("labelings of different graphs cannot be compared");
    return signature(f) == signature(g);
}

} // namespace magiclab
