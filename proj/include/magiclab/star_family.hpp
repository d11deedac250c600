#pragma once

#include <magiclab/error.hpp>
#include <magiclab/graph.hpp>
#include <magiclab/labeling.hpp>

#include <algorithm>
#include <memory>
#include <set>
#include <vector>

namespace magiclab::star {

/// Graph K_{1,n} ∪ lK_1 with center 1, leaves 2..n+1, isolated n+2..n+l+1.
inline std::shared_ptr<const Graph> graph(int n, int l)
{
    return std::make_shared<const Graph>(build_family({family::Star{n, l}}));
}

enum class Type { t1, t2 };

inline const char * to_string(Type t) { return t == Type::t1 ? "T1" : "T2"; }

/// A super edge-magic labeling of K_{1,n} ∪ lK_1, determined by the first label of the
/// consecutive leaf window [a, a+n-1] and the center label outside it. Leaves take the window
/// in ascending order and isolated vertices the leftover labels in ascending order.
class StarSemLabeling {
public:
    StarSemLabeling(int n, int l, int window_start, int center_label)
        : n_(n), l_(l), a_(window_start), c_(center_label)
    {
        if (n < 1 || l < 0)
            throw ParameterError("star labeling requires n >= 1 and l >= 0");
        if (a_ < 1 || a_ > l + 2)
            throw ParameterError("leaf window start must lie in [1, l+2]");
        if (c_ < 1 || c_ > order() || (a_ <= c_ && c_ <= a_ + n_ - 1))
            throw ParameterError("center label must lie in [1, p] outside the leaf window");
    }

    int n() const noexcept { return n_; }
    int l() const noexcept { return l_; }
    int order() const noexcept { return n_ + l_ + 1; }
    int window_start() const noexcept { return a_; }
    int window_end() const noexcept { return a_ + n_ - 1; }
    int center_label() const noexcept { return c_; }

    Type type() const noexcept { return c_ < a_ ? Type::t1 : Type::t2; }

    std::vector<int> vertex_labels() const
    {
        std::vector<int> out;
        out.push_back(c_);
        for (int i = 0; i < n_; ++i)
            out.push_back(a_ + i);
        for (int x = 1; x <= order(); ++x)
            if (x != c_ && (x < a_ || x > window_end()))
                out.push_back(x);
        return out;
    }

    VertexLabeling vertex_labeling() const { return VertexLabeling(graph(n_, l_), vertex_labels()); }

    TotalLabeling extend() const { return extend_sem(vertex_labeling()); }

    friend bool operator==(const StarSemLabeling &, const StarSemLabeling &) = default;

private:
    int n_;
    int l_;
    int a_;
    int c_;
};

/// Every super edge-magic labeling of K_{1,n} ∪ lK_1 up to reordering leaves and isolated
/// vertices: (l+2) leaf windows times (l+1) center labels.
inline std::vector<StarSemLabeling> generate_all(int n, int l)
{
    if (n < 1 || l < 0)
        throw ParameterError("generate_all requires n >= 1 and l >= 0");
    std::vector<StarSemLabeling> out;
    const int p = n + l + 1;
    for (int a = 1; a <= l + 2; ++a)
        for (int c = 1; c <= p; ++c)
            if (c < a || c > a + n - 1)
                out.emplace_back(n, l, a, c);
    return out;
}

/// val = f(x) + f(y_1) + 2n + l + 1.
inline int valence_of(const StarSemLabeling & s)
{
    return s.center_label() + s.window_start() + 2 * s.n() + s.l() + 1;
}

/// The same valence through the high characteristic: f(x) + f(y_n) + n + l + 2.
inline int valence_via_high(const StarSemLabeling & s)
{
    return s.center_label() + s.window_end() + s.n() + s.l() + 2;
}

inline Characteristics characteristics_of(const StarSemLabeling & s)
{
    return {s.center_label() + s.window_start(), s.center_label() + s.window_end()};
}

inline Type classify(const StarSemLabeling & s) { return s.type(); }

/// Complementation restricted to type T1; lands in T2.
inline StarSemLabeling phi(const StarSemLabeling & s)
{
    if (s.type() != Type::t1)
        throw ClassificationError("phi is defined on T1 labelings only");
    const int p = s.order();
    return StarSemLabeling(s.n(), s.l(), p + 1 - s.window_end(), p + 1 - s.center_label());
}

/// Inverse of phi on T2 (also complementation).
inline StarSemLabeling phi_inverse(const StarSemLabeling & s)
{
    if (s.type() != Type::t2)
        throw ClassificationError("phi_inverse is defined on T2 labelings only");
    const int p = s.order();
    return StarSemLabeling(s.n(), s.l(), p + 1 - s.window_end(), p + 1 - s.center_label());
}

struct ValenceSets {
    std::set<int> t1;
    std::set<int> t2;
    std::set<int> all;
};

inline ValenceSets valence_sets(int n, int l)
{
    ValenceSets out;
    for (const auto & s : generate_all(n, l)) {
        int k = valence_of(s);
        (s.type() == Type::t1 ? out.t1 : out.t2).insert(k);
        out.all.insert(k);
    }
    return out;
}

/// Closed form of S(T1): [2n+l+4, 2n+3l+4], from low characteristics 3..2l+3.
inline std::pair<int, int> t1_valence_range(int n, int l) { return {2 * n + l + 4, 2 * n + 3 * l + 4}; }

inline bool is_consecutive(const std::set<int> & s)
{
    return s.empty() || *s.rbegin() - *s.begin() + 1 == static_cast<int>(s.size());
}

/// Edge-magic labeling f_k of K_{1,n} ∪ lK_1 with valence 4n+3l+2-k, 0 <= k <= l.
/// Center gets 2n+l+1, leaf i gets n+l+i, edge to leaf i gets n+l+1-i-k; isolated
/// vertices take the leftover labels ascending.
inline TotalLabeling em_fk(int n, int l, int k)
{
    if (n < 1 || l < 0)
        throw ParameterError("em_fk requires n >= 1 and l >= 0");
    if (k < 0 || k > l)
        throw ParameterError("em_fk requires 0 <= k <= l, got k = " + std::to_string(k));
    auto g = graph(n, l);
    const int total = 2 * n + l + 1;
    std::vector<int> vertices(static_cast<std::size_t>(n + l + 1), 0);
    std::vector<int> edges(static_cast<std::size_t>(n), 0);
    std::vector<bool> used(static_cast<std::size_t>(total) + 1, false);
    vertices[0] = total;
    used[total] = true;
    for (int i = 1; i <= n; ++i) {
        vertices[i] = n + l + i;
        used[n + l + i] = true;
        edges[i - 1] = n + l + 1 - i - k;
        used[edges[i - 1]] = true;
    }
    int next = 1;
    for (int z = n + 1; z <= n + l; ++z) {
        while (used[next])
            ++next;
        vertices[z] = next++;
    }
    return TotalLabeling(g, std::move(vertices), std::move(edges));
}

} // namespace magiclab::star
