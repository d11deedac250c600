#pragma once

#include <magiclab/error.hpp>

#include <algorithm>
#include <charconv>
#include <compare>
#include <memory>
#include <optional>
#include <queue>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace magiclab {

using Vertex = int;

/// Unordered edge, stored normalized with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    auto operator<=>(const Edge &) const = default;
};

/// Finite simple graph on vertices 1..p. Immutable after construction.
class Graph {
public:
    Graph() = default;

    Graph(int order, std::vector<Edge> edges, std::string name = {})
        : order_(order), edges_(std::move(edges)), name_(std::move(name))
    {
        if (order_ < 0)
            throw ParameterError("graph order must be nonnegative");

        adjacency_.assign(static_cast<std::size_t>(order_), {});
        degrees_.assign(static_cast<std::size_t>(order_), 0);

        for (auto & e : edges_) {
            if (e.u == e.v)
                throw ParameterError("self-loop at vertex " + std::to_string(e.u));
            if (e.u > e.v)
                std::swap(e.u, e.v);
            if (e.u < 1 || e.v > order_)
                throw ParameterError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v)
                                     + " has a vertex outside 1.." + std::to_string(order_));
            auto & nu = adjacency_[e.u - 1];
            if (std::ranges::find(nu, e.v) != nu.end())
                throw ParameterError("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
            nu.push_back(e.v);
            adjacency_[e.v - 1].push_back(e.u);
            ++degrees_[e.u - 1];
            ++degrees_[e.v - 1];
        }
    }

    int order() const noexcept { return order_; }
    int size() const noexcept { return static_cast<int>(edges_.size()); }
    std::span<const Edge> edges() const noexcept { return edges_; }
    const std::string & name() const noexcept { return name_; }

    int degree(Vertex v) const { return degrees_.at(static_cast<std::size_t>(v - 1)); }

    /// Degrees indexed by vertex - 1.
    std::span<const int> degrees() const noexcept { return degrees_; }

    std::span<const Vertex> neighbours(Vertex v) const { return adjacency_.at(static_cast<std::size_t>(v - 1)); }

    bool adjacent(Vertex a, Vertex b) const
    {
        if (a < 1 || a > order_)
            return false;
        auto n = neighbours(a);
        return std::ranges::find(n, b) != n.end();
    }

    /// This graph with `t` isolated vertices appended as p+1..p+t.
    Graph with_isolated(int t, std::string name = {}) const
    {
        if (t < 0)
            throw ParameterError("number of isolated vertices must be nonnegative");
        if (name.empty())
            name = t == 0 ? name_ : (name_.empty() ? "G" : name_) + " + " + std::to_string(t) + "K1";
        return Graph(order_ + t, edges_, std::move(name));
    }

    /// Edge list in sorted order; equal for structurally identical graphs.
    std::vector<Edge> sorted_edges() const
    {
        auto out = edges_;
        std::ranges::sort(out);
        return out;
    }

private:
    int order_ = 0;
    std::vector<Edge> edges_;
    std::string name_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<int> degrees_;
};

/// Same order and same edge set, ignoring edge order and display name.
inline bool same_structure(const Graph & a, const Graph & b)
{
    return a.order() == b.order() && a.sorted_edges() == b.sorted_edges();
}

/// Length of a shortest cycle; std::nullopt for forests.
inline std::optional<int> girth(const Graph & g)
{
    std::optional<int> best;
    const int p = g.order();
    std::vector<int> dist(static_cast<std::size_t>(p));
    std::vector<int> parent(static_cast<std::size_t>(p));

    for (Vertex root = 1; root <= p; ++root) {
        std::ranges::fill(dist, -1);
        std::ranges::fill(parent, 0);
        std::queue<Vertex> queue;
        dist[root - 1] = 0;
        queue.push(root);
        while (! queue.empty()) {
            Vertex u = queue.front();
            queue.pop();
            for (Vertex w : g.neighbours(u)) {
                if (dist[w - 1] < 0) {
                    dist[w - 1] = dist[u - 1] + 1;
                    parent[w - 1] = u;
                    queue.push(w);
                }
                else if (parent[u - 1] != w) {
                    int length = dist[u - 1] + dist[w - 1] + 1;
                    if (! best || length < *best)
                        best = length;
                }
            }
        }
    }
    return best;
}

inline bool has_triangle(const Graph & g)
{
    for (const auto & e : g.edges())
        for (Vertex w : g.neighbours(e.u))
            if (w != e.v && g.adjacent(w, e.v))
                return true;
    return false;
}

// --- text format ------------------------------------------------------------

inline std::string serialize_graph(const Graph & g)
{
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto & e : g.edges())
        out << e.u << ' ' << e.v << '\n';
    return out.str();
}

namespace detail {

    inline std::vector<std::string_view> split_ws(std::string_view line)
    {
        std::vector<std::string_view> out;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                ++i;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
                ++j;
            if (j > i)
                out.push_back(line.substr(i, j - i));
            i = j;
        }
        return out;
    }

    inline std::optional<long long> to_int(std::string_view s)
    {
        long long value = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc{} || ptr != s.data() + s.size())
            return std::nullopt;
        return value;
    }

} // namespace detail

/// Parses the "p q" header followed by q "u v" lines. Blank lines are ignored.
inline Graph parse_graph(std::string_view text)
{
    std::vector<std::pair<int, std::string_view>> lines;
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        ++number;
        auto line = text.substr(start, end - start);
        if (! detail::split_ws(line).empty())
            lines.emplace_back(number, line);
        start = end + 1;
    }

    if (lines.empty())
        throw ParseError("missing header \"p q\"", 1);

    auto header = detail::split_ws(lines.front().second);
    int header_line = lines.front().first;
    if (header.size() != 2)
        throw ParseError("header must be \"p q\"", header_line);
    auto p = detail::to_int(header[0]);
    auto q = detail::to_int(header[1]);
    if (! p || ! q || *p < 0 || *q < 0)
        throw ParseError("header must hold two nonnegative integers", header_line);
    if (*q > *p * (*p - 1) / 2)
        throw ParseError("too many edges for a simple graph on " + std::to_string(*p) + " vertices", header_line);
    if (static_cast<long long>(lines.size()) - 1 != *q)
        throw ParseError("header declares " + std::to_string(*q) + " edges but " + std::to_string(lines.size() - 1)
                             + " edge lines follow",
                         lines.size() > 1 ? lines.back().first : header_line);

    std::vector<Edge> edges;
    std::vector<Edge> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto [line_no, line] = lines[i];
        auto fields = detail::split_ws(line);
        if (fields.size() != 2)
            throw ParseError("edge line must be \"u v\"", line_no);
        auto u = detail::to_int(fields[0]);
        auto v = detail::to_int(fields[1]);
        if (! u || ! v)
            throw ParseError("edge endpoints must be integers", line_no);
        for (auto x : {*u, *v})
            if (x < 1 || x > *p)
                throw ParseError("vertex " + std::to_string(x) + " out of range 1.." + std::to_string(*p), line_no);
        if (*u == *v)
            throw ParseError("self-loop at vertex " + std::to_string(*u), line_no);
        Edge e{static_cast<int>(std::min(*u, *v)), static_cast<int>(std::max(*u, *v))};
        if (std::ranges::find(seen, e) != seen.end())
            throw ParseError("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v), line_no);
        seen.push_back(e);
        edges.push_back(e);
    }
    return Graph(static_cast<int>(*p), std::move(edges));
}

// --- graph families ---------------------------------------------------------

struct FamilySpec;

namespace family {

    /// K_{1,n} together with l isolated vertices. Center is vertex 1, leaves 2..n+1.
    struct Star {
        int n = 1;
        int l = 0;
    };

    /// Path on n vertices.
    struct Path {
        int n = 1;
    };

    struct Cycle {
        int m = 3;
    };

    /// C_m with n pendants on every cycle vertex.
    struct CoronaCycle {
        int m = 3;
        int n = 1;
    };

    /// C_m (m odd) with n pendants on the odd-position cycle vertices.
    struct Cmn {
        int m = 3;
        int n = 1;
    };

    /// Cycle on j.size() vertices; cycle vertex k carries j[k-1] pendants.
    struct IrregularCrown {
        std::vector<int> j;
    };

    struct UnionIsolated {
        std::shared_ptr<const FamilySpec> base;
        int t = 0;
    };

} // namespace family

struct FamilySpec {
    std::variant<family::Star, family::Path, family::Cycle, family::CoronaCycle, family::Cmn, family::IrregularCrown,
                 family::UnionIsolated>
        kind;
};

namespace detail {

    inline void require(bool ok, const std::string & constraint)
    {
        if (! ok)
            throw ParameterError("invalid family parameters: requires " + constraint);
    }

    inline Graph crown_graph(const std::vector<int> & pendants, std::string name)
    {
        const int m = static_cast<int>(pendants.size());
        std::vector<Edge> edges;
        for (int i = 1; i < m; ++i)
            edges.push_back({i, i + 1});
        edges.push_back({1, m});
        int next = m;
        for (int k = 1; k <= m; ++k)
            for (int l = 1; l <= pendants[k - 1]; ++l)
                edges.push_back({k, ++next});
        return Graph(next, std::move(edges), std::move(name));
    }

} // namespace detail

std::string to_string(const FamilySpec & spec);

/// Instantiates a family. Vertices are numbered in construction order:
/// center-first for stars, cycle-then-pendants for crowns and coronas.
inline Graph build_family(const FamilySpec & spec)
{
    using namespace family;
    return std::visit(
        [&](const auto & f) -> Graph {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Star>) {
                detail::require(f.n >= 1, "star n >= 1");
                detail::require(f.l >= 0, "star l >= 0");
                std::vector<Edge> edges;
                for (int i = 2; i <= f.n + 1; ++i)
                    edges.push_back({1, i});
                return Graph(f.n + f.l + 1, std::move(edges), to_string(spec));
            }
            else if constexpr (std::is_same_v<T, Path>) {
                detail::require(f.n >= 1, "path n >= 1");
                std::vector<Edge> edges;
                for (int i = 1; i < f.n; ++i)
                    edges.push_back({i, i + 1});
                return Graph(f.n, std::move(edges), to_string(spec));
            }
            else if constexpr (std::is_same_v<T, Cycle>) {
                detail::require(f.m >= 3, "cycle m >= 3");
                return detail::crown_graph(std::vector<int>(static_cast<std::size_t>(f.m), 0), to_string(spec));
            }
            else if constexpr (std::is_same_v<T, CoronaCycle>) {
                detail::require(f.m >= 3, "corona m >= 3");
                detail::require(f.n >= 0, "corona n >= 0");
                return detail::crown_graph(std::vector<int>(static_cast<std::size_t>(f.m), f.n), to_string(spec));
            }
            else if constexpr (std::is_same_v<T, Cmn>) {
                detail::require(f.m >= 3 && f.m % 2 == 1, "cmn m odd and >= 3");
                detail::require(f.n >= 0, "cmn n >= 0");
                std::vector<int> j(static_cast<std::size_t>(f.m), 0);
                for (int k = 1; k <= f.m; k += 2)
                    j[k - 1] = f.n;
                return detail::crown_graph(j, to_string(spec));
            }
            else if constexpr (std::is_same_v<T, IrregularCrown>) {
                detail::require(f.j.size() > 2, "crown with more than 2 cycle vertices");
                detail::require(std::ranges::all_of(f.j, [](int x) { return x >= 0; }), "crown j_i >= 0");
                return detail::crown_graph(f.j, to_string(spec));
            }
            else {
                detail::require(f.base != nullptr, "union base family");
                detail::require(f.t >= 0, "union t >= 0");
                return build_family(*f.base).with_isolated(f.t, to_string(spec));
            }
        },
        spec.kind);
}

inline std::string to_string(const FamilySpec & spec)
{
    using namespace family;
    return std::visit(
        [](const auto & f) -> std::string {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Star>)
                return "star:n=" + std::to_string(f.n) + ",l=" + std::to_string(f.l);
            else if constexpr (std::is_same_v<T, Path>)
                return "path:" + std::to_string(f.n);
            else if constexpr (std::is_same_v<T, Cycle>)
                return "cycle:" + std::to_string(f.m);
            else if constexpr (std::is_same_v<T, CoronaCycle>)
                return "corona:m=" + std::to_string(f.m) + ",n=" + std::to_string(f.n);
            else if constexpr (std::is_same_v<T, Cmn>)
                return "cmn:m=" + std::to_string(f.m) + ",n=" + std::to_string(f.n);
            else if constexpr (std::is_same_v<T, IrregularCrown>) {
                std::string out = "crown:j=";
                for (std::size_t i = 0; i < f.j.size(); ++i)
                    out += (i ? "," : "") + std::to_string(f.j[i]);
                return out;
            }
            else
                return "union:" + (f.base ? to_string(*f.base) : std::string("?")) + "+" + std::to_string(f.t) + "K1";
        },
        spec.kind);
}

namespace detail {

    inline int parse_count(std::string_view text, std::string_view what)
    {
        auto v = to_int(text);
        if (! v || *v < 0 || *v > 1'000'000)
            throw ParseError("bad value for " + std::string(what) + ": \"" + std::string(text) + "\"", 0);
        return static_cast<int>(*v);
    }

    /// Parses "a=1,b=2" into values for the requested keys; `defaults` fill missing keys.
    inline std::vector<int> parse_named(std::string_view body, const std::vector<std::string_view> & keys,
                                        const std::vector<std::optional<int>> & defaults)
    {
        std::vector<std::optional<int>> values = defaults;
        std::size_t start = 0;
        while (start < body.size()) {
            auto end = body.find(',', start);
            if (end == std::string_view::npos)
                end = body.size();
            auto item = body.substr(start, end - start);
            auto eq = item.find('=');
            if (eq == std::string_view::npos)
                throw ParseError("expected key=value in \"" + std::string(body) + "\"", 0);
            auto key = item.substr(0, eq);
            auto it = std::ranges::find(keys, key);
            if (it == keys.end())
                throw ParseError("unknown parameter \"" + std::string(key) + "\"", 0);
            values[static_cast<std::size_t>(it - keys.begin())] = parse_count(item.substr(eq + 1), key);
            start = end + 1;
        }
        std::vector<int> out;
        for (std::size_t i = 0; i < keys.size(); ++i) {
            if (! values[i])
                throw ParseError("missing parameter \"" + std::string(keys[i]) + "\"", 0);
            out.push_back(*values[i]);
        }
        return out;
    }

} // namespace detail

/// Parses the family DSL: "star:n=3,l=2", "cycle:5", "path:4", "corona:m=3,n=2",
/// "cmn:m=5,n=1", "crown:j=1,0,2", "union:<spec>+tK1".
inline FamilySpec parse_family(std::string_view text)
{
    using namespace family;
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw ParseError("family spec must look like kind:params, got \"" + std::string(text) + "\"", 0);
    auto kind = text.substr(0, colon);
    auto body = text.substr(colon + 1);

    if (kind == "star") {
        auto v = detail::parse_named(body, {"n", "l"}, {std::nullopt, 0});
        return {Star{v[0], v[1]}};
    }
    if (kind == "path")
        return {Path{detail::parse_count(body, "path n")}};
    if (kind == "cycle")
        return {Cycle{detail::parse_count(body, "cycle m")}};
    if (kind == "corona") {
        auto v = detail::parse_named(body, {"m", "n"}, {std::nullopt, std::nullopt});
        return {CoronaCycle{v[0], v[1]}};
    }
    if (kind == "cmn") {
        auto v = detail::parse_named(body, {"m", "n"}, {std::nullopt, std::nullopt});
        return {Cmn{v[0], v[1]}};
    }
    if (kind == "crown") {
        if (! body.starts_with("j="))
            throw ParseError("crown spec must be crown:j=j1,j2,...", 0);
        IrregularCrown crown;
        auto list = body.substr(2);
        std::size_t start = 0;
        while (start <= list.size()) {
            auto end = list.find(',', start);
            if (end == std::string_view::npos)
                end = list.size();
            crown.j.push_back(detail::parse_count(list.substr(start, end - start), "crown j"));
            start = end + 1;
        }
        return {std::move(crown)};
    }
    if (kind == "union") {
        auto plus = body.rfind('+');
        if (plus == std::string_view::npos || ! body.ends_with("K1"))
            throw ParseError("union spec must be union:<spec>+tK1", 0);
        auto count = body.substr(plus + 1, body.size() - plus - 3);
        int t = count.empty() ? 1 : detail::parse_count(count, "union t");
        return {UnionIsolated{std::make_shared<const FamilySpec>(parse_family(body.substr(0, plus))), t}};
    }
    throw ParseError("unknown graph family \"" + std::string(kind) + "\"", 0);
}

} // namespace magiclab
