#pragma once

#include <magiclab/error.hpp>
#include <magiclab/graph.hpp>
#include <magiclab/intervals.hpp>
#include <magiclab/labeling.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace magiclab {

struct SearchOptions {
    std::optional<double> time_limit;        ///< seconds
    std::optional<std::uint64_t> node_limit; ///< search nodes across all workers
    bool dedup = true;                       ///< count signature classes instead of raw labelings
    bool collect_all = false;                ///< keep every labeling (one per class when dedup)
    bool count = true;                       ///< false: one witness per valence is enough, no counting
    int workers = 1;
    int max_vertices = 12; ///< guard for enumerate_sem
    int max_labels = 16;   ///< guard on p+q for enumerate_em
};

struct SearchStats {
    std::uint64_t nodes = 0;
    double elapsed_seconds = 0.0;
    /// Set when a feasibility rule skipped the search entirely.
    std::string pruned_by;
};

/// Valence spectrum of a graph for one labeling kind.
struct SpectrumReport {
    Mode kind = Mode::sem;
    IntervalReport interval;
    std::vector<int> achieved;
    std::map<int, TotalLabeling> witnesses;
    std::optional<std::uint64_t> labeling_count;
    std::vector<TotalLabeling> labelings;
    bool perfect = false;
    /// False when a limit stopped the search; achieved is then only a subset.
    bool exact = true;
    /// Two labelings with equal signatures but different valences were seen.
    bool signature_collision = false;
    SearchStats stats;

    bool achieves(int k) const { return std::ranges::binary_search(achieved, k); }
};

/// Outcome of the size and triangle rules. not_sem verdicts are sound.
struct Feasibility {
    bool possibly_sem = true;
    std::string reason;
};

/// Rejects graphs that cannot be super edge-magic: q > 2p-3, or q in {2p-3, 2p-4}
/// without a triangle. The triangle rule is only applied for p >= 4; K2 and P3 are
/// triangle-free super edge-magic graphs of those sizes.
inline Feasibility prune_feasibility(const Graph & g)
{
    const int p = g.order();
    const int q = g.size();
    if (q >= 1 && q > 2 * p - 3)
        return {false, "size bound: q = " + std::to_string(q) + " > 2p-3 = " + std::to_string(2 * p - 3)};
    if (p >= 4 && (q == 2 * p - 3 || q == 2 * p - 4) && ! has_triangle(g))
        return {false, "triangle rule: q = " + std::to_string(q) + " in {2p-3, 2p-4} and no triangle"};
    return {};
}

namespace detail {

    enum class StopPolicy { full, first_per_valence, first_overall };

    class SearchControl {
    public:
        explicit SearchControl(const SearchOptions & opts)
            : node_limit_(opts.node_limit), start_(std::chrono::steady_clock::now())
        {
            if (opts.time_limit)
                deadline_ = start_ + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                         std::chrono::duration<double>(*opts.time_limit));
        }

        /// Called once per node with a worker-local counter; false once partition `part` must stop.
        bool tick(std::uint64_t & local, int part)
        {
            ++local;
            if ((local & 63) == 0)
                flush(local);
            return ! aborted_.load(std::memory_order_relaxed) && part <= found_part_.load(std::memory_order_relaxed);
        }

        void flush(std::uint64_t & local)
        {
            auto total = nodes_.fetch_add(local, std::memory_order_relaxed) + local;
            local = 0;
            if (node_limit_ && total > *node_limit_)
                aborted_ = true;
            if (deadline_ && std::chrono::steady_clock::now() > *deadline_)
                aborted_ = true;
        }

        /// Partitions after `part` are no longer needed (first-overall searches).
        void found_in(int part)
        {
            int current = found_part_.load();
            while (part < current && ! found_part_.compare_exchange_weak(current, part))
                ;
        }
        bool skip(int part) const { return part > found_part_.load(); }
        bool aborted() const { return aborted_; }
        std::uint64_t nodes() const { return nodes_; }

        double elapsed() const
        {
            return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        }

    private:
        std::optional<std::uint64_t> node_limit_;
        std::chrono::steady_clock::time_point start_;
        std::optional<std::chrono::steady_clock::time_point> deadline_;
        std::atomic<std::uint64_t> nodes_{0};
        std::atomic<bool> aborted_{false};
        std::atomic<int> found_part_{std::numeric_limits<int>::max()};
    };

    /// Labelings found in one partition, keyed by valence and vertex labels
    /// (edge labels are always valence minus endpoint sum).
    struct PartResult {
        std::map<int, std::vector<int>> witnesses;
        std::map<Signature, std::pair<int, std::vector<int>>> classes;
        std::vector<std::pair<int, std::vector<int>>> raw;
        std::uint64_t raw_count = 0;
        bool collision = false;
    };

    class Recorder {
    public:
        Recorder(const Graph & g, const SearchOptions & opts, StopPolicy policy, PartResult & out)
            : g_(g), opts_(opts), policy_(policy), out_(out)
        {
        }

        /// Returns true when the current partition should stop.
        bool record(int k, const std::vector<int> & vertex_labels)
        {
            auto [it, inserted] = out_.witnesses.try_emplace(k, vertex_labels);
            if (! inserted && vertex_labels < it->second)
                it->second = vertex_labels;

            if (opts_.count || opts_.collect_all) {
                ++out_.raw_count;
                if (opts_.dedup) {
                    auto sig = signature_of(g_, vertex_labels);
                    auto [cit, fresh] = out_.classes.try_emplace(std::move(sig), k, vertex_labels);
                    if (! fresh) {
                        if (cit->second.first != k)
                            out_.collision = true;
                        else if (vertex_labels < cit->second.second)
                            cit->second.second = vertex_labels;
                    }
                }
                else if (opts_.collect_all)
                    out_.raw.emplace_back(k, vertex_labels);
            }
            return policy_ != StopPolicy::full;
        }

    private:
        const Graph & g_;
        const SearchOptions & opts_;
        StopPolicy policy_;
        PartResult & out_;
    };

    /// Non-isolated vertices by descending degree (ties by id), then the isolated ones.
    inline std::pair<std::vector<Vertex>, std::vector<Vertex>> search_order(const Graph & g)
    {
        std::vector<Vertex> active;
        std::vector<Vertex> isolated;
        for (Vertex v = 1; v <= g.order(); ++v)
            (g.degree(v) > 0 ? active : isolated).push_back(v);
        std::ranges::stable_sort(active, [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
        return {active, isolated};
    }

    /// For each position in `order`, the (earlier position, edge index) pairs adjacent to it.
    inline std::vector<std::vector<std::pair<int, int>>> back_edges(const Graph & g, const std::vector<Vertex> & order)
    {
        std::vector<int> position(static_cast<std::size_t>(g.order()) + 1, -1);
        for (std::size_t i = 0; i < order.size(); ++i)
            position[order[i]] = static_cast<int>(i);
        std::vector<std::vector<std::pair<int, int>>> back(order.size());
        auto edges = g.edges();
        for (std::size_t e = 0; e < edges.size(); ++e) {
            int a = position[edges[e].u];
            int b = position[edges[e].v];
            if (a < b)
                std::swap(a, b);
            back[static_cast<std::size_t>(a)].emplace_back(b, static_cast<int>(e));
        }
        return back;
    }

    /// Super edge-magic search over vertex bijections. Prunes when two completed edges share
    /// a sum or the completed sums span more than q consecutive integers.
    class SemSearch {
    public:
        SemSearch(const Graph & g, const SearchOptions & opts, StopPolicy policy, SearchControl & control)
            : g_(g), opts_(opts), policy_(policy), control_(control)
        {
            std::tie(order_, isolated_) = search_order(g);
            back_ = back_edges(g, order_);
        }

        int partitions() const { return g_.order(); }

        void run(int part, PartResult & out)
        {
            const int p = g_.order();
            Recorder recorder(g_, opts_, policy_, out);
            std::vector<char> used(static_cast<std::size_t>(p) + 1, 0);
            std::vector<char> sum_used(static_cast<std::size_t>(2 * p) + 1, 0);
            std::vector<int> at(order_.size(), 0);
            std::vector<int> labels(static_cast<std::size_t>(p), 0);
            std::uint64_t local = 0;
            bool stop = false;
            const int q = g_.size();

            auto dfs = [&](auto && self, std::size_t i, int lo, int hi) -> void {
                if (stop || ! control_.tick(local, part)) {
                    stop = true;
                    return;
                }
                if (i == order_.size()) {
                    int next = 1;
                    for (Vertex z : isolated_) {
                        while (used[static_cast<std::size_t>(next)])
                            ++next;
                        labels[static_cast<std::size_t>(z - 1)] = next++;
                    }
                    if (recorder.record(p + q + lo, labels)) {
                        stop = true;
                        if (policy_ == StopPolicy::first_overall)
                            control_.found_in(part);
                    }
                    return;
                }
                int first = i == 0 ? part + 1 : 1;
                int last = i == 0 ? part + 1 : p;
                for (int label = first; label <= last && ! stop; ++label) {
                    if (used[static_cast<std::size_t>(label)])
                        continue;
                    int nlo = lo;
                    int nhi = hi;
                    std::size_t marked = 0;
                    bool ok = true;
                    for (const auto & [j, e] : back_[i]) {
                        int s = label + at[static_cast<std::size_t>(j)];
                        if (sum_used[static_cast<std::size_t>(s)]) {
                            ok = false;
                            break;
                        }
                        nlo = std::min(nlo, s);
                        nhi = std::max(nhi, s);
                        if (nhi - nlo > q - 1) {
                            ok = false;
                            break;
                        }
                        sum_used[static_cast<std::size_t>(s)] = 1;
                        ++marked;
                    }
                    if (ok) {
                        used[static_cast<std::size_t>(label)] = 1;
                        at[i] = label;
                        labels[static_cast<std::size_t>(order_[i] - 1)] = label;
                        self(self, i + 1, nlo, nhi);
                        used[static_cast<std::size_t>(label)] = 0;
                    }
                    for (std::size_t m = 0; m < marked; ++m) {
                        const auto & [j, e] = back_[i][m];
                        sum_used[static_cast<std::size_t>(label + at[static_cast<std::size_t>(j)])] = 0;
                    }
                }
            };
            dfs(dfs, 0, std::numeric_limits<int>::max(), std::numeric_limits<int>::min());
            control_.flush(local);
        }

    private:
        const Graph & g_;
        const SearchOptions & opts_;
        StopPolicy policy_;
        SearchControl & control_;
        std::vector<Vertex> order_;
        std::vector<Vertex> isolated_;
        std::vector<std::vector<std::pair<int, int>>> back_;
    };

    /// Edge-magic search for a fixed valence k: vertex labels branch, edge labels are forced
    /// to k - f(u) - f(v). Isolated vertices take the leftover labels in ascending order.
    class EmSearch {
    public:
        EmSearch(const Graph & g, const SearchOptions & opts, StopPolicy policy, SearchControl & control, int k_lo)
            : g_(g), opts_(opts), policy_(policy), control_(control), k_lo_(k_lo)
        {
            std::tie(order_, isolated_) = search_order(g);
            back_ = back_edges(g, order_);
        }

        void run(int part, PartResult & out)
        {
            const int k = k_lo_ + part;
            const int n_labels = g_.order() + g_.size();
            Recorder recorder(g_, opts_, policy_, out);
            std::vector<char> used(static_cast<std::size_t>(n_labels) + 1, 0);
            std::vector<int> at(order_.size(), 0);
            std::vector<int> labels(static_cast<std::size_t>(g_.order()), 0);
            std::uint64_t local = 0;
            bool stop = false;

            auto dfs = [&](auto && self, std::size_t i) -> void {
                if (stop || ! control_.tick(local, part)) {
                    stop = true;
                    return;
                }
                if (i == order_.size()) {
                    int next = 1;
                    for (Vertex z : isolated_) {
                        while (used[static_cast<std::size_t>(next)])
                            ++next;
                        labels[static_cast<std::size_t>(z - 1)] = next++;
                    }
                    if (recorder.record(k, labels)) {
                        stop = true;
                        if (policy_ == StopPolicy::first_overall)
                            control_.found_in(part);
                    }
                    return;
                }
                // every forced edge label k - label - neighbour must land in 1..n_labels
                int lo = 1;
                int hi = n_labels;
                for (const auto & [j, e] : back_[i]) {
                    int other = at[static_cast<std::size_t>(j)];
                    lo = std::max(lo, k - n_labels - other);
                    hi = std::min(hi, k - 1 - other);
                }
                for (int label = lo; label <= hi && ! stop; ++label) {
                    if (used[static_cast<std::size_t>(label)])
                        continue;
                    used[static_cast<std::size_t>(label)] = 1;
                    std::vector<int> forced;
                    bool ok = true;
                    for (const auto & [j, e] : back_[i]) {
                        int x = k - label - at[static_cast<std::size_t>(j)];
                        if (used[static_cast<std::size_t>(x)]) {
                            ok = false;
                            break;
                        }
                        used[static_cast<std::size_t>(x)] = 1;
                        forced.push_back(x);
                    }
                    if (ok) {
                        at[i] = label;
                        labels[static_cast<std::size_t>(order_[i] - 1)] = label;
                        self(self, i + 1);
                    }
                    for (int x : forced)
                        used[static_cast<std::size_t>(x)] = 0;
                    used[static_cast<std::size_t>(label)] = 0;
                }
            };
            dfs(dfs, 0);
            control_.flush(local);
        }

    private:
        const Graph & g_;
        const SearchOptions & opts_;
        StopPolicy policy_;
        SearchControl & control_;
        int k_lo_;
        std::vector<Vertex> order_;
        std::vector<Vertex> isolated_;
        std::vector<std::vector<std::pair<int, int>>> back_;
    };

    /// Runs `search.run(part, result)` for every partition on up to `workers` threads.
    /// Results are indexed by partition, so merging is independent of scheduling.
    template <typename Search>
    std::vector<PartResult> run_partitions(Search & search, int partitions, int workers, SearchControl & control)
    {
        std::vector<PartResult> results(static_cast<std::size_t>(std::max(partitions, 0)));
        std::atomic<int> next{0};
        auto worker = [&] {
            for (int part = next++; part < partitions; part = next++) {
                if (control.aborted())
                    break;
                if (control.skip(part))
                    continue;
                search.run(part, results[static_cast<std::size_t>(part)]);
            }
        };
        workers = std::clamp(workers, 1, std::max(partitions, 1));
        if (workers == 1)
            worker();
        else {
            std::vector<std::jthread> threads;
            for (int w = 0; w < workers; ++w)
                threads.emplace_back(worker);
        }
        return results;
    }

    inline TotalLabeling build_labeling(const std::shared_ptr<const Graph> & g, int k, const std::vector<int> & vertex_labels)
    {
        std::vector<int> edge_labels;
        for (const auto & e : g->edges())
            edge_labels.push_back(k - vertex_labels[static_cast<std::size_t>(e.u - 1)]
                                  - vertex_labels[static_cast<std::size_t>(e.v - 1)]);
        TotalLabeling f(g, vertex_labels, std::move(edge_labels));
        if (valence(f) != k)
            throw std::logic_error("enumerated labeling fails validation");
        return f;
    }

    inline SpectrumReport merge(const std::shared_ptr<const Graph> & g, Mode kind, const SearchOptions & opts,
                                std::vector<PartResult> parts, const SearchControl & control,
                                StopPolicy policy = StopPolicy::full)
    {
        if (policy == StopPolicy::first_overall) {
            // keep only the first partition holding a witness; later ones may have raced
            auto hit = std::ranges::find_if(parts, [](const PartResult & r) { return ! r.witnesses.empty(); });
            if (hit != parts.end())
                parts.erase(hit + 1, parts.end());
        }
        SpectrumReport report;
        report.kind = kind;
        report.interval = interval(*g, kind);

        std::map<int, std::vector<int>> witnesses;
        std::map<Signature, std::pair<int, std::vector<int>>> classes;
        std::uint64_t raw_count = 0;
        for (auto & part : parts) {
            for (auto & [k, labels] : part.witnesses) {
                auto [it, inserted] = witnesses.try_emplace(k, labels);
                if (! inserted && labels < it->second)
                    it->second = labels;
            }
            for (auto & [sig, entry] : part.classes) {
                auto [it, inserted] = classes.try_emplace(sig, entry);
                if (! inserted) {
                    if (it->second.first != entry.first)
                        report.signature_collision = true;
                    else if (entry.second < it->second.second)
                        it->second.second = entry.second;
                }
            }
            report.signature_collision = report.signature_collision || part.collision;
            raw_count += part.raw_count;
        }

        for (auto & [k, labels] : witnesses) {
            report.achieved.push_back(k);
            report.witnesses.emplace(k, build_labeling(g, k, labels));
        }
        if (opts.count)
            report.labeling_count = opts.dedup ? classes.size() : raw_count;
        if (opts.collect_all) {
            if (opts.dedup)
                for (auto & [sig, entry] : classes)
                    report.labelings.push_back(build_labeling(g, entry.first, entry.second));
            else
                for (auto & part : parts)
                    for (auto & [k, labels] : part.raw)
                        report.labelings.push_back(build_labeling(g, k, labels));
        }

        report.exact = ! control.aborted();
        auto iv = report.interval.interval();
        report.perfect = report.exact && iv
                         && static_cast<int>(report.achieved.size()) == iv->second - iv->first + 1
                         && std::ranges::all_of(report.achieved, [&](int k) { return report.interval.contains(k); });
        report.stats.nodes = control.nodes();
        report.stats.elapsed_seconds = control.elapsed();
        return report;
    }

    inline SpectrumReport enumerate_sem(std::shared_ptr<const Graph> g, const SearchOptions & opts, StopPolicy policy)
    {
        if (g->size() == 0)
            throw IntervalError("super edge-magic spectrum is undefined for a graph without edges");
        if (g->order() > opts.max_vertices)
            throw GuardError("enumerate_sem refuses p = " + std::to_string(g->order()) + " > "
                             + std::to_string(opts.max_vertices));
        SearchControl control(opts);
        auto feasible = prune_feasibility(*g);
        if (! feasible.possibly_sem) {
            auto report = merge(g, Mode::sem, opts, {}, control);
            report.stats.pruned_by = feasible.reason;
            return report;
        }
        SemSearch search(*g, opts, policy, control);
        auto parts = run_partitions(search, search.partitions(), opts.workers, control);
        return merge(g, Mode::sem, opts, std::move(parts), control, policy);
    }

    inline SpectrumReport enumerate_em(std::shared_ptr<const Graph> g, const SearchOptions & opts, StopPolicy policy)
    {
        auto lambda = em_interval(*g);
        if (g->order() + g->size() > opts.max_labels)
            throw GuardError("enumerate_em refuses p+q = " + std::to_string(g->order() + g->size()) + " > "
                             + std::to_string(opts.max_labels));
        SearchControl control(opts);
        auto iv = lambda.interval();
        if (! iv)
            return merge(g, Mode::em, opts, {}, control);
        EmSearch search(*g, opts, policy, control, iv->first);
        auto parts = run_partitions(search, iv->second - iv->first + 1, opts.workers, control);
        return merge(g, Mode::em, opts, std::move(parts), control, policy);
    }

} // namespace detail

/// All super edge-magic valences of g (σ), with one witness per valence and the number of
/// signature-distinct labelings.
inline SpectrumReport enumerate_sem(std::shared_ptr<const Graph> g, const SearchOptions & opts = {})
{
    return detail::enumerate_sem(std::move(g), opts, detail::StopPolicy::full);
}

inline SpectrumReport enumerate_sem(const Graph & g, const SearchOptions & opts = {})
{
    return enumerate_sem(std::make_shared<const Graph>(g), opts);
}

/// All edge-magic valences of g (τ). Candidate valences are restricted to the edge-magic interval.
/// With opts.count == false each valence stops at its first witness.
inline SpectrumReport enumerate_em(std::shared_ptr<const Graph> g, const SearchOptions & opts = {})
{
    return detail::enumerate_em(std::move(g), opts,
                                opts.count || opts.collect_all ? detail::StopPolicy::full
                                                               : detail::StopPolicy::first_per_valence);
}

inline SpectrumReport enumerate_em(const Graph & g, const SearchOptions & opts = {})
{
    return enumerate_em(std::make_shared<const Graph>(g), opts);
}

inline SpectrumReport enumerate(const Graph & g, Mode kind, const SearchOptions & opts = {})
{
    return kind == Mode::sem ? enumerate_sem(g, opts) : enumerate_em(g, opts);
}

/// Finds one labeling of the given kind, or std::nullopt. `exact` reports whether a
/// negative answer is conclusive.
struct ExistenceResult {
    std::optional<TotalLabeling> witness;
    bool exact = true;
    std::uint64_t nodes = 0;
};

inline ExistenceResult find_labeling(const Graph & g, Mode kind, SearchOptions opts = {})
{
    opts.count = false;
    opts.collect_all = false;
    auto ptr = std::make_shared<const Graph>(g);
    auto report = kind == Mode::sem ? detail::enumerate_sem(ptr, opts, detail::StopPolicy::first_overall)
                                    : detail::enumerate_em(ptr, opts, detail::StopPolicy::first_overall);
    ExistenceResult out;
    out.nodes = report.stats.nodes;
    if (! report.witnesses.empty())
        out.witness = report.witnesses.begin()->second;
    out.exact = out.witness.has_value() || report.exact;
    return out;
}

struct PerfectVerdict {
    /// std::nullopt when a limit made the search inconclusive.
    std::optional<bool> perfect;
    SpectrumReport report;
};

inline PerfectVerdict is_perfect(const Graph & g, Mode kind, SearchOptions opts = {})
{
    opts.count = false;
    opts.collect_all = false;
    auto report = enumerate(g, kind, opts);
    if (! report.interval.interval())
        throw IntervalError("perfectness needs a nonempty valence interval");
    PerfectVerdict out{std::nullopt, std::move(report)};
    if (out.report.exact)
        out.perfect = out.report.perfect;
    return out;
}

} // namespace magiclab
