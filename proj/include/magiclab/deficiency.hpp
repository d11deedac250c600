#pragma once

#include <magiclab/enumeration.hpp>
#include <magiclab/error.hpp>
#include <magiclab/graph.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace magiclab {

enum class DeficiencyParameter { mu, mu_s, mu_p, mu_p_s, strong_mu_p_s };

inline const char * to_string(DeficiencyParameter p)
{
    switch (p) {
    case DeficiencyParameter::mu: return "mu";
    case DeficiencyParameter::mu_s: return "mu_s";
    case DeficiencyParameter::mu_p: return "mu_p";
    case DeficiencyParameter::mu_p_s: return "mu_p_s";
    case DeficiencyParameter::strong_mu_p_s: return "strong_mu_p_s";
    }
    return "?";
}

/// Outcome of testing G ∪ nK_1 for one n.
enum class StepVerdict { fail, sem, em, perfect, inexact };

inline const char * to_string(StepVerdict v)
{
    switch (v) {
    case StepVerdict::fail: return "fail";
    case StepVerdict::sem: return "sem";
    case StepVerdict::em: return "em";
    case StepVerdict::perfect: return "perfect";
    case StepVerdict::inexact: return "inexact";
    }
    return "?";
}

struct TraceEntry {
    int n = 0;
    StepVerdict verdict = StepVerdict::fail;
};

/// determined: `value` holds the answer. exceeded_cap: no success up to `cap`, which says
/// nothing about +∞. inexact: a search limit or guard stopped a step before a verdict.
enum class DeficiencyStatus { determined, exceeded_cap, inexact };

struct DeficiencyResult {
    DeficiencyParameter parameter = DeficiencyParameter::mu;
    DeficiencyStatus status = DeficiencyStatus::exceeded_cap;
    std::optional<int> value;
    int cap = 0;
    /// Only for strong_mu_p_s: every t'' in [value, value + window] was verified perfect.
    std::optional<int> window;
    std::vector<TraceEntry> trace;
    std::optional<TotalLabeling> witness;
    std::optional<SpectrumReport> spectrum;
    std::string note;
};

struct DeficiencyOptions {
    int cap = 8;
    SearchOptions search;
};

namespace detail {

    inline void require_cap(int cap)
    {
        if (cap < 0)
            throw ParameterError("deficiency cap must be nonnegative");
    }

    /// Runs `step(n)` for n = first..cap until it reports success or an inexact verdict.
    template <typename Step>
    DeficiencyResult scan(DeficiencyParameter parameter, int cap, int first, Step step)
    {
        DeficiencyResult out;
        out.parameter = parameter;
        out.cap = cap;
        for (int n = 0; n < std::min(first, cap + 1); ++n)
            out.trace.push_back({n, StepVerdict::fail});
        for (int n = first; n <= cap; ++n) {
            StepVerdict verdict;
            try {
                verdict = step(n, out);
            }
            catch (const GuardError & e) {
                out.trace.push_back({n, StepVerdict::inexact});
                out.status = DeficiencyStatus::inexact;
                out.note = e.what();
                return out;
            }
            out.trace.push_back({n, verdict});
            if (verdict == StepVerdict::inexact) {
                out.status = DeficiencyStatus::inexact;
                return out;
            }
            if (verdict != StepVerdict::fail) {
                out.status = DeficiencyStatus::determined;
                out.value = n;
                return out;
            }
        }
        out.status = DeficiencyStatus::exceeded_cap;
        return out;
    }

} // namespace detail

/// Least n with G ∪ nK_1 super edge-magic, searching n <= cap. Values of n below the
/// size bound ceil((q+3)/2) - p are recorded as failures without search.
inline DeficiencyResult mu_s(const Graph & g, const DeficiencyOptions & opts = {})
{
    detail::require_cap(opts.cap);
    const int p = g.order();
    const int q = g.size();
    int first = 0;
    if (q > 2 * p - 3)
        first = (q + 3 + 1) / 2 - p;
    return detail::scan(DeficiencyParameter::mu_s, opts.cap, first, [&](int n, DeficiencyResult & out) {
        auto h = g.with_isolated(n);
        if (! prune_feasibility(h).possibly_sem)
            return StepVerdict::fail;
        auto found = find_labeling(h, Mode::sem, opts.search);
        if (found.witness) {
            out.witness = found.witness;
            return StepVerdict::sem;
        }
        return found.exact ? StepVerdict::fail : StepVerdict::inexact;
    });
}

/// Least n with G ∪ nK_1 edge-magic, searching n <= cap.
inline DeficiencyResult mu(const Graph & g, const DeficiencyOptions & opts = {})
{
    detail::require_cap(opts.cap);
    return detail::scan(DeficiencyParameter::mu, opts.cap, 0, [&](int n, DeficiencyResult & out) {
        auto found = find_labeling(g.with_isolated(n), Mode::em, opts.search);
        if (found.witness) {
            out.witness = found.witness;
            return StepVerdict::em;
        }
        return found.exact ? StepVerdict::fail : StepVerdict::inexact;
    });
}

namespace detail {

    inline DeficiencyResult perfect_scan(DeficiencyParameter parameter, Mode kind, const Graph & g,
                                         const DeficiencyOptions & opts)
    {
        require_cap(opts.cap);
        return scan(parameter, opts.cap, 0, [&](int n, DeficiencyResult & out) {
            auto verdict = is_perfect(g.with_isolated(n), kind, opts.search);
            if (! verdict.perfect)
                return StepVerdict::inexact;
            if (*verdict.perfect) {
                out.spectrum = std::move(verdict.report);
                return StepVerdict::perfect;
            }
            return StepVerdict::fail;
        });
    }

} // namespace detail

/// Least n <= cap with G ∪ nK_1 perfect edge-magic.
inline DeficiencyResult mu_p(const Graph & g, const DeficiencyOptions & opts = {})
{
    return detail::perfect_scan(DeficiencyParameter::mu_p, Mode::em, g, opts);
}

/// Least n <= cap with G ∪ nK_1 perfect super edge-magic.
inline DeficiencyResult mu_p_s(const Graph & g, const DeficiencyOptions & opts = {})
{
    return detail::perfect_scan(DeficiencyParameter::mu_p_s, Mode::sem, g, opts);
}

/// Least t <= cap such that G ∪ t''K_1 is perfect super edge-magic for every t'' in
/// [t, t + window]. A finite window cannot certify all t'' >= t; the window is reported.
inline DeficiencyResult strong_mu_p_s(const Graph & g, int window, const DeficiencyOptions & opts = {})
{
    detail::require_cap(opts.cap);
    if (window < 1)
        throw ParameterError("strong deficiency window must be at least 1");

    DeficiencyResult out;
    out.parameter = DeficiencyParameter::strong_mu_p_s;
    out.cap = opts.cap;
    out.window = window;

    std::map<int, StepVerdict> verdicts;
    auto check = [&](int t) {
        if (auto it = verdicts.find(t); it != verdicts.end())
            return it->second;
        StepVerdict v;
        try {
            auto verdict = is_perfect(g.with_isolated(t), Mode::sem, opts.search);
            v = ! verdict.perfect ? StepVerdict::inexact : (*verdict.perfect ? StepVerdict::perfect : StepVerdict::fail);
        }
        catch (const GuardError & e) {
            v = StepVerdict::inexact;
            out.note = e.what();
        }
        verdicts[t] = v;
        out.trace.push_back({t, v});
        return v;
    };

    int t = 0;
    while (t <= opts.cap) {
        int failed_at = -1;
        for (int t2 = t; t2 <= t + window; ++t2) {
            auto v = check(t2);
            if (v == StepVerdict::inexact) {
                out.status = DeficiencyStatus::inexact;
                return out;
            }
            if (v == StepVerdict::fail) {
                failed_at = t2;
                break;
            }
        }
        if (failed_at < 0) {
            out.status = DeficiencyStatus::determined;
            out.value = t;
            return out;
        }
        t = failed_at + 1;
    }
    out.status = DeficiencyStatus::exceeded_cap;
    return out;
}

} // namespace magiclab
