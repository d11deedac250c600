#pragma once

// JSON encodings of the library's results. Keys are emitted in sorted order and payloads
// carry no timing data, so identical queries serialize to identical bytes.

#include <magiclab/deficiency.hpp>
#include <magiclab/enumeration.hpp>
#include <magiclab/intervals.hpp>
#include <magiclab/labeling.hpp>
#include <magiclab/star_family.hpp>

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace magiclab {

using json = nlohmann::json;

inline json to_json(const TotalLabeling & f)
{
    json edges = json::array();
    auto es = f.graph().edges();
    for (std::size_t i = 0; i < es.size(); ++i)
        edges.push_back({es[i].u, es[i].v, f.edge(i)});
    json out;
    out["vertices"] = f.vertex_labels();
    out["edges"] = std::move(edges);
    out["valence"] = valence(f);
    out["super"] = f.is_super();
    return out;
}

/// Rebuilds a labeling of `g` from its JSON form. Edges may be listed in any order.
inline TotalLabeling labeling_from_json(std::shared_ptr<const Graph> g, const json & j)
{
    auto vertices = j.at("vertices").get<std::vector<int>>();
    std::map<Edge, int> by_edge;
    for (const auto & e : j.at("edges")) {
        int u = e.at(0).get<int>();
        int v = e.at(1).get<int>();
        by_edge[Edge{std::min(u, v), std::max(u, v)}] = e.at(2).get<int>();
    }
    std::vector<int> edge_labels;
    for (const auto & e : g->edges()) {
        auto it = by_edge.find(e);
        if (it == by_edge.end())
            throw ParseError("labeling JSON lacks edge " + std::to_string(e.u) + "-" + std::to_string(e.v), 0);
        edge_labels.push_back(it->second);
    }
    return TotalLabeling(std::move(g), std::move(vertices), std::move(edge_labels));
}

inline json interval_json(const IntervalReport & r)
{
    auto iv = r.interval();
    return iv ? json{iv->first, iv->second} : json(nullptr);
}

inline json to_json(const IntervalReport & r)
{
    json out;
    out["kind"] = to_string(r.kind);
    out["min_raw"] = r.min_raw.to_string();
    out["max_raw"] = r.max_raw.to_string();
    out["interval"] = interval_json(r);
    return out;
}

inline json to_json(const SpectrumReport & r)
{
    json out;
    out["kind"] = to_string(r.kind);
    out["interval"] = interval_json(r.interval);
    out["achieved"] = r.achieved;
    out["count"] = r.labeling_count ? json(*r.labeling_count) : json(nullptr);
    out["perfect"] = r.perfect;
    out["exact"] = r.exact;
    json stats;
    stats["nodes"] = r.stats.nodes;
    if (! r.stats.pruned_by.empty())
        stats["pruned_by"] = r.stats.pruned_by;
    out["stats"] = std::move(stats);
    return out;
}

/// One labeling per achieved valence, keyed by the valence.
inline json witnesses_json(const SpectrumReport & r)
{
    json out = json::object();
    for (const auto & [k, f] : r.witnesses)
        out[std::to_string(k)] = to_json(f);
    return out;
}

inline json to_json(const DeficiencyResult & r)
{
    json out;
    out["parameter"] = to_string(r.parameter);
    switch (r.status) {
    case DeficiencyStatus::determined:
        out["value"] = *r.value;
        break;
    case DeficiencyStatus::exceeded_cap:
        out["exceeded_cap"] = r.cap;
        break;
    case DeficiencyStatus::inexact:
        out["inexact"] = r.note.empty() ? json(true) : json(r.note);
        break;
    }
    if (r.window)
        out["window"] = *r.window;
    json trace = json::array();
    for (const auto & t : r.trace)
        trace.push_back({t.n, to_string(t.verdict)});
    out["trace"] = std::move(trace);
    if (r.witness)
        out["witness"] = to_json(*r.witness);
    if (r.spectrum)
        out["spectrum"] = to_json(*r.spectrum);
    return out;
}

inline json to_json(const star::StarSemLabeling & s) { return to_json(s.extend()); }

} // namespace magiclab
