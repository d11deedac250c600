#pragma once

// Command-line front end: magiclab <graph|sem|em|deficiency|star|verify> <verb> [options].
// Exit status: 0 exact success, 1 verification failure, 2 usage error, 3 inexact result.

#include "cache.hpp"

#include <magiclab/deficiency.hpp>
#include <magiclab/enumeration.hpp>
#include <magiclab/error.hpp>
#include <magiclab/graph.hpp>
#include <magiclab/intervals.hpp>
#include <magiclab/json_io.hpp>
#include <magiclab/star_family.hpp>
#include <magiclab/verifier.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>

namespace magiclab::cli {

enum Exit { ok = 0, verification_failed = 1, usage = 2, inexact = 3 };

struct Options {
    std::string graph_spec;
    std::string file;
    std::string format = "json";
    std::string suite = "all";
    std::string witnesses;
    std::string histogram;
    std::optional<int> cap;
    std::optional<int> window;
    std::optional<int> n;
    std::optional<int> l;
    std::optional<int> k;
    std::optional<double> time_limit;
    std::optional<std::uint64_t> node_limit;
    std::optional<int> workers;
    bool no_cache = false;
    bool labelings = false;
};

/// How a payload is rendered as csv or text.
enum class Shape { graph, interval, spectrum, find, perfect, deficiency, count, family, valences, labeling, report };

struct Outcome {
    json payload;
    Shape shape = Shape::count;
    int exit = Exit::ok;
};

class UsageError : public Error {
public:
    using Error::Error;
};

namespace detail {

    inline int default_workers()
    {
        if (const char * env = std::getenv("MAGICLAB_WORKERS"); env && *env) {
            try {
                int w = std::stoi(env);
                if (w >= 1)
                    return w;
            }
            catch (const std::exception &) {
            }
            throw UsageError("MAGICLAB_WORKERS must be a positive integer");
        }
        return 1;
    }

    inline SearchOptions search_options(const Options & o)
    {
        SearchOptions s;
        s.time_limit = o.time_limit;
        s.node_limit = o.node_limit;
        s.workers = o.workers.value_or(default_workers());
        if (s.workers < 1)
            throw UsageError("--workers must be at least 1");
        return s;
    }

    /// The input graph with its edges sorted, so equal graphs give equal output.
    inline Graph load_graph(const Options & o)
    {
        if (o.graph_spec.empty() == o.file.empty())
            throw UsageError("give exactly one of --graph SPEC or --file PATH");
        Graph g;
        if (! o.graph_spec.empty()) {
            g = build_family(parse_family(o.graph_spec));
        }
        else {
            std::string text;
            if (o.file == "-") {
                text.assign(std::istreambuf_iterator<char>(std::cin), {});
            }
            else {
                std::ifstream in(o.file);
                if (! in)
                    throw UsageError("cannot read " + o.file);
                text.assign(std::istreambuf_iterator<char>(in), {});
            }
            g = parse_graph(text);
        }
        return Graph(g.order(), g.sorted_edges(), g.name());
    }

    inline int require(const std::optional<int> & v, const char * flag)
    {
        if (! v)
            throw UsageError(std::string("missing ") + flag);
        return *v;
    }

    inline std::string cache_key(std::string_view command, const Graph & g, const json & params)
    {
        return std::string(command) + "|" + params.dump() + "|" + serialize_graph(g);
    }

    /// Serves `key` from the cache when allowed, else computes and stores exact answers.
    template <typename Compute>
    Outcome cached(const Options & o, const std::string & key, Shape shape, Compute compute, bool readable = true)
    {
        std::optional<Cache> cache;
        if (! o.no_cache)
            cache = Cache::from_environment();
        if (cache && readable)
            if (auto hit = cache->lookup(key))
                return {*hit, shape, Exit::ok};
        Outcome out = compute();
        out.shape = shape;
        if (cache && out.exit == Exit::ok)
            cache->store(key, out.payload);
        return out;
    }

    inline Outcome graph_show(const Options & o)
    {
        auto g = load_graph(o);
        json edges = json::array();
        for (const auto & e : g.edges())
            edges.push_back({e.u, e.v});
        auto gi = girth(g);
        auto feasible = prune_feasibility(g);
        json payload{{"name", g.name()},
                     {"p", g.order()},
                     {"q", g.size()},
                     {"edges", std::move(edges)},
                     {"degrees", std::vector<int>(g.degrees().begin(), g.degrees().end())},
                     {"girth", gi ? json(*gi) : json(nullptr)},
                     {"feasibility", {{"possibly_sem", feasible.possibly_sem}, {"reason", feasible.reason}}}};
        return {std::move(payload), Shape::graph, Exit::ok};
    }

    inline Outcome interval_cmd(const Options & o, Mode mode)
    {
        return {to_json(interval(load_graph(o), mode)), Shape::interval, Exit::ok};
    }

    inline Outcome spectrum_cmd(const Options & o, Mode mode)
    {
        auto g = load_graph(o);
        auto opts = search_options(o);
        opts.collect_all = o.labelings;
        json params{{"labelings", o.labelings}};
        auto compute = [&]() -> Outcome {
            auto report = enumerate(g, mode, opts);
            auto payload = to_json(report);
            if (o.labelings) {
                json all = json::array();
                for (const auto & f : report.labelings)
                    all.push_back(to_json(f));
                payload["labelings"] = std::move(all);
            }
            if (! o.witnesses.empty()) {
                std::ofstream out(o.witnesses);
                if (! out)
                    throw UsageError("cannot write " + o.witnesses);
                for (const auto & [k, f] : report.witnesses)
                    out << to_json(f).dump() << '\n';
            }
            return {std::move(payload), Shape::spectrum, report.exact ? Exit::ok : Exit::inexact};
        };
        return cached(o, cache_key(std::string(to_string(mode)) + " spectrum", g, params), Shape::spectrum, compute,
                      o.witnesses.empty());
    }

    inline Outcome find_cmd(const Options & o, Mode mode)
    {
        auto g = load_graph(o);
        auto found = find_labeling(g, mode, search_options(o));
        json payload{{"kind", to_string(mode)},
                     {"found", found.witness.has_value()},
                     {"exact", found.exact},
                     {"witness", found.witness ? to_json(*found.witness) : json(nullptr)}};
        return {std::move(payload), Shape::find, found.exact ? Exit::ok : Exit::inexact};
    }

    inline Outcome perfect_cmd(const Options & o, Mode mode)
    {
        auto g = load_graph(o);
        auto compute = [&]() -> Outcome {
            auto verdict = is_perfect(g, mode, search_options(o));
            json payload{{"kind", to_string(mode)},
                         {"perfect", verdict.perfect ? json(*verdict.perfect) : json(nullptr)},
                         {"interval", interval_json(verdict.report.interval)},
                         {"achieved", verdict.report.achieved},
                         {"exact", verdict.report.exact}};
            return {std::move(payload), Shape::perfect, verdict.perfect ? Exit::ok : Exit::inexact};
        };
        return cached(o, cache_key(std::string(to_string(mode)) + " perfect", g, json::object()), Shape::perfect,
                      compute);
    }

    inline Outcome deficiency_cmd(const Options & o, DeficiencyParameter parameter)
    {
        auto g = load_graph(o);
        DeficiencyOptions opts;
        opts.cap = o.cap.value_or(8);
        opts.search = search_options(o);
        const int window = o.window.value_or(3);
        json params{{"cap", opts.cap}};
        if (parameter == DeficiencyParameter::strong_mu_p_s)
            params["window"] = window;
        auto compute = [&]() -> Outcome {
            DeficiencyResult r;
            switch (parameter) {
            case DeficiencyParameter::mu: r = mu(g, opts); break;
            case DeficiencyParameter::mu_s: r = mu_s(g, opts); break;
            case DeficiencyParameter::mu_p: r = mu_p(g, opts); break;
            case DeficiencyParameter::mu_p_s: r = mu_p_s(g, opts); break;
            case DeficiencyParameter::strong_mu_p_s: r = strong_mu_p_s(g, window, opts); break;
            }
            return {to_json(r), Shape::deficiency,
                    r.status == DeficiencyStatus::inexact ? Exit::inexact : Exit::ok};
        };
        return cached(o, cache_key(std::string("deficiency ") + to_string(parameter), g, params), Shape::deficiency,
                      compute);
    }

    inline Outcome star_count(const Options & o)
    {
        auto family = star::generate_all(require(o.n, "--n"), require(o.l, "--l"));
        return {json(family.size()), Shape::count, Exit::ok};
    }

    inline std::string histogram_csv(const json & family)
    {
        std::map<int, int> counts;
        for (const auto & f : family)
            ++counts[f.at("valence").get<int>()];
        std::string out = "valence,count\n";
        for (auto [k, c] : counts)
            out += std::to_string(k) + "," + std::to_string(c) + "\n";
        return out;
    }

    inline Outcome star_generate(const Options & o)
    {
        const int n = require(o.n, "--n");
        const int l = require(o.l, "--l");
        json family = json::array();
        for (const auto & s : star::generate_all(n, l)) {
            auto j = to_json(s);
            j["type"] = star::to_string(s.type());
            family.push_back(std::move(j));
        }
        if (! o.histogram.empty()) {
            std::ofstream out(o.histogram);
            if (! out)
                throw UsageError("cannot write " + o.histogram);
            out << histogram_csv(family);
        }
        return {std::move(family), Shape::family, Exit::ok};
    }

    inline Outcome star_valences(const Options & o)
    {
        const int n = require(o.n, "--n");
        const int l = require(o.l, "--l");
        auto sets = star::valence_sets(n, l);
        auto [lo, hi] = star::t1_valence_range(n, l);
        auto sem = sem_interval(*star::graph(n, l));
        auto iv = sem.interval();
        const bool perfect = iv && static_cast<int>(sets.all.size()) == iv->second - iv->first + 1
                             && *sets.all.begin() == iv->first && *sets.all.rbegin() == iv->second;
        json payload{{"n", n},
                     {"l", l},
                     {"t1", sets.t1},
                     {"t2", sets.t2},
                     {"all", sets.all},
                     {"t1_closed_form", {lo, hi}},
                     {"interval", interval_json(sem)},
                     {"perfect", perfect}};
        return {std::move(payload), Shape::valences, Exit::ok};
    }

    inline Outcome star_fk(const Options & o)
    {
        const int n = require(o.n, "--n");
        const int l = require(o.l, "--l");
        if (o.k)
            return {to_json(star::em_fk(n, l, *o.k)), Shape::labeling, Exit::ok};
        json all = json::array();
        for (int k = 0; k <= l; ++k)
            all.push_back(to_json(star::em_fk(n, l, k)));
        return {std::move(all), Shape::family, Exit::ok};
    }

    inline Outcome verify_cmd(const Options & o, std::string & text)
    {
        SuiteParams params;
        params.workers = o.workers.value_or(default_workers());
        auto reports = run_suites(o.suite, params);
        json payload = json::array();
        bool passed = true;
        for (const auto & r : reports) {
            payload.push_back(to_json(r));
            text += to_text(r);
            passed = passed && r.passed();
        }
        return {std::move(payload), Shape::report, passed ? Exit::ok : Exit::verification_failed};
    }

    inline std::string csv_field(const std::string & s)
    {
        if (s.find_first_of(",\"\n") == std::string::npos)
            return s;
        std::string out = "\"";
        for (char c : s)
            out += c == '"' ? std::string("\"\"") : std::string(1, c);
        return out + "\"";
    }

    inline std::string scalar(const json & j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

    inline std::string labeling_csv(const json & f)
    {
        std::string out = "element,label\n";
        const auto & vs = f.at("vertices");
        for (std::size_t i = 0; i < vs.size(); ++i)
            out += "v" + std::to_string(i + 1) + "," + vs[i].dump() + "\n";
        for (const auto & e : f.at("edges"))
            out += "e" + e[0].dump() + "-" + e[1].dump() + "," + e[2].dump() + "\n";
        return out;
    }

    inline std::string labeling_text(const json & f)
    {
        std::ostringstream out;
        out << "valence " << f.at("valence") << (f.at("super").get<bool>() ? " (super)" : "") << "\n  vertices:";
        const auto & vs = f.at("vertices");
        for (std::size_t i = 0; i < vs.size(); ++i)
            out << ' ' << i + 1 << '=' << vs[i];
        out << "\n  edges:";
        for (const auto & e : f.at("edges"))
            out << ' ' << e[0] << '-' << e[1] << '=' << e[2];
        out << '\n';
        return out.str();
    }

    inline std::string render_csv(const Outcome & o)
    {
        const auto & j = o.payload;
        std::string out;
        switch (o.shape) {
        case Shape::graph:
            out = "u,v\n";
            for (const auto & e : j.at("edges"))
                out += e[0].dump() + "," + e[1].dump() + "\n";
            return out;
        case Shape::interval: {
            out = "kind,min_raw,max_raw,lo,hi\n" + scalar(j["kind"]) + "," + scalar(j["min_raw"]) + ","
                  + scalar(j["max_raw"]) + ",";
            const auto & iv = j["interval"];
            return out + (iv.is_null() ? "," : iv[0].dump() + "," + iv[1].dump()) + "\n";
        }
        case Shape::spectrum: {
            out = "valence,achieved\n";
            const auto & iv = j["interval"];
            auto achieved = j["achieved"].get<std::vector<int>>();
            if (iv.is_null())
                return out;
            for (int k = iv[0].get<int>(); k <= iv[1].get<int>(); ++k)
                out += std::to_string(k) + "," + (std::ranges::binary_search(achieved, k) ? "1" : "0") + "\n";
            return out;
        }
        case Shape::find:
            return j["witness"].is_null() ? "element,label\n" : labeling_csv(j["witness"]);
        case Shape::perfect:
            return "kind,perfect,exact\n" + scalar(j["kind"]) + "," + j["perfect"].dump() + "," + j["exact"].dump() + "\n";
        case Shape::deficiency:
            out = "n,verdict\n";
            for (const auto & t : j.at("trace"))
                out += t[0].dump() + "," + scalar(t[1]) + "\n";
            return out;
        case Shape::count:
            return j.dump() + "\n";
        case Shape::family:
            return histogram_csv(j);
        case Shape::valences:
            out = "valence,type\n";
            for (const auto & k : j["t1"])
                out += k.dump() + ",T1\n";
            for (const auto & k : j["t2"])
                out += k.dump() + ",T2\n";
            return out;
        case Shape::labeling:
            return labeling_csv(j);
        case Shape::report:
            out = "suite,instance,expected,observed,verdict\n";
            for (const auto & r : j)
                for (const auto & c : r["cases"])
                    out += csv_field(scalar(r["suite"])) + "," + csv_field(scalar(c["instance"])) + ","
                           + csv_field(scalar(c["expected"])) + "," + csv_field(scalar(c["observed"])) + ","
                           + scalar(c["verdict"]) + "\n";
            return out;
        }
        return out;
    }

    inline std::string render_text(const Outcome & o, const std::string & report_text)
    {
        const auto & j = o.payload;
        std::ostringstream out;
        switch (o.shape) {
        case Shape::graph: {
            std::vector<Edge> edges;
            for (const auto & e : j.at("edges"))
                edges.push_back({e[0].get<int>(), e[1].get<int>()});
            return serialize_graph(Graph(j["p"].get<int>(), std::move(edges)));
        }
        case Shape::interval:
            out << j["kind"].get<std::string>() << " interval " << (j["interval"].is_null() ? "empty" : j["interval"].dump())
                << " (min " << scalar(j["min_raw"]) << ", max " << scalar(j["max_raw"]) << ")\n";
            return out.str();
        case Shape::spectrum:
            out << "kind      " << scalar(j["kind"]) << "\ninterval  " << j["interval"].dump() << "\nachieved  "
                << j["achieved"].dump() << "\ncount     " << j["count"].dump() << "\nperfect   " << j["perfect"].dump()
                << "\nexact     " << j["exact"].dump() << "\nnodes     " << j["stats"]["nodes"].dump() << '\n';
            return out.str();
        case Shape::find:
            if (j["witness"].is_null())
                return j["exact"].get<bool>() ? "no labeling exists\n" : "no labeling found (search incomplete)\n";
            return labeling_text(j["witness"]);
        case Shape::perfect:
            out << (j["perfect"].is_null() ? "unknown" : (j["perfect"].get<bool>() ? "perfect" : "not perfect"))
                << ": achieved " << j["achieved"].dump() << " in " << j["interval"].dump() << '\n';
            return out.str();
        case Shape::deficiency:
            out << scalar(j["parameter"]) << " = ";
            if (j.contains("value"))
                out << j["value"].dump();
            else if (j.contains("exceeded_cap"))
                out << "not found up to cap " << j["exceeded_cap"].dump();
            else
                out << "unknown (search incomplete)";
            if (j.contains("window"))
                out << " (window " << j["window"].dump() << ")";
            out << '\n';
            for (const auto & t : j["trace"])
                out << "  n=" << t[0].dump() << ' ' << scalar(t[1]) << '\n';
            return out.str();
        case Shape::count:
            return j.dump() + "\n";
        case Shape::family:
            for (const auto & f : j)
                out << labeling_text(f);
            return out.str();
        case Shape::valences:
            out << "S(T1) " << j["t1"].dump() << "\nS(T2) " << j["t2"].dump() << "\nsigma " << j["all"].dump()
                << "\ninterval " << j["interval"].dump() << (j["perfect"].get<bool>() ? " perfect" : " not perfect")
                << '\n';
            return out.str();
        case Shape::labeling:
            return labeling_text(j);
        case Shape::report:
            return report_text;
        }
        return {};
    }

} // namespace detail

/// Parses argv, runs one command and writes its report to `out`. Diagnostics go to `err`.
inline int run(int argc, const char * const * argv, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Edge-magic and super edge-magic labeling toolkit", "magiclab"};
    app.fallthrough();
    app.require_subcommand(1);

    Options o;
    app.add_option("--graph", o.graph_spec, "family spec, e.g. cycle:5, star:n=3,l=2, union:path:4+2K1");
    app.add_option("--file", o.file, "graph text file ('-' for stdin)");
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--cap", o.cap, "largest number of added isolated vertices");
    app.add_option("--window", o.window, "window for the strong deficiency (default 3)");
    app.add_option("--n", o.n, "star leaves");
    app.add_option("--l", o.l, "star isolated vertices");
    app.add_option("--k", o.k, "index of the f_k labeling");
    app.add_option("--time-limit", o.time_limit, "seconds per search");
    app.add_option("--node-limit", o.node_limit, "search nodes per search");
    app.add_option("--workers", o.workers, "worker threads (default MAGICLAB_WORKERS or 1)");
    app.add_flag("--no-cache", o.no_cache, "bypass the result cache");
    app.add_option("--suite", o.suite, "verification suite or 'all'");
    app.add_option("--witnesses", o.witnesses, "write one labeling per valence as JSON lines");
    app.add_option("--histogram", o.histogram, "write the valence histogram CSV");
    app.add_flag("--labelings", o.labelings, "include every labeling in a spectrum");

    std::function<Outcome()> action;
    std::string report_text;

    auto verb = [&](CLI::App * parent, const char * name, const char * help, std::function<Outcome()> fn) {
        parent->add_subcommand(name, help)->callback([&action, fn] { action = fn; });
    };

    auto * graph_cmd = app.add_subcommand("graph", "graph inspection")->require_subcommand(1);
    verb(graph_cmd, "show", "edges, degrees, girth and feasibility", [&] { return detail::graph_show(o); });

    for (Mode mode : {Mode::sem, Mode::em}) {
        auto * cmd = app.add_subcommand(to_string(mode), mode == Mode::sem ? "super edge-magic labelings"
                                                                           : "edge-magic labelings")
                         ->require_subcommand(1);
        verb(cmd, "interval", "valence interval", [&, mode] { return detail::interval_cmd(o, mode); });
        verb(cmd, "spectrum", "achieved valences", [&, mode] { return detail::spectrum_cmd(o, mode); });
        verb(cmd, "find", "one labeling", [&, mode] { return detail::find_cmd(o, mode); });
        verb(cmd, "perfect", "whether every valence in the interval is achieved",
             [&, mode] { return detail::perfect_cmd(o, mode); });
    }

    auto * def = app.add_subcommand("deficiency", "least number of isolated vertices to add")->require_subcommand(1);
    for (auto p : {DeficiencyParameter::mu, DeficiencyParameter::mu_s, DeficiencyParameter::mu_p,
                   DeficiencyParameter::mu_p_s, DeficiencyParameter::strong_mu_p_s})
        verb(def, to_string(p), "deficiency parameter", [&, p] { return detail::deficiency_cmd(o, p); });

    auto * star_cmd = app.add_subcommand("star", "K(1,n) plus l isolated vertices")->require_subcommand(1);
    verb(star_cmd, "count", "size of the super edge-magic family", [&] { return detail::star_count(o); });
    verb(star_cmd, "generate", "the super edge-magic family", [&] { return detail::star_generate(o); });
    verb(star_cmd, "valences", "valence sets by type", [&] { return detail::star_valences(o); });
    verb(star_cmd, "fk", "edge-magic labelings f_k", [&] { return detail::star_fk(o); });

    auto * verify = app.add_subcommand("verify", "run verification suites");
    verify->add_subcommand("run", "run --suite (default all)");
    verify->callback([&] { action = [&] { return detail::verify_cmd(o, report_text); }; });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e, out, err);
        return code == 0 ? Exit::ok : Exit::usage;
    }

    try {
        if (! action)
            throw UsageError("no command given");
        Outcome result = action();
        if (o.format == "json")
            out << result.payload.dump() << '\n';
        else if (o.format == "csv")
            out << detail::render_csv(result);
        else
            out << detail::render_text(result, report_text);
        return result.exit;
    }
    catch (const Error & e) {
        err << "magiclab: " << e.what() << '\n';
        return Exit::usage;
    }
    catch (const json::exception & e) {
        err << "magiclab: malformed data: " << e.what() << '\n';
        return Exit::usage;
    }
}

} // namespace magiclab::cli
