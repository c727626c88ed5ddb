#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "backlimit/backward.hpp"
#include "backlimit/birkhoff.hpp"
#include "backlimit/errors.hpp"
#include "backlimit/fixtures.hpp"
#include "backlimit/limit_sets.hpp"
#include "backlimit/pl_map.hpp"
#include "backlimit/render.hpp"
#include "backlimit/report.hpp"

namespace backlimit::cli {

namespace {

struct Outcome {
    Json params = Json::object();
    Json result = Json::object();
    std::string verdict = "OK";
    int code = kOk;
    std::optional<PLMap> map;
    std::string raw;  ///< printed instead of a report when set (fixture emit)
};

// A map argument names a file when one exists, otherwise a fixture.
PLMap load_map(const std::string& arg) {
    if (std::filesystem::is_regular_file(arg)) {
        std::ifstream in(arg);
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_map(ss.str());
    }
    return fixture(arg).map;
}

Json salpha_mode_json(const SAlphaMode& m) {
    return Json{{"kind", to_string(m.kind)}, {"samples", m.samples}, {"seed", m.seed}, {"node_cap", m.node_cap}};
}

BranchMode parse_mode(const std::string& s) {
    if (s == "exhaustive") return BranchMode::exhaustive;
    if (s == "sampled") return BranchMode::sampled;
    throw DomainError("unknown mode '" + s + "'");
}

struct Options {
    std::string map;
    std::string point = "0";
    std::string eps = "1/32";
    std::size_t depth = 12;
    std::optional<std::size_t> tail;
    std::size_t min_hits = 2;
    std::size_t samples = 200;
    std::uint64_t seed = 7;
    bool all = false;
    std::optional<std::size_t> sample;
    std::string kind = "alpha";
    std::string mode = "exhaustive";
    std::string target = "A";
    std::string u;
    std::string margin = "1/50";
    std::string grid_step = "1/32";
    std::string probe_step = "1/16";
    std::size_t slack = 1;
    std::size_t p_max = 3;
    std::size_t n_max = 20;
    std::size_t node_cap = 1'000'000;
    std::size_t branch_cap = 10'000;
    std::string what = "graph";
    std::string out;
    std::string fixture_action;
    std::string fixture_name;
};

Outcome cmd_analyze(const Options& o) {
    Outcome r;
    r.map = load_map(o.map);
    const PLMap& f = *r.map;
    const Rat eps = Rat::parse(o.eps);
    ChainParams cp;
    cp.p_max = o.p_max;
    cp.nw_n_max = o.n_max;
    cp.slack = o.slack;
    cp.aggregate.alpha_depth = o.depth;
    cp.aggregate.alpha_tail = o.tail.value_or(o.depth / 2);
    cp.aggregate.node_cap = o.node_cap;
    cp.aggregate.salpha_mode.node_cap = o.node_cap;

    const FixedPointSet fix = fixed_points(f);
    const PeriodicCensus census = periodic_points(f, cp.p_max, cp.aggregate.lap_cap);
    const ChainReport chain = chain_check(f, eps, cp);

    r.params = Json{{"eps", eps.to_string()},
                    {"p_max", cp.p_max},
                    {"nw_n_max", cp.nw_n_max},
                    {"rec_skip", cp.rec_skip},
                    {"rec_keep", cp.rec_keep},
                    {"slack", cp.slack},
                    {"aggregate", to_json(cp.aggregate)}};
    Json sets = Json::object();
    for (const auto& s : chain.sets) sets[s.name] = to_json(s.cells);
    r.result = Json{{"fixed_points", to_json(fix)},
                    {"periodic", to_json(census)},
                    {"sets", std::move(sets)},
                    {"chain", to_json(chain)}};
    r.verdict = chain.passed() ? "PASS" : "FAIL";
    r.code = chain.passed() ? kOk : kVerifyFail;
    return r;
}

Outcome cmd_branches(const Options& o) {
    Outcome r;
    r.map = load_map(o.map);
    const PLMap& f = *r.map;
    const Rat x = Rat::parse(o.point);
    std::vector<Branch> bs;
    if (o.sample) {
        const BranchSampler root{o.seed};
        for (std::size_t i = 0; i < *o.sample; ++i) bs.push_back(sample_branch(f, x, o.depth, root.derive(i)));
        r.params = Json{{"point", x.to_string()}, {"depth", o.depth}, {"mode", "sampled"}, {"samples", *o.sample},
                        {"seed", o.seed}};
    } else {
        bs = branches(f, x, o.depth, o.branch_cap);
        r.params = Json{{"point", x.to_string()}, {"depth", o.depth}, {"mode", "all"}, {"branch_cap", o.branch_cap}};
    }
    Json arr = Json::array();
    for (const auto& b : bs) arr.push_back(to_json(b));
    r.result = Json{{"count", bs.size()}, {"branches", std::move(arr)}};
    return r;
}

Outcome cmd_limitset(const Options& o) {
    Outcome r;
    r.map = load_map(o.map);
    const PLMap& f = *r.map;
    const Rat x = Rat::parse(o.point);
    const Rat eps = Rat::parse(o.eps);
    const std::size_t tail = o.tail.value_or(o.depth / 2);
    r.params = Json{{"point", x.to_string()}, {"kind", o.kind}, {"depth", o.depth}, {"eps", eps.to_string()},
                    {"tail", tail}};
    std::optional<EpsSet> cells;
    if (o.kind == "omega") {
        // tail = iterates skipped, depth = iterates kept
        cells = omega_approx(f, x, tail, o.depth, eps);
    } else if (o.kind == "alpha") {
        cells = alpha_approx(f, x, o.depth, tail, o.min_hits, eps, o.node_cap);
        r.params["min_hits"] = o.min_hits;
        r.params["node_cap"] = o.node_cap;
    } else if (o.kind == "salpha") {
        SAlphaMode m;
        m.kind = parse_mode(o.mode);
        m.samples = o.samples;
        m.seed = o.seed;
        m.node_cap = o.node_cap;
        cells = salpha_approx(f, x, o.depth, tail, eps, m);
        r.params["mode"] = salpha_mode_json(m);
    } else if (o.kind == "branch") {
        const Branch b = sample_branch(f, x, o.depth, BranchSampler{o.seed});
        cells = alpha_branch_approx(b, tail, eps, f.domain());
        r.params["seed"] = o.seed;
        r.result["branch"] = to_json(b);
    } else {
        throw DomainError("unknown kind '" + o.kind + "'");
    }
    r.result["cells"] = to_json(*cells);
    r.result["union"] = to_json(cells->to_interval_union());
    return r;
}

Target parse_target(const std::string& s) {
    if (s == "A") return Target::A;
    if (s == "SA") return Target::SA;
    if (s == "custom") return Target::custom;
    throw DomainError("unknown target '" + s + "'");
}

Outcome cmd_birkhoff(const Options& o) {
    Outcome r;
    r.map = load_map(o.map);
    const PLMap& f = *r.map;
    const Target target = parse_target(o.target);
    VerifyParams vp;
    vp.grid_step = Rat::parse(o.grid_step);
    vp.probe_step = Rat::parse(o.probe_step);
    vp.excursion.depth_max = o.depth;
    vp.excursion.samples = o.samples;
    vp.excursion.seed = o.seed;
    vp.radius_scan.samples = o.samples;
    vp.radius_scan.seed = o.seed;
    vp.aggregate.node_cap = o.node_cap;
    const Rat margin = Rat::parse(o.margin);

    if (target == Target::custom && o.u.empty()) throw DomainError("--target custom needs --u");
    const TheoremRecord rec = target == Target::custom
                                  ? verify_neighborhood(f, Neighborhood{IntervalUnion::parse(o.u), Target::custom}, vp)
                                  : verify_theorem(f, target, margin, vp);
    r.params = Json{{"target", to_string(target)},
                    {"u", o.u},
                    {"margin", margin.to_string()},
                    {"grid_step", vp.grid_step.to_string()},
                    {"probe_step", vp.probe_step.to_string()},
                    {"seed_step", vp.seed_step.to_string()},
                    {"aggregate", to_json(vp.aggregate)},
                    {"radius_scan", to_json(vp.radius_scan)},
                    {"excursion", to_json(vp.excursion)}};
    r.result = to_json(rec);
    r.verdict = rec.pass ? "PASS" : "FAIL";
    r.code = rec.pass ? kOk : kVerifyFail;
    return r;
}

Outcome cmd_chain(const Options& o) {
    Outcome r;
    r.map = load_map(o.map);
    const Rat eps = Rat::parse(o.eps);
    ChainParams cp;
    cp.p_max = o.p_max;
    cp.nw_n_max = o.n_max;
    cp.slack = o.slack;
    cp.aggregate.node_cap = o.node_cap;
    const ChainReport chain = chain_check(*r.map, eps, cp);
    r.params = Json{{"eps", eps.to_string()},
                    {"p_max", cp.p_max},
                    {"nw_n_max", cp.nw_n_max},
                    {"rec_skip", cp.rec_skip},
                    {"rec_keep", cp.rec_keep},
                    {"slack", cp.slack},
                    {"aggregate", to_json(cp.aggregate)}};
    r.result = to_json(chain);
    r.verdict = chain.passed() ? "PASS" : "FAIL";
    r.code = chain.passed() ? kOk : kVerifyFail;
    return r;
}

Outcome cmd_fixture(const Options& o) {
    Outcome r;
    if (o.fixture_action == "list") {
        Json arr = Json::array();
        for (const auto& name : list_fixtures()) {
            const Fixture fx = fixture(name);
            Json props = Json::array();
            for (const auto& p : fx.documented_properties) props.push_back(Json{{"claim", p.claim}, {"source", p.provenance}});
            arr.push_back(Json{{"name", name}, {"map_digest", map_digest(fx.map)}, {"properties", std::move(props)}});
        }
        r.result = Json{{"fixtures", std::move(arr)}};
        return r;
    }
    if (o.fixture_action == "emit") {
        if (o.fixture_name.empty()) throw DomainError("fixture emit needs a name");
        r.raw = emit_map(fixture(o.fixture_name).map);
        return r;
    }
    throw DomainError("fixture action must be list or emit");
}

Outcome cmd_render(const Options& o) {
    Outcome r;
    r.map = load_map(o.map);
    const PLMap& f = *r.map;
    if (o.out.empty()) throw DomainError("render needs --out");
    const Rat x = Rat::parse(o.point);
    std::string svg;
    if (o.what == "graph") {
        svg = render_graph(f);
    } else if (o.what == "cobweb") {
        svg = render_cobweb(f, x, o.depth);
    } else if (o.what == "preimage-tree") {
        svg = render_preimage_tree(f, x, o.depth, o.node_cap);
    } else {
        throw DomainError("unknown --what '" + o.what + "'");
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file) throw DomainError("cannot write '" + o.out + "'");
    file << svg;
    char digest[17];
    std::snprintf(digest, sizeof digest, "%016llx", static_cast<unsigned long long>(fnv1a64(svg)));
    r.params = Json{{"what", o.what}, {"point", x.to_string()}, {"depth", o.depth}, {"out", o.out}};
    r.result = Json{{"bytes", svg.size()},
                    {"svg_digest", digest},
                    {"labeled", o.what != "preimage-tree" || o.depth <= kLabelDepthMax}};
    return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();

    CLI::App app{"backward dynamics of piecewise-linear interval maps", "backlimit"};
    app.require_subcommand(1);
    Options o;

    auto map_arg = [&](CLI::App* sc) { sc->add_option("map", o.map, "map file or fixture name")->required(); };
    auto caps = [&](CLI::App* sc) { sc->add_option("--node-cap", o.node_cap, "preimage node cap"); };

    auto* analyze = app.add_subcommand("analyze", "fixed/periodic points, limit-set proxies and the inclusion chain");
    map_arg(analyze);
    analyze->add_option("--eps", o.eps);
    analyze->add_option("--depth", o.depth, "alpha depth");
    analyze->add_option("--tail", o.tail);
    analyze->add_option("--p-max", o.p_max);
    analyze->add_option("--n-max", o.n_max);
    analyze->add_option("--slack", o.slack);
    caps(analyze);

    auto* br = app.add_subcommand("branches", "backward orbit branches");
    map_arg(br);
    br->add_option("--point", o.point)->required();
    br->add_option("--depth", o.depth)->required();
    auto* all = br->add_flag("--all", o.all);
    auto* sample = br->add_option("--sample", o.sample);
    all->excludes(sample);
    br->add_option("--seed", o.seed);
    br->add_option("--branch-cap", o.branch_cap);

    auto* ls = app.add_subcommand("limitset", "finite-resolution limit set of one point");
    map_arg(ls);
    ls->add_option("--point", o.point)->required();
    ls->add_option("--kind", o.kind)->check(CLI::IsMember({"omega", "alpha", "salpha", "branch"}));
    ls->add_option("--depth", o.depth);
    ls->add_option("--eps", o.eps);
    ls->add_option("--tail", o.tail);
    ls->add_option("--min-hits", o.min_hits);
    ls->add_option("--mode", o.mode)->check(CLI::IsMember({"exhaustive", "sampled"}));
    ls->add_option("--samples", o.samples);
    ls->add_option("--seed", o.seed);
    caps(ls);

    auto* bk = app.add_subcommand("birkhoff", "neighborhood subcover and excursion scan");
    map_arg(bk);
    bk->add_option("--target", o.target)->check(CLI::IsMember({"A", "SA", "custom"}));
    bk->add_option("--u", o.u, "interval list, e.g. \"(1/10,9/10) [0,1/4]\"");
    bk->add_option("--margin", o.margin);
    bk->add_option("--depth", o.depth)->default_val(40);
    bk->add_option("--samples", o.samples);
    bk->add_option("--seed", o.seed);
    bk->add_option("--grid-step", o.grid_step);
    bk->add_option("--probe-step", o.probe_step);
    caps(bk);

    auto* ch = app.add_subcommand("chain", "inclusion chain check");
    map_arg(ch);
    ch->add_option("--eps", o.eps);
    ch->add_option("--p-max", o.p_max);
    ch->add_option("--n-max", o.n_max);
    ch->add_option("--slack", o.slack);
    caps(ch);

    auto* fx = app.add_subcommand("fixture", "built-in maps");
    fx->add_option("action", o.fixture_action)->required()->check(CLI::IsMember({"list", "emit"}));
    fx->add_option("name", o.fixture_name);

    auto* rd = app.add_subcommand("render", "SVG output");
    map_arg(rd);
    rd->add_option("--what", o.what)->check(CLI::IsMember({"graph", "cobweb", "preimage-tree"}));
    rd->add_option("--point", o.point);
    rd->add_option("--depth", o.depth);
    rd->add_option("--out", o.out)->required();
    caps(rd);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kOk : kInputError;
    }

    Outcome res;
    std::string error_verdict;
    std::string error_msg;
    int code = kOk;
    try {
        if (*analyze) res = cmd_analyze(o);
        else if (*br) res = cmd_branches(o);
        else if (*ls) res = cmd_limitset(o);
        else if (*bk) res = cmd_birkhoff(o);
        else if (*ch) res = cmd_chain(o);
        else if (*fx) res = cmd_fixture(o);
        else res = cmd_render(o);
        code = res.code;
    } catch (const CapExceeded& e) {
        error_verdict = "CAP_EXCEEDED";
        error_msg = e.what();
        code = kCapExceeded;
        res.result = Json{{"error", error_msg}, {"completed", e.completed()}};
    } catch (const Error& e) {
        error_verdict = "INPUT_ERROR";
        error_msg = e.what();
        code = kInputError;
        res.result = Json{{"error", error_msg}};
    }

    if (!res.raw.empty()) {
        out << res.raw;
        return code;
    }
    if (!error_msg.empty()) {
        err << "backlimit: " << error_msg << '\n';
        res.verdict = error_verdict;
    }
    const double ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    const Json report = make_report(args, res.map ? &*res.map : nullptr, res.params, res.result, res.verdict, ms);
    out << report.dump(2) << '\n';
    return code;
}

}  // namespace backlimit::cli
