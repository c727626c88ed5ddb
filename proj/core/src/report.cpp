#include "backlimit/report.hpp"

namespace backlimit {

Json to_json(const Rat& r) { return r.to_string(); }

Json to_json(const std::vector<Rat>& rs) {
    Json a = Json::array();
    for (const auto& r : rs) a.push_back(r.to_string());
    return a;
}

Json to_json(const Interval& j) { return j.to_string(); }

Json to_json(const IntervalUnion& u) {
    Json a = Json::array();
    for (const auto& p : u.parts()) a.push_back(p.to_string());
    return a;
}

Json to_json(const EpsSet& s) {
    Json bounds = Json::array();
    for (Cell k : s.cells()) {
        const Interval b = s.cell_bounds(k);
        bounds.push_back(Json::array({b.lo.to_string(), b.hi.to_string()}));
    }
    return Json{{"eps", s.eps().to_string()}, {"cells", s.cells()}, {"bounds", std::move(bounds)}};
}

Json to_json(const Branch& b) { return Json{{"points", to_json(b.points)}, {"path", b.path}}; }

Json to_json(const FixedPointSet& s) {
    Json continua = Json::array();
    for (const auto& j : s.continua) continua.push_back(to_json(j));
    return Json{{"points", to_json(s.points)}, {"continua", std::move(continua)}};
}

Json to_json(const PeriodicCensus& c) {
    Json orbits = Json::array();
    for (const auto& o : c.orbits) orbits.push_back(Json{{"period", o.period}, {"points", to_json(o.points)}});
    Json bands = Json::array();
    for (const auto& b : c.bands) bands.push_back(Json{{"period", b.period}, {"points", to_json(b.points)}});
    return Json{{"orbits", std::move(orbits)}, {"bands", std::move(bands)}, {"fix_counts", c.fix_counts}};
}

Json to_json(const ChainReport& r) {
    Json sets = Json::array();
    for (const auto& s : r.sets) {
        sets.push_back(Json{{"name", s.name}, {"direction", to_string(s.direction)}, {"cells", s.cells.cells()}});
    }
    Json pairs = Json::array();
    for (const auto& p : r.pairs) {
        pairs.push_back(Json{{"subset", p.subset},
                             {"superset", p.superset},
                             {"status", to_string(p.status)},
                             {"missing", p.missing}});
    }
    return Json{{"eps", r.eps.to_string()},
                {"sets", std::move(sets)},
                {"pairs", std::move(pairs)},
                {"a_minus_nw", r.a_minus_nw},
                {"passed", r.passed()}};
}

Json to_json(const KmsResult& r) {
    return Json{{"verdict", to_string(r.verdict)},
                {"orbit_cells", r.orbit_cells.cells()},
                {"alpha", r.alpha.cells()},
                {"salpha", r.salpha.cells()},
                {"uncovered", r.uncovered}};
}

Json to_json(const RadiusResult& r) {
    return Json{{"delta", r.delta.to_string()}, {"max_in_ball", r.max_in_ball}, {"flagged", r.flagged()}};
}

Json to_json(const ScanParams& p) {
    return Json{{"depth", p.depth},
                {"samples", p.samples},
                {"seed", p.seed},
                {"exhaustive_depth", p.exhaustive_depth},
                {"node_cap", p.node_cap}};
}

Json to_json(const ExcursionParams& p) {
    return Json{{"depth_max", p.depth_max},
                {"samples", p.samples},
                {"seed", p.seed},
                {"exhaustive_depth", p.exhaustive_depth},
                {"node_cap", p.node_cap}};
}

Json to_json(const AggregateParams& p) {
    return Json{{"omega_skip", p.omega_skip},
                {"omega_keep", p.omega_keep},
                {"alpha_depth", p.alpha_depth},
                {"alpha_tail", p.alpha_tail},
                {"alpha_min_hits", p.alpha_min_hits},
                {"salpha_mode", to_string(p.salpha_mode.kind)},
                {"salpha_samples", p.salpha_mode.samples},
                {"salpha_seed", p.salpha_mode.seed},
                {"node_cap", p.node_cap},
                {"seed_offset", p.seed_offset.to_string()},
                {"periodic_seed_max", p.periodic_seed_max},
                {"lap_cap", p.lap_cap}};
}

Json to_json(const SubcoverCertificate& c) {
    Json pieces = Json::array();
    for (const auto& p : c.pieces) {
        pieces.push_back(Json{{"center", p.center.to_string()},
                              {"radius", p.radius.to_string()},
                              {"v", p.v.to_string()},
                              {"max_in_ball", p.max_in_ball}});
    }
    return Json{{"status", c.failed_probe ? "COVER_FAILED" : (c.covered ? "OK" : "INCOMPLETE")},
                {"failed_probe", c.failed_probe ? Json(c.failed_probe->to_string()) : Json(nullptr)},
                {"m", c.m},
                {"M", c.M},
                {"probe_step", c.probe_step.to_string()},
                {"scan", to_json(c.scan)},
                {"pieces", std::move(pieces)}};
}

Json to_json(const ExcursionReport& r) {
    Json per = Json::array();
    for (const auto& b : r.per_branch) {
        per.push_back(Json{{"id", b.id}, {"outside_count", b.outside_count}, {"witnesses", b.witnesses}});
    }
    return Json{{"verdict", to_string(r.verdict)},
                {"empirical_M", r.empirical_M},
                {"plateau_depth", r.plateau_depth},
                {"max_by_depth", r.max_by_depth},
                {"branches_scanned", r.branches_scanned},
                {"capped", r.capped},
                {"per_branch", std::move(per)}};
}

Json to_json(const TheoremRecord& r) {
    return Json{{"target", to_string(r.target)},
                {"margin", r.margin.to_string()},
                {"target_cells", to_json(r.target_cells)},
                {"omega_cells", r.omega_cells.cells()},
                {"u", to_json(r.u.u)},
                {"omega_covered", r.omega_covered},
                {"certificate", to_json(r.certificate)},
                {"excursion", to_json(r.excursion)},
                {"pass", r.pass},
                {"reasons", r.reasons}};
}

Json make_report(const std::vector<std::string>& command, const PLMap* map, Json params, Json result,
                 const std::string& verdict, double timing_ms) {
    Json r;
    r["version"] = kVersion;
    r["command"] = command;
    r["map_digest"] = map != nullptr ? Json(map_digest(*map)) : Json(nullptr);
    r["params"] = std::move(params);
    r["result"] = std::move(result);
    r["verdict"] = verdict;
    r["timing_ms"] = timing_ms;
    return r;
}

Json without_timing(Json report) {
    report.erase("timing_ms");
    return report;
}

}  // namespace backlimit
