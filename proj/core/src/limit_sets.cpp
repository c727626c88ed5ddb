#include "backlimit/limit_sets.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "backlimit/errors.hpp"
#include "backlimit/parallel.hpp"

namespace backlimit {

EpsSet PeriodicCensus::cells(const Rat& eps, const Interval& domain) const {
    EpsSet out(eps, domain);
    for (const auto& o : orbits) {
        for (const auto& p : o.points) out.insert_point(p);
    }
    for (const auto& b : bands) out.insert_interval(b.points);
    return out;
}

std::vector<Rat> PeriodicCensus::seed_points() const {
    std::vector<Rat> out;
    for (const auto& o : orbits) out.insert(out.end(), o.points.begin(), o.points.end());
    for (const auto& b : bands) {
        out.push_back(b.points.lo);
        out.push_back(b.points.hi);
        out.push_back((b.points.lo + b.points.hi) / Rat(2));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

EpsSet omega_approx(const PLMap& f, const Rat& x, std::size_t n_skip, std::size_t n_keep, const Rat& eps) {
    if (n_keep == 0) throw DomainError("omega_approx needs n_keep >= 1");
    EpsSet out(eps, f.domain());
    Rat y = x;
    if (!f.domain().contains(y)) throw DomainError("point " + x.to_string() + " outside domain");
    for (std::size_t n = 0; n < n_skip + n_keep; ++n) {
        if (n >= n_skip) out.insert_point(y);
        if (n + 1 < n_skip + n_keep) y = eval(f, y);
    }
    return out;
}

EpsSet alpha_branch_approx(const Branch& branch, std::size_t tail_start, const Rat& eps, const Interval& domain) {
    if (branch.points.size() <= tail_start) {
        throw DomainError("branch of length " + std::to_string(branch.points.size()) + " too short for tail " +
                          std::to_string(tail_start));
    }
    EpsSet out(eps, domain);
    std::vector<Cell> ks;
    for (std::size_t i = tail_start; i < branch.points.size(); ++i) ks.push_back(out.cell_of(branch.points[i]));
    out.insert_all(ks);
    return out;
}

EpsSet alpha_approx(const PLMap& f, const Rat& x, std::size_t depth, std::size_t tail_start, std::size_t min_hits,
                    const Rat& eps, std::size_t node_cap) {
    if (depth <= tail_start) throw DomainError("alpha_approx needs depth > tail_start");
    if (min_hits == 0) throw DomainError("alpha_approx needs min_hits >= 1");
    const auto levels = preimage_sets(f, x, depth, node_cap);
    EpsSet out(eps, f.domain());
    const Cell first = out.first_cell();
    std::vector<std::size_t> hits(static_cast<std::size_t>(out.last_cell() - first + 1), 0);
    std::vector<std::size_t> seen_at(hits.size(), depth + 1);
    for (std::size_t n = tail_start; n <= depth; ++n) {
        // count each cell at most once per level
        for (const auto& v : levels[n]) {
            const auto k = static_cast<std::size_t>(out.cell_of(v) - first);
            if (seen_at[k] != n) {
                seen_at[k] = n;
                ++hits[k];
            }
        }
    }
    std::vector<Cell> keep;
    for (std::size_t k = 0; k < hits.size(); ++k) {
        if (hits[k] >= min_hits) keep.push_back(first + static_cast<Cell>(k));
    }
    out.insert_all(keep);
    return out;
}

EpsSet salpha_approx(const PLMap& f, const Rat& x, std::size_t depth, std::size_t tail_start, const Rat& eps,
                     const SAlphaMode& mode) {
    if (depth < tail_start) throw DomainError("salpha_approx needs depth >= tail_start");
    EpsSet out(eps, f.domain());
    if (mode.kind == BranchMode::exhaustive) {
        // An onto map gives every node at least one child, so every node of
        // the depth-d tree lies on some full-depth branch: the union of the
        // branch tails is exactly the union of the tail levels.
        const auto levels = preimage_sets(f, x, depth, mode.node_cap);
        std::vector<Cell> ks;
        for (std::size_t n = tail_start; n <= depth; ++n) {
            for (const auto& v : levels[n]) ks.push_back(out.cell_of(v));
        }
        out.insert_all(ks);
        return out;
    }
    const BranchSampler base{mode.seed};
    auto parts = parallel_map(mode.samples, [&](std::size_t i) {
        return alpha_branch_approx(sample_branch(f, x, depth, base.derive(i)), tail_start, eps, f.domain());
    });
    for (const auto& p : parts) out.unite(p);
    return out;
}

PeriodicCensus periodic_points(const PLMap& f, std::size_t p_max, std::size_t lap_cap) {
    if (p_max == 0) throw DomainError("periodic_points needs p_max >= 1");
    PeriodicCensus census;
    std::set<Rat> seen;
    for (std::size_t p = 1; p <= p_max; ++p) {
        PLMap g = [&] {
            try {
                return iterate_map(f, p, lap_cap);
            } catch (const CapExceeded& e) {
                throw CapExceeded("periodic_points: lap cap " + std::to_string(lap_cap) + " exceeded at period " +
                                      std::to_string(p),
                                  p - 1);
            }
        }();
        const FixedPointSet fix = fixed_points(g);
        census.fix_counts.push_back(fix.points.size());
        auto in_band = [&](const Rat& q) {
            return std::any_of(census.bands.begin(), census.bands.end(),
                               [&](const PeriodicBand& b) { return b.points.contains(q); });
        };
        for (const auto& j : fix.continua) {
            const bool known = std::any_of(census.bands.begin(), census.bands.end(),
                                           [&](const PeriodicBand& b) { return b.points.contains(j); });
            if (!known) census.bands.push_back(PeriodicBand{p, j});
        }
        for (const auto& q : fix.points) {
            if (seen.contains(q) || in_band(q)) continue;
            PeriodicOrbit orbit{p, {q}};
            Rat y = eval(f, q);
            while (y != q && orbit.points.size() <= p) {
                orbit.points.push_back(y);
                y = eval(f, y);
            }
            // Points of smaller minimal period were recorded at that period.
            if (orbit.points.size() != p) continue;
            std::sort(orbit.points.begin(), orbit.points.end());
            seen.insert(orbit.points.begin(), orbit.points.end());
            census.orbits.push_back(std::move(orbit));
        }
    }
    std::stable_sort(census.orbits.begin(), census.orbits.end(), [](const auto& a, const auto& b) {
        return a.period != b.period ? a.period < b.period : a.points.front() < b.points.front();
    });
    return census;
}

EpsSet nonwandering_cells(const PLMap& f, const Rat& eps, std::size_t n_max) {
    if (n_max == 0) throw DomainError("nonwandering_approx needs n_max >= 1");
    EpsSet out = EpsSet::all(eps, f.domain());
    const auto& all = out.cells();
    auto keep = parallel_map(all.size(), [&](std::size_t i) {
        const Interval cell = out.cell_bounds(all[i]);
        Interval img = cell;
        for (std::size_t n = 1; n <= n_max; ++n) {
            img = image_interval(f, img);
            if (intersect(img, cell)) return true;
        }
        return false;
    });
    EpsSet nw(eps, f.domain());
    std::vector<Cell> ks;
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (keep[i]) ks.push_back(all[i]);
    }
    nw.insert_all(ks);
    return nw;
}

IntervalUnion nonwandering_approx(const PLMap& f, const Rat& eps, std::size_t n_max) {
    return nonwandering_cells(f, eps, n_max).to_interval_union();
}

EpsSet recurrent_approx(const PLMap& f, const Rat& eps, std::size_t n_skip, std::size_t n_keep,
                        std::size_t periodic_seed_max, std::size_t lap_cap) {
    const EpsSet grid = EpsSet::all(eps, f.domain());
    const auto& all = grid.cells();
    auto keep = parallel_map(all.size(), [&](std::size_t i) {
        const Interval cell = grid.cell_bounds(all[i]);
        Rat y = (cell.lo + cell.hi) / Rat(2);
        for (std::size_t n = 1; n <= n_skip + n_keep; ++n) {
            y = eval(f, y);
            if (n > n_skip && grid.cell_of(y) == all[i]) return true;
        }
        return false;
    });
    EpsSet out(eps, f.domain());
    std::vector<Cell> ks;
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (keep[i]) ks.push_back(all[i]);
    }
    out.insert_all(ks);
    if (periodic_seed_max > 0) out.unite(periodic_points(f, periodic_seed_max, lap_cap).cells(eps, f.domain()));
    return out;
}

std::vector<Rat> aggregate_seeds(const PLMap& f, const Rat& grid_step, const AggregateParams& params) {
    if (grid_step.sign() <= 0) throw DomainError("grid_step must be positive");
    const auto& d = f.domain();
    std::vector<Rat> seeds;
    for (Rat k(0);; k += Rat(1)) {
        const Rat x = d.lo + k * grid_step;
        if (d.hi < x) break;
        seeds.push_back(x);
        const Rat y = x + params.seed_offset * grid_step;
        if (y <= d.hi) seeds.push_back(y);
    }
    if (params.periodic_seed_max > 0) {
        const auto per = periodic_points(f, params.periodic_seed_max, params.lap_cap).seed_points();
        seeds.insert(seeds.end(), per.begin(), per.end());
    }
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
    return seeds;
}

EpsSet aggregate(const PLMap& f, LimitKind kind, const Rat& grid_step, const AggregateParams& params) {
    const auto seeds = aggregate_seeds(f, grid_step, params);
    auto parts = parallel_map(seeds.size(), [&](std::size_t i) {
        switch (kind) {
            case LimitKind::omega:
                return omega_approx(f, seeds[i], params.omega_skip, params.omega_keep, grid_step);
            case LimitKind::alpha:
                return alpha_approx(f, seeds[i], params.alpha_depth, params.alpha_tail, params.alpha_min_hits,
                                    grid_step, params.node_cap);
            case LimitKind::salpha:
                break;
        }
        return salpha_approx(f, seeds[i], params.alpha_depth, params.alpha_tail, grid_step, params.salpha_mode);
    });
    EpsSet out(grid_step, f.domain());
    for (const auto& p : parts) out.unite(p);
    return out;
}

std::string to_string(Direction d) {
    switch (d) {
        case Direction::exact: return "exact";
        case Direction::inner: return "inner";
        case Direction::outer: return "outer";
        case Direction::proxy: return "proxy";
    }
    return "?";
}

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "PASS";
        case CheckStatus::fail: return "FAIL";
        case CheckStatus::skipped: return "SKIPPED";
    }
    return "?";
}

std::string to_string(LimitKind k) {
    switch (k) {
        case LimitKind::omega: return "omega";
        case LimitKind::alpha: return "alpha";
        case LimitKind::salpha: return "salpha";
    }
    return "?";
}

std::string to_string(BranchMode m) { return m == BranchMode::exhaustive ? "exhaustive" : "sampled"; }

std::string to_string(KmsVerdict v) {
    switch (v) {
        case KmsVerdict::pass: return "PASS";
        case KmsVerdict::fail: return "FAIL";
        case KmsVerdict::vacuous: return "VACUOUS";
    }
    return "?";
}

bool ChainReport::passed() const {
    return std::none_of(pairs.begin(), pairs.end(), [](const PairCheck& p) { return p.status == CheckStatus::fail; });
}

const NamedSet& ChainReport::set(const std::string& name) const {
    for (const auto& s : sets) {
        if (s.name == name) return s;
    }
    throw DomainError("no set named " + name);
}

ChainReport chain_check(const PLMap& f, const Rat& eps, const ChainParams& params) {
    const auto& dom = f.domain();
    ChainReport report{eps, {}, {}, {}};

    EpsSet fix(eps, dom);
    const auto fp = fixed_points(f);
    for (const auto& p : fp.points) fix.insert_point(p);
    for (const auto& j : fp.continua) fix.insert_interval(j);
    const EpsSet per = periodic_points(f, params.p_max, params.aggregate.lap_cap).cells(eps, dom);
    const EpsSet rec = recurrent_approx(f, eps, params.rec_skip, params.rec_keep, params.aggregate.periodic_seed_max,
                                        params.aggregate.lap_cap);

    report.sets.push_back({"Fix", Direction::exact, fix});
    report.sets.push_back({"Per", Direction::exact, per});
    report.sets.push_back({"Rec", Direction::inner, rec});
    report.sets.push_back({"SA", Direction::proxy, aggregate(f, LimitKind::salpha, eps, params.aggregate)});
    report.sets.push_back({"cl(Rec)", Direction::inner, rec});
    report.sets.push_back({"omega(f)", Direction::proxy, aggregate(f, LimitKind::omega, eps, params.aggregate)});
    report.sets.push_back({"NW", Direction::outer, nonwandering_cells(f, eps, params.nw_n_max)});
    report.sets.push_back({"A", Direction::proxy, aggregate(f, LimitKind::alpha, eps, params.aggregate)});

    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"Fix", "Per"}, {"Per", "Rec"},      {"Rec", "SA"}, {"SA", "cl(Rec)"}, {"cl(Rec)", "omega(f)"},
        {"omega(f)", "NW"}, {"NW", "A"}, {"Per", "omega(f)"}, {"Per", "NW"},
    };
    for (const auto& [sub, sup] : pairs) {
        const NamedSet& a = report.set(sub);
        const NamedSet& b = report.set(sup);
        PairCheck check{sub, sup, CheckStatus::skipped, {}};
        if (b.direction != Direction::inner) {
            check.missing = a.cells.missing_from(b.cells, params.slack);
            check.status = check.missing.empty() ? CheckStatus::pass : CheckStatus::fail;
        }
        report.pairs.push_back(std::move(check));
    }
    report.a_minus_nw = report.set("A").cells.missing_from(report.set("NW").cells, 0);
    return report;
}

KmsResult kms_check(const PLMap& f, const PeriodicOrbit& orbit, const Rat& x, const KmsParams& params) {
    KmsResult r{KmsVerdict::vacuous, EpsSet(params.eps, f.domain()), EpsSet(params.eps, f.domain()),
                EpsSet(params.eps, f.domain()), {}};
    for (const auto& p : orbit.points) r.orbit_cells.insert_point(p);
    r.alpha = alpha_approx(f, x, params.depth, params.tail_start, params.min_hits, params.eps, params.mode.node_cap);
    const bool meets = std::any_of(r.orbit_cells.cells().begin(), r.orbit_cells.cells().end(),
                                   [&](Cell k) { return r.alpha.contains_cell(k); });
    if (!meets) return r;
    r.salpha = salpha_approx(f, x, params.depth, params.tail_start, params.eps, params.mode);
    r.uncovered = r.orbit_cells.missing_from(r.salpha, 0);
    r.verdict = r.uncovered.empty() ? KmsVerdict::pass : KmsVerdict::fail;
    return r;
}

}  // namespace backlimit
