#include "backlimit/birkhoff.hpp"

#include <algorithm>
#include <functional>

#include "backlimit/errors.hpp"
#include "backlimit/parallel.hpp"

namespace backlimit {

namespace {

constexpr unsigned kFirstRadiusExp = 2;
constexpr unsigned kLastRadiusExp = 20;
constexpr std::size_t kSampleBlock = 32;
constexpr std::size_t kMaxPieces = 1'000'000;

// Depth-first walk over every branch of a root, counting the points that
// satisfy `hit` along each path.
struct BranchWalk {
    const PLMap& f;
    std::size_t depth;
    std::size_t node_cap;
    std::function<bool(const Rat&)> hit;
    std::size_t stop_above = static_cast<std::size_t>(-1);

    std::vector<std::size_t> max_by_depth;
    std::size_t nodes = 0;
    std::size_t leaves = 0;
    bool capped = false;
    bool stopped = false;
    std::size_t worst = 0;
    bool have_worst = false;
    std::vector<std::size_t> worst_path;
    std::vector<std::size_t> worst_witnesses;

    std::vector<std::size_t> path;
    std::vector<std::size_t> witnesses;

    void run(const Rat& root) {
        max_by_depth.assign(depth + 1, 0);
        const bool h = hit(root);
        if (h) witnesses.push_back(0);
        visit(root, 0, h ? 1 : 0);
    }

    void visit(const Rat& value, std::size_t level, std::size_t count) {
        if (capped || stopped) return;
        if (++nodes > node_cap) {
            capped = true;
            return;
        }
        max_by_depth[level] = std::max(max_by_depth[level], count);
        if (count > stop_above) {
            stopped = true;
            return;
        }
        if (level == depth) {
            ++leaves;
            if (!have_worst || count > worst) {
                have_worst = true;
                worst = count;
                worst_path = path;
                worst_witnesses = witnesses;
            }
            return;
        }
        for (const auto& [child, lap] : preimages_with_laps(f, value)) {
            const bool h = hit(child);
            path.push_back(lap);
            if (h) witnesses.push_back(level + 1);
            visit(child, level + 1, count + (h ? 1 : 0));
            if (h) witnesses.pop_back();
            path.pop_back();
            if (capped || stopped) return;
        }
    }
};

std::string path_string(const std::vector<std::size_t>& path) {
    std::string s;
    for (std::size_t lap : path) s += std::to_string(lap);
    return s.empty() ? "-" : s;
}

}  // namespace

std::string to_string(Target t) {
    switch (t) {
        case Target::A: return "A";
        case Target::SA: return "SA";
        case Target::omega: return "OMEGA";
        case Target::NW: return "NW";
        case Target::custom: return "custom";
    }
    return "?";
}

std::string to_string(ScanVerdict v) { return v == ScanVerdict::plateau ? "PLATEAU" : "GROWING"; }

Neighborhood Neighborhood::whole(const Interval& domain) {
    return Neighborhood{IntervalUnion({Interval::open(domain.lo - Rat(1), domain.hi + Rat(1))}), Target::custom};
}

Neighborhood Neighborhood::inflate(const EpsSet& s, const Rat& margin, Target label) {
    if (margin.sign() <= 0) throw DomainError("neighborhood margin must be positive");
    std::vector<Interval> parts;
    for (Cell k : s.cells()) {
        const Interval c = s.cell_bounds(k);
        parts.push_back(Interval::open(c.lo - margin, c.hi + margin));
    }
    return Neighborhood{IntervalUnion(std::move(parts)), label};
}

OutsideCount count_outside(const Branch& branch, const Neighborhood& u) {
    OutsideCount out;
    for (std::size_t i = 0; i < branch.points.size(); ++i) {
        if (!u.contains(branch.points[i])) {
            ++out.count;
            out.witnesses.push_back(i);
        }
    }
    return out;
}

RadiusResult two_point_radius(const PLMap& f, const Rat& x_prime, const ScanParams& scan) {
    const auto& dom = f.domain();
    if (!dom.contains(x_prime)) throw DomainError("probe " + x_prime.to_string() + " outside domain");
    const std::size_t exh_depth = std::min(scan.depth, scan.exhaustive_depth);
    const BranchSampler base{scan.seed};
    std::size_t last_max = 0;
    for (unsigned k = kFirstRadiusExp; k <= kLastRadiusExp; ++k) {
        const Rat delta = dyadic(k);
        const Interval ball = Interval::open(x_prime - delta, x_prime + delta);
        auto in_ball = [&](const Rat& x) { return ball.contains(x); };
        std::vector<Rat> roots;
        for (int j = -3; j <= 3; ++j) {
            Rat r = x_prime + Rat(j, 4) * delta;
            if (dom.contains(r)) roots.push_back(std::move(r));
        }
        std::size_t worst = 0;
        for (const auto& r : roots) {
            BranchWalk walk{f, exh_depth, scan.node_cap, in_ball, 2};
            walk.run(r);
            worst = std::max(worst, *std::max_element(walk.max_by_depth.begin(), walk.max_by_depth.end()));
            if (worst > 2) break;
        }
        for (std::size_t start = 0; worst <= 2 && start < scan.samples; start += kSampleBlock) {
            const std::size_t n = std::min(kSampleBlock, scan.samples - start);
            auto counts = parallel_map(n, [&](std::size_t i) {
                const std::size_t s = start + i;
                const Branch b = sample_branch(f, roots[s % roots.size()], scan.depth, base.derive(s));
                return static_cast<std::size_t>(std::count_if(b.points.begin(), b.points.end(), in_ball));
            });
            worst = std::max(worst, *std::max_element(counts.begin(), counts.end()));
        }
        last_max = worst;
        if (worst <= 2) return RadiusResult{delta, worst};
    }
    return RadiusResult{Rat(0), last_max};
}

SubcoverCertificate subcover(const PLMap& f, const Neighborhood& u, const Rat& probe_step, const ScanParams& scan) {
    if (probe_step.sign() <= 0) throw DomainError("probe_step must be positive");
    SubcoverCertificate cert;
    cert.scan = scan;
    cert.probe_step = probe_step;
    const auto& dom = f.domain();
    const IntervalUnion rest = u.u.complement_in(dom);
    for (const auto& comp : rest.parts()) {
        // The closure of each gap is covered; a gap endpoint lying in the
        // closure of a target set makes the cover fail, as it should.
        Rat cur = comp.lo;
        Rat prev_radius(0);
        while (cur <= comp.hi) {
            if (cert.pieces.size() >= kMaxPieces) throw CapExceeded("subcover piece cap exceeded", cert.pieces.size());
            Rat probe = min(cur + min(prev_radius / Rat(2), probe_step), comp.hi);
            RadiusResult r = two_point_radius(f, probe, scan);
            if (probe != cur && (r.flagged() || !(probe - r.delta < cur))) {
                probe = cur;
                r = two_point_radius(f, probe, scan);
            }
            if (r.flagged()) {
                cert.failed_probe = probe;
                cert.m = cert.pieces.size();
                cert.M = 2 * cert.m;
                return cert;
            }
            Interval v = Interval::open(probe - r.delta, probe + r.delta);
            cur = v.hi;
            prev_radius = r.delta;
            cert.pieces.push_back(SubcoverPiece{std::move(probe), r.delta, std::move(v), r.max_in_ball});
        }
    }
    cert.m = cert.pieces.size();
    cert.M = 2 * cert.m;
    std::vector<Interval> vs;
    vs.reserve(cert.pieces.size());
    for (const auto& p : cert.pieces) vs.push_back(p.v);
    cert.covered = IntervalUnion(std::move(vs)).unite(u.u).covers(dom);
    return cert;
}

std::vector<Rat> grid_points(const Interval& domain, const Rat& step) {
    if (step.sign() <= 0) throw DomainError("grid step must be positive");
    std::vector<Rat> out;
    for (Rat x = domain.lo; x <= domain.hi; x += step) out.push_back(x);
    return out;
}

ExcursionReport excursion_scan(const PLMap& f, const Neighborhood& u, const std::vector<Rat>& seeds,
                               const ExcursionParams& params) {
    struct SeedScan {
        std::vector<std::size_t> max_by_depth;
        BranchExcursion worst_exhaustive;
        BranchExcursion worst_sample;
        std::size_t branches = 0;
        bool capped = false;
    };
    const std::size_t depth = params.depth_max;
    const std::size_t exh_depth = std::min(depth, params.exhaustive_depth);
    auto outside = [&](const Rat& x) { return !u.contains(x); };

    auto scans = parallel_map(seeds.size(), [&](std::size_t si) {
        SeedScan s;
        s.max_by_depth.assign(depth + 1, 0);
        BranchWalk walk{f, exh_depth, params.node_cap, outside};
        walk.run(seeds[si]);
        for (std::size_t d = 0; d <= exh_depth; ++d) s.max_by_depth[d] = walk.max_by_depth[d];
        s.capped = walk.capped;
        s.branches = walk.leaves;
        s.worst_exhaustive = BranchExcursion{"seed " + std::to_string(si) + " exhaustive " + path_string(walk.worst_path),
                                             walk.worst, walk.worst_witnesses};
        const BranchSampler base = BranchSampler{params.seed}.derive(si);
        for (std::size_t j = 0; j < params.samples; ++j) {
            const Branch b = sample_branch(f, seeds[si], depth, base.derive(j));
            std::size_t c = 0;
            std::vector<std::size_t> wit;
            for (std::size_t d = 0; d <= depth; ++d) {
                if (outside(b.points[d])) {
                    ++c;
                    wit.push_back(d);
                }
                s.max_by_depth[d] = std::max(s.max_by_depth[d], c);
            }
            if (j == 0 || c > s.worst_sample.outside_count) {
                s.worst_sample = BranchExcursion{"seed " + std::to_string(si) + " sample " + std::to_string(j), c, wit};
            }
            ++s.branches;
        }
        return s;
    });

    ExcursionReport report;
    report.max_by_depth.assign(depth + 1, 0);
    for (auto& s : scans) {
        for (std::size_t d = 0; d <= depth; ++d) {
            report.max_by_depth[d] = std::max(report.max_by_depth[d], s.max_by_depth[d]);
        }
        report.per_branch.push_back(std::move(s.worst_exhaustive));
        if (params.samples > 0) report.per_branch.push_back(std::move(s.worst_sample));
        report.branches_scanned += s.branches;
        report.capped = report.capped || s.capped;
    }
    for (std::size_t d = 1; d <= depth; ++d) {
        report.max_by_depth[d] = std::max(report.max_by_depth[d], report.max_by_depth[d - 1]);
    }
    report.empirical_M = report.max_by_depth[depth];
    report.plateau_depth = depth;
    while (report.plateau_depth > 0 && report.max_by_depth[report.plateau_depth - 1] == report.empirical_M) {
        --report.plateau_depth;
    }
    const std::size_t window_start = depth - depth / 3;
    report.verdict = report.plateau_depth <= window_start ? ScanVerdict::plateau : ScanVerdict::growing;
    return report;
}

namespace {

TheoremRecord run_pipeline(const PLMap& f, TheoremRecord rec, const VerifyParams& params) {
    for (Cell k : rec.omega_cells.cells()) {
        if (!rec.u.u.covers(rec.omega_cells.cell_bounds(k))) {
            rec.omega_covered = false;
            break;
        }
        rec.omega_covered = true;
    }
    if (rec.omega_cells.empty()) rec.omega_covered = true;
    rec.certificate = subcover(f, rec.u, params.probe_step, params.radius_scan);
    rec.excursion = excursion_scan(f, rec.u, grid_points(f.domain(), params.seed_step), params.excursion);
    if (rec.certificate.failed_probe) {
        rec.reasons.push_back("COVER_FAILED at " + rec.certificate.failed_probe->to_string());
    } else if (!rec.certificate.covered) {
        rec.reasons.push_back("subcover does not cover the domain");
    }
    if (rec.excursion.verdict != ScanVerdict::plateau) rec.reasons.push_back("excursion scan GROWING");
    if (rec.certificate.ok() && rec.excursion.empirical_M > rec.certificate.M) {
        rec.reasons.push_back("empirical maximum " + std::to_string(rec.excursion.empirical_M) + " exceeds M = " +
                              std::to_string(rec.certificate.M));
    }
    rec.pass = rec.reasons.empty();
    return rec;
}

}  // namespace

TheoremRecord verify_theorem(const PLMap& f, Target target, const Rat& margin, const VerifyParams& params) {
    if (target != Target::A && target != Target::SA) throw DomainError("verify_theorem target must be A or SA");
    const LimitKind kind = target == Target::A ? LimitKind::alpha : LimitKind::salpha;
    TheoremRecord rec{target,
                      margin,
                      aggregate(f, kind, params.grid_step, params.aggregate),
                      aggregate(f, LimitKind::omega, params.grid_step, params.aggregate),
                      {},
                      false,
                      {},
                      {},
                      false,
                      {}};
    rec.u = Neighborhood::inflate(rec.target_cells, margin, target);
    if (target == Target::SA) {
        rec.u.u = rec.u.u.unite(Neighborhood::inflate(rec.omega_cells, margin, Target::omega).u);
    }
    return run_pipeline(f, std::move(rec), params);
}

TheoremRecord verify_neighborhood(const PLMap& f, const Neighborhood& u, const VerifyParams& params) {
    TheoremRecord rec{Target::custom,
                      Rat(0),
                      EpsSet(params.grid_step, f.domain()),
                      aggregate(f, LimitKind::omega, params.grid_step, params.aggregate),
                      u,
                      false,
                      {},
                      {},
                      false,
                      {}};
    return run_pipeline(f, std::move(rec), params);
}

}  // namespace backlimit
