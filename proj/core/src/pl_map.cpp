#include "backlimit/pl_map.hpp"

#include <algorithm>

#include "backlimit/errors.hpp"

namespace backlimit {

PLMap PLMap::create(Interval domain, std::vector<Breakpoint> breakpoints) {
    std::vector<std::string> bad;
    domain.lo_open = false;
    domain.hi_open = false;
    if (!(domain.lo < domain.hi)) bad.push_back("degenerate domain " + domain.to_string());
    if (breakpoints.size() < 2) {
        bad.push_back("need at least two breakpoints");
        throw ValidationError(std::move(bad));
    }
    if (breakpoints.front().x != domain.lo) {
        bad.push_back("first breakpoint x=" + breakpoints.front().x.to_string() + " is not domain lo " +
                      domain.lo.to_string());
    }
    if (breakpoints.back().x != domain.hi) {
        bad.push_back("last breakpoint x=" + breakpoints.back().x.to_string() + " is not domain hi " +
                      domain.hi.to_string());
    }
    bool monotone = true;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (!(breakpoints[i].x < breakpoints[i + 1].x)) {
            bad.push_back("non-monotone breakpoints at x=" + breakpoints[i + 1].x.to_string());
            monotone = false;
        }
    }
    Rat ymin = breakpoints.front().y;
    Rat ymax = ymin;
    for (const auto& b : breakpoints) {
        if (!domain.contains(b.y)) {
            bad.push_back("not self-map: y=" + b.y.to_string() + " at x=" + b.x.to_string() + " outside " +
                          domain.to_string());
        }
        ymin = min(ymin, b.y);
        ymax = max(ymax, b.y);
    }
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (breakpoints[i].y == breakpoints[i + 1].y) {
            bad.push_back("constant lap [" + breakpoints[i].x.to_string() + "," + breakpoints[i + 1].x.to_string() +
                          "]");
        }
    }
    if (ymin != domain.lo || ymax != domain.hi) {
        bad.push_back("not onto: image [" + ymin.to_string() + "," + ymax.to_string() + "] != " + domain.to_string());
    }
    if (!bad.empty() || !monotone) throw ValidationError(std::move(bad));

    PLMap f;
    f.domain_ = std::move(domain);
    f.breakpoints_ = std::move(breakpoints);
    f.laps_.reserve(f.breakpoints_.size() - 1);
    for (std::size_t i = 0; i + 1 < f.breakpoints_.size(); ++i) {
        const auto& a = f.breakpoints_[i];
        const auto& b = f.breakpoints_[i + 1];
        Lap lap;
        lap.index = i;
        lap.x_range = Interval::closed(a.x, b.x);
        lap.slope = (b.y - a.y) / (b.x - a.x);
        lap.intercept = a.y - lap.slope * a.x;
        f.laps_.push_back(std::move(lap));
    }
    return f;
}

std::size_t PLMap::lap_of(const Rat& x) const {
    auto it = std::lower_bound(breakpoints_.begin() + 1, breakpoints_.end(), x,
                               [](const Breakpoint& b, const Rat& v) { return b.x < v; });
    const auto i = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
    return std::min(i, laps_.size() - 1);
}

bool FixedPointSet::contains(const Rat& x) const {
    if (std::binary_search(points.begin(), points.end(), x)) return true;
    return std::any_of(continua.begin(), continua.end(), [&](const Interval& j) { return j.contains(x); });
}

Rat eval(const PLMap& f, const Rat& x) {
    if (!f.domain().contains(x)) {
        throw DomainError("point " + x.to_string() + " outside domain " + f.domain().to_string());
    }
    return f.laps()[f.lap_of(x)].eval(x);
}

Rat eval_iter(const PLMap& f, Rat x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x = eval(f, x);
    return x;
}

Interval image_interval(const PLMap& f, const Interval& j) {
    if (!f.domain().contains(Interval::closed(j.lo, j.hi))) {
        throw DomainError("interval " + j.to_string() + " outside domain " + f.domain().to_string());
    }
    Rat lo = eval(f, j.lo);
    Rat hi = lo;
    auto take = [&](const Rat& y) {
        if (y < lo) lo = y;
        if (hi < y) hi = y;
    };
    take(eval(f, j.hi));
    for (const auto& b : f.breakpoints()) {
        if (j.lo < b.x && b.x < j.hi) take(b.y);
    }
    return Interval::closed(std::move(lo), std::move(hi));
}

std::vector<std::pair<Rat, std::size_t>> preimages_with_laps(const PLMap& f, const Rat& y) {
    std::vector<std::pair<Rat, std::size_t>> out;
    for (const auto& lap : f.laps()) {
        Rat x = (y - lap.intercept) / lap.slope;
        if (!lap.x_range.contains(x)) continue;
        // Laps are scanned left to right, so a shared endpoint can only
        // repeat the previous solution.
        if (!out.empty() && out.back().first == x) continue;
        out.emplace_back(std::move(x), lap.index);
    }
    return out;
}

std::vector<Rat> preimage_point(const PLMap& f, const Rat& y) {
    if (!f.domain().contains(y)) {
        throw DomainError("point " + y.to_string() + " outside domain " + f.domain().to_string());
    }
    std::vector<Rat> out;
    for (auto& [x, lap] : preimages_with_laps(f, y)) out.push_back(std::move(x));
    return out;
}

namespace {

PLMap compose(const PLMap& f, const PLMap& g) {
    std::vector<Rat> xs;
    for (const auto& lap : g.laps()) {
        xs.push_back(lap.x_range.lo);
        const Rat ga = lap.eval(lap.x_range.lo);
        const Rat gb = lap.eval(lap.x_range.hi);
        const Rat& lo = min(ga, gb);
        const Rat& hi = max(ga, gb);
        std::vector<Rat> cuts;
        for (const auto& b : f.breakpoints()) {
            if (lo < b.x && b.x < hi) cuts.push_back((b.x - lap.intercept) / lap.slope);
        }
        if (lap.slope.sign() < 0) std::reverse(cuts.begin(), cuts.end());
        xs.insert(xs.end(), cuts.begin(), cuts.end());
    }
    xs.push_back(g.domain().hi);
    std::vector<Breakpoint> bps;
    bps.reserve(xs.size());
    for (auto& x : xs) {
        Rat y = eval(f, eval(g, x));
        bps.push_back(Breakpoint{std::move(x), std::move(y)});
    }
    return PLMap::create(g.domain(), std::move(bps));
}

}  // namespace

PLMap iterate_map(const PLMap& f, std::size_t p, std::size_t lap_cap) {
    if (p == 0) throw DomainError("iterate_map needs p >= 1");
    if (f.lap_count() > lap_cap) throw CapExceeded("lap cap " + std::to_string(lap_cap) + " exceeded", 0);
    PLMap g = f;
    for (std::size_t k = 2; k <= p; ++k) {
        // Each lap of g splits once per interior f-breakpoint it crosses.
        std::size_t projected = 0;
        for (const auto& lap : g.laps()) {
            const Rat ga = lap.eval(lap.x_range.lo);
            const Rat gb = lap.eval(lap.x_range.hi);
            projected += 1;
            for (const auto& b : f.breakpoints()) {
                if (min(ga, gb) < b.x && b.x < max(ga, gb)) ++projected;
            }
        }
        if (projected > lap_cap) {
            throw CapExceeded("lap cap " + std::to_string(lap_cap) + " exceeded at power " + std::to_string(k),
                              k - 1);
        }
        g = compose(f, g);
    }
    return g;
}

FixedPointSet fixed_points(const PLMap& f) {
    std::vector<Rat> points;
    IntervalUnion continua;
    for (const auto& lap : f.laps()) {
        if (lap.slope == Rat(1)) {
            if (lap.intercept.is_zero()) continua.add(lap.x_range);
            continue;
        }
        Rat x = lap.intercept / (Rat(1) - lap.slope);
        if (lap.x_range.contains(x)) points.push_back(std::move(x));
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    FixedPointSet out;
    out.continua = continua.parts();
    for (auto& x : points) {
        if (!continua.contains(x)) out.points.push_back(std::move(x));
    }
    return out;
}

}  // namespace backlimit
