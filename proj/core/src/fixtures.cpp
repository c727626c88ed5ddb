#include "backlimit/fixtures.hpp"

#include "backlimit/errors.hpp"

namespace backlimit {

namespace {

PLMap unit_map(std::vector<Breakpoint> bps) { return PLMap::create(Interval::closed(0, 1), std::move(bps)); }

}  // namespace

Fixture fixture(std::string_view name) {
    if (name == "tent") {
        return Fixture{"tent",
                       unit_map({{0, 0}, {Rat(1, 2), 1}, {1, 0}}),
                       {{"onto [0,1] with 2 laps of slope +2 and -2", "definition"},
                        {"Fix = {0, 2/3}", "per-lap solve"},
                        {"f^p has 2^p laps and 2^p fixed points", "iterate_map"},
                        {"NW = [0,1]", "laps of f^5 are the 1/32 grid cells"}}};
    }
    if (name == "identity") {
        return Fixture{"identity",
                       unit_map({{0, 0}, {1, 1}}),
                       {{"every point is fixed", "definition"},
                        {"f^{-1}(x) = {x}, so every set in the chain is [0,1]", "definition"}}};
    }
    if (name == "fig1") {
        return Fixture{
            "fig1",
            unit_map({{0, 0}, {Rat(1, 4), 1}, {Rat(5, 8), Rat(1, 2)}, {1, 1}}),
            {{"continuous onto [0,1]; f(1/4) = 1 and 1 is fixed", "definition"},
             {"f^{-1}(1/4) = {1/16}: unique backward branch 4^{-(k+1)} -> 0", "per-lap solve"},
             {"laps 2 and 3 have range [1/2,1]; [1/2,1] is forward invariant", "breakpoint values"},
             {"f((1/4,1/2)) is inside (1/2,1], so a branch has at most one point in (1/4,1/2)", "lap 2 formula"},
             {"Fix = {0, 4/7, 1}", "per-lap solve"},
             {"1/4 is wandering and lies in alpha(1)", "forward orbit 1/4 -> 1 -> 1"}}};
    }
    throw DomainError("unknown fixture '" + std::string(name) + "'");
}

std::vector<std::string> list_fixtures() { return {"fig1", "identity", "tent"}; }

}  // namespace backlimit
