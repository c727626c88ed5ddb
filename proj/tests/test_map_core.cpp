#include <gtest/gtest.h>

#include <random>

#include "backlimit/errors.hpp"
#include "backlimit/fixtures.hpp"
#include "backlimit/interval.hpp"
#include "backlimit/pl_map.hpp"
#include "oracles.hpp"

using namespace backlimit;

namespace {

PLMap tent() { return fixture("tent").map; }
PLMap fig1() { return fixture("fig1").map; }
PLMap ident() { return fixture("identity").map; }

Rat R(const char* s) { return Rat::parse(s); }

std::vector<Rat> xs_of(const PLMap& f) {
    std::vector<Rat> xs;
    for (const auto& b : f.breakpoints()) xs.push_back(b.x);
    return xs;
}

std::string violations_of(std::string_view text) {
    try {
        parse_map(text);
    } catch (const ValidationError& e) {
        std::string all;
        for (const auto& v : e.violations()) all += v + "\n";
        return all;
    }
    return "";
}

}  // namespace

TEST(Rat, ParsesAndCanonicalizes) {
    EXPECT_EQ(R("2/4").to_string(), "1/2");
    EXPECT_EQ(R("-3/6").to_string(), "-1/2");
    EXPECT_EQ(R("4/2").to_string(), "2");
    EXPECT_EQ(R("0.125"), Rat(1, 8));
    EXPECT_THROW(R("1/0"), Error);
    EXPECT_THROW(R("abc"), Error);
    EXPECT_THROW(Rat::parse_fraction("0.5"), Error);
    EXPECT_THROW(Rat(1) / Rat(0), DomainError);
    EXPECT_LT(Rat(1, 3), Rat(1, 2));
    EXPECT_EQ(dyadic(5), Rat(1, 32));
}

TEST(Interval, UnionNormalizesAndComplements) {
    const IntervalUnion u = IntervalUnion::parse("(1/2,3/4) [0,1/4] [1/4,1/3)");
    ASSERT_EQ(u.parts().size(), 2u);
    EXPECT_EQ(u.to_string(), "[0,1/3) U (1/2,3/4)");
    EXPECT_TRUE(u.contains(Rat(1, 4)));
    EXPECT_FALSE(u.contains(Rat(1, 2)));
    const IntervalUnion c = u.complement_in(Interval::closed(0, 1));
    EXPECT_EQ(c.to_string(), "[1/3,1/2] U [3/4,1]");
    EXPECT_TRUE(u.unite(c).covers(Interval::closed(0, 1)));
}

TEST(ParseMap, TentFileHasTwoLaps) {
    const PLMap f = parse_map("# tent\ninterval 0 1\nbreakpoint 0/1 0/1\nbreakpoint 1/2 1/1\nbreakpoint 1/1 0/1\n");
    EXPECT_EQ(f.lap_count(), 2u);
    EXPECT_EQ(f, tent());
}

TEST(ParseMap, RejectsConstantLap) {
    EXPECT_NE(violations_of("interval 0 1\nbreakpoint 0 0\nbreakpoint 1/2 1/2\nbreakpoint 1 1/2\n")
                  .find("constant lap [1/2,1]"),
              std::string::npos);
}

TEST(ParseMap, RejectsNotOnto) {
    const std::string v = violations_of("interval 0 1\nbreakpoint 0 1/4\nbreakpoint 1 3/4\n");
    EXPECT_NE(v.find("not onto"), std::string::npos);
    EXPECT_NE(v.find("[1/4,3/4]"), std::string::npos);
}

TEST(ParseMap, CollectsEveryViolation) {
    const std::string v = violations_of("interval 0 1\nbreakpoint 0 0\nbreakpoint 1/2 2\nbreakpoint 1/2 1\n");
    EXPECT_NE(v.find("non-monotone"), std::string::npos);
    EXPECT_NE(v.find("not self-map"), std::string::npos);
}

TEST(ParseMap, ReportsLineAndColumn) {
    try {
        parse_map("interval 0 1\nbreakpoint 0 x\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_EQ(e.column(), 14u);
    }
    EXPECT_THROW(parse_map("interval 0 1\nbogus 1 2\n"), ParseError);
}

TEST(ParseMap, RoundTripIsBitExact) {
    for (const auto& name : list_fixtures()) {
        const PLMap f = fixture(name).map;
        const std::string text = emit_map(f);
        EXPECT_EQ(emit_map(parse_map(text)), text) << name;
        EXPECT_EQ(parse_map(text), f);
    }
    EXPECT_EQ(emit_map(parse_map("interval 0 2/2\nbreakpoint 0 0\nbreakpoint 2/4 2/2\nbreakpoint 3/3 0\n")),
              emit_map(tent()));
}

TEST(Eval, Examples) {
    EXPECT_EQ(eval(tent(), Rat(1, 2)), Rat(1));
    EXPECT_EQ(eval(tent(), Rat(1, 3)), Rat(2, 3));
    EXPECT_EQ(eval(fig1(), Rat(1, 16)), Rat(1, 4));
    EXPECT_THROW(eval(tent(), Rat(2)), DomainError);
}

TEST(EvalIter, Examples) {
    EXPECT_EQ(eval_iter(tent(), Rat(2, 5), 2), Rat(2, 5));
    EXPECT_EQ(eval_iter(fig1(), Rat(3, 7), 0), Rat(3, 7));
    EXPECT_EQ(eval_iter(fig1(), Rat(1, 4), 2), Rat(1));
}

TEST(EvalIter, CompositionLaw) {
    std::mt19937_64 rng(11);
    for (const auto& name : list_fixtures()) {
        const PLMap f = fixture(name).map;
        for (int t = 0; t < 40; ++t) {
            const Rat x(static_cast<std::int64_t>(rng() % 1000), 999);
            const std::size_t m = rng() % 12, n = rng() % 12;
            EXPECT_EQ(eval_iter(f, x, m + n), eval_iter(f, eval_iter(f, x, m), n));
            EXPECT_EQ(eval_iter(f, x, m + n), oracle::forward(f, x, m + n));
        }
    }
}

TEST(Continuity, LapFormulasAgreeAtSharedBreakpoints) {
    for (const auto& name : list_fixtures()) {
        const PLMap f = fixture(name).map;
        for (std::size_t i = 0; i + 1 < f.lap_count(); ++i) {
            const Rat x = f.laps()[i].x_range.hi;
            EXPECT_EQ(f.laps()[i].eval(x), f.laps()[i + 1].eval(x));
        }
    }
}

TEST(ImageInterval, Examples) {
    EXPECT_EQ(image_interval(tent(), Interval::closed(Rat(1, 4), Rat(3, 4))), Interval::closed(Rat(1, 2), 1));
    EXPECT_EQ(image_interval(tent(), Interval::closed(0, Rat(1, 2))), Interval::closed(0, 1));
    EXPECT_EQ(image_interval(fig1(), Interval::point(Rat(1, 3))), Interval::point(eval(fig1(), Rat(1, 3))));
}

TEST(ImageInterval, MatchesHullOracle) {
    std::mt19937_64 rng(5);
    for (const auto& name : list_fixtures()) {
        const PLMap f = fixture(name).map;
        for (int t = 0; t < 200; ++t) {
            Rat a(static_cast<std::int64_t>(rng() % 257), 256), b(static_cast<std::int64_t>(rng() % 257), 256);
            if (b < a) std::swap(a, b);
            const auto [lo, hi] = oracle::hull(f, a, b);
            EXPECT_EQ(image_interval(f, Interval::closed(a, b)), Interval::closed(lo, hi));
        }
    }
}

TEST(Preimage, Examples) {
    EXPECT_EQ(preimage_point(tent(), Rat(1, 2)), (std::vector<Rat>{Rat(1, 4), Rat(3, 4)}));
    EXPECT_EQ(preimage_point(fig1(), Rat(1, 4)), (std::vector<Rat>{Rat(1, 16)}));
    EXPECT_EQ(preimage_point(fig1(), Rat(1)), (std::vector<Rat>{Rat(1, 4), Rat(1)}));
    EXPECT_THROW(preimage_point(tent(), Rat(3, 2)), DomainError);
}

TEST(Preimage, EverySolutionMapsExactly) {
    std::mt19937_64 rng(3);
    for (const auto& name : list_fixtures()) {
        const PLMap f = fixture(name).map;
        for (int t = 0; t < 100; ++t) {
            const Rat y(static_cast<std::int64_t>(rng() % 998), 997);
            for (const auto& x : preimage_point(f, y)) EXPECT_EQ(eval(f, x), y);
        }
    }
}

TEST(Preimage, AgreesWithGridScan) {
    std::mt19937_64 rng(17);
    const auto names = list_fixtures();
    for (int t = 0; t < 12; ++t) {
        const PLMap f = fixture(names[rng() % names.size()]).map;
        const Rat y(static_cast<std::int64_t>(rng() % 1000), 999);
        const auto roots = preimage_point(f, y);
        const auto brackets = oracle::scan_roots(f, y);
        ASSERT_EQ(roots.size(), brackets.size()) << y;
        for (std::size_t i = 0; i < roots.size(); ++i) {
            EXPECT_LE(brackets[i].lo, roots[i]);
            EXPECT_GE(brackets[i].hi, roots[i]);
        }
    }
}

TEST(IterateMap, TentSquared) {
    const PLMap g = iterate_map(tent(), 2, 100);
    EXPECT_EQ(g.lap_count(), 4u);
    EXPECT_EQ(xs_of(g), (std::vector<Rat>{0, Rat(1, 4), Rat(1, 2), Rat(3, 4), 1}));
}

TEST(IterateMap, FirstIterateIsF) {
    for (const auto& name : list_fixtures()) {
        const PLMap f = fixture(name).map;
        EXPECT_EQ(iterate_map(f, 1, 100), f);
    }
}

TEST(IterateMap, LapCap) {
    try {
        iterate_map(tent(), 10, 100);
        FAIL();
    } catch (const CapExceeded& e) {
        EXPECT_EQ(e.completed(), 6u);  // 2^6 = 64 <= 100 < 128
    }
}

TEST(IterateMap, AgreesWithEvalIter) {
    std::mt19937_64 rng(23);
    for (const auto& name : list_fixtures()) {
        const PLMap f = fixture(name).map;
        for (std::size_t p = 1; p <= 5; ++p) {
            const PLMap g = iterate_map(f, p, 4096);
            for (int t = 0; t < 20; ++t) {
                const Rat x(static_cast<std::int64_t>(rng() % 1000), 999);
                EXPECT_EQ(eval(g, x), eval_iter(f, x, p));
            }
        }
    }
}

TEST(FixedPoints, Examples) {
    EXPECT_EQ(fixed_points(tent()).points, (std::vector<Rat>{0, Rat(2, 3)}));
    EXPECT_EQ(fixed_points(fig1()).points, (std::vector<Rat>{0, Rat(4, 7), 1}));
    const FixedPointSet id = fixed_points(ident());
    EXPECT_TRUE(id.points.empty());
    ASSERT_EQ(id.continua.size(), 1u);
    EXPECT_EQ(id.continua[0], Interval::closed(0, 1));
    for (const auto& name : list_fixtures()) {
        const PLMap f = fixture(name).map;
        const auto a = fixed_points(f), b = fixed_points(iterate_map(f, 1, 10));
        EXPECT_EQ(a.points, b.points);
        EXPECT_EQ(a.continua, b.continua);
    }
}

TEST(Digest, StableAndDistinct) {
    EXPECT_EQ(map_digest(tent()), map_digest(parse_map(emit_map(tent()))));
    EXPECT_NE(map_digest(tent()), map_digest(fig1()));
    EXPECT_EQ(map_digest(tent()).size(), 16u);
}
