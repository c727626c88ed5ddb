#include <gtest/gtest.h>

#include "backlimit/backward.hpp"
#include "backlimit/errors.hpp"
#include "backlimit/fixtures.hpp"
#include "backlimit/pl_map.hpp"

using namespace backlimit;

TEST(Fixtures, ListIsSortedAndComplete) {
    EXPECT_EQ(list_fixtures(), (std::vector<std::string>{"fig1", "identity", "tent"}));
    for (const auto& name : list_fixtures()) {
        const Fixture fx = fixture(name);
        EXPECT_EQ(fx.name, name);
        EXPECT_FALSE(fx.documented_properties.empty());
    }
    EXPECT_THROW(fixture("logistic"), DomainError);
}

TEST(Fixtures, Fig1Properties) {
    const PLMap f = fixture("fig1").map;
    EXPECT_EQ(image_interval(f, f.domain()), f.domain());
    EXPECT_EQ(eval(f, Rat(1, 4)), Rat(1));
    EXPECT_EQ(eval(f, Rat(1)), Rat(1));
    EXPECT_EQ(preimage_point(f, Rat(1, 4)), (std::vector<Rat>{Rat(1, 16)}));
    EXPECT_EQ(image_interval(f, Interval::closed(Rat(1, 4), Rat(5, 8))), Interval::closed(Rat(1, 2), 1));
    EXPECT_EQ(image_interval(f, Interval::closed(Rat(5, 8), 1)), Interval::closed(Rat(1, 2), 1));
    const Interval mid = image_interval(f, Interval::closed(Rat(1, 4), Rat(1, 2)));
    EXPECT_GT(mid.lo, Rat(1, 2));
    EXPECT_EQ(mid.hi, Rat(1));
    EXPECT_TRUE(Interval::closed(Rat(1, 2), 1).contains(image_interval(f, Interval::closed(Rat(1, 2), 1))));
    EXPECT_EQ(fixed_points(f).points, (std::vector<Rat>{0, Rat(4, 7), 1}));
}

TEST(Fixtures, Fig1BranchesVisitMiddleGapAtMostOnce) {
    const PLMap f = fixture("fig1").map;
    const Interval gap = Interval::open(Rat(1, 4), Rat(1, 2));
    for (int k = 0; k <= 16; ++k) {
        for (const auto& b : branches(f, Rat(k, 16), 8, 100'000)) {
            std::size_t in = 0;
            for (const auto& p : b.points) in += gap.contains(p) ? 1 : 0;
            EXPECT_LE(in, 1u) << "root " << k << "/16";
        }
    }
}

TEST(Fixtures, TentAndIdentity) {
    const PLMap t = fixture("tent").map;
    EXPECT_EQ(t.lap_count(), 2u);
    EXPECT_EQ(fixed_points(t).points, (std::vector<Rat>{0, Rat(2, 3)}));
    const PLMap id = fixture("identity").map;
    EXPECT_EQ(preimage_point(id, Rat(3, 7)), (std::vector<Rat>{Rat(3, 7)}));
}
