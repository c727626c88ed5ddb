#include <gtest/gtest.h>

#include <random>

#include "backlimit/backward.hpp"
#include "backlimit/birkhoff.hpp"
#include "backlimit/fixtures.hpp"
#include "backlimit/limit_sets.hpp"

using namespace backlimit;

namespace {

PLMap tent() { return fixture("tent").map; }
PLMap fig1() { return fixture("fig1").map; }
PLMap ident() { return fixture("identity").map; }
const Interval kUnit = Interval::closed(0, 1);

// Open neighborhood of omega(fig1) = {0} U [1/2, 2/3] U {1}, widened by 1/100.
Neighborhood fig1_omega_u() {
    return Neighborhood{IntervalUnion::parse("(-1/100,1/100) (49/100,203/300) (99/100,101/100)"), Target::custom};
}

Neighborhood tent_u() { return Neighborhood{IntervalUnion::parse("(1/10,9/10)"), Target::custom}; }

ScanParams light_scan() {
    ScanParams s;
    s.depth = 24;
    s.samples = 64;
    s.exhaustive_depth = 8;
    return s;
}

}  // namespace

TEST(CountOutside, Fig1QuarterBranch) {
    const Branch b = branches(fig1(), Rat(1, 4), 10, 10)[0];
    const OutsideCount c = count_outside(b, fig1_omega_u());
    EXPECT_EQ(c.count, 3u);
    EXPECT_EQ(c.witnesses, (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_EQ(count_outside(b, Neighborhood::whole(kUnit)).count, 0u);

    Branch fixed;
    fixed.points.assign(12, Rat(4, 7));
    fixed.path.assign(11, 1);
    EXPECT_EQ(count_outside(fixed, fig1_omega_u()).count, 0u);
}

TEST(CountOutside, MonotoneInU) {
    std::mt19937_64 rng(53);
    const BranchSampler root{3};
    for (int t = 0; t < 50; ++t) {
        const Rat a(static_cast<std::int64_t>(rng() % 50), 100);
        const Rat b = a + Rat(static_cast<std::int64_t>(1 + rng() % 40), 100);
        const Rat c(static_cast<std::int64_t>(rng() % 90), 100);
        IntervalUnion small;
        small.add(Interval::open(a, b));
        IntervalUnion big = small;
        big.add(Interval::open(c, c + Rat(1, 10)));
        const Branch br = sample_branch(tent(), Rat(1, 3), 30, root.derive(static_cast<std::uint64_t>(t)));
        EXPECT_LE(count_outside(br, Neighborhood{big, Target::custom}).count,
                  count_outside(br, Neighborhood{small, Target::custom}).count);
    }
}

TEST(TwoPointRadius, Examples) {
    const ScanParams scan;
    const RadiusResult r = two_point_radius(fig1(), Rat(3, 8), scan);
    EXPECT_GE(r.delta, Rat(1, 16));
    EXPECT_LE(r.max_in_ball, 1u);
    EXPECT_GT(two_point_radius(fig1(), Rat(1, 4), scan).delta, Rat(0));
    EXPECT_TRUE(two_point_radius(tent(), Rat(2, 3), light_scan()).flagged());
}

TEST(TwoPointRadius, FlaggedProbesLieNearOmega) {
    // a probe with no two-point radius must sit within one cell of the omega(f) proxy
    const Rat step(1, 32);
    for (const auto& name : {"tent", "fig1"}) {
        const PLMap f = fixture(name).map;
        const EpsSet omega = aggregate(f, LimitKind::omega, step, AggregateParams{});
        const Neighborhood near = Neighborhood::inflate(omega, step, Target::omega);
        for (const auto& x : grid_points(kUnit, Rat(1, 16))) {
            if (two_point_radius(f, x, light_scan()).flagged()) EXPECT_TRUE(near.contains(x)) << name << " " << x;
        }
    }
}

TEST(Subcover, WholeDomainNeedsNoPieces) {
    const SubcoverCertificate c = subcover(fig1(), Neighborhood::whole(kUnit), Rat(1, 16), ScanParams{});
    EXPECT_TRUE(c.ok());
    EXPECT_EQ(c.m, 0u);
    EXPECT_EQ(c.M, 0u);
}

TEST(Subcover, Fig1GapsAreCovered) {
    const Neighborhood u = fig1_omega_u();
    const SubcoverCertificate c = subcover(fig1(), u, Rat(1, 16), ScanParams{});
    ASSERT_TRUE(c.ok());
    EXPECT_GT(c.m, 0u);
    EXPECT_EQ(c.M, 2 * c.m);
    IntervalUnion all = u.u;
    for (const auto& p : c.pieces) {
        EXPECT_LE(p.max_in_ball, 2u);
        all.add(p.v);
    }
    EXPECT_TRUE(all.covers(kUnit));
}

TEST(Subcover, TentFailsOutsideU) {
    const SubcoverCertificate c = subcover(tent(), tent_u(), Rat(1, 16), light_scan());
    EXPECT_FALSE(c.ok());
    ASSERT_TRUE(c.failed_probe.has_value());
    EXPECT_FALSE(tent_u().contains(*c.failed_probe));
}

TEST(Excursion, WholeDomainIsZero) {
    ExcursionParams p;
    p.depth_max = 20;
    p.samples = 20;
    const ExcursionReport r = excursion_scan(tent(), Neighborhood::whole(kUnit), grid_points(kUnit, Rat(1, 8)), p);
    EXPECT_EQ(r.verdict, ScanVerdict::plateau);
    EXPECT_EQ(r.empirical_M, 0u);
    for (auto m : r.max_by_depth) EXPECT_EQ(m, 0u);
}

TEST(Excursion, TentGrowsWithoutFullCoverage) {
    const ExcursionReport r = excursion_scan(tent(), tent_u(), grid_points(kUnit, Rat(1, 16)), ExcursionParams{});
    EXPECT_EQ(r.verdict, ScanVerdict::growing);
    for (std::size_t d = 1; d < r.max_by_depth.size(); ++d) EXPECT_LE(r.max_by_depth[d - 1], r.max_by_depth[d]);
}

TEST(Excursion, Fig1PlateauIsStableAndBoundedByM) {
    const Neighborhood u = fig1_omega_u();
    const SubcoverCertificate c = subcover(fig1(), u, Rat(1, 16), ScanParams{});
    ASSERT_TRUE(c.ok());
    const auto seeds = grid_points(kUnit, Rat(1, 16));
    ExcursionParams p;
    const ExcursionReport first = excursion_scan(fig1(), u, seeds, p);
    EXPECT_EQ(first.verdict, ScanVerdict::plateau);
    EXPECT_LE(first.empirical_M, c.M);
    for (std::size_t d = 1; d < first.max_by_depth.size(); ++d) {
        EXPECT_LE(first.max_by_depth[d - 1], first.max_by_depth[d]);
    }
    // fresh seed, doubled samples
    p.seed = 1234;
    p.samples *= 2;
    const ExcursionReport again = excursion_scan(fig1(), u, seeds, p);
    EXPECT_EQ(again.verdict, ScanVerdict::plateau);
    EXPECT_LE(again.empirical_M, c.M);
}

TEST(Excursion, Fig1MarginNeighborhoodOfAProxy) {
    const EpsSet a = aggregate(fig1(), LimitKind::alpha, Rat(1, 32), AggregateParams{});
    const Neighborhood u = Neighborhood::inflate(a, Rat(1, 100), Target::A);
    const ExcursionReport r = excursion_scan(fig1(), u, grid_points(kUnit, Rat(1, 16)), ExcursionParams{});
    EXPECT_EQ(r.verdict, ScanVerdict::plateau);
}

TEST(VerifyTheorem, Fig1TargetA) {
    const TheoremRecord r = verify_theorem(fig1(), Target::A, Rat(1, 50), VerifyParams{});
    EXPECT_TRUE(r.pass) << (r.reasons.empty() ? "" : r.reasons[0]);
    EXPECT_TRUE(r.omega_covered);
    EXPECT_EQ(r.certificate.M, 2 * r.certificate.m);
    EXPECT_LE(r.excursion.empirical_M, r.certificate.M);
}

TEST(VerifyTheorem, Fig1TargetSA) {
    const TheoremRecord r = verify_theorem(fig1(), Target::SA, Rat(1, 50), VerifyParams{});
    EXPECT_TRUE(r.pass) << (r.reasons.empty() ? "" : r.reasons[0]);
    EXPECT_LE(r.excursion.empirical_M, r.certificate.M);
}

TEST(VerifyTheorem, IdentityIsTrivial) {
    const TheoremRecord r = verify_theorem(ident(), Target::A, Rat(1, 10), VerifyParams{});
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.certificate.M, 0u);
    EXPECT_EQ(r.excursion.empirical_M, 0u);
}

TEST(VerifyNeighborhood, TentNegativeControl) {
    VerifyParams p;
    p.radius_scan = light_scan();
    const TheoremRecord r = verify_neighborhood(tent(), tent_u(), p);
    EXPECT_FALSE(r.pass);
    EXPECT_TRUE(r.certificate.failed_probe.has_value());
    EXPECT_EQ(r.excursion.verdict, ScanVerdict::growing);
}
