#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "backlimit/backward.hpp"
#include "backlimit/errors.hpp"
#include "backlimit/fixtures.hpp"
#include "backlimit/parallel.hpp"
#include "oracles.hpp"

using namespace backlimit;

namespace {

PLMap tent() { return fixture("tent").map; }
PLMap fig1() { return fixture("fig1").map; }

Rat quarter_pow(std::size_t k) {
    Rat r(1);
    for (std::size_t i = 0; i < k; ++i) r = r * Rat(1, 4);
    return r;
}

struct WorkerGuard {
    explicit WorkerGuard(std::size_t n) { set_worker_count(n); }
    ~WorkerGuard() { set_worker_count(0); }
};

}  // namespace

TEST(PreimageTree, TentLevels) {
    const PreimageTree t = preimage_tree(tent(), Rat(1), 2, 1'000'000);
    EXPECT_EQ(t.level_sizes(), (std::vector<std::size_t>{1, 1, 2}));
    EXPECT_EQ(t.level_set(1), (std::vector<Rat>{Rat(1, 2)}));
    EXPECT_EQ(t.level_set(2), (std::vector<Rat>{Rat(1, 4), Rat(3, 4)}));
}

TEST(PreimageTree, Fig1QuarterHasSingletonLevels) {
    const PreimageTree t = preimage_tree(fig1(), Rat(1, 4), 3, 1'000'000);
    for (std::size_t n = 0; n <= 3; ++n) EXPECT_EQ(t.level_set(n), (std::vector<Rat>{quarter_pow(n + 1)}));
}

TEST(PreimageTree, DepthZeroAndCap) {
    const PreimageTree t = preimage_tree(tent(), Rat(1, 3), 0, 10);
    EXPECT_EQ(t.level_sizes(), (std::vector<std::size_t>{1}));
    try {
        preimage_tree(tent(), Rat(1, 3), 20, 1000);
        FAIL();
    } catch (const CapExceeded& e) {
        EXPECT_EQ(e.completed(), 8u);  // 1+2+...+2^8 = 511 <= 1000 < 1023
    }
}

TEST(Branches, Examples) {
    const auto bs = branches(tent(), Rat(1, 2), 2, 100);
    ASSERT_EQ(bs.size(), 4u);
    std::set<Rat> firsts;
    for (const auto& b : bs) firsts.insert(b.points[1]);
    EXPECT_EQ(firsts, (std::set<Rat>{Rat(1, 4), Rat(3, 4)}));

    const auto one = branches(fig1(), Rat(1, 4), 5, 100);
    ASSERT_EQ(one.size(), 1u);
    for (std::size_t k = 0; k <= 5; ++k) EXPECT_EQ(one[0].points[k], quarter_pow(k + 1));

    const auto zero = branches(tent(), Rat(1, 3), 0, 1);
    ASSERT_EQ(zero.size(), 1u);
    EXPECT_EQ(zero[0].points, (std::vector<Rat>{Rat(1, 3)}));
    EXPECT_THROW(branches(tent(), Rat(1, 3), 10, 100), CapExceeded);
}

TEST(Branches, SoundnessAndLevelSetIdentity) {
    std::mt19937_64 rng(29);
    for (const auto& name : list_fixtures()) {
        const PLMap f = fixture(name).map;
        for (int t = 0; t < 6; ++t) {
            const Rat x(static_cast<std::int64_t>(rng() % 64), 63);
            const std::size_t d = 6;
            const auto bs = branches(f, x, d, 10'000);
            std::set<Rat> deepest;
            for (const auto& b : bs) {
                ASSERT_EQ(b.depth(), d);
                for (std::size_t i = 1; i <= d; ++i) EXPECT_EQ(oracle::forward(f, b.points[i], 1), b.points[i - 1]);
                EXPECT_EQ(oracle::forward(f, b.points[d], d), x);
                deepest.insert(b.points[d]);
            }
            const auto levels = preimage_sets(f, x, d, 1'000'000);
            EXPECT_EQ(std::vector<Rat>(deepest.begin(), deepest.end()), levels[d]);
            for (std::size_t n = 0; n < d; ++n) {
                for (const auto& z : levels[n + 1]) {
                    EXPECT_TRUE(std::binary_search(levels[n].begin(), levels[n].end(), eval(f, z)));
                }
            }
        }
    }
}

TEST(PreimageSets, Examples) {
    EXPECT_EQ(preimage_sets(tent(), Rat(1), 2, 100),
              (std::vector<std::vector<Rat>>{{Rat(1)}, {Rat(1, 2)}, {Rat(1, 4), Rat(3, 4)}}));
    EXPECT_EQ(preimage_sets(fig1(), Rat(1), 2, 100),
              (std::vector<std::vector<Rat>>{{Rat(1)}, {Rat(1, 4), Rat(1)}, {Rat(1, 16), Rat(1, 4), Rat(1)}}));
    EXPECT_EQ(preimage_sets(tent(), Rat(1, 5), 0, 100), (std::vector<std::vector<Rat>>{{Rat(1, 5)}}));
}

TEST(SampleBranch, Examples) {
    const Branch b = sample_branch(fig1(), Rat(1, 4), 10, BranchSampler{1});
    for (std::size_t k = 0; k <= 10; ++k) EXPECT_EQ(b.points[k], quarter_pow(k + 1));

    for (std::uint64_t s = 0; s < 32; ++s) {
        const Branch t = sample_branch(tent(), Rat(1, 2), 1, BranchSampler{s});
        EXPECT_TRUE(t.points[1] == Rat(1, 4) || t.points[1] == Rat(3, 4));
        EXPECT_EQ(t, sample_branch(tent(), Rat(1, 2), 1, BranchSampler{s}));
    }
}

TEST(SampleBranch, BothChildrenReachable) {
    std::set<Rat> seen;
    for (std::uint64_t s = 0; s < 64; ++s) seen.insert(sample_branch(tent(), Rat(1, 2), 1, BranchSampler{s}).points[1]);
    EXPECT_EQ(seen.size(), 2u);
}

TEST(SampleBranch, DeepBranchesRecompose) {
    const BranchSampler root{99};
    for (std::uint64_t i = 0; i < 30; ++i) {
        const Branch b = sample_branch(tent(), Rat(1, 3), 40, root.derive(i));
        EXPECT_EQ(oracle::forward(tent(), b.points.back(), 40), Rat(1, 3));
    }
}

TEST(Parallel, OutputIndependentOfWorkers) {
    auto run = [] {
        const PreimageTree t = preimage_tree(tent(), Rat(1, 3), 12, 1'000'000);
        std::vector<std::string> out;
        for (const auto& level : t.levels) {
            for (const auto& node : level) out.push_back(node.value.to_string() + ":" + std::to_string(node.parent));
        }
        const auto bs = branches(fig1(), Rat(2, 3), 9, 100'000);
        for (const auto& b : bs) out.push_back(b.points.back().to_string());
        return out;
    };
    std::vector<std::string> seq, par;
    {
        WorkerGuard g(1);
        seq = run();
    }
    {
        WorkerGuard g(8);
        par = run();
    }
    EXPECT_EQ(seq, par);
}

TEST(Parallel, MapKeepsIndexOrderAndRethrowsLowest) {
    WorkerGuard g(4);
    const auto v = parallel_map(1000, [](std::size_t i) { return i * i; });
    for (std::size_t i = 0; i < v.size(); ++i) ASSERT_EQ(v[i], i * i);
    try {
        parallel_map(100, [](std::size_t i) -> int {
            if (i % 10 == 7) throw std::runtime_error(std::to_string(i));
            return 0;
        });
        FAIL();
    } catch (const std::runtime_error& e) {
        EXPECT_STREQ(e.what(), "7");
    }
}
