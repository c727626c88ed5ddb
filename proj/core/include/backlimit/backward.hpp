#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "backlimit/pl_map.hpp"
#include "backlimit/rat.hpp"

namespace backlimit {

/// Finite prefix x_0, x_1, ..., x_d of a backward orbit branch:
/// f(points[i+1]) == points[i]. `path[i]` is the lap that produced points[i+1].
struct Branch {
    std::vector<Rat> points;
    std::vector<std::size_t> path;

    [[nodiscard]] std::size_t depth() const { return points.empty() ? 0 : points.size() - 1; }
    friend bool operator==(const Branch&, const Branch&) = default;
};

struct PreimageNode {
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    Rat value;
    std::size_t parent = npos;  ///< index into the previous level
    std::size_t lap = npos;     ///< lap that maps this node onto its parent
};

/// Preimage tree of a root down to a fixed depth. Children are kept per
/// parent (equal values under different parents are distinct nodes).
struct PreimageTree {
    Rat root;
    std::vector<std::vector<PreimageNode>> levels;

    [[nodiscard]] std::size_t depth() const { return levels.size() - 1; }
    [[nodiscard]] std::vector<std::size_t> level_sizes() const;
    /// Distinct values of level n, ascending.
    [[nodiscard]] std::vector<Rat> level_set(std::size_t n) const;
    /// Root-to-node branch ending at levels[n][i].
    [[nodiscard]] Branch branch_to(std::size_t n, std::size_t i) const;
};

/// Counter-based branch sampler: every choice is a pure function of
/// (seed, step, value), so sampled branches do not depend on scheduling.
struct BranchSampler {
    std::uint64_t seed = 0;

    /// Independent sampler for the i-th of several samples.
    [[nodiscard]] BranchSampler derive(std::uint64_t i) const;
    /// Index in [0, n) for a backward step from `value`.
    [[nodiscard]] std::size_t choose(std::size_t step, const Rat& value, std::size_t n) const;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Throws CapExceeded (completed = deepest full level) past node_cap nodes.
PreimageTree preimage_tree(const PLMap& f, const Rat& x, std::size_t depth, std::size_t node_cap);

/// Every root-to-leaf branch of the depth-d tree, in lexicographic lap-path
/// order. Throws CapExceeded when there would be more than branch_cap.
std::vector<Branch> branches(const PLMap& f, const Rat& x, std::size_t depth, std::size_t branch_cap);

Branch sample_branch(const PLMap& f, const Rat& x, std::size_t depth, const BranchSampler& sampler);

/// Level sets f^{-n}(x) for n = 0..depth, each globally deduplicated and
/// ascending. node_cap bounds the total over all levels.
std::vector<std::vector<Rat>> preimage_sets(const PLMap& f, const Rat& x, std::size_t depth, std::size_t node_cap);

}  // namespace backlimit
