#include "backlimit/backward.hpp"

#include <algorithm>

#include "backlimit/errors.hpp"
#include "backlimit/parallel.hpp"

namespace backlimit {

namespace {

constexpr std::size_t kChunk = 256;

void check_root(const PLMap& f, const Rat& x) {
    if (!f.domain().contains(x)) {
        throw DomainError("point " + x.to_string() + " outside domain " + f.domain().to_string());
    }
}

// Applies `expand` to consecutive chunks of `items` in parallel and
// concatenates the per-chunk outputs in chunk order.
template <typename T, typename Out, typename Fn>
std::vector<Out> chunked_expand(const std::vector<T>& items, Fn&& expand) {
    const std::size_t chunks = (items.size() + kChunk - 1) / kChunk;
    auto parts = parallel_map(chunks, [&](std::size_t c) {
        std::vector<Out> out;
        const std::size_t end = std::min(items.size(), (c + 1) * kChunk);
        for (std::size_t i = c * kChunk; i < end; ++i) expand(i, out);
        return out;
    });
    std::vector<Out> merged;
    for (auto& p : parts) {
        merged.insert(merged.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    }
    return merged;
}

}  // namespace

std::vector<std::size_t> PreimageTree::level_sizes() const {
    std::vector<std::size_t> out;
    out.reserve(levels.size());
    for (const auto& l : levels) out.push_back(l.size());
    return out;
}

std::vector<Rat> PreimageTree::level_set(std::size_t n) const {
    std::vector<Rat> out;
    out.reserve(levels.at(n).size());
    for (const auto& node : levels[n]) out.push_back(node.value);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Branch PreimageTree::branch_to(std::size_t n, std::size_t i) const {
    Branch b;
    b.points.resize(n + 1);
    b.path.resize(n);
    for (std::size_t level = n + 1; level-- > 0;) {
        const auto& node = levels.at(level).at(i);
        b.points[level] = node.value;
        if (level > 0) {
            b.path[level - 1] = node.lap;
            i = node.parent;
        }
    }
    return b;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31U);
}

BranchSampler BranchSampler::derive(std::uint64_t i) const {
    return BranchSampler{splitmix64(seed ^ splitmix64(i + 1))};
}

std::size_t BranchSampler::choose(std::size_t step, const Rat& value, std::size_t n) const {
    if (n <= 1) return 0;
    std::uint64_t h = splitmix64(seed);
    h = splitmix64(h ^ static_cast<std::uint64_t>(step));
    h = splitmix64(h ^ value.hash());
    // Multiply-shift maps h onto [0, n) without a modulo.
    return static_cast<std::size_t>((static_cast<unsigned __int128>(h) * n) >> 64U);
}

PreimageTree preimage_tree(const PLMap& f, const Rat& x, std::size_t depth, std::size_t node_cap) {
    check_root(f, x);
    PreimageTree tree;
    tree.root = x;
    tree.levels.push_back({PreimageNode{x, PreimageNode::npos, PreimageNode::npos}});
    std::size_t total = 1;
    for (std::size_t n = 0; n < depth; ++n) {
        const auto& cur = tree.levels.back();
        auto next = chunked_expand<PreimageNode, PreimageNode>(cur, [&](std::size_t i, auto& out) {
            for (auto& [v, lap] : preimages_with_laps(f, cur[i].value)) {
                out.push_back(PreimageNode{std::move(v), i, lap});
            }
        });
        total += next.size();
        if (total > node_cap) {
            throw CapExceeded("preimage tree node cap " + std::to_string(node_cap) + " exceeded", n);
        }
        tree.levels.push_back(std::move(next));
    }
    return tree;
}

std::vector<Branch> branches(const PLMap& f, const Rat& x, std::size_t depth, std::size_t branch_cap) {
    check_root(f, x);
    std::vector<std::vector<PreimageNode>> levels;
    levels.push_back({PreimageNode{x, PreimageNode::npos, PreimageNode::npos}});
    for (std::size_t n = 0; n < depth; ++n) {
        const auto& cur = levels.back();
        std::vector<PreimageNode> next;
        for (std::size_t i = 0; i < cur.size(); ++i) {
            for (auto& [v, lap] : preimages_with_laps(f, cur[i].value)) {
                next.push_back(PreimageNode{std::move(v), i, lap});
            }
            if (next.size() > branch_cap) {
                throw CapExceeded("branch cap " + std::to_string(branch_cap) + " exceeded", n);
            }
        }
        levels.push_back(std::move(next));
    }
    PreimageTree tree{x, std::move(levels)};
    std::vector<Branch> out;
    out.reserve(tree.levels.back().size());
    for (std::size_t i = 0; i < tree.levels.back().size(); ++i) out.push_back(tree.branch_to(depth, i));
    return out;
}

Branch sample_branch(const PLMap& f, const Rat& x, std::size_t depth, const BranchSampler& sampler) {
    check_root(f, x);
    Branch b;
    b.points.reserve(depth + 1);
    b.path.reserve(depth);
    b.points.push_back(x);
    for (std::size_t step = 0; step < depth; ++step) {
        auto kids = preimages_with_laps(f, b.points.back());
        const std::size_t k = sampler.choose(step, b.points.back(), kids.size());
        b.path.push_back(kids[k].second);
        b.points.push_back(std::move(kids[k].first));
    }
    return b;
}

std::vector<std::vector<Rat>> preimage_sets(const PLMap& f, const Rat& x, std::size_t depth, std::size_t node_cap) {
    check_root(f, x);
    const auto& laps = f.laps();
    const auto& bps = f.breakpoints();
    std::vector<std::vector<Rat>> levels{{x}};
    std::size_t total = 1;
    for (std::size_t n = 0; n < depth; ++n) {
        const auto& cur = levels.back();
        // Each lap inverts monotonically and laps are ordered by x, so the
        // level comes out sorted: increasing laps keep the order of `cur`,
        // decreasing laps reverse it. Only shared endpoints can repeat.
        const std::size_t chunks = (cur.size() + kChunk - 1) / kChunk;
        auto parts = parallel_map(laps.size() * chunks, [&](std::size_t t) {
            const Lap& lap = laps[t / chunks];
            const std::size_t c = t % chunks;
            const Rat& ya = bps[lap.index].y;
            const Rat& yb = bps[lap.index + 1].y;
            const Rat& lo = ya < yb ? ya : yb;
            const Rat& hi = ya < yb ? yb : ya;
            std::vector<Rat> out;
            const std::size_t end = std::min(cur.size(), (c + 1) * kChunk);
            for (std::size_t i = c * kChunk; i < end; ++i) {
                if (cur[i] < lo || hi < cur[i]) continue;
                out.emplace_back(mpq_class((cur[i].raw() - lap.intercept.raw()) / lap.slope.raw()));
            }
            if (lap.slope.sign() < 0) std::reverse(out.begin(), out.end());
            return out;
        });
        std::vector<Rat> next;
        for (std::size_t l = 0; l < laps.size(); ++l) {
            const bool down = laps[l].slope.sign() < 0;
            for (std::size_t k = 0; k < chunks; ++k) {
                auto& p = parts[l * chunks + (down ? chunks - 1 - k : k)];
                for (auto& v : p) {
                    if (next.empty() || next.back() != v) next.push_back(std::move(v));
                }
            }
        }
        total += next.size();
        if (total > node_cap) {
            throw CapExceeded("preimage set node cap " + std::to_string(node_cap) + " exceeded", n);
        }
        levels.push_back(std::move(next));
    }
    return levels;
}

}  // namespace backlimit
