#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "backlimit/backward.hpp"
#include "backlimit/eps_set.hpp"
#include "backlimit/pl_map.hpp"

namespace backlimit {

/// A periodic orbit with its minimal period; points ascending.
struct PeriodicOrbit {
    std::size_t period = 0;
    std::vector<Rat> points;
    friend bool operator==(const PeriodicOrbit&, const PeriodicOrbit&) = default;
};

/// An interval on which f^period is the identity (first period at which it
/// appears).
struct PeriodicBand {
    std::size_t period = 0;
    Interval points;
};

struct PeriodicCensus {
    std::vector<PeriodicOrbit> orbits;  ///< by period, then by least point
    std::vector<PeriodicBand> bands;
    /// fix_counts[p-1] = number of isolated solutions of f^p(x) = x.
    std::vector<std::size_t> fix_counts;

    /// Every periodic point found, as cells (bands cover their whole range).
    [[nodiscard]] EpsSet cells(const Rat& eps, const Interval& domain) const;
    /// Orbit points and band endpoints/midpoints, ascending.
    [[nodiscard]] std::vector<Rat> seed_points() const;
};

// ---- per-point approximations ------------------------------------------

/// Cells visited by f^n(x) for n in [n_skip, n_skip + n_keep).
EpsSet omega_approx(const PLMap& f, const Rat& x, std::size_t n_skip, std::size_t n_keep, const Rat& eps);

/// Cells of branch points with index >= tail_start.
EpsSet alpha_branch_approx(const Branch& branch, std::size_t tail_start, const Rat& eps, const Interval& domain);

/// Cells met by the level sets f^{-n}(x) for at least min_hits distinct n in
/// [tail_start, depth].
EpsSet alpha_approx(const PLMap& f, const Rat& x, std::size_t depth, std::size_t tail_start, std::size_t min_hits,
                    const Rat& eps, std::size_t node_cap);

enum class BranchMode { exhaustive, sampled };

struct SAlphaMode {
    BranchMode kind = BranchMode::exhaustive;
    std::size_t samples = 64;  ///< sampled mode only
    std::uint64_t seed = 1;    ///< sampled mode only
    std::size_t node_cap = 1'000'000;
};

/// Union of alpha_branch_approx over all depth-d branches (exhaustive) or
/// over `samples` sampled branches.
EpsSet salpha_approx(const PLMap& f, const Rat& x, std::size_t depth, std::size_t tail_start, const Rat& eps,
                     const SAlphaMode& mode);

// ---- whole-map approximations ------------------------------------------

/// Periodic points of every minimal period <= p_max, solved exactly on
/// iterate_map(f, p). Throws CapExceeded with the largest completed period.
PeriodicCensus periodic_points(const PLMap& f, std::size_t p_max, std::size_t lap_cap);

/// Closed grid cells C with f^n(C) meeting C for some 1 <= n <= n_max.
/// Outer approximation of NW(f).
EpsSet nonwandering_cells(const PLMap& f, const Rat& eps, std::size_t n_max);
IntervalUnion nonwandering_approx(const PLMap& f, const Rat& eps, std::size_t n_max);

/// Cells whose midpoint returns to the cell at some time
/// n in [n_skip+1, n_skip+n_keep], plus cells of exact periodic points of
/// period <= periodic_seed_max. Inner approximation of Rec(f).
EpsSet recurrent_approx(const PLMap& f, const Rat& eps, std::size_t n_skip, std::size_t n_keep,
                        std::size_t periodic_seed_max = 3, std::size_t lap_cap = 4096);

enum class LimitKind { omega, alpha, salpha };

struct AggregateParams {
    std::size_t omega_skip = 64;
    std::size_t omega_keep = 1024;
    std::size_t alpha_depth = 12;
    std::size_t alpha_tail = 6;
    std::size_t alpha_min_hits = 2;
    SAlphaMode salpha_mode{};
    std::size_t node_cap = 1'000'000;
    /// Offset (in grid steps) of the second, generic seed row.
    Rat seed_offset = Rat(500, 1019);
    std::size_t periodic_seed_max = 3;
    std::size_t lap_cap = 4096;
};

/// Seed points used by aggregate(): the grid lo + k*step, the offset row
/// lo + (k + seed_offset)*step, and exact periodic points.
std::vector<Rat> aggregate_seeds(const PLMap& f, const Rat& grid_step, const AggregateParams& params);

/// Union over all seeds of the per-point approximation of `kind`, at
/// resolution grid_step: proxies for omega(f), A(f) and SA(f).
EpsSet aggregate(const PLMap& f, LimitKind kind, const Rat& grid_step, const AggregateParams& params);

// ---- inclusion chain -----------------------------------------------------

enum class Direction { exact, inner, outer, proxy };
enum class CheckStatus { pass, fail, skipped };

std::string to_string(Direction d);
std::string to_string(CheckStatus s);
std::string to_string(LimitKind k);
std::string to_string(BranchMode m);

struct NamedSet {
    std::string name;
    Direction direction;
    EpsSet cells;
};

struct PairCheck {
    std::string subset;
    std::string superset;
    CheckStatus status = CheckStatus::skipped;
    std::vector<Cell> missing;  ///< subset cells not within slack of the superset
};

struct ChainParams {
    std::size_t p_max = 3;
    std::size_t nw_n_max = 20;
    std::size_t rec_skip = 0;
    std::size_t rec_keep = 64;
    std::size_t slack = 1;
    AggregateParams aggregate{};
};

struct ChainReport {
    Rat eps;
    std::vector<NamedSet> sets;
    std::vector<PairCheck> pairs;
    /// Cells of the A(f) proxy absent from the NW(f) outer approximation.
    std::vector<Cell> a_minus_nw;

    [[nodiscard]] bool passed() const;
    [[nodiscard]] const NamedSet& set(const std::string& name) const;
};

/// Approximates Fix, Per, Rec, SA, cl(Rec), omega(f), NW and A at resolution
/// eps and checks the inclusion chain between them. A pair is skipped when
/// its superset side is an inner approximation.
ChainReport chain_check(const PLMap& f, const Rat& eps, const ChainParams& params);

// ---- periodic orbits and special alpha-limit sets -------------------------

enum class KmsVerdict { pass, fail, vacuous };
std::string to_string(KmsVerdict v);

struct KmsParams {
    std::size_t depth = 14;
    std::size_t tail_start = 7;
    std::size_t min_hits = 2;
    Rat eps = Rat(1, 32);
    SAlphaMode mode{};
};

struct KmsResult {
    KmsVerdict verdict = KmsVerdict::vacuous;
    EpsSet alpha;
    EpsSet salpha;
    EpsSet orbit_cells;
    std::vector<Cell> uncovered;  ///< orbit cells missing from salpha
};

/// If the alpha proxy of x meets the orbit's cells, requires the special
/// alpha proxy of x to contain every orbit cell.
KmsResult kms_check(const PLMap& f, const PeriodicOrbit& orbit, const Rat& x, const KmsParams& params);

}  // namespace backlimit
