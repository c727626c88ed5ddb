#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "backlimit/backward.hpp"
#include "backlimit/eps_set.hpp"
#include "backlimit/interval.hpp"
#include "backlimit/limit_sets.hpp"
#include "backlimit/pl_map.hpp"

namespace backlimit {

enum class Target { A, SA, omega, NW, custom };
std::string to_string(Target t);

/// Open neighborhood U of a target set, with exact membership.
struct Neighborhood {
    IntervalUnion u;
    Target label = Target::custom;

    [[nodiscard]] bool contains(const Rat& x) const { return u.contains(x); }

    /// An open interval strictly containing the whole domain.
    static Neighborhood whole(const Interval& domain);
    /// Union of the cells of `s`, each widened to an open interval by `margin`.
    static Neighborhood inflate(const EpsSet& s, const Rat& margin, Target label);
};

struct OutsideCount {
    std::size_t count = 0;
    std::vector<std::size_t> witnesses;  ///< indices of points outside U
};

OutsideCount count_outside(const Branch& branch, const Neighborhood& u);

/// How branches are scanned when validating a neighborhood: every branch to
/// min(depth, exhaustive_depth), then `samples` sampled branches to `depth`.
struct ScanParams {
    std::size_t depth = 30;
    std::size_t samples = 200;
    std::uint64_t seed = 1;
    std::size_t exhaustive_depth = 12;
    std::size_t node_cap = 200'000;  ///< per root, exhaustive part
};

struct RadiusResult {
    Rat delta;                    ///< 0 when no radius qualified
    std::size_t max_in_ball = 0;  ///< at delta, or at the smallest radius tried
    [[nodiscard]] bool flagged() const { return delta.is_zero(); }
};

/// Largest radius 2^-k (k = 2..20) such that every scanned branch has at
/// most two points in (x'-delta, x'+delta). Branches are rooted at x' and
/// at x' +- j*delta/4 (j = 1..3), which covers the first ball point of
/// any branch up to the probe spacing.
RadiusResult two_point_radius(const PLMap& f, const Rat& x_prime, const ScanParams& scan);

struct SubcoverPiece {
    Rat center;
    Rat radius;
    Interval v;  ///< open (center - radius, center + radius)
    std::size_t max_in_ball = 0;
};

struct SubcoverCertificate {
    std::vector<SubcoverPiece> pieces;
    std::size_t m = 0;
    std::size_t M = 0;  ///< 2 * m
    ScanParams scan;
    Rat probe_step;
    bool covered = false;            ///< union(V_i) together with U covers the domain
    std::optional<Rat> failed_probe;  ///< COVER_FAILED witness

    [[nodiscard]] bool ok() const { return !failed_probe && covered; }
};

/// Greedy left-to-right cover of the closure of domain \ U by two-point
/// intervals. Stops with failed_probe set when a probe admits no radius.
SubcoverCertificate subcover(const PLMap& f, const Neighborhood& u, const Rat& probe_step, const ScanParams& scan);

enum class ScanVerdict { plateau, growing };
std::string to_string(ScanVerdict v);

struct BranchExcursion {
    std::string id;  ///< "seed <i> exhaustive <path>" or "seed <i> sample <j>"
    std::size_t outside_count = 0;
    std::vector<std::size_t> witnesses;
};

struct ExcursionReport {
    /// Worst exhaustive and worst sampled branch of every seed.
    std::vector<BranchExcursion> per_branch;
    /// max_by_depth[d]: running max of outside counts among points 0..d.
    std::vector<std::size_t> max_by_depth;
    std::size_t plateau_depth = 0;  ///< first depth at which the final max is reached
    std::size_t empirical_M = 0;
    std::size_t branches_scanned = 0;
    bool capped = false;  ///< an exhaustive scan hit its node cap
    ScanVerdict verdict = ScanVerdict::plateau;
};

struct ExcursionParams {
    std::size_t depth_max = 40;
    std::size_t samples = 200;
    std::uint64_t seed = 7;
    std::size_t exhaustive_depth = 12;
    std::size_t node_cap = 1'000'000;  ///< per seed, exhaustive part
};

/// PLATEAU iff max_by_depth is constant over the final third of depths.
ExcursionReport excursion_scan(const PLMap& f, const Neighborhood& u, const std::vector<Rat>& seeds,
                               const ExcursionParams& params);

/// Grid lo, lo + step, ... <= hi.
std::vector<Rat> grid_points(const Interval& domain, const Rat& step);

struct VerifyParams {
    Rat grid_step = Rat(1, 32);  ///< resolution of the target approximation
    AggregateParams aggregate{};
    Rat probe_step = Rat(1, 16);
    ScanParams radius_scan{};
    Rat seed_step = Rat(1, 16);  ///< excursion seeds
    ExcursionParams excursion{};
};

struct TheoremRecord {
    Target target = Target::A;
    Rat margin;
    EpsSet target_cells;
    EpsSet omega_cells;
    Neighborhood u;
    bool omega_covered = false;  ///< U contains every omega(f)-proxy point cell
    SubcoverCertificate certificate;
    ExcursionReport excursion;
    bool pass = false;
    std::vector<std::string> reasons;  ///< why it failed, empty on PASS
};

/// Builds U as the margin-inflation of the A(f) (or SA(f) united with
/// omega(f)) proxy, then runs subcover and excursion_scan. PASS iff the
/// cover succeeds, the scan plateaus, and the empirical maximum is <= M.
TheoremRecord verify_theorem(const PLMap& f, Target target, const Rat& margin, const VerifyParams& params);

/// Same pipeline against a caller-supplied neighborhood.
TheoremRecord verify_neighborhood(const PLMap& f, const Neighborhood& u, const VerifyParams& params);

}  // namespace backlimit
