#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "backlimit/interval.hpp"
#include "backlimit/rat.hpp"

namespace backlimit {

struct Breakpoint {
    Rat x;
    Rat y;
    friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// One linear piece y = slope * x + intercept on a closed x range.
struct Lap {
    std::size_t index = 0;
    Interval x_range;
    Rat slope;
    Rat intercept;

    [[nodiscard]] Rat eval(const Rat& x) const { return slope * x + intercept; }
};

/// Continuous, onto, piecewise-linear self-map of a compact interval.
///
/// Construction validates every structural invariant; a PLMap value is
/// always a valid map and is immutable afterwards.
class PLMap {
public:
    /// Throws ValidationError listing every violated invariant.
    static PLMap create(Interval domain, std::vector<Breakpoint> breakpoints);

    [[nodiscard]] const Interval& domain() const { return domain_; }
    [[nodiscard]] const std::vector<Breakpoint>& breakpoints() const { return breakpoints_; }
    [[nodiscard]] const std::vector<Lap>& laps() const { return laps_; }
    [[nodiscard]] std::size_t lap_count() const { return laps_.size(); }
    /// Index of the lap whose closed range holds x (the left one at a shared breakpoint).
    [[nodiscard]] std::size_t lap_of(const Rat& x) const;

    friend bool operator==(const PLMap& a, const PLMap& b) {
        return a.domain_ == b.domain_ && a.breakpoints_ == b.breakpoints_;
    }

private:
    PLMap() = default;
    Interval domain_;
    std::vector<Breakpoint> breakpoints_;
    std::vector<Lap> laps_;
};

/// Exact solutions of f(x) = y: isolated points plus whole intervals where
/// f is the identity.
struct FixedPointSet {
    std::vector<Rat> points;
    std::vector<Interval> continua;

    [[nodiscard]] bool contains(const Rat& x) const;
    [[nodiscard]] bool empty() const { return points.empty() && continua.empty(); }
    friend bool operator==(const FixedPointSet&, const FixedPointSet&) = default;
};

/// Parses the line-oriented map format:
///
///     interval <lo> <hi>
///     breakpoint <x> <y>     # repeated, x strictly increasing
///
/// Throws ParseError (with line/column) or ValidationError.
PLMap parse_map(std::string_view text);
/// Canonical text form; parse_map(emit_map(f)) == f.
std::string emit_map(const PLMap& f);
/// Hex FNV-1a digest of the canonical text form.
std::string map_digest(const PLMap& f);

Rat eval(const PLMap& f, const Rat& x);
Rat eval_iter(const PLMap& f, Rat x, std::size_t n);

/// Image of the closure of `j` (a closed interval by continuity).
Interval image_interval(const PLMap& f, const Interval& j);

/// All x with f(x) = y, ascending and duplicate-free. Each solution carries
/// the index of the lap it was found on (lowest index at shared breakpoints).
std::vector<std::pair<Rat, std::size_t>> preimages_with_laps(const PLMap& f, const Rat& y);
std::vector<Rat> preimage_point(const PLMap& f, const Rat& y);

/// Exact piecewise-linear form of f^p. Throws CapExceeded (with the largest
/// completed power) when the lap count would exceed lap_cap.
PLMap iterate_map(const PLMap& f, std::size_t p, std::size_t lap_cap);

FixedPointSet fixed_points(const PLMap& f);

}  // namespace backlimit
