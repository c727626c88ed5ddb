#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "backlimit/rat.hpp"

namespace backlimit {

/// Interval with exact endpoints; each end may be open or closed. A
/// degenerate interval (lo == hi) is always closed.
struct Interval {
    Rat lo;
    Rat hi;
    bool lo_open = false;
    bool hi_open = false;

    static Interval closed(Rat lo, Rat hi);
    static Interval open(Rat lo, Rat hi);
    static Interval point(const Rat& x) { return closed(x, x); }

    [[nodiscard]] bool contains(const Rat& x) const;
    /// True when every point of `other` lies in this interval.
    [[nodiscard]] bool contains(const Interval& other) const;
    [[nodiscard]] bool is_degenerate() const { return lo == hi; }
    [[nodiscard]] Rat length() const { return hi - lo; }
    /// "[a,b)" style, with canonical literals.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Intersection of two intervals; nullopt when empty.
std::optional<Interval> intersect(const Interval& a, const Interval& b);

/// Finite union of intervals kept in normal form: sorted ascending,
/// pairwise disjoint, and no two parts whose union is connected.
class IntervalUnion {
public:
    IntervalUnion() = default;
    explicit IntervalUnion(std::vector<Interval> parts);

    /// Parses a whitespace-separated list such as "(1/10,9/10) [0,1/4]".
    static IntervalUnion parse(std::string_view text);

    [[nodiscard]] const std::vector<Interval>& parts() const { return parts_; }
    [[nodiscard]] bool empty() const { return parts_.empty(); }
    [[nodiscard]] bool contains(const Rat& x) const;
    /// True when `j` is a subset of the union.
    [[nodiscard]] bool covers(const Interval& j) const;
    /// Points of `domain` outside the union.
    [[nodiscard]] IntervalUnion complement_in(const Interval& domain) const;
    [[nodiscard]] IntervalUnion unite(const IntervalUnion& other) const;
    [[nodiscard]] IntervalUnion intersect(const Interval& j) const;
    [[nodiscard]] std::string to_string() const;

    void add(const Interval& j);

    friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

private:
    void normalize();
    std::vector<Interval> parts_;
};

}  // namespace backlimit
