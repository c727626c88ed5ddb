#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "backlimit/interval.hpp"
#include "backlimit/rat.hpp"

namespace backlimit {

using Cell = std::int64_t;

/// A set approximated at resolution eps: the grid cells
/// [k*eps, (k+1)*eps) clipped to the domain. The last cell is closed on the
/// right so the domain's upper endpoint belongs to a cell of positive width.
class EpsSet {
public:
    EpsSet(Rat eps, Interval domain);

    static EpsSet all(const Rat& eps, const Interval& domain);

    [[nodiscard]] const Rat& eps() const { return eps_; }
    [[nodiscard]] const Interval& domain() const { return domain_; }
    [[nodiscard]] const std::vector<Cell>& cells() const { return cells_; }
    [[nodiscard]] std::size_t size() const { return cells_.size(); }
    [[nodiscard]] bool empty() const { return cells_.empty(); }

    [[nodiscard]] Cell first_cell() const { return first_; }
    [[nodiscard]] Cell last_cell() const { return last_; }
    [[nodiscard]] Cell cell_of(const Rat& x) const;
    /// Closed extent of cell k within the domain.
    [[nodiscard]] Interval cell_bounds(Cell k) const;

    [[nodiscard]] bool contains_cell(Cell k) const;
    [[nodiscard]] bool contains_point(const Rat& x) const { return contains_cell(cell_of(x)); }
    /// Cells of this set farther than `slack` cells from every cell of `other`.
    [[nodiscard]] std::vector<Cell> missing_from(const EpsSet& other, std::size_t slack) const;
    [[nodiscard]] bool subset_within(const EpsSet& other, std::size_t slack) const {
        return missing_from(other, slack).empty();
    }
    /// Symmetric closeness: each set lies within n cells of the other.
    [[nodiscard]] bool hausdorff_within(const EpsSet& other, std::size_t n) const {
        return subset_within(other, n) && other.subset_within(*this, n);
    }
    /// Union of the closed cells.
    [[nodiscard]] IntervalUnion to_interval_union() const;

    void insert(Cell k);
    void insert_point(const Rat& x) { insert(cell_of(x)); }
    /// Every cell meeting the closed interval j.
    void insert_interval(const Interval& j);
    void insert_all(std::span<const Cell> ks);
    void unite(const EpsSet& other);

    friend bool operator==(const EpsSet& a, const EpsSet& b) {
        return a.eps_ == b.eps_ && a.domain_ == b.domain_ && a.cells_ == b.cells_;
    }

private:
    Rat eps_;
    Cell first_ = 0;
    Cell last_ = 0;
    Interval domain_;
    std::vector<Cell> cells_;
};

}  // namespace backlimit
