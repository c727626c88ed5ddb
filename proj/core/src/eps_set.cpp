#include "backlimit/eps_set.hpp"

#include <algorithm>

#include "backlimit/errors.hpp"

namespace backlimit {

namespace {

Cell floor_div(const Rat& x, const Rat& eps) {
    // floor((xn/xd) / (en/ed)) without canonicalizing the quotient
    const mpz_class n = x.raw().get_num() * eps.raw().get_den();
    const mpz_class d = x.raw().get_den() * eps.raw().get_num();
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q.get_si();
}

}  // namespace

EpsSet::EpsSet(Rat eps, Interval domain) : eps_(std::move(eps)), domain_(std::move(domain)) {
    if (eps_.sign() <= 0) throw DomainError("eps must be positive");
    first_ = floor_div(domain_.lo, eps_);
    const Rat q = domain_.hi / eps_;
    const Cell k = q.floor().get_si();
    last_ = q.is_integer() ? std::max(k - 1, first_) : k;
}

EpsSet EpsSet::all(const Rat& eps, const Interval& domain) {
    EpsSet s(eps, domain);
    for (Cell k = s.first_cell(); k <= s.last_cell(); ++k) s.cells_.push_back(k);
    return s;
}

Cell EpsSet::cell_of(const Rat& x) const { return std::clamp(floor_div(x, eps_), first_, last_); }

Interval EpsSet::cell_bounds(Cell k) const {
    const Rat lo = max(Rat(k) * eps_, domain_.lo);
    const Rat hi = min(Rat(k + 1) * eps_, domain_.hi);
    return Interval::closed(lo, hi);
}

bool EpsSet::contains_cell(Cell k) const { return std::binary_search(cells_.begin(), cells_.end(), k); }

std::vector<Cell> EpsSet::missing_from(const EpsSet& other, std::size_t slack) const {
    std::vector<Cell> out;
    const auto s = static_cast<Cell>(slack);
    for (Cell k : cells_) {
        auto it = std::lower_bound(other.cells_.begin(), other.cells_.end(), k - s);
        if (it == other.cells_.end() || *it > k + s) out.push_back(k);
    }
    return out;
}

IntervalUnion EpsSet::to_interval_union() const {
    std::vector<Interval> parts;
    parts.reserve(cells_.size());
    for (Cell k : cells_) parts.push_back(cell_bounds(k));
    return IntervalUnion(std::move(parts));
}

void EpsSet::insert(Cell k) {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), k);
    if (it == cells_.end() || *it != k) cells_.insert(it, k);
}

void EpsSet::insert_interval(const Interval& j) {
    Cell a = cell_of(j.lo);
    const Cell b = cell_of(j.hi);
    // A closed interval starting exactly on a cell edge also touches the
    // cell to its left.
    if (a > first_cell() && Rat(a) * eps_ == j.lo) --a;
    for (Cell k = a; k <= b; ++k) insert(k);
}

void EpsSet::insert_all(std::span<const Cell> ks) {
    std::vector<Cell> merged;
    merged.reserve(cells_.size() + ks.size());
    std::vector<Cell> add(ks.begin(), ks.end());
    std::sort(add.begin(), add.end());
    std::set_union(cells_.begin(), cells_.end(), add.begin(), add.end(), std::back_inserter(merged));
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    cells_ = std::move(merged);
}

void EpsSet::unite(const EpsSet& other) {
    if (other.eps_ != eps_) throw DomainError("cannot unite EpsSets of different resolution");
    insert_all(other.cells_);
}

}  // namespace backlimit
