#include "backlimit/interval.hpp"

#include <algorithm>
#include <cctype>

#include "backlimit/errors.hpp"

namespace backlimit {

namespace {

bool nonempty(const Rat& lo, bool lo_open, const Rat& hi, bool hi_open) {
    if (lo < hi) return true;
    return lo == hi && !lo_open && !hi_open;
}

}  // namespace

Interval Interval::closed(Rat lo, Rat hi) {
    if (hi < lo) throw DomainError("interval with lo > hi");
    return Interval{std::move(lo), std::move(hi), false, false};
}

Interval Interval::open(Rat lo, Rat hi) {
    if (!(lo < hi)) throw DomainError("open interval needs lo < hi");
    return Interval{std::move(lo), std::move(hi), true, true};
}

bool Interval::contains(const Rat& x) const {
    if (x < lo || (lo_open && x == lo)) return false;
    if (hi < x || (hi_open && x == hi)) return false;
    return true;
}

bool Interval::contains(const Interval& o) const {
    if (o.lo < lo || (o.lo == lo && lo_open && !o.lo_open)) return false;
    if (hi < o.hi || (o.hi == hi && hi_open && !o.hi_open)) return false;
    return true;
}

std::string Interval::to_string() const {
    return std::string(lo_open ? "(" : "[") + lo.to_string() + "," + hi.to_string() + (hi_open ? ")" : "]");
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
    Interval r;
    if (a.lo < b.lo) {
        r.lo = b.lo;
        r.lo_open = b.lo_open;
    } else if (b.lo < a.lo) {
        r.lo = a.lo;
        r.lo_open = a.lo_open;
    } else {
        r.lo = a.lo;
        r.lo_open = a.lo_open || b.lo_open;
    }
    if (a.hi < b.hi) {
        r.hi = a.hi;
        r.hi_open = a.hi_open;
    } else if (b.hi < a.hi) {
        r.hi = b.hi;
        r.hi_open = b.hi_open;
    } else {
        r.hi = a.hi;
        r.hi_open = a.hi_open || b.hi_open;
    }
    if (!nonempty(r.lo, r.lo_open, r.hi, r.hi_open)) return std::nullopt;
    return r;
}

IntervalUnion::IntervalUnion(std::vector<Interval> parts) : parts_(std::move(parts)) { normalize(); }

void IntervalUnion::add(const Interval& j) {
    parts_.push_back(j);
    normalize();
}

void IntervalUnion::normalize() {
    std::sort(parts_.begin(), parts_.end(), [](const Interval& a, const Interval& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        return !a.lo_open && b.lo_open;
    });
    std::vector<Interval> out;
    for (const auto& p : parts_) {
        if (!out.empty()) {
            Interval& cur = out.back();
            const bool joins = p.lo < cur.hi || (p.lo == cur.hi && (!cur.hi_open || !p.lo_open));
            if (joins) {
                if (cur.hi < p.hi) {
                    cur.hi = p.hi;
                    cur.hi_open = p.hi_open;
                } else if (cur.hi == p.hi) {
                    cur.hi_open = cur.hi_open && p.hi_open;
                }
                continue;
            }
        }
        out.push_back(p);
    }
    parts_ = std::move(out);
}

bool IntervalUnion::contains(const Rat& x) const {
    auto it = std::upper_bound(parts_.begin(), parts_.end(), x,
                               [](const Rat& v, const Interval& p) { return v < p.lo; });
    if (it == parts_.begin()) return false;
    return std::prev(it)->contains(x);
}

bool IntervalUnion::covers(const Interval& j) const { return complement_in(j).empty(); }

IntervalUnion IntervalUnion::complement_in(const Interval& domain) const {
    std::vector<Interval> gaps;
    Rat cursor = domain.lo;
    bool cursor_open = domain.lo_open;
    for (const auto& raw : parts_) {
        auto p = backlimit::intersect(raw, domain);
        if (!p) continue;
        if (nonempty(cursor, cursor_open, p->lo, !p->lo_open)) {
            gaps.push_back(Interval{cursor, p->lo, cursor_open, !p->lo_open});
        }
        if (cursor < p->hi || (cursor == p->hi && !cursor_open && !p->hi_open)) {
            cursor = p->hi;
            cursor_open = !p->hi_open;
        }
    }
    if (nonempty(cursor, cursor_open, domain.hi, domain.hi_open)) {
        gaps.push_back(Interval{cursor, domain.hi, cursor_open, domain.hi_open});
    }
    return IntervalUnion(std::move(gaps));
}

IntervalUnion IntervalUnion::unite(const IntervalUnion& other) const {
    std::vector<Interval> all = parts_;
    all.insert(all.end(), other.parts_.begin(), other.parts_.end());
    return IntervalUnion(std::move(all));
}

IntervalUnion IntervalUnion::intersect(const Interval& j) const {
    std::vector<Interval> out;
    for (const auto& p : parts_) {
        if (auto r = backlimit::intersect(p, j)) out.push_back(*r);
    }
    return IntervalUnion(std::move(out));
}

std::string IntervalUnion::to_string() const {
    if (parts_.empty()) return "{}";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i != 0) out += " U ";
        out += parts_[i].to_string();
    }
    return out;
}

IntervalUnion IntervalUnion::parse(std::string_view text) {
    std::vector<Interval> parts;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) != 0 || text[i] == 'U' ||
                                   text[i] == ';')) {
            ++i;
        }
    };
    skip_ws();
    while (i < text.size()) {
        const char open_c = text[i];
        if (open_c != '(' && open_c != '[') {
            throw ParseError("expected '(' or '[' in interval list", 1, i + 1);
        }
        const auto close = text.find_first_of(")]", i);
        if (close == std::string_view::npos) throw ParseError("unterminated interval", 1, i + 1);
        const std::string_view body = text.substr(i + 1, close - i - 1);
        const auto comma = body.find(',');
        if (comma == std::string_view::npos) throw ParseError("expected ',' inside interval", 1, i + 1);
        auto trim = [](std::string_view s) {
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) s.remove_prefix(1);
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) s.remove_suffix(1);
            return s;
        };
        Interval j{Rat::parse(trim(body.substr(0, comma))), Rat::parse(trim(body.substr(comma + 1))),
                   open_c == '(', text[close] == ')'};
        if (!nonempty(j.lo, j.lo_open, j.hi, j.hi_open)) throw ParseError("empty interval", 1, i + 1);
        parts.push_back(std::move(j));
        i = close + 1;
        skip_ws();
    }
    return IntervalUnion(std::move(parts));
}

}  // namespace backlimit
