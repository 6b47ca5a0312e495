#include "recimap/interval.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace recimap {

Interval::Interval(Scalar lo_, Scalar hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (!(lo < hi)) throw std::invalid_argument("Interval: requires lo < hi");
}

IntervalSet::IntervalSet(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
    std::sort(intervals_.begin(), intervals_.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    std::vector<Interval> merged;
    for (auto& iv : intervals_) {
        if (!merged.empty() && iv.lo <= merged.back().hi) {
            if (iv.hi > merged.back().hi) merged.back().hi = iv.hi;
        } else {
            merged.push_back(std::move(iv));
        }
    }
    intervals_ = std::move(merged);
}

Scalar IntervalSet::measure() const {
    Scalar total;
    for (const auto& iv : intervals_) total += iv.measure();
    return total;
}

bool IntervalSet::contains(const Scalar& x) const {
    // Last interval with lo <= x.
    auto it = std::upper_bound(intervals_.begin(), intervals_.end(), x,
                               [](const Scalar& v, const Interval& iv) { return v < iv.lo; });
    if (it == intervals_.begin()) return false;
    return std::prev(it)->contains(x);
}

bool IntervalSet::contains(const Interval& iv) const {
    auto it = std::upper_bound(intervals_.begin(), intervals_.end(), iv.lo,
                               [](const Scalar& v, const Interval& other) { return v < other.lo; });
    if (it == intervals_.begin()) return false;
    return std::prev(it)->contains(iv);
}

bool IntervalSet::contains(const IntervalSet& other) const {
    for (const auto& iv : other.intervals_)
        if (!contains(iv)) return false;
    return true;
}

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> all = a.intervals();
    all.insert(all.end(), b.intervals().begin(), b.intervals().end());
    return IntervalSet(std::move(all));
}

IntervalSet set_intersection(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> out;
    auto ia = a.intervals().begin();
    auto ib = b.intervals().begin();
    while (ia != a.intervals().end() && ib != b.intervals().end()) {
        const Scalar lo = std::max(ia->lo, ib->lo);
        const Scalar hi = std::min(ia->hi, ib->hi);
        if (lo < hi) out.emplace_back(lo, hi);
        if (ia->hi < ib->hi)
            ++ia;
        else
            ++ib;
    }
    return IntervalSet(std::move(out));
}

IntervalSet set_difference(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> out;
    auto ib = b.intervals().begin();
    for (const auto& iv : a.intervals()) {
        Scalar cur = iv.lo;
        while (ib != b.intervals().end() && ib->hi <= cur) ++ib;
        auto jb = ib;
        while (jb != b.intervals().end() && jb->lo < iv.hi) {
            if (cur < jb->lo) out.emplace_back(cur, jb->lo);
            cur = std::max(cur, jb->hi);
            ++jb;
        }
        if (cur < iv.hi) out.emplace_back(cur, iv.hi);
    }
    return IntervalSet(std::move(out));
}

bool disjoint(const IntervalSet& a, const IntervalSet& b) {
    return set_intersection(a, b).empty();
}

std::ostream& operator<<(std::ostream& os, const Interval& iv) {
    return os << "[" << iv.lo << ", " << iv.hi << ")";
}

std::ostream& operator<<(std::ostream& os, const IntervalSet& s) {
    os << "{";
    bool first = true;
    for (const auto& iv : s.intervals()) {
        if (!first) os << " ";
        os << iv;
        first = false;
    }
    return os << "}";
}

}  // namespace recimap
