// Half-open intervals [lo, hi) over exact Scalars, and normalized finite
// unions of them. Every set handled by the dynamics is one of these.

#pragma once

#include "recimap/scalar.hpp"

#include <iosfwd>
#include <vector>

namespace recimap {

struct Interval {
    Scalar lo;
    Scalar hi;

    Interval(Scalar lo_, Scalar hi_);

    Scalar measure() const { return hi - lo; }
    bool contains(const Scalar& x) const { return lo <= x && x < hi; }
    bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }

    friend bool operator==(const Interval& a, const Interval& b) = default;
};

// Ordered, pairwise-disjoint, non-adjacent intervals ([a,b) touching [b,c)
// is merged into [a,c) on construction).
class IntervalSet {
public:
    IntervalSet() = default;
    IntervalSet(const Interval& iv) : intervals_{iv} {}
    explicit IntervalSet(std::vector<Interval> intervals);

    const std::vector<Interval>& intervals() const { return intervals_; }
    bool empty() const { return intervals_.empty(); }
    std::size_t size() const { return intervals_.size(); }

    Scalar measure() const;
    bool contains(const Scalar& x) const;
    bool contains(const Interval& iv) const;
    bool contains(const IntervalSet& other) const;

    friend bool operator==(const IntervalSet& a, const IntervalSet& b) = default;

private:
    std::vector<Interval> intervals_;
};

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_intersection(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_difference(const IntervalSet& a, const IntervalSet& b);
bool disjoint(const IntervalSet& a, const IntervalSet& b);

std::ostream& operator<<(std::ostream& os, const Interval& iv);
std::ostream& operator<<(std::ostream& os, const IntervalSet& s);

}  // namespace recimap
