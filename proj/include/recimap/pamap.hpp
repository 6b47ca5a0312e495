// Injective piecewise-affine maps between finite unions of half-open
// intervals. One representation covers interval exchanges, scaling
// involutions, their compositions, and first-return maps.
//
// Branches are kept in a canonical form: ordered by domain, adjacent
// branches realizing the same affine function merged. Equality of PAMaps
// is equality of canonical branch sequences, which makes identities such
// as "an involution squared is the identity" decidable.

#pragma once

#include "recimap/interval.hpp"

#include <string>
#include <vector>

namespace recimap {

struct AffineBranch {
    Interval domain;
    Scalar slope;   // > 0; orientation-preserving only
    Scalar offset;

    AffineBranch(Interval domain_, Scalar slope_, Scalar offset_);

    Scalar apply(const Scalar& x) const { return slope * x + offset; }
    Scalar apply_inverse(const Scalar& y) const { return (y - offset) / slope; }
    Interval image() const { return Interval(apply(domain.lo), apply(domain.hi)); }

    friend bool operator==(const AffineBranch& a, const AffineBranch& b) = default;
};

class PAMap {
public:
    PAMap() = default;
    explicit PAMap(std::vector<AffineBranch> branches);

    static PAMap identity(const Interval& on);

    const std::vector<AffineBranch>& branches() const { return branches_; }
    const IntervalSet& domain_support() const { return domain_support_; }
    const IntervalSet& image_support() const { return image_support_; }

    // Branch containing x, or nullptr when x is outside the domain support.
    const AffineBranch* branch_at(const Scalar& x) const;

    Scalar apply(const Scalar& x) const;
    Scalar slope_at(const Scalar& x) const;

    bool is_bijection_on(const Interval& iv) const;
    bool is_measure_preserving() const;

    friend bool operator==(const PAMap& a, const PAMap& b) { return a.branches_ == b.branches_; }

private:
    std::vector<AffineBranch> branches_;  // canonical: sorted, merged
    IntervalSet domain_support_;
    IntervalSet image_support_;
};

// outer after inner; requires image_support(inner) within domain_support(outer).
PAMap compose(const PAMap& outer, const PAMap& inner);

PAMap invert(const PAMap& m);

// Restriction to E; requires E within the domain support.
PAMap restrict(const PAMap& m, const IntervalSet& E);

IntervalSet image_set(const PAMap& m, const IntervalSet& E);
IntervalSet preimage_set(const PAMap& m, const IntervalSet& E);

}  // namespace recimap
