#include "recimap/pamap.hpp"

#include <algorithm>
#include <stdexcept>

namespace recimap {

AffineBranch::AffineBranch(Interval domain_, Scalar slope_, Scalar offset_)
    : domain(std::move(domain_)), slope(std::move(slope_)), offset(std::move(offset_)) {
    if (!(slope.sign() > 0)) throw std::invalid_argument("AffineBranch: slope must be positive");
}

PAMap::PAMap(std::vector<AffineBranch> branches) : branches_(std::move(branches)) {
    std::sort(branches_.begin(), branches_.end(),
              [](const AffineBranch& a, const AffineBranch& b) { return a.domain.lo < b.domain.lo; });

    // Merge adjacent branches realizing the same affine function.
    std::vector<AffineBranch> merged;
    for (auto& br : branches_) {
        if (!merged.empty()) {
            AffineBranch& prev = merged.back();
            if (prev.domain.hi > br.domain.lo)
                throw std::invalid_argument("PAMap: branch domains overlap");
            if (prev.domain.hi == br.domain.lo && prev.slope == br.slope && prev.offset == br.offset) {
                prev.domain.hi = br.domain.hi;
                continue;
            }
        }
        merged.push_back(std::move(br));
    }
    branches_ = std::move(merged);

    std::vector<Interval> doms, imgs;
    doms.reserve(branches_.size());
    imgs.reserve(branches_.size());
    for (const auto& br : branches_) {
        doms.push_back(br.domain);
        imgs.push_back(br.image());
    }
    domain_support_ = IntervalSet(std::move(doms));

    // Injectivity: branch images must be pairwise disjoint.
    std::sort(imgs.begin(), imgs.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    for (std::size_t i = 1; i < imgs.size(); ++i) {
        if (imgs[i].lo < imgs[i - 1].hi) throw std::invalid_argument("PAMap: branch images overlap");
    }
    image_support_ = IntervalSet(std::move(imgs));
}

PAMap PAMap::identity(const Interval& on) {
    return PAMap({AffineBranch(on, Scalar(1), Scalar(0))});
}

const AffineBranch* PAMap::branch_at(const Scalar& x) const {
    auto it = std::upper_bound(branches_.begin(), branches_.end(), x,
                               [](const Scalar& v, const AffineBranch& br) { return v < br.domain.lo; });
    if (it == branches_.begin()) return nullptr;
    const AffineBranch& br = *std::prev(it);
    return br.domain.contains(x) ? &br : nullptr;
}

Scalar PAMap::apply(const Scalar& x) const {
    const AffineBranch* br = branch_at(x);
    if (br == nullptr) throw std::domain_error("PAMap::apply: point outside domain support");
    return br->apply(x);
}

Scalar PAMap::slope_at(const Scalar& x) const {
    const AffineBranch* br = branch_at(x);
    if (br == nullptr) throw std::domain_error("PAMap::slope_at: point outside domain support");
    return br->slope;
}

bool PAMap::is_bijection_on(const Interval& iv) const {
    const IntervalSet whole(iv);
    return domain_support_ == whole && image_support_ == whole;
}

bool PAMap::is_measure_preserving() const {
    return std::all_of(branches_.begin(), branches_.end(),
                       [](const AffineBranch& br) { return br.slope == Scalar(1); });
}

PAMap compose(const PAMap& outer, const PAMap& inner) {
    if (!outer.domain_support().contains(inner.image_support()))
        throw std::invalid_argument("compose: inner image escapes outer domain");

    std::vector<AffineBranch> out;
    for (const auto& ib : inner.branches()) {
        const Interval img = ib.image();
        // Split the inner image at the outer branch boundaries it meets.
        for (const auto& ob : outer.branches()) {
            const Scalar lo = std::max(img.lo, ob.domain.lo);
            const Scalar hi = std::min(img.hi, ob.domain.hi);
            if (!(lo < hi)) continue;
            Interval piece_dom(ib.apply_inverse(lo), ib.apply_inverse(hi));
            Scalar slope = ob.slope * ib.slope;
            Scalar offset = ob.slope * ib.offset + ob.offset;
            out.emplace_back(std::move(piece_dom), std::move(slope), std::move(offset));
        }
    }
    return PAMap(std::move(out));
}

PAMap invert(const PAMap& m) {
    std::vector<AffineBranch> out;
    out.reserve(m.branches().size());
    for (const auto& br : m.branches()) {
        Scalar inv_slope = Scalar(1) / br.slope;
        Scalar inv_offset = -br.offset / br.slope;
        out.emplace_back(br.image(), std::move(inv_slope), std::move(inv_offset));
    }
    return PAMap(std::move(out));
}

PAMap restrict(const PAMap& m, const IntervalSet& E) {
    if (!m.domain_support().contains(E))
        throw std::invalid_argument("restrict: set escapes the domain support");
    std::vector<AffineBranch> out;
    for (const auto& br : m.branches()) {
        const IntervalSet clipped = set_intersection(IntervalSet(br.domain), E);
        for (const auto& iv : clipped.intervals()) out.emplace_back(iv, br.slope, br.offset);
    }
    return PAMap(std::move(out));
}

IntervalSet image_set(const PAMap& m, const IntervalSet& E) {
    std::vector<Interval> out;
    for (const auto& br : m.branches()) {
        const IntervalSet clipped = set_intersection(IntervalSet(br.domain), E);
        for (const auto& iv : clipped.intervals()) out.emplace_back(br.apply(iv.lo), br.apply(iv.hi));
    }
    return IntervalSet(std::move(out));
}

IntervalSet preimage_set(const PAMap& m, const IntervalSet& E) {
    std::vector<Interval> out;
    for (const auto& br : m.branches()) {
        const IntervalSet clipped = set_intersection(IntervalSet(br.image()), E);
        for (const auto& iv : clipped.intervals())
            out.emplace_back(br.apply_inverse(iv.lo), br.apply_inverse(iv.hi));
    }
    return IntervalSet(std::move(out));
}

}  // namespace recimap
