#include "recimap/first_return.hpp"

#include <algorithm>
#include <deque>

namespace recimap {

namespace {

// A subinterval of S together with the affine map onto its current image
// under F^steps.
struct Piece {
    Interval domain;   // within S
    Scalar slope;
    Scalar offset;
    int steps;
    long long exponent;  // slope == rho^exponent

    Scalar image_lo() const { return slope * domain.lo + offset; }
    Scalar image_hi() const { return slope * domain.hi + offset; }
};

}  // namespace

ReturnMapResult first_return(const ReciprocalSystem& sys, int budget, std::size_t branch_cap) {
    if (budget < 1) throw std::invalid_argument("first_return: budget must be >= 1");

    const Scalar& s = sys.S.hi;
    const Scalar rho_inv = Scalar(1) / sys.rho;

    std::deque<Piece> work;
    work.push_back(Piece{sys.S, Scalar(1), Scalar(0), 0, 0});
    std::size_t pieces_created = 1;

    std::vector<ReturnBranch> retired;
    std::vector<Interval> residual;
    int budget_used = 0;

    while (!work.empty()) {
        Piece p = std::move(work.front());
        work.pop_front();
        budget_used = std::max(budget_used, p.steps);

        if (p.steps >= budget) {
            residual.push_back(p.domain);
            continue;
        }

        const Scalar ilo = p.image_lo();
        const Scalar ihi = p.image_hi();
        for (const auto& fb : sys.F.branches()) {
            const Scalar lo = std::max(ilo, fb.domain.lo);
            const Scalar hi = std::min(ihi, fb.domain.hi);
            if (!(lo < hi)) continue;

            const Scalar slope = fb.slope * p.slope;
            const Scalar offset = fb.slope * p.offset + fb.offset;
            const int steps = p.steps + 1;
            const long long exponent = p.exponent + (fb.slope == sys.rho ? 1 : -1);
            // Pull the image split back into S-coordinates.
            Scalar dlo = (lo - p.offset) / p.slope;
            Scalar dhi = (hi - p.offset) / p.slope;

            const Scalar qlo = fb.apply(lo);
            const Scalar qhi = fb.apply(hi);
            if (++pieces_created > branch_cap)
                throw BranchCapExceeded("first_return: piece count exceeded branch cap " +
                                        std::to_string(branch_cap));

            if (qhi <= s) {
                // Whole piece landed in S.
                retired.push_back(ReturnBranch{Interval(dlo, dhi), steps,
                                               AffineBranch(Interval(dlo, dhi), slope, offset),
                                               exponent});
                budget_used = std::max(budget_used, steps);
            } else if (qlo >= s) {
                work.push_back(Piece{Interval(std::move(dlo), std::move(dhi)), slope, offset, steps,
                                     exponent});
            } else {
                // Straddles the S boundary: the left part returns now.
                Scalar dmid = (s - offset) / slope;
                retired.push_back(ReturnBranch{Interval(dlo, dmid), steps,
                                               AffineBranch(Interval(dlo, dmid), slope, offset),
                                               exponent});
                budget_used = std::max(budget_used, steps);
                if (++pieces_created > branch_cap)
                    throw BranchCapExceeded("first_return: piece count exceeded branch cap " +
                                            std::to_string(branch_cap));
                work.push_back(Piece{Interval(std::move(dmid), std::move(dhi)), slope, offset, steps,
                                     exponent});
            }
        }
    }

    std::sort(retired.begin(), retired.end(),
              [](const ReturnBranch& a, const ReturnBranch& b) { return a.domain.lo < b.domain.lo; });

    // Merge adjacent pieces that realize the same branch of the return map.
    std::vector<ReturnBranch> merged;
    for (auto& rb : retired) {
        if (!merged.empty()) {
            ReturnBranch& prev = merged.back();
            if (prev.domain.hi == rb.domain.lo && prev.return_time == rb.return_time &&
                prev.map.slope == rb.map.slope && prev.map.offset == rb.map.offset) {
                prev.domain.hi = rb.domain.hi;
                prev.map.domain.hi = rb.domain.hi;
                continue;
            }
        }
        merged.push_back(std::move(rb));
    }

    ReturnMapResult result;
    result.branches = std::move(merged);
    result.residual = IntervalSet(std::move(residual));
    result.budget_used = budget_used;
    for (const auto& rb : result.branches) result.resolved_measure += rb.domain.measure();

    // Internal consistency: the distortion law and an exact partition of S.
    for (const auto& rb : result.branches) {
        if (rb.derivative_exponent != rb.return_time - 2 ||
            rb.map.slope != sys.rho.pow(rb.return_time - 2))
            throw std::logic_error("first_return: branch slope violates the distortion law");
    }
    if (result.resolved_measure + result.residual.measure() != sys.S.measure())
        throw std::logic_error("first_return: branches and residual do not partition S");

    return result;
}

PAMap return_map_as_pamap(const ReturnMapResult& r) {
    if (!r.residual.empty())
        throw std::invalid_argument("return_map_as_pamap: residual is nonempty");
    std::vector<AffineBranch> branches;
    branches.reserve(r.branches.size());
    for (const auto& rb : r.branches) branches.push_back(rb.map);
    return PAMap(std::move(branches));
}

ReturnTimeTable return_time_partition(const ReturnMapResult& r) {
    ReturnTimeTable table;
    for (const auto& rb : r.branches) table.measure_by_time[rb.return_time] += rb.domain.measure();
    table.unresolved = r.residual.measure();
    return table;
}

IntervalSet check_surjective(const ReturnMapResult& r, const Interval& S) {
    std::vector<Interval> images;
    images.reserve(r.branches.size());
    for (const auto& rb : r.branches) images.push_back(rb.image());
    return set_difference(IntervalSet(S), IntervalSet(std::move(images)));
}

ConservativityCertificate conservativity_certificate([[maybe_unused]] const ReciprocalSystem& sys,
                                                     const ReturnMapResult& r, int horizon) {
    Scalar s1_measure;
    for (const auto& rb : r.branches)
        if (rb.return_time == 1) s1_measure += rb.domain.measure();

    if (s1_measure.is_zero() && r.residual.empty()) return ConservativeCertified{};
    if (!r.residual.empty()) return ConservativityUnknown{};

    // A contracting branch mapping strictly inside its own domain traps all
    // forward images of W = domain \ image: the iterates b^k(W) are the
    // annuli of the nested sequence b^k(domain), hence pairwise disjoint.
    const PAMap fs = return_map_as_pamap(r);
    for (const auto& rb : r.branches) {
        if (!(rb.map.slope < Scalar(1))) continue;
        const Interval img = rb.image();
        if (!(rb.domain.contains(img))) continue;
        if (rb.domain == img) continue;

        const IntervalSet gap = set_difference(IntervalSet(rb.domain), IntervalSet(img));
        if (gap.empty()) continue;
        const Interval W = gap.intervals().front();

        // Demonstrate disjointness explicitly out to the requested horizon.
        std::vector<IntervalSet> iterates{IntervalSet(W)};
        bool ok = true;
        for (int k = 1; k <= horizon && ok; ++k) {
            IntervalSet next = image_set(fs, iterates.back());
            for (const auto& prev : iterates)
                if (!disjoint(next, prev)) ok = false;
            iterates.push_back(std::move(next));
        }
        if (ok) return WanderingSetFound{W, img, horizon};
    }
    return ConservativityUnknown{};
}

}  // namespace recimap
