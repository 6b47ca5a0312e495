#include "recimap/ergodicity.hpp"

#include <algorithm>

namespace recimap {

RotationClassification classify_rotation(const ReturnMapResult& r, const Interval& S) {
    RotationClassification cls;
    if (!r.residual.empty()) return cls;
    for (const auto& rb : r.branches)
        if (rb.map.slope != Scalar(1)) return cls;

    // Rescale x -> (x - S.lo) / |S| so the return map acts on [0,1).
    const Scalar len = S.measure();
    std::vector<AffineBranch> rescaled;
    rescaled.reserve(r.branches.size());
    for (const auto& rb : r.branches) {
        Interval dom((rb.domain.lo - S.lo) / len, (rb.domain.hi - S.lo) / len);
        rescaled.emplace_back(std::move(dom), Scalar(1), rb.map.offset / len);
    }
    PAMap m(std::move(rescaled));

    const Interval unit(Scalar(0), Scalar(1));
    if (!m.is_bijection_on(unit)) return cls;

    const auto& branches = m.branches();
    Scalar alpha;
    if (branches.size() == 1) {
        if (branches[0].offset != Scalar(0)) return cls;
        alpha = Scalar(0);
    } else if (branches.size() == 2) {
        alpha = branches[0].offset;
        if (!(Scalar(0) < alpha && alpha < Scalar(1))) return cls;
        if (branches[1].offset != alpha - Scalar(1)) return cls;
        if (branches[0].domain.hi != Scalar(1) - alpha) return cls;
    } else {
        return cls;
    }

    cls.is_rotation = true;
    cls.irrational = !alpha.is_rational();
    cls.rotation_number = std::move(alpha);
    return cls;
}

InvariantSearchReport invariant_search(const PAMap& m, const std::vector<IntervalSet>& seeds,
                                       int max_depth) {
    if (m.domain_support() != m.image_support())
        throw std::invalid_argument("invariant_search: map is not a bijection of its support");
    const IntervalSet full = m.domain_support();
    const Scalar full_measure = full.measure();

    InvariantSearchReport report;
    for (const auto& seed : seeds) {
        IntervalSet current = set_intersection(seed, full);
        if (current.empty()) continue;
        bool stabilized = false;
        for (int depth = 0; depth < max_depth; ++depth) {
            IntervalSet next = set_union(current, image_set(m, current));
            next = set_union(next, preimage_set(m, current));
            report.refinement_depth = std::max(report.refinement_depth, depth + 1);
            if (next == current) {
                stabilized = true;
                break;
            }
            current = std::move(next);
            if (current.size() > kInvariantPieceBudget) break;
        }
        if (!stabilized) {
            report.exhausted = false;
            continue;
        }
        const Scalar mass = current.measure();
        if (mass.is_zero() || mass == full_measure) continue;
        if (std::find(report.found.begin(), report.found.end(), current) == report.found.end())
            report.found.push_back(std::move(current));
    }
    return report;
}

namespace {

// For a rational rotation number p/q, a union of q short arcs spaced 1/q
// apart is carried onto itself; pulled back to S it seeds an exactly
// invariant set for F.
std::optional<IntervalSet> rational_rotation_seed(const ReciprocalSystem& sys, const Scalar& alpha) {
    if (!alpha.is_rational()) return std::nullopt;
    const Rational a = alpha.rational_part();
    const Rational q_r = denominator(a);
    if (q_r > 256) return std::nullopt;  // arc count beyond the search budget
    const long long q = q_r.convert_to<long long>();
    const Scalar len = sys.S.measure();
    const Scalar arc = len / Scalar(2 * q);
    std::vector<Interval> arcs;
    for (long long k = 0; k < q; ++k) {
        Scalar lo = sys.S.lo + len * Scalar(k, q);
        arcs.emplace_back(lo, lo + arc);
    }
    return IntervalSet(std::move(arcs));
}

}  // namespace

ErgodicityVerdict ergodicity_verdict(const ReciprocalSystem& sys, const RotationClassification& cls,
                                     int max_depth) {
    ErgodicityVerdict verdict;
    if (cls.is_rotation && cls.irrational.value_or(false)) {
        verdict.status = ErgodicityVerdict::Status::ErgodicCertified;
        return verdict;
    }

    std::vector<IntervalSet> seeds;
    if (cls.is_rotation && cls.rotation_number.has_value()) {
        if (auto seed = rational_rotation_seed(sys, *cls.rotation_number)) {
            seeds.push_back(std::move(*seed));
            // Closing the orbit of the arc family needs one forward and one
            // backward sweep per arc at worst.
            const long long q =
                denominator(cls.rotation_number->rational_part()).convert_to<long long>();
            max_depth = static_cast<int>(std::max<long long>(max_depth, 2 * q + 2));
        }
    }
    for (const auto& br : sys.F.branches()) seeds.emplace_back(IntervalSet(br.domain));

    const InvariantSearchReport report = invariant_search(sys.F, seeds, max_depth);
    if (!report.found.empty()) {
        verdict.status = ErgodicityVerdict::Status::NotErgodicCertified;
        verdict.witness = report.found.front();
    }
    return verdict;
}

ProportionCheck check_invariant_proportion(const ReciprocalSystem& sys, const IntervalSet& E) {
    if (E.empty()) throw std::invalid_argument("check_invariant_proportion: E must have positive measure");
    if (image_set(sys.F, E) != E) return NotInvariant{};

    const Scalar mu_E = E.measure();
    const Scalar mu_S = sys.S.measure();
    const IntervalSet S_set{IntervalSet(sys.S)};
    const Scalar lhs = set_intersection(E, S_set).measure() / mu_E;
    if (lhs != mu_S) return ProportionRefuted{lhs, mu_S};

    const IntervalSet phi_S(Interval(sys.S.hi, Scalar(1)));
    const Scalar lhs_phi = set_intersection(E, phi_S).measure() / mu_E;
    if (lhs_phi != Scalar(1) - mu_S) return ProportionRefuted{lhs_phi, Scalar(1) - mu_S};

    return ProportionConsistent{lhs, lhs_phi};
}

bool contains_S_check(const ReciprocalSystem& sys, const IntervalSet& E) {
    return E.contains(sys.S);
}

}  // namespace recimap
