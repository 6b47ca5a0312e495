#include "recimap/maharam.hpp"

#include <algorithm>
#include <cmath>

namespace recimap {

MaharamSystem extend(const ReciprocalSystem& sys) {
    const IntervalSet S_set{IntervalSet(sys.S)};
    const IntervalSet phi_S(Interval(sys.S.hi, Scalar(1)));
    MaharamSystem m;
    m.base = sys;
    m.F_inverse = invert(sys.F);
    m.up_set = preimage_set(sys.T, S_set);
    m.down_set = preimage_set(sys.T, phi_S);
    if (set_union(m.up_set, m.down_set) != IntervalSet(Interval(Scalar(0), Scalar(1))) ||
        !disjoint(m.up_set, m.down_set))
        throw std::logic_error("extend: up and down sets do not partition [0,1)");
    return m;
}

SkewState step(const MaharamSystem& sysM, const SkewState& st) {
    const long long delta = sysM.up_set.contains(st.x) ? 1 : -1;
    return SkewState{sysM.base.F.apply(st.x), st.level + delta};
}

SkewState step_inverse(const MaharamSystem& sysM, const SkewState& st) {
    Scalar x_prev = sysM.F_inverse.apply(st.x);
    const long long delta = sysM.up_set.contains(x_prev) ? 1 : -1;
    return SkewState{std::move(x_prev), st.level - delta};
}

Scalar mu_tilde(const MaharamSystem& sysM, const LeveledSet& E) {
    Scalar total;
    for (const auto& [level, set] : E) total += sysM.base.rho.pow(-level) * set.measure();
    return total;
}

LeveledSet image_leveled(const MaharamSystem& sysM, const LeveledSet& E) {
    LeveledSet out;
    for (const auto& [level, set] : E) {
        IntervalSet up_part = set_intersection(set, sysM.up_set);
        IntervalSet down_part = set_intersection(set, sysM.down_set);
        if (!up_part.empty()) {
            IntervalSet img = image_set(sysM.base.F, up_part);
            out[level + 1] = set_union(out[level + 1], img);
        }
        if (!down_part.empty()) {
            IntervalSet img = image_set(sysM.base.F, down_part);
            out[level - 1] = set_union(out[level - 1], img);
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.empty(); });
    return out;
}

LeveledSet preimage_leveled(const MaharamSystem& sysM, const LeveledSet& E) {
    LeveledSet out;
    for (const auto& [level, set] : E) {
        IntervalSet pre = preimage_set(sysM.base.F, set);
        IntervalSet from_up = set_intersection(pre, sysM.up_set);      // was at level - 1
        IntervalSet from_down = set_intersection(pre, sysM.down_set);  // was at level + 1
        if (!from_up.empty()) out[level - 1] = set_union(out[level - 1], from_up);
        if (!from_down.empty()) out[level + 1] = set_union(out[level + 1], from_down);
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.empty(); });
    return out;
}

namespace {

// Double-precision snapshot of F for long orbits.
struct FloatMap {
    std::vector<double> lo, hi, slope, offset;
    std::vector<double> breakpoints;
    std::vector<bool> up;  // branch moves the level up

    explicit FloatMap(const MaharamSystem& sysM) {
        for (const auto& br : sysM.base.F.branches()) {
            lo.push_back(to_double(br.domain.lo));
            hi.push_back(to_double(br.domain.hi));
            slope.push_back(to_double(br.slope));
            offset.push_back(to_double(br.offset));
            up.push_back(br.slope == sysM.base.rho);
            breakpoints.push_back(lo.back());
        }
        breakpoints.push_back(1.0);
    }

    // Index of the branch containing x; flags proximity to a breakpoint.
    std::size_t locate(double x, bool& uncertain) const {
        for (double bp : breakpoints)
            if (std::abs(x - bp) < 1e-12) uncertain = true;
        auto it = std::upper_bound(lo.begin(), lo.end(), x);
        if (it == lo.begin()) return 0;
        return static_cast<std::size_t>(std::distance(lo.begin(), it)) - 1;
    }
};

}  // namespace

LevelRangeResult level_range(const MaharamSystem& sysM, const Scalar& x0, long long steps,
                             long long exact_cap) {
    LevelRangeResult result;
    if (steps < 0) throw std::invalid_argument("level_range: steps must be >= 0");

    if (steps <= exact_cap) {
        SkewState st{x0, 0};
        for (long long i = 0; i < steps; ++i) {
            st = step(sysM, st);
            result.min_level = std::min(result.min_level, st.level);
            result.max_level = std::max(result.max_level, st.level);
        }
        result.exact_steps = steps;
        return result;
    }

    const FloatMap fm(sysM);
    double x = to_double(x0);
    long long level = 0;
    for (long long i = 0; i < steps; ++i) {
        const std::size_t b = fm.locate(x, result.uncertain);
        x = fm.slope[b] * x + fm.offset[b];
        level += fm.up[b] ? 1 : -1;
        result.min_level = std::min(result.min_level, level);
        result.max_level = std::max(result.max_level, level);
    }
    result.float_steps = steps;
    return result;
}

RatioSetEstimate ratio_set_estimate(const ReciprocalSystem& sys, const std::vector<Interval>& probes,
                                    long long steps) {
    if (probes.empty()) throw std::invalid_argument("ratio_set_estimate: needs at least one probe");
    const MaharamSystem sysM = extend(sys);

    RatioSetEstimate est;
    for (std::size_t pi = 0; pi < probes.size(); ++pi) {
        const Interval& probe = probes[pi];
        const IntervalSet probe_set{IntervalSet(probe)};
        std::set<long long>& seen = est.per_probe[pi];
        const Scalar len = probe.measure();
        for (int k = 0; k < kRatioProbePoints; ++k) {
            // Deterministic interior sample points.
            Scalar x = probe.lo + len * Scalar(2 * k + 1, 2 * kRatioProbePoints);
            SkewState st{std::move(x), 0};
            for (long long n = 0; n < steps; ++n) {
                st = step(sysM, st);
                if (probe_set.contains(st.x)) seen.insert(st.level);
            }
        }
    }

    // The ratio set quantifies over every set: keep the intersection.
    est.exponents = est.per_probe.begin()->second;
    for (const auto& [pi, seen] : est.per_probe) {
        std::set<long long> kept;
        std::set_intersection(est.exponents.begin(), est.exponents.end(), seen.begin(), seen.end(),
                              std::inserter(kept, kept.begin()));
        est.exponents = std::move(kept);
    }
    est.inconclusive = est.exponents.empty();
    return est;
}

MaharamDiagnostic ergodicity_diagnostic(const ReciprocalSystem& sys, const ReturnMapResult& r,
                                        const ConservativityCertificate& cons,
                                        const std::set<long long>& exponents,
                                        const ErgodicityVerdict& verdict, int power_bound,
                                        int exponent_window) {
    MaharamDiagnostic diag;
    diag.exponents = exponents;

    Scalar s1_measure;
    for (const auto& rb : r.branches)
        if (rb.return_time == 1) s1_measure += rb.domain.measure();
    diag.s1_null = s1_measure.is_zero() && r.residual.empty();

    if (verdict.status == ErgodicityVerdict::Status::NotErgodicCertified) {
        diag.verdict = MaharamDiagnostic::Verdict::ClaimedNonErgodic;
        diag.reasons.push_back("base map F is not ergodic (exact invariant set found)");
    }
    if (std::holds_alternative<WanderingSetFound>(cons)) {
        diag.verdict = MaharamDiagnostic::Verdict::ClaimedNonErgodic;
        diag.reasons.push_back("F is not conservative (wandering interval for the return map)");
    }
    if (diag.s1_null) {
        diag.verdict = MaharamDiagnostic::Verdict::ClaimedNonErgodic;
        diag.reasons.push_back(
            "one-step return set is null, so F^2 preserves measure and the extension splits");
    }

    PAMap power = sys.F;
    for (int n = 2; n <= power_bound; ++n) {
        power = compose(sys.F, power);
        if (power.is_measure_preserving()) {
            diag.measure_preserving_power = n;
            diag.verdict = MaharamDiagnostic::Verdict::ClaimedNonErgodic;
            diag.reasons.push_back("F^" + std::to_string(n) +
                                   " is measure-preserving, bounding the level cocycle");
            break;
        }
    }

    if (diag.verdict == MaharamDiagnostic::Verdict::ClaimedNonErgodic) return diag;

    if (verdict.status == ErgodicityVerdict::Status::ErgodicCertified) {
        bool window_full = true;
        for (int q = -exponent_window; q <= exponent_window; ++q)
            if (!exponents.count(q)) window_full = false;
        if (window_full) {
            diag.verdict = MaharamDiagnostic::Verdict::ConsistentWithErgodic;
            diag.reasons.push_back("F certified ergodic and all exponents in [-" +
                                   std::to_string(exponent_window) + "," +
                                   std::to_string(exponent_window) + "] witnessed on every probe");
            return diag;
        }
    }

    diag.verdict = MaharamDiagnostic::Verdict::Inconclusive;
    diag.reasons.push_back("no negative certificate and insufficient ratio-set evidence");
    return diag;
}

}  // namespace recimap
