// The discrete Maharam extension: the skew product on X x Z that moves a
// point up one level where F scales by rho and down one level where it
// scales by 1/rho, preserving the weighted measure
// mu~(E) = sum_n rho^{-n} mu(E_n). Levels are materialized lazily; only
// the finitely many nonempty ones are ever stored.

#pragma once

#include "recimap/ergodicity.hpp"
#include "recimap/first_return.hpp"

#include <map>
#include <set>

namespace recimap {

struct MaharamSystem {
    ReciprocalSystem base;
    PAMap F_inverse;
    IntervalSet up_set;    // T^{-1}(S): where the level increments
    IntervalSet down_set;  // T^{-1}(Phi(S)): where it decrements
};

MaharamSystem extend(const ReciprocalSystem& sys);

struct SkewState {
    Scalar x;
    long long level = 0;

    friend bool operator==(const SkewState& a, const SkewState& b) = default;
};

SkewState step(const MaharamSystem& sysM, const SkewState& st);
SkewState step_inverse(const MaharamSystem& sysM, const SkewState& st);

// level -> set on that level; absent levels are empty.
using LeveledSet = std::map<long long, IntervalSet>;

Scalar mu_tilde(const MaharamSystem& sysM, const LeveledSet& E);

LeveledSet image_leveled(const MaharamSystem& sysM, const LeveledSet& E);
LeveledSet preimage_leveled(const MaharamSystem& sysM, const LeveledSet& E);

struct LevelRangeResult {
    long long min_level = 0;
    long long max_level = 0;
    long long exact_steps = 0;
    long long float_steps = 0;
    bool uncertain = false;  // float orbit passed within 1e-12 of a breakpoint
};

inline constexpr long long kExactOrbitCap = 10'000;

// Min/max level along the orbit of (x0, 0). Orbits no longer than
// `exact_cap` run in exact arithmetic; longer ones fall back to doubles
// with a breakpoint-proximity monitor.
LevelRangeResult level_range(const MaharamSystem& sysM, const Scalar& x0, long long steps,
                             long long exact_cap = kExactOrbitCap);

struct RatioSetEstimate {
    std::set<long long> exponents;                         // witnessed by every probe
    std::map<std::size_t, std::set<long long>> per_probe;  // probe index -> exponents seen
    bool inconclusive = false;                             // empty intersection
};

inline constexpr int kRatioProbePoints = 8;

// Samples orbits started inside each probe and records the exact
// derivative exponent q (derivative rho^q) at every return to the probe.
// The estimate keeps only exponents witnessed by every probe.
RatioSetEstimate ratio_set_estimate(const ReciprocalSystem& sys, const std::vector<Interval>& probes,
                                    long long steps);

struct MaharamDiagnostic {
    enum class Verdict { ClaimedNonErgodic, ConsistentWithErgodic, Inconclusive };
    Verdict verdict = Verdict::Inconclusive;
    std::vector<std::string> reasons;
    int measure_preserving_power = 0;  // least n <= bound with F^n measure-preserving, 0 if none
    bool s1_null = false;
    std::set<long long> exponents;
};

// Combines the negative certificates (a measure-preserving iterate, a
// null one-step return set, a wandering set, a nontrivial invariant set)
// with the ratio-set evidence. Never claims a proof of ergodicity of the
// extension; at best "consistent with ergodic".
MaharamDiagnostic ergodicity_diagnostic(const ReciprocalSystem& sys, const ReturnMapResult& r,
                                        const ConservativityCertificate& cons,
                                        const std::set<long long>& exponents,
                                        const ErgodicityVerdict& verdict, int power_bound = 6,
                                        int exponent_window = 1);

}  // namespace recimap
