#include "recimap/analysis.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <random>

namespace recimap {

using nlohmann::json;

namespace {

// Deterministic random interval unions on [0,1) over a fixed grid.
LeveledSet random_leveled_set(std::mt19937& rng) {
    std::uniform_int_distribution<int> grid(0, 64);
    std::uniform_int_distribution<int> coin(0, 1);
    LeveledSet E;
    for (long long level = -2; level <= 2; ++level) {
        if (coin(rng) == 0) continue;
        std::vector<Interval> ivs;
        const int pieces = 1 + coin(rng);
        for (int p = 0; p < pieces; ++p) {
            int a = grid(rng), b = grid(rng);
            if (a == b) continue;
            if (a > b) std::swap(a, b);
            ivs.emplace_back(Scalar(a, 64), Scalar(b, 64));
        }
        if (!ivs.empty()) E[level] = IntervalSet(std::move(ivs));
    }
    return E;
}

}  // namespace

AnalysisResult run_analysis(const SystemConfig& cfg, const AnalysisOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();

    AnalysisResult res;
    res.system = build_system(cfg);
    res.return_map = first_return(res.system, opts.budget, opts.branch_cap);
    res.return_times = return_time_partition(res.return_map);
    res.missing_image = check_surjective(res.return_map, res.system.S);
    res.conservativity = conservativity_certificate(res.system, res.return_map, opts.wandering_horizon);
    res.rotation = classify_rotation(res.return_map, res.system.S);
    res.ergodicity = ergodicity_verdict(res.system, res.rotation, opts.invariant_depth);

    res.maharam = extend(res.system);

    std::mt19937 rng(0x5eed);
    for (int i = 0; i < opts.mu_tilde_checks; ++i) {
        const LeveledSet E = random_leveled_set(rng);
        if (mu_tilde(res.maharam, image_leveled(res.maharam, E)) != mu_tilde(res.maharam, E))
            throw std::logic_error("analysis: the extension failed to preserve mu~ on a sample set");
        ++res.mu_tilde_checks_passed;
    }

    res.level_range = level_range(res.maharam, Scalar(1, 2), opts.orbit_steps);

    std::vector<Interval> probes;
    for (const auto& br : res.system.F.branches()) {
        probes.push_back(br.domain);
        if (opts.probe_count > 0 && probes.size() == static_cast<std::size_t>(opts.probe_count)) break;
    }
    res.ratio_set = ratio_set_estimate(res.system, probes, opts.orbit_steps);

    res.diagnostic = ergodicity_diagnostic(res.system, res.return_map, res.conservativity,
                                           res.ratio_set.exponents, res.ergodicity);

    res.has_unknown = std::holds_alternative<ConservativityUnknown>(res.conservativity) ||
                      res.ergodicity.status == ErgodicityVerdict::Status::Unknown ||
                      res.diagnostic.verdict == MaharamDiagnostic::Verdict::Inconclusive;

    res.timing_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count();
    return res;
}

namespace {

json interval_json(const Interval& iv) {
    return json::array({format_scalar(iv.lo), format_scalar(iv.hi)});
}

json interval_set_json(const IntervalSet& s) {
    json out = json::array();
    for (const auto& iv : s.intervals()) out.push_back(interval_json(iv));
    return out;
}

}  // namespace

json report_to_json(const SystemConfig& cfg, const AnalysisResult& res) {
    json j;
    j["schema_version"] = 1;

    j["system"] = config_to_json(cfg);
    j["system"]["rho"] = format_scalar(res.system.rho);
    j["system"]["s"] = format_scalar(res.system.S.hi);
    j["system"]["f_branches"] = res.system.F.branches().size();

    json fr;
    fr["budget_used"] = res.return_map.budget_used;
    fr["branches"] = json::array();
    for (const auto& rb : res.return_map.branches) {
        json b;
        b["domain"] = interval_json(rb.domain);
        b["return_time"] = rb.return_time;
        b["slope"] = format_scalar(rb.map.slope);
        b["derivative_exponent"] = rb.derivative_exponent;
        b["image"] = interval_json(rb.image());
        fr["branches"].push_back(std::move(b));
    }
    json times;
    for (const auto& [n, mass] : res.return_times.measure_by_time)
        times[std::to_string(n)] = format_scalar(mass);
    times["unresolved"] = format_scalar(res.return_times.unresolved);
    fr["return_times"] = std::move(times);
    fr["missing_image"] = interval_set_json(res.missing_image);
    fr["residual"] = interval_set_json(res.return_map.residual);
    j["first_return"] = std::move(fr);

    json cons;
    if (std::holds_alternative<ConservativeCertified>(res.conservativity)) {
        cons["status"] = "conservative_certified";
    } else if (const auto* w = std::get_if<WanderingSetFound>(&res.conservativity)) {
        cons["status"] = "wandering_set_found";
        cons["wandering_interval"] = interval_json(w->wandering);
        cons["trap"] = interval_json(w->trap);
        cons["horizon"] = w->horizon;
    } else {
        cons["status"] = "unknown";
    }
    j["conservativity"] = std::move(cons);

    json erg;
    json rot;
    rot["is_rotation"] = res.rotation.is_rotation;
    if (res.rotation.rotation_number)
        rot["rotation_number"] = format_scalar(*res.rotation.rotation_number);
    if (res.rotation.irrational) rot["irrational"] = *res.rotation.irrational;
    erg["rotation"] = std::move(rot);
    switch (res.ergodicity.status) {
        case ErgodicityVerdict::Status::ErgodicCertified:
            erg["status"] = "ergodic_certified";
            break;
        case ErgodicityVerdict::Status::NotErgodicCertified:
            erg["status"] = "not_ergodic_certified";
            erg["witness"] = interval_set_json(*res.ergodicity.witness);
            break;
        case ErgodicityVerdict::Status::Unknown:
            erg["status"] = "unknown";
            break;
    }
    j["ergodicity"] = std::move(erg);

    json mah;
    mah["up_set"] = interval_set_json(res.maharam.up_set);
    mah["mu_tilde_checks_passed"] = res.mu_tilde_checks_passed;
    json lr;
    lr["min"] = res.level_range.min_level;
    lr["max"] = res.level_range.max_level;
    lr["exact_steps"] = res.level_range.exact_steps;
    lr["float_steps"] = res.level_range.float_steps;
    lr["uncertain"] = res.level_range.uncertain;
    mah["level_range"] = std::move(lr);
    mah["ratio_exponents"] = res.ratio_set.exponents;
    mah["ratio_inconclusive"] = res.ratio_set.inconclusive;
    json diag;
    switch (res.diagnostic.verdict) {
        case MaharamDiagnostic::Verdict::ClaimedNonErgodic:
            diag["verdict"] = "claimed_non_ergodic";
            break;
        case MaharamDiagnostic::Verdict::ConsistentWithErgodic:
            diag["verdict"] = "consistent_with_ergodic";
            break;
        case MaharamDiagnostic::Verdict::Inconclusive:
            diag["verdict"] = "inconclusive";
            break;
    }
    diag["reasons"] = res.diagnostic.reasons;
    if (res.diagnostic.measure_preserving_power > 0)
        diag["measure_preserving_power"] = res.diagnostic.measure_preserving_power;
    diag["s1_null"] = res.diagnostic.s1_null;
    mah["diagnostic"] = std::move(diag);
    j["maharam"] = std::move(mah);

    j["timing_ms"] = res.timing_ms;
    return j;
}

}  // namespace recimap
