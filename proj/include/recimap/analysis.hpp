// The analyze pipeline: first-return induction, conservativity and
// ergodicity verdicts, Maharam diagnostics, all folded into one JSON
// report. Reports are deterministic for fixed inputs and options; the
// only varying field is the timing.

#pragma once

#include "recimap/config.hpp"
#include "recimap/maharam.hpp"

#include <nlohmann/json_fwd.hpp>

namespace recimap {

struct AnalysisOptions {
    int budget = 64;
    long long orbit_steps = 2000;
    int probe_count = 0;  // 0: one probe per branch of F
    int wandering_horizon = 20;
    int invariant_depth = 16;
    std::size_t branch_cap = kDefaultBranchCap;
    int mu_tilde_checks = 100;
};

struct AnalysisResult {
    ReciprocalSystem system;
    ReturnMapResult return_map;
    ReturnTimeTable return_times;
    IntervalSet missing_image;
    ConservativityCertificate conservativity;
    RotationClassification rotation;
    ErgodicityVerdict ergodicity;
    MaharamSystem maharam;
    int mu_tilde_checks_passed = 0;
    LevelRangeResult level_range;
    RatioSetEstimate ratio_set;
    MaharamDiagnostic diagnostic;
    bool has_unknown = false;  // any verdict Unknown / inconclusive
    long long timing_ms = 0;
};

AnalysisResult run_analysis(const SystemConfig& cfg, const AnalysisOptions& opts);

nlohmann::json report_to_json(const SystemConfig& cfg, const AnalysisResult& result);

}  // namespace recimap
