// Shared generators and oracles for the test suites. Everything here is
// deliberately independent of the exact refinement machinery it checks:
// the orbit oracle iterates F in plain doubles, the measure oracle counts
// Monte-Carlo samples.

#pragma once

#include "recimap/fixtures.hpp"
#include "recimap/systems.hpp"

#include <optional>
#include <random>
#include <vector>

namespace recimap::testing {

inline ReciprocalSystem fixture_system(const std::string& name) {
    return build_system(fixture(name));
}

// Random small-denominator system: k intervals with integer weights, a
// random permutation, and a random rational s < 1/2.
inline ReciprocalSystem random_system(std::mt19937& rng) {
    std::uniform_int_distribution<int> k_dist(2, 5);
    std::uniform_int_distribution<int> w_dist(1, 9);
    const int k = k_dist(rng);

    std::vector<int> weights(k);
    int total = 0;
    for (auto& w : weights) total += (w = w_dist(rng));

    IETSpec spec;
    for (int w : weights) spec.lengths.emplace_back(Scalar(w, total));
    spec.permutation.resize(k);
    for (int i = 0; i < k; ++i) spec.permutation[i] = i;
    std::shuffle(spec.permutation.begin(), spec.permutation.end(), rng);

    std::uniform_int_distribution<int> q_dist(3, 11);
    const int q = q_dist(rng);
    std::uniform_int_distribution<int> p_dist(1, (q - 1) / 2);
    const Scalar s(p_dist(rng), q);

    return make_reciprocal(spec, s);
}

// Double-precision snapshot of a PAMap for oracle iteration.
struct FloatPAMap {
    std::vector<double> lo, hi, slope, offset;

    explicit FloatPAMap(const PAMap& m) {
        for (const auto& br : m.branches()) {
            lo.push_back(to_double(br.domain.lo));
            hi.push_back(to_double(br.domain.hi));
            slope.push_back(to_double(br.slope));
            offset.push_back(to_double(br.offset));
        }
    }

    // Distance from x to the nearest branch endpoint.
    double breakpoint_distance(double x) const {
        double best = 1e9;
        for (double v : lo) best = std::min(best, std::abs(x - v));
        best = std::min(best, std::abs(x - hi.back()));
        return best;
    }

    double apply(double x) const {
        for (std::size_t i = 0; i < lo.size(); ++i)
            if (x >= lo[i] && x < hi[i]) return slope[i] * x + offset[i];
        return x;  // off-support: only reachable through float drift at breakpoints
    }
};

struct OrbitReturn {
    int return_time;
    double landing;
};

// Brute-force first return of x to [0, s) under double iteration of F,
// refusing points whose orbit ever comes within `margin` of a breakpoint.
inline std::optional<OrbitReturn> float_first_return(const FloatPAMap& F, double s, double x,
                                                     int max_steps, double margin = 1e-9) {
    double y = x;
    for (int n = 1; n <= max_steps; ++n) {
        if (F.breakpoint_distance(y) < margin || std::abs(y - s) < margin) return std::nullopt;
        y = F.apply(y);
        if (y >= 0.0 && y < s) return OrbitReturn{n, y};
    }
    return std::nullopt;
}

}  // namespace recimap::testing
