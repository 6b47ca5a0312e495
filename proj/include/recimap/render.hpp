// Deterministic SVG renderings of the standard diagrams: two-row map
// pictures, first-return pictures with dashed unreached segments,
// suspension polygons over an interval exchange, and the level schematic
// of a discrete Maharam extension. Output is byte-stable for identical
// inputs: fixed 6-decimal coordinates, fixed element order.

#pragma once

#include "recimap/maharam.hpp"
#include "recimap/systems.hpp"

#include <string>
#include <vector>

namespace recimap {

struct TwoRowOptions {
    double width = 700.0;
    double height = 200.0;
};

// Top row: branch domains; bottom row: branch images. Unreached parts of
// the bottom row are drawn dashed. Labels run per branch, at most 26.
std::string render_two_row(const PAMap& m, const std::vector<std::string>& labels,
                           const TwoRowOptions& opts = {});

struct SuspensionData {
    IETSpec iet;
    std::vector<std::pair<Scalar, Scalar>> zeta;  // (re, im) per interval; re == length
};

// Validates the suspension data: re parts equal the interval lengths,
// intermediate partial imaginary sums strictly positive along the top
// broken line and strictly negative along the bottom.
void validate_suspension(const SuspensionData& data);

std::string render_suspension(const SuspensionData& data);

// Stacked levels scaled by rho^{-n}, arrows from each branch to its image
// one level up or down.
std::string render_maharam(const MaharamSystem& sysM, int level_lo, int level_hi);

}  // namespace recimap
