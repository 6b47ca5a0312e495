// Constructors and validators for the named objects of the theory:
// interval exchange transformations, scaling involutions, and the
// reciprocal transformations F = Phi . T obtained by composing them.

#pragma once

#include "recimap/pamap.hpp"

#include <cstdint>
#include <vector>

namespace recimap {

// Lengths of the continuity intervals plus the permutation sending each
// interval to its rank in the image row: permutation[i] == 0 means
// interval i lands leftmost after the exchange.
struct IETSpec {
    std::vector<Scalar> lengths;
    std::vector<std::size_t> permutation;
};

// Builds the piecewise translation of [0,1) described by the spec.
// Throws if lengths are not positive and summing to one, or the
// permutation is not a bijection on {0..k-1}.
PAMap make_iet(const IETSpec& spec);

// The affine involution exchanging S = [0, s) and [s, 1); it scales
// measure by rho = (1-s)/s on S and by 1/rho on the complement.
struct ScalingInvolution {
    Scalar s;
    Scalar rho;
    PAMap as_map;
};

// Requires 0 < s < 1/2 (S must be the strictly smaller set) and s
// rational so that rho and its integer powers stay rational.
ScalingInvolution make_scaling_involution(const Scalar& s);

struct ReciprocalSystem {
    IETSpec T_spec;
    PAMap T;
    ScalingInvolution Phi;
    PAMap F;                             // compose(Phi.as_map, T)
    Interval S{Scalar(0), Scalar(1)};    // [0, s) once constructed
    Scalar rho;
    std::int64_t field_d = 0;
};

// Builds the full system and verifies its structural invariants:
// F is a bijection of [0,1) and every branch slope is rho or 1/rho.
ReciprocalSystem make_reciprocal(const IETSpec& T_spec, const Scalar& s);

// Phi conjugates F = Phi.T to the reversed composition G = T.Phi:
// checks Phi.F == G.Phi as exact maps.
bool check_conjugacy(const ReciprocalSystem& sys);

}  // namespace recimap
