// Built-in example systems, one per named construction exercised by the
// test suite and the command-line driver.

#pragma once

#include "recimap/config.hpp"

#include <vector>

namespace recimap {

// scaling_third        involution alone (identity exchange, s = 1/3)
// pair_rotation        two paired rotations, figure-coordinate rationals
// pair_rotation_sqrt2  the same shape with lengths in Q(sqrt(2)) making
//                      the return-map rotation irrational
// wandering            return map with a wandering interval
// nonsurjective        return map missing part of its codomain
// identity             identity exchange with s = 2/5
// figure1              three-interval reversing exchange with suspension data
std::vector<SystemConfig> builtin_fixtures();

SystemConfig fixture(const std::string& name);

}  // namespace recimap
