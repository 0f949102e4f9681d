#pragma once

#include <iosfwd>

#include "qess/config.hpp"

namespace qess {

// Runs the four headline certifications of the canonical constrained game
// plus the two invasion demonstrations, prints a fixed-format table with the
// gap evidence, and returns 0 iff every computed verdict matches the
// expected one (1 otherwise). The game and numeric conventions come from the
// configuration; the candidate is s* = (pi/2, pi/4) and its classical
// counterpart p* = 1/2.
int run_reproduction(const RunConfig& config, std::ostream& os);

}  // namespace qess
