#pragma once

namespace qess {

// Full command-line surface. Exit codes: 0 success (and reproduction
// matched), 1 reproduction mismatch, 2 invalid input, 3 I/O failure.
int run_cli(int argc, const char* const* argv);

}  // namespace qess
