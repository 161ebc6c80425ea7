#pragma once

#include <stdexcept>

namespace colleague {

// Numerical failure: iteration budget exhausted or a non-finite value showed
// up mid-computation.  Kept distinct from std::invalid_argument (malformed
// input) so the command line tool can map the two to different exit codes.
struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace colleague
