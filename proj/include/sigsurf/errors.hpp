#pragma once

#include <stdexcept>

namespace sigsurf {

// Raised when a derivative stack loses numerical rank at a sample point.
// Callers are expected to pick another point.
struct singular_point_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when finite differencing produces non-finite quotients.
struct step_size_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when the induced metric coefficient is not positive.
struct degenerate_metric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace sigsurf
