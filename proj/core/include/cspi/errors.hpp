#pragma once

#include <stdexcept>

namespace cspi {

/// A numerical refinement loop failed to reach its tolerance.
class convergence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cspi
