#pragma once

#include <stdexcept>
#include <string>

namespace catentropy {

// Base class for every domain error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mixture parameters
class trace_violation : public error { using error::error; };
class negativity_violation : public error { using error::error; };
class weight_violation : public error { using error::error; };
class degenerate_cat_state : public error { using error::error; };
class clamp_exceeded : public error { using error::error; };
class invalid_temperature : public error { using error::error; };
class non_finite_input : public error { using error::error; };

// Fock-space numerics
class cutoff_exceeded : public error { using error::error; };
class hermiticity_violation : public error { using error::error; };
class mode_count_mismatch : public error { using error::error; };
class negative_eigenvalue : public error { using error::error; };

class no_convergence : public error {
 public:
  no_convergence(const std::string& what, double residual)
      : error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace catentropy
