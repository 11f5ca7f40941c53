#pragma once

#include <cstdint>
#include <random>

#include "gurlab/qmat.hpp"

namespace gur {

/// Seeded 64-bit generator with hand-rolled distributions so that a seed
/// reproduces the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi);
  double normal();
  int uniform_int(int lo, int hi); // inclusive bounds
  Complex in_disk(double radius);  // uniform over the complex disk

  CVector haar_state(int dim);
  CMatrix gaussian_hermitian(int dim);
  /// Gaussian-Hermitized observable rescaled so sigma_max lands in
  /// (0.1 norm_cap, norm_cap].
  Observable random_observable(int dim, double norm_cap = 2.0);

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0;
};

} // namespace gur
