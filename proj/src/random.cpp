#include "gurlab/random.hpp"

#include <cmath>

namespace gur {

double Rng::uniform(double lo, double hi) {
  const double u = (engine_() >> 11) * 0x1.0p-53; // [0, 1)
  return lo + (hi - lo) * u;
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform(0.0, 1.0);
  while (u1 <= 0.0) u1 = uniform(0.0, 1.0);
  const double u2 = uniform(0.0, 1.0);
  const double r = std::sqrt(-2.0 * std::log(u1));
  spare_ = r * std::sin(2.0 * M_PI * u2);
  have_spare_ = true;
  return r * std::cos(2.0 * M_PI * u2);
}

int Rng::uniform_int(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

Complex Rng::in_disk(double radius) {
  const double r = radius * std::sqrt(uniform(0.0, 1.0));
  const double phi = uniform(0.0, 2.0 * M_PI);
  return std::polar(r, phi);
}

CVector Rng::haar_state(int dim) {
  CVector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = Complex(normal(), normal());
  v /= v.norm();
  return v;
}

CMatrix Rng::gaussian_hermitian(int dim) {
  CMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(normal(), normal());
  return (g + g.adjoint()) / 2.0;
}

Observable Rng::random_observable(int dim, double norm_cap) {
  CMatrix h = gaussian_hermitian(dim);
  const double smax = Observable::from_matrix(h).sigma_max();
  const double want = uniform(0.1 * norm_cap, norm_cap);
  if (smax > 0) h *= want / smax;
  return Observable::from_matrix(h);
}

} // namespace gur
