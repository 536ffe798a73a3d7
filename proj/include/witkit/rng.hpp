#pragma once

#include <cstdint>
#include <random>

#include "witkit/types.hpp"

namespace witkit {

/// Deterministic random source. Uniforms are taken straight from the
/// mt19937_64 bit stream and normals are produced by Box-Muller, so a given
/// seed yields the same stream on every platform and standard library
/// (std::normal_distribution makes no such promise).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform on [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Standard normal.
  double gaussian();

  /// Complex Gaussian with independent standard-normal parts.
  cplx cgauss() {
    double re = gaussian();
    double im = gaussian();
    return {re, im};
  }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Matrix/vector of independent complex Gaussians, filled row-major.
Mat gaussian_matrix(int rows, int cols, Rng& rng);
Vec gaussian_vector(int n, Rng& rng);

}  // namespace witkit
