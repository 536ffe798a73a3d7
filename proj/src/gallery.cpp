#include "witkit/gallery.hpp"

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

namespace witkit {

namespace {

/// Maximally entangled vector twisted by the m-th root-of-unity phase:
/// (1/sqrt(d)) sum_j exp(2 pi i j m / d) |jj>. m = 0 gives the standard one.
Vec twisted_max_entangled(int d, int m) {
  Vec v = Vec::Zero(d * d);
  const double s = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j)
    v(j * d + j) = s * std::polar(1.0, 2.0 * std::numbers::pi * j * m / d);
  return v;
}

/// Shared basis for the reduction-style specs on d (x) d: the d twisted
/// maximally entangled vectors followed by the off-diagonal products |ij>,
/// i != j, in row-major order.
Mat reduction_basis(int d) {
  const int D = d * d;
  Mat basis(D, D);
  int col = 0;
  for (int m = 0; m < d; ++m) basis.col(col++) = twisted_max_entangled(d, m);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      Vec v = Vec::Zero(D);
      v(i * d + j) = 1.0;
      basis.col(col++) = v;
    }
  return basis;
}

}  // namespace

SpectralWitnessSpec flip_spec() {
  SpectralWitnessSpec spec;
  spec.dims = BipartiteDims(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  Mat basis = Mat::Zero(4, 4);
  basis(1, 0) = s;  // singlet (|01> - |10>)/sqrt(2)
  basis(2, 0) = -s;
  basis(1, 1) = s;  // triplet (|01> + |10>)/sqrt(2)
  basis(2, 1) = s;
  basis(0, 2) = 1.0;  // |00>
  basis(3, 3) = 1.0;  // |11>
  spec.basis = basis;
  spec.lambdas = RealVec::Ones(4);
  spec.L = 1;
  return spec;
}

SpectralWitnessSpec reduction_spec(int d) {
  if (d < 2) throw InvalidInput("reduction_spec: d must be >= 2");
  SpectralWitnessSpec spec;
  spec.dims = BipartiteDims(d, d);
  spec.basis = reduction_basis(d);
  spec.lambdas = RealVec::Ones(d * d);
  spec.lambdas(0) = static_cast<double>(d) - 1.0;
  spec.L = 1;
  return spec;
}

SpectralWitnessSpec sn_spec(int d, double p) {
  if (d < 2) throw InvalidInput("sn_spec: d must be >= 2");
  const double lambda1 = p * static_cast<double>(d) - 1.0;
  if (!(lambda1 >= 0.0))
    throw InvalidInput("sn_spec: requires p*d >= 1");
  SpectralWitnessSpec spec = reduction_spec(d);
  spec.lambdas(0) = lambda1;
  return spec;
}

SpectralWitnessSpec cho_kye_spec(const ChoKyeParams& p) {
  if (!(p.a >= 0.0 && p.a <= 2.0))
    throw InvalidInput("cho_kye_spec: requires 0 <= a <= 2");
  if (!(p.b >= 0.0) || !(p.c >= 0.0))
    throw InvalidInput("cho_kye_spec: requires b, c >= 0");

  const int D = 9;
  // (magnitude, basis vector) pairs after the leading maximally entangled
  // column: the two phase-twisted partners, then the b and c product levels.
  std::vector<std::pair<double, Vec>> rest;
  rest.emplace_back(p.a + 1.0, twisted_max_entangled(3, 1));
  rest.emplace_back(p.a + 1.0, twisted_max_entangled(3, 2));
  const int b_levels[3] = {1, 5, 6};  // |01>, |12>, |20>
  const int c_levels[3] = {3, 7, 2};  // |10>, |21>, |02>
  for (int idx : b_levels) {
    Vec v = Vec::Zero(D);
    v(idx) = 1.0;
    rest.emplace_back(p.b, std::move(v));
  }
  for (int idx : c_levels) {
    Vec v = Vec::Zero(D);
    v(idx) = 1.0;
    rest.emplace_back(p.c, std::move(v));
  }

  // Zero-magnitude columns sit directly after the leading one and the split
  // is widened over them: the assembled matrix is unchanged and the
  // strict-positivity-above-the-split invariant holds.
  SpectralWitnessSpec spec;
  spec.dims = BipartiteDims(3, 3);
  spec.basis = Mat(D, D);
  spec.lambdas = RealVec(D);
  spec.basis.col(0) = twisted_max_entangled(3, 0);
  spec.lambdas(0) = 2.0 - p.a;
  int col = 1;
  for (const auto& [lam, v] : rest)
    if (lam == 0.0) {
      spec.lambdas(col) = lam;
      spec.basis.col(col++) = v;
    }
  spec.L = col;
  for (const auto& [lam, v] : rest)
    if (lam != 0.0) {
      spec.lambdas(col) = lam;
      spec.basis.col(col++) = v;
    }
  return spec;
}

ChoKyeClassification cho_kye_classify(const ChoKyeParams& p) {
  const bool in_range = p.a >= 0.0 && p.a < 2.0;
  const double t = (2.0 - p.a) / 2.0;
  ChoKyeClassification c;
  c.is_ew = in_range && p.a + p.b + p.c >= 2.0 &&
            (p.a > 1.0 || p.b * p.c >= (1.0 - p.a) * (1.0 - p.a));
  c.spectral_class_member = in_range && p.b >= t && p.c >= t;
  c.is_decomposable_region = p.a >= 0.0 && p.b * p.c >= t * t;
  c.is_2ew_class = p.a >= 1.0 && p.a < 2.0 && p.b >= 2.0 * (2.0 - p.a) &&
                   p.c >= 2.0 * (2.0 - p.a);
  c.pt_positive = p.b >= t && p.c >= t && p.b * p.c >= 1.0;
  return c;
}

}  // namespace witkit
