#include "witkit/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

namespace witkit {

DensityMatrix make_density(const BipartiteDims& dims, Mat rho) {
  if (rho.rows() != dims.D() || rho.cols() != dims.D())
    throw InvalidInput("make_density: matrix must be D x D");
  if (!is_hermitian(rho, 1e-10))
    throw InvalidInput("make_density: matrix is not Hermitian");
  if (std::abs(rho.trace().real() - 1.0) > 1e-10 ||
      std::abs(rho.trace().imag()) > 1e-10)
    throw InvalidInput("make_density: trace must be 1");
  double min_eig = hermitian_eig(0.5 * (rho + rho.adjoint())).eigenvalues(0);
  if (min_eig < -1e-10)
    throw InvalidInput("make_density: matrix is not positive semidefinite");
  return DensityMatrix{dims, std::move(rho)};
}

CheckVerdict ppt_check(const DensityMatrix& rho, const Tolerance& tol) {
  PsdVerdict v = is_psd(partial_transpose(rho.matrix, rho.dims), tol);
  return {v.psd, v.min_eigenvalue};
}

CheckVerdict reduction_check(const DensityMatrix& rho, const Tolerance& tol) {
  Mat rho_b = partial_trace(rho.matrix, rho.dims, Subsystem::A);
  Mat rho_a = partial_trace(rho.matrix, rho.dims, Subsystem::B);
  Mat ia = Mat::Identity(rho.dims.dA, rho.dims.dA);
  Mat ib = Mat::Identity(rho.dims.dB, rho.dims.dB);
  PsdVerdict vb = is_psd(kron(ia, rho_b) - rho.matrix, tol);
  PsdVerdict va = is_psd(kron(rho_a, ib) - rho.matrix, tol);
  return {va.psd && vb.psd, std::min(va.min_eigenvalue, vb.min_eigenvalue)};
}

namespace {

/// Von Neumann entropy in nats; eigenvalues clipped at zero, 0 log 0 = 0.
double entropy(const Mat& op) {
  RealVec w = hermitian_eig(op).eigenvalues;
  double s = 0.0;
  for (int i = 0; i < w.size(); ++i) {
    double p = std::max(w(i), 0.0);
    if (p > 0.0) s -= p * std::log(p);
  }
  return s;
}

/// Spectrum sorted descending, zero-padded to length n.
std::vector<double> padded_desc_spectrum(const Mat& op, int n) {
  RealVec w = hermitian_eig(op).eigenvalues;
  std::vector<double> v(w.data(), w.data() + w.size());
  v.resize(n, 0.0);
  std::sort(v.begin(), v.end(), std::greater<double>());
  return v;
}

}  // namespace

CheckVerdict entropy_check(const DensityMatrix& rho) {
  double s = entropy(rho.matrix);
  double gap_a = s - entropy(partial_trace(rho.matrix, rho.dims, Subsystem::B));
  double gap_b = s - entropy(partial_trace(rho.matrix, rho.dims, Subsystem::A));
  double margin = std::min(gap_a, gap_b);
  return {margin >= -1e-9, margin};
}

CheckVerdict majorization_check(const DensityMatrix& rho) {
  const int D = rho.dims.D();
  std::vector<double> global = padded_desc_spectrum(rho.matrix, D);
  double margin = std::numeric_limits<double>::infinity();
  for (Subsystem traced : {Subsystem::B, Subsystem::A}) {
    std::vector<double> reduced =
        padded_desc_spectrum(partial_trace(rho.matrix, rho.dims, traced), D);
    double pg = 0.0, pr = 0.0;
    for (int i = 0; i < D; ++i) {
      pg += global[i];
      pr += reduced[i];
      margin = std::min(margin, pr - pg);
    }
  }
  return {margin >= -1e-9, margin};
}

CriteriaReport run_criteria(const DensityMatrix& rho, const Tolerance& tol) {
  CriteriaReport report;
  report.ppt = ppt_check(rho, tol);
  report.reduction = reduction_check(rho, tol);
  report.entropic = entropy_check(rho);
  report.majorization = majorization_check(rho);
  return report;
}

DensityMatrix random_ppt_state(const BipartiteDims& dims, std::uint64_t seed) {
  const int D = dims.D();
  Rng rng(seed);
  Mat G = gaussian_matrix(D, D, rng);
  Mat rho0 = G * G.adjoint();
  rho0 /= rho0.trace().real();
  Mat mixed = Mat::Identity(D, D) / static_cast<double>(D);

  auto pt_psd = [&](double t) {
    Mat rho = t * rho0 + (1.0 - t) * mixed;
    return hermitian_eig(partial_transpose(rho, dims)).eigenvalues(0) >= 0.0;
  };

  double lo = 0.0, hi = 1.0;  // rho(0) = I/D is always PPT
  if (pt_psd(1.0)) {
    lo = 1.0;
  } else {
    for (int i = 0; i < 20; ++i) {
      double mid = 0.5 * (lo + hi);
      (pt_psd(mid) ? lo : hi) = mid;
    }
  }
  Mat rho = lo * rho0 + (1.0 - lo) * mixed;
  rho = 0.5 * (rho + rho.adjoint());
  rho /= rho.trace().real();
  return make_density(dims, std::move(rho));
}

DensityMatrix random_separable_state(const BipartiteDims& dims, int n_terms,
                                     std::uint64_t seed) {
  if (n_terms < 1)
    throw InvalidInput("random_separable_state: n_terms must be >= 1");
  Rng rng(seed);
  std::vector<double> weights(n_terms);
  double total = 0.0;
  for (double& w : weights) {
    w = rng.uniform();
    total += w;
  }
  Mat rho = Mat::Zero(dims.D(), dims.D());
  for (int t = 0; t < n_terms; ++t) {
    Vec a = gaussian_vector(dims.dA, rng);
    Vec b = gaussian_vector(dims.dB, rng);
    a.normalize();
    b.normalize();
    Vec prod = kron(a, b);
    rho += (weights[t] / total) * (prod * prod.adjoint());
  }
  rho = 0.5 * (rho + rho.adjoint());
  rho /= rho.trace().real();
  return make_density(dims, std::move(rho));
}

double detect(const Mat& W, const DensityMatrix& rho) {
  if (W.rows() != rho.dims.D() || W.cols() != rho.dims.D())
    throw InvalidInput("detect: W must match the state dimension");
  return (W * rho.matrix).trace().real();
}

}  // namespace witkit
