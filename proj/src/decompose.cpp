#include "witkit/decompose.hpp"

#include <algorithm>
#include <cmath>

#include "witkit/tensor.hpp"

namespace witkit {

DecompositionResult split_ab(const SpectralWitnessSpec& spec,
                             const Tolerance& tol) {
  validate(spec);
  const int D = spec.dims.D();
  const double mu1 = mu_threshold(spec, 1);

  Mat A = Mat::Zero(D, D);
  for (int a = spec.L; a < D; ++a) {
    Vec v = spec.basis.col(a);
    A += (spec.lambdas(a) - mu1) * (v * v.adjoint());
  }
  Mat B = mu1 * Mat::Identity(D, D);
  for (int a = 0; a < spec.L; ++a) {
    Vec v = spec.basis.col(a);
    B -= (spec.lambdas(a) + mu1) * (v * v.adjoint());
  }
  A = 0.5 * (A + A.adjoint());
  B = 0.5 * (B + B.adjoint());

  DecompositionResult res;
  res.A = A;
  res.B = B;
  res.min_eig_A = hermitian_eig(A).eigenvalues(0);
  res.min_eig_B_pt =
      hermitian_eig(partial_transpose(B, spec.dims)).eigenvalues(0);

  // Lower bound on the bottom of B^Gamma's spectrum: each negative-part
  // projector's partial transpose has eigenvalues in [-||psi_a||_1^2, 1],
  // so lambda_min(B^Gamma) >= mu1 - sum (lambda_a + mu1) ||psi_a||_1^2.
  double bound = mu1;
  for (int a = 1; a <= spec.L; ++a)
    bound -= (spec.lambdas(a - 1) + mu1) * k_norm_sq(spec.psi(a), 1);
  res.b_min_bound = bound;

  double worst = 0.0;
  for (int a = spec.L; a < D; ++a)
    worst = std::max(worst, std::abs(spec.lambdas(a) - mu1));
  res.saturated = (worst <= tol.eps * std::max(1.0, mu1));
  return res;
}

RealVec projector_pt_spectrum(const BipartiteVector& psi) {
  if (!psi.is_normalized())
    throw InvalidInput("projector_pt_spectrum: psi must be normalized");
  SchmidtData sd = schmidt_decompose(psi);
  const RealVec& s = sd.coefficients;
  const int d = static_cast<int>(s.size());
  const int D = psi.dims.D();

  std::vector<double> vals;
  vals.reserve(D);
  for (int a = 0; a < d; ++a) vals.push_back(s(a) * s(a));
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) {
      vals.push_back(s(a) * s(b));
      vals.push_back(-s(a) * s(b));
    }
  while (static_cast<int>(vals.size()) < D) vals.push_back(0.0);
  std::sort(vals.begin(), vals.end());

  RealVec out(D);
  for (int i = 0; i < D; ++i) out(i) = vals[i];
  return out;
}

PositiveMapRep to_positive_map(const SpectralWitnessSpec& spec) {
  validate(spec);
  PositiveMapRep rep;
  rep.dims = spec.dims;
  rep.mu1 = mu_threshold(spec, 1);
  const int dA = spec.dims.dA, dB = spec.dims.dB;
  for (int a = 1; a <= spec.L; ++a) {
    rep.weights.push_back(spec.lambdas(a - 1) + rep.mu1);
    Vec psi = spec.basis.col(a - 1);
    Mat F(dB, dA);
    for (int i = 0; i < dA; ++i)
      for (int k = 0; k < dB; ++k) F(k, i) = psi(i * dB + k);
    rep.kraus.push_back(F);
  }
  if (spec.L == 1)
    rep.kappa = k_norm_sq_from(schmidt_coeffs_sq(spec.psi(1)), 1);
  return rep;
}

Mat apply_map(const PositiveMapRep& rep, const Mat& X) {
  if (X.rows() != rep.dims.dA || X.cols() != rep.dims.dA)
    throw InvalidInput("apply_map: argument must be dA x dA");
  Mat out = rep.mu1 * X.trace() * Mat::Identity(rep.dims.dB, rep.dims.dB);
  for (std::size_t a = 0; a < rep.kraus.size(); ++a)
    out -= rep.weights[a] * rep.kraus[a] * X * rep.kraus[a].adjoint();
  return out;
}

bool is_completely_copositive(const Mat& W, const BipartiteDims& dims,
                              const Tolerance& tol) {
  if (W.rows() != dims.D() || W.cols() != dims.D())
    throw InvalidInput("is_completely_copositive: W must be D x D");
  if (!is_hermitian(W))
    throw InvalidInput("is_completely_copositive: W is not Hermitian");
  return is_psd(partial_transpose(W, dims), tol).psd;
}

}  // namespace witkit
