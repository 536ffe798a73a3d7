#pragma once

#include <optional>

#include "witkit/schmidt.hpp"

namespace witkit {

/// Spectral data defining a candidate witness W = W_plus - W_minus with
/// W_minus = sum_{a<=L} lambda_a P_a and W_plus = sum_{a>L} lambda_a P_a,
/// where P_a projects onto basis column a.
struct SpectralWitnessSpec {
  BipartiteDims dims;
  Mat basis;        // D x D, column a-1 holds psi_a, orthonormal
  RealVec lambdas;  // length D; nonnegative, strictly positive above L
  int L = 0;        // split index, 0 < L < D

  /// Basis column alpha (1-based) as a bipartite vector.
  BipartiteVector psi(int alpha) const;
};

/// Check every structural invariant of the spec; throws InvalidInput naming
/// the first violation. Orthonormality is validated, never repaired:
/// silently re-orthogonalizing would change the witness under scrutiny.
void validate(const SpectralWitnessSpec& spec);

/// mu_ell = [sum_{a<=L} lambda_a ||psi_a||_ell^2] /
///          [1 - sum_{a<=L} ||psi_a||_ell^2].
/// Zero-magnitude modes below the split contribute nothing to the numerator
/// but their norms still enter the denominator. Throws PreconditionViolation
/// carrying the denominator when it is <= 0, and InvalidInput when ell is
/// outside [1, min(dA,dB)].
double mu_threshold(const SpectralWitnessSpec& spec, int ell);

/// W = sum_{a>L} lambda_a P_a - sum_{a<=L} lambda_a P_a. Hermitian with
/// eigenvalues {-lambda_a : a <= L} united with {lambda_a : a > L}.
Mat assemble_witness(const SpectralWitnessSpec& spec);

/// Certification record at level k. The threshold tests are
///   t1: min_{a>L} lambda_a >= mu_k      (then W is a k-EW)
///   t2: mu_{k+1} > max_{a>L} lambda_a   (then W is not a (k+1)-EW)
/// evaluated with exact comparisons on the computed doubles; t1 non-strict,
/// t2 strict. A mu field is present only when its denominator is positive;
/// absent fields mean the test is not applicable at that level.
struct KewCertificate {
  int k = 0;
  double denom_k = 0.0;
  std::optional<double> mu_k;
  std::optional<bool> t1_holds;
  std::optional<double> denom_k_plus_1;  // absent when k = min(dA,dB)
  std::optional<double> mu_k_plus_1;
  std::optional<bool> t2_holds;
};

/// Evaluate both threshold tests at level k (1 <= k <= min(dA,dB)).
KewCertificate certify(const SpectralWitnessSpec& spec, int k);

}  // namespace witkit
