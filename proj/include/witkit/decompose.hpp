#pragma once

#include <optional>
#include <vector>

#include "witkit/witness.hpp"

namespace witkit {

/// Explicit split W = A + B with
///   A = sum_{a>L} (lambda_a - mu_1) P_a
///   B = mu_1 I - sum_{a<=L} (lambda_a + mu_1) P_a.
/// When the level-1 threshold test holds, A >= 0 and B^Gamma >= 0, which
/// exhibits W as decomposable.
struct DecompositionResult {
  Mat A;
  Mat B;
  double min_eig_A = 0.0;
  double min_eig_B_pt = 0.0;   // smallest eigenvalue of B^Gamma
  double b_min_bound = 0.0;    // mu_1 - sum_{a<=L} (lambda_a + mu_1) ||psi_a||_1^2
  bool saturated = false;      // lambda_a = mu_1 for all a > L within 1e-9 rel
};

/// Build the split and measure its positivity. Requires mu_1 to be defined
/// (positive denominator); throws PreconditionViolation otherwise.
/// b_min_bound is reported even when negative, as a diagnostic.
DecompositionResult split_ab(const SpectralWitnessSpec& spec,
                             const Tolerance& tol = {});

/// Analytic eigenvalue multiset of |psi><psi|^Gamma: {s_a^2} together with
/// {+- s_a s_b : a < b}, zero-padded to dimension D. Returned ascending.
/// Requires normalized psi.
RealVec projector_pt_spectrum(const BipartiteVector& psi);

/// The map X -> mu_1 I_B Tr X - sum_{a<=L} (mu_1 + lambda_a) F_a X F_a^dag,
/// where F_a : H_A -> H_B collects the B-side blocks of psi_a, i.e.
/// psi_a = sum_i e_i (x) (F_a e_i) with F_a(k, i) = psi_a[i*dB + k].
struct PositiveMapRep {
  double mu1 = 0.0;
  std::vector<double> weights;  // lambda_a + mu_1 for a = 1..L
  std::vector<Mat> kraus;       // F_a, each dB x dA
  std::optional<double> kappa;  // mu_1/(mu_1+lambda_1) = ||psi_1||_1^2, L=1 only
  BipartiteDims dims;
};

/// Extract the map data from a spec. Requires mu_1 defined. kappa is
/// populated only for L = 1, using the largest-squared-Schmidt-coefficient
/// form, which stays exact on flat spectra.
PositiveMapRep to_positive_map(const SpectralWitnessSpec& spec);

/// Evaluate the map on a dA x dA argument.
Mat apply_map(const PositiveMapRep& rep, const Mat& X);

/// True iff W^Gamma is PSD (the witness of a completely co-positive map).
bool is_completely_copositive(const Mat& W, const BipartiteDims& dims,
                              const Tolerance& tol = {});

}  // namespace witkit
