#pragma once

#include <cstdint>

#include "witkit/tensor.hpp"

namespace witkit {

/// A bipartite state: Hermitian, unit trace, PSD (all within validation
/// tolerances: Hermitian and trace to 1e-10, min eigenvalue >= -1e-10).
struct DensityMatrix {
  BipartiteDims dims;
  Mat matrix;  // D x D
};

/// Validate and wrap; throws InvalidInput naming the violated property.
DensityMatrix make_density(const BipartiteDims& dims, Mat rho);

struct CheckVerdict {
  bool pass = false;
  double margin = 0.0;
};

/// Positivity of the partial transpose: margin is the smallest eigenvalue
/// of rho^Gamma; pass iff it clears the relative PSD threshold.
CheckVerdict ppt_check(const DensityMatrix& rho, const Tolerance& tol = {});

/// I (x) rho_B - rho >= 0 and rho_A (x) I - rho >= 0; margin is the lesser
/// of the two smallest eigenvalues.
CheckVerdict reduction_check(const DensityMatrix& rho,
                             const Tolerance& tol = {});

/// Von Neumann entropy gaps S(rho) - S(rho_A) and S(rho) - S(rho_B), in
/// nats, eigenvalues clipped at zero with the 0 log 0 = 0 convention.
/// Pass iff both gaps >= -1e-9; margin is the lesser gap.
CheckVerdict entropy_check(const DensityMatrix& rho);

/// Spectral majorization of rho by each reduction: reduced spectra are
/// zero-padded to length D, all vectors sorted descending, and every prefix
/// sum of the reduced spectrum must meet or exceed the global one within
/// 1e-9. Margin is the worst prefix gap over both sides.
CheckVerdict majorization_check(const DensityMatrix& rho);

/// Full battery in one report.
struct CriteriaReport {
  CheckVerdict ppt;
  CheckVerdict reduction;
  CheckVerdict entropic;
  CheckVerdict majorization;
};

CriteriaReport run_criteria(const DensityMatrix& rho,
                            const Tolerance& tol = {});

/// A state with PSD partial transpose: mixes a normalized Wishart draw
/// rho0 = G G^dag / Tr with the maximally mixed state, taking the largest
/// mixing weight t (20 bisection steps) that keeps rho(t)^Gamma PSD.
/// Deterministic per seed.
DensityMatrix random_ppt_state(const BipartiteDims& dims, std::uint64_t seed);

/// Convex mixture of n_terms random product pure states with random
/// weights. Deterministic per seed.
DensityMatrix random_separable_state(const BipartiteDims& dims, int n_terms,
                                     std::uint64_t seed);

/// Tr(W rho). Real for Hermitian inputs; the real part is returned.
double detect(const Mat& W, const DensityMatrix& rho);

}  // namespace witkit
