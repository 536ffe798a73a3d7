#include "witkit/witness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "witkit/tensor.hpp"

namespace witkit {

BipartiteVector SpectralWitnessSpec::psi(int alpha) const {
  if (alpha < 1 || alpha > dims.D())
    throw InvalidInput("psi: alpha out of range");
  return BipartiteVector{dims, basis.col(alpha - 1)};
}

void validate(const SpectralWitnessSpec& spec) {
  const int D = spec.dims.D();
  if (spec.basis.rows() != D || spec.basis.cols() != D)
    throw InvalidInput("validate: basis must be D x D");
  if (spec.lambdas.size() != D)
    throw InvalidInput("validate: lambdas must have length D");
  if (spec.L <= 0 || spec.L >= D)
    throw InvalidInput("validate: split index must satisfy 0 < L < D");
  for (int a = 0; a < D; ++a) {
    if (!(spec.lambdas(a) >= 0.0))
      throw InvalidInput("validate: lambda_" + std::to_string(a + 1) +
                         " is negative or NaN");
    if (a >= spec.L && !(spec.lambdas(a) > 0.0))
      throw InvalidInput("validate: lambda_" + std::to_string(a + 1) +
                         " above the split must be strictly positive");
  }
  Mat gram = spec.basis.adjoint() * spec.basis;
  double dev = (gram - Mat::Identity(D, D)).cwiseAbs().maxCoeff();
  if (dev > 1e-10)
    throw InvalidInput("validate: basis is not orthonormal (deviation " +
                       std::to_string(dev) + ")");
}

namespace {

/// Numerator and denominator of mu_ell, shared by mu_threshold and certify.
struct MuEval {
  double numerator;
  double denominator;
};

MuEval eval_mu(const SpectralWitnessSpec& spec, int ell) {
  if (ell < 1 || ell > spec.dims.dmin())
    throw InvalidInput("mu_threshold: level out of range");
  double num = 0.0;
  double sum_norms = 0.0;
  for (int a = 1; a <= spec.L; ++a) {
    double nsq = k_norm_sq(spec.psi(a), ell);
    num += spec.lambdas(a - 1) * nsq;
    sum_norms += nsq;
  }
  return {num, 1.0 - sum_norms};
}

}  // namespace

double mu_threshold(const SpectralWitnessSpec& spec, int ell) {
  MuEval e = eval_mu(spec, ell);
  if (!(e.denominator > 0.0))
    throw PreconditionViolation(
        "mu_threshold: negative-part k-norms saturate at level " +
            std::to_string(ell) + "; threshold undefined",
        e.denominator);
  return e.numerator / e.denominator;
}

Mat assemble_witness(const SpectralWitnessSpec& spec) {
  validate(spec);
  const int D = spec.dims.D();
  RealVec signed_l = spec.lambdas;
  for (int a = 0; a < spec.L; ++a) signed_l(a) = -signed_l(a);
  Mat W = spec.basis * signed_l.asDiagonal() * spec.basis.adjoint();
  return 0.5 * (W + W.adjoint());
}

KewCertificate certify(const SpectralWitnessSpec& spec, int k) {
  validate(spec);
  if (k < 1 || k > spec.dims.dmin())
    throw InvalidInput("certify: k out of range");

  double min_above = std::numeric_limits<double>::infinity();
  double max_above = -std::numeric_limits<double>::infinity();
  for (int a = spec.L; a < spec.dims.D(); ++a) {
    min_above = std::min(min_above, spec.lambdas(a));
    max_above = std::max(max_above, spec.lambdas(a));
  }

  KewCertificate cert;
  cert.k = k;

  MuEval ek = eval_mu(spec, k);
  cert.denom_k = ek.denominator;
  if (ek.denominator > 0.0) {
    cert.mu_k = ek.numerator / ek.denominator;
    cert.t1_holds = (min_above >= *cert.mu_k);
  }

  if (k < spec.dims.dmin()) {
    MuEval e1 = eval_mu(spec, k + 1);
    cert.denom_k_plus_1 = e1.denominator;
    if (e1.denominator > 0.0) {
      cert.mu_k_plus_1 = e1.numerator / e1.denominator;
      cert.t2_holds = (*cert.mu_k_plus_1 > max_above);
    }
  }
  return cert;
}

}  // namespace witkit
