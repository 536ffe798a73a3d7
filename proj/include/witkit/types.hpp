#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace witkit {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RealVec = Eigen::VectorXd;

/// Thrown when an argument violates an operation's input contract
/// (bad dimensions, malformed file, out-of-range index, ...).
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thrown when structurally valid data fails a mathematical precondition,
/// e.g. the mu-threshold denominator is not positive. Carries the
/// offending value so callers can report it.
struct PreconditionViolation : std::domain_error {
  double value;
  PreconditionViolation(const std::string& msg, double v)
      : std::domain_error(msg), value(v) {}
};

/// Factor dimensions of a bipartite space H_A (x) H_B.
/// Index convention, fixed repo-wide: |ij> <-> i*dB + j (row-major,
/// B index fastest).
struct BipartiteDims {
  int dA = 0;
  int dB = 0;

  BipartiteDims() = default;
  BipartiteDims(int a, int b) : dA(a), dB(b) {
    if (a < 1 || b < 1)
      throw InvalidInput("BipartiteDims: factor dimensions must be positive");
  }

  int D() const { return dA * dB; }
  int dmin() const { return dA < dB ? dA : dB; }

  friend bool operator==(const BipartiteDims&, const BipartiteDims&) = default;
};

/// Relative positivity tolerance: a Hermitian M counts as PSD when its
/// smallest eigenvalue is >= -eps * max(1, ||M||). Relative thresholds are
/// needed because witness scales vary widely across the gallery.
struct Tolerance {
  double eps = 1e-9;
};

}  // namespace witkit
