#pragma once

#include <cstdint>
#include <vector>

#include "witkit/rng.hpp"
#include "witkit/types.hpp"

namespace witkit {

/// max|M - M^dagger| <= 1e-12 * (1 + max|M|), the repo-wide Hermiticity gate.
bool is_hermitian(const Mat& M, double rel_tol = 1e-12);

/// Kronecker product with the fixed index convention
/// (i,k),(j,l) -> (i*rowsB + k, j*colsB + l). Works for rectangular factors.
Mat kron(const Mat& A, const Mat& B);

/// Partial transpose on the B factor: entry (i,k; j,l) -> (i,l; j,k).
/// Involutive; preserves Hermiticity and trace.
Mat partial_transpose(const Mat& M, const BipartiteDims& dims);

enum class Subsystem { A, B };

/// Trace out one factor of a D x D operator. Tracing B yields dA x dA,
/// tracing A yields dB x dB; the full trace is preserved.
Mat partial_trace(const Mat& M, const BipartiteDims& dims, Subsystem traced);

struct EigResult {
  RealVec eigenvalues;  // ascending
  Mat eigenvectors;     // orthonormal columns; M = V diag(w) V^dagger
};

/// Eigendecomposition of a Hermitian matrix. Rejects non-Hermitian input.
/// No ordering promise inside degenerate blocks; downstream logic must use
/// eigenvalues or subspace projectors only.
EigResult hermitian_eig(const Mat& M);

struct PsdVerdict {
  bool psd;
  double min_eigenvalue;
};

/// PSD test with a threshold relative to the spectral scale:
/// true iff lambda_min >= -eps * max(1, ||M||_2). Always reports lambda_min.
PsdVerdict is_psd(const Mat& M, const Tolerance& tol = {});

/// Orthonormal basis of C^D distributed by orthonormalizing a complex
/// Gaussian matrix (QR with the R diagonal phase-fixed). Deterministic for
/// a fixed seed, bit for bit.
std::vector<Vec> haar_basis(int D, std::uint64_t seed);

/// The same basis packed as columns of a unitary D x D matrix.
Mat haar_unitary(int D, std::uint64_t seed);

}  // namespace witkit
