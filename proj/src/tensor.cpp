#include "witkit/tensor.hpp"

#include <cmath>

namespace witkit {

bool is_hermitian(const Mat& M, double rel_tol) {
  if (M.rows() != M.cols()) return false;
  double scale = 1.0 + M.cwiseAbs().maxCoeff();
  return (M - M.adjoint()).cwiseAbs().maxCoeff() <= rel_tol * scale;
}

Mat kron(const Mat& A, const Mat& B) {
  Mat out(A.rows() * B.rows(), A.cols() * B.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return out;
}

static void require_square_D(const Mat& M, const BipartiteDims& dims,
                             const char* op) {
  if (M.rows() != dims.D() || M.cols() != dims.D())
    throw InvalidInput(std::string(op) + ": matrix must be D x D with D = dA*dB");
}

Mat partial_transpose(const Mat& M, const BipartiteDims& dims) {
  require_square_D(M, dims, "partial_transpose");
  const int dA = dims.dA, dB = dims.dB;
  Mat out(dims.D(), dims.D());
  for (int i = 0; i < dA; ++i)
    for (int j = 0; j < dA; ++j)
      for (int k = 0; k < dB; ++k)
        for (int l = 0; l < dB; ++l)
          out(i * dB + k, j * dB + l) = M(i * dB + l, j * dB + k);
  return out;
}

Mat partial_trace(const Mat& M, const BipartiteDims& dims, Subsystem traced) {
  require_square_D(M, dims, "partial_trace");
  const int dA = dims.dA, dB = dims.dB;
  if (traced == Subsystem::B) {
    Mat out = Mat::Zero(dA, dA);
    for (int i = 0; i < dA; ++i)
      for (int j = 0; j < dA; ++j)
        for (int k = 0; k < dB; ++k) out(i, j) += M(i * dB + k, j * dB + k);
    return out;
  }
  Mat out = Mat::Zero(dB, dB);
  for (int k = 0; k < dB; ++k)
    for (int l = 0; l < dB; ++l)
      for (int i = 0; i < dA; ++i) out(k, l) += M(i * dB + k, i * dB + l);
  return out;
}

EigResult hermitian_eig(const Mat& M) {
  if (!is_hermitian(M)) throw InvalidInput("hermitian_eig: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Mat> solver(M);
  if (solver.info() != Eigen::Success)
    throw InvalidInput("hermitian_eig: eigensolver failed to converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

PsdVerdict is_psd(const Mat& M, const Tolerance& tol) {
  EigResult eig = hermitian_eig(M);
  double lo = eig.eigenvalues(0);
  double hi = eig.eigenvalues(eig.eigenvalues.size() - 1);
  double spectral_norm = std::max(std::abs(lo), std::abs(hi));
  double threshold = -tol.eps * std::max(1.0, spectral_norm);
  return {lo >= threshold, lo};
}

Mat haar_unitary(int D, std::uint64_t seed) {
  if (D < 1) throw InvalidInput("haar_unitary: D must be >= 1");
  Rng rng(seed);
  Mat G = gaussian_matrix(D, D, rng);
  Eigen::HouseholderQR<Mat> qr(G);
  Mat Q = qr.householderQ() * Mat::Identity(D, D);
  Mat R = qr.matrixQR().template triangularView<Eigen::Upper>();
  // Fix the phase freedom so the result is a deterministic function of G:
  // rotate each column to make the corresponding R diagonal real positive.
  for (int j = 0; j < D; ++j) {
    cplx r = R(j, j);
    double m = std::abs(r);
    cplx phase = (m > 0.0) ? r / m : cplx(1.0, 0.0);
    Q.col(j) *= phase;
  }
  return Q;
}

std::vector<Vec> haar_basis(int D, std::uint64_t seed) {
  Mat Q = haar_unitary(D, seed);
  std::vector<Vec> basis;
  basis.reserve(D);
  for (int j = 0; j < D; ++j) basis.push_back(Q.col(j));
  return basis;
}

}  // namespace witkit
