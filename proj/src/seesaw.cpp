#include "witkit/seesaw.hpp"

#include <cmath>
#include <limits>

#include "witkit/rng.hpp"
#include "witkit/tensor.hpp"

namespace witkit {

namespace {

Mat thin_frame(const Mat& X) {
  Eigen::HouseholderQR<Mat> qr(X);
  return qr.householderQ() * Mat::Identity(X.rows(), X.cols());
}

struct EigPair {
  double value;
  Vec vector;
};

EigPair min_eigpair(const Mat& H) {
  Eigen::SelfAdjointEigenSolver<Mat> solver(0.5 * (H + H.adjoint()));
  return {solver.eigenvalues()(0), solver.eigenvectors().col(0)};
}

/// One descent from a given A-side frame. Returns the converged objective
/// and phi. Each half-step solves the restricted problem exactly: with the
/// A frame fixed, phi = sum_j a_j (x) u_j and <phi|W|phi> is the quadratic
/// form of kron(Qa, I)^dag W kron(Qa, I) on the stacked u, minimized by its
/// bottom unit eigenvector. The thin-QR re-framing keeps the previous
/// iterate inside the new search space, so the objective never increases.
SeesawResult descend(const Mat& W, const BipartiteDims& dims, int k, Mat Qa,
                     int max_sweeps) {
  const int dA = dims.dA, dB = dims.dB;
  const Mat IA = Mat::Identity(dA, dA);
  const Mat IB = Mat::Identity(dB, dB);
  double prev = std::numeric_limits<double>::infinity();
  SeesawResult out;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    // B half-step: optimize the stacked B-side coefficients u[j*dB + p].
    Mat PB = kron(Qa, IB);  // D x (k dB)
    EigPair eb = min_eigpair(PB.adjoint() * W * PB);
    Mat U(dB, k);
    for (int j = 0; j < k; ++j)
      for (int p = 0; p < dB; ++p) U(p, j) = eb.vector(j * dB + p);
    Mat Qb = thin_frame(U);

    // A half-step: optimize the stacked A-side coefficients v[i*k + j].
    Mat PA = kron(IA, Qb);  // D x (dA k)
    EigPair ea = min_eigpair(PA.adjoint() * W * PA);
    Mat V(dA, k);
    for (int i = 0; i < dA; ++i)
      for (int j = 0; j < k; ++j) V(i, j) = ea.vector(i * k + j);

    out.value = ea.value;
    out.minimizer = PA * ea.vector;  // normalized: PA has orthonormal columns
    Qa = thin_frame(V);
    if (std::abs(out.value - prev) <= 1e-10 * std::max(1.0, std::abs(out.value)))
      break;
    prev = out.value;
  }
  return out;
}

}  // namespace

SeesawResult min_rank_k_expectation(const Mat& W, const BipartiteDims& dims,
                                    int k, int restarts, std::uint64_t seed) {
  if (W.rows() != dims.D() || W.cols() != dims.D())
    throw InvalidInput("min_rank_k_expectation: W must be D x D");
  if (k < 1 || k > dims.dmin())
    throw InvalidInput("min_rank_k_expectation: k out of range");
  if (restarts < 1)
    throw InvalidInput("min_rank_k_expectation: restarts must be >= 1");
  if (!is_hermitian(W))
    throw InvalidInput("min_rank_k_expectation: W is not Hermitian");

  const int max_sweeps = 200;
  SeesawResult best;
  best.value = std::numeric_limits<double>::infinity();

  // First start: the A-side frame of the bottom eigenvector of W, truncated
  // to its top-k Schmidt directions. When the global minimizer is close to
  // a rank-k truncation of that eigenvector this start converges in a few
  // sweeps; the random restarts cover everything else.
  {
    EigPair ground = min_eigpair(W);
    BipartiteVector g{dims, ground.vector};
    SchmidtData sd = schmidt_decompose(g);
    Mat Qa = sd.left.leftCols(k);
    SeesawResult r = descend(W, dims, k, Qa, max_sweeps);
    if (r.value < best.value) best = r;
  }

  for (int r = 1; r < restarts; ++r) {
    Rng rng(seed + static_cast<std::uint64_t>(r));
    Mat Qa = thin_frame(gaussian_matrix(dims.dA, k, rng));
    SeesawResult res = descend(W, dims, k, Qa, max_sweeps);
    if (res.value < best.value) best = res;
  }
  return best;
}

}  // namespace witkit
