#pragma once

#include <cstdint>

#include "witkit/schmidt.hpp"

namespace witkit {

struct SeesawResult {
  double value = 0.0;  // best objective found
  Vec minimizer;       // normalized phi attaining it, Schmidt rank <= k
};

/// See-saw minimization of <phi|W|phi> over normalized phi with Schmidt
/// rank <= k. With the A-side frame fixed, phi = sum_j a_j (x) u_j and the
/// objective is a Hermitian quadratic form on the stacked u coefficients
/// (dimension k*dB); its bottom eigenvector is the exact half-step optimum.
/// The B-side step is symmetric. Each half-step re-orthonormalizes the
/// optimized factors by thin QR, whose span contains the previous iterate,
/// so the objective is monotone nonincreasing. Deterministic per seed;
/// restarts cover local minima.
SeesawResult min_rank_k_expectation(const Mat& W, const BipartiteDims& dims,
                                    int k, int restarts = 16,
                                    std::uint64_t seed = 0);

}  // namespace witkit
