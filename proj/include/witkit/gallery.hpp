#pragma once

#include "witkit/witness.hpp"

namespace witkit {

/// The flip (swap) witness on 2 (x) 2: L = 1, all magnitudes 1, negative
/// part spanned by the singlet. Assembles to the permutation matrix that
/// swaps the two factors.
SpectralWitnessSpec flip_spec();

/// The reduction-map witness on d (x) d: L = 1, lambda_1 = d-1 on the
/// maximally entangled vector, all other magnitudes 1. Assembles to
/// I - d P+ where P+ projects onto (1/sqrt(d)) sum |jj>. The completion
/// basis (phase-twisted maximally entangled vectors plus the off-diagonal
/// products) is fixed deterministically; any orthonormal completion gives
/// the same witness because the upper spectrum is flat.
SpectralWitnessSpec reduction_spec(int d);

/// One-parameter family on d (x) d: the reduction spec with lambda_1
/// replaced by p*d - 1. Certifies as a k-EW exactly for p <= 1/k. Requires
/// p*d >= 1 (otherwise lambda_1 would be negative).
SpectralWitnessSpec sn_spec(int d, double p);

struct ChoKyeParams {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

/// Three-parameter witness family on 3 (x) 3 with diagonal (a,b,c,c,a,b,b,c,a)
/// and -1 entries coupling the |ii> levels. Spectral data: 2-a on the
/// maximally entangled vector, a+1 on its two phase-twisted partners, b on
/// |01>,|12>,|20>, c on |10>,|21>,|02>. Requires 0 <= a <= 2 and b, c >= 0.
/// Basis columns with zero magnitude are ordered directly after the first
/// vector and the split index enlarged to cover them, so the stored spec
/// always satisfies the strict-positivity-above-the-split invariant while
/// assembling to the same matrix.
SpectralWitnessSpec cho_kye_spec(const ChoKyeParams& p);

/// Region predicates for the three-parameter family, each evaluated
/// literally on doubles.
struct ChoKyeClassification {
  bool is_ew = false;                  // 0<=a<2, a+b+c>=2, (a<=1 -> bc>=(1-a)^2)
  bool spectral_class_member = false;  // 0<=a<2 and b,c >= (2-a)/2
  bool is_decomposable_region = false; // a>=0 and bc >= ((2-a)/2)^2
  bool is_2ew_class = false;           // 1<=a<2 and b,c >= 2(2-a)
  bool pt_positive = false;            // b,c >= (2-a)/2 and bc >= 1
};

ChoKyeClassification cho_kye_classify(const ChoKyeParams& p);

}  // namespace witkit
