#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "witkit/decompose.hpp"
#include "witkit/gallery.hpp"
#include "witkit/rng.hpp"
#include "witkit/schmidt.hpp"
#include "witkit/tensor.hpp"

using namespace witkit;

namespace {

BipartiteVector random_unit(const BipartiteDims& dims, std::uint64_t seed) {
  Rng rng(seed);
  Vec v = gaussian_vector(dims.D(), rng);
  v.normalize();
  return BipartiteVector{dims, v};
}

SpectralWitnessSpec random_certified_spec(const BipartiteDims& dims,
                                          std::uint64_t seed) {
  SpectralWitnessSpec spec;
  spec.dims = dims;
  spec.basis = haar_unitary(dims.D(), seed);
  spec.lambdas = RealVec(dims.D());
  spec.L = 1;
  Rng rng(seed + 1);
  spec.lambdas(0) = rng.uniform();
  SpectralWitnessSpec probe = spec;
  for (int a = 1; a < dims.D(); ++a) probe.lambdas(a) = 1.0;
  double mu1 = mu_threshold(probe, 1);
  for (int a = 1; a < dims.D(); ++a)
    spec.lambdas(a) = mu1 * (1.0 + rng.uniform());
  return spec;
}

Mat hermitian_probe(int n, std::uint64_t seed) {
  Rng rng(seed);
  Mat G = gaussian_matrix(n, n, rng);
  return 0.5 * (G + G.adjoint());
}

/// The defining contraction: Tr_A(W (X^T (x) I_B)).
Mat map_via_trace(const Mat& W, const BipartiteDims& dims, const Mat& X) {
  Mat arg = kron(X.transpose(), Mat::Identity(dims.dB, dims.dB));
  return partial_trace(W * arg, dims, Subsystem::A);
}

}  // namespace

TEST_CASE("split_flip_is_exactly_saturated") {
  DecompositionResult res = split_ab(flip_spec());
  CHECK(res.saturated);
  CHECK(res.A.cwiseAbs().maxCoeff() == 0.0);
  CHECK(res.b_min_bound == 0.0);
  CHECK(res.min_eig_A == 0.0);
  CHECK(res.min_eig_B_pt >= -1e-12);
  Mat W = assemble_witness(flip_spec());
  CHECK((res.A + res.B - W).cwiseAbs().maxCoeff() < 1e-12);
  // Saturated case: B^Gamma is PSD, so W is the partial transpose of a
  // positive operator.
  CHECK(is_psd(partial_transpose(res.B, BipartiteDims(2, 2))).psd);
}

TEST_CASE("split_reduction_small_positive_parts") {
  for (int d : {2, 3, 4}) {
    SpectralWitnessSpec spec = reduction_spec(d);
    DecompositionResult res = split_ab(spec);
    CHECK(res.saturated);
    CHECK(res.A.cwiseAbs().maxCoeff() < 1e-12);
    CHECK(res.min_eig_A >= -1e-12);
    CHECK(res.min_eig_B_pt >= -1e-12);
    CHECK(std::abs(res.min_eig_B_pt) < 1e-12);  // flat bottom at zero
    CHECK(res.b_min_bound >= -1e-9);
    CHECK(std::abs(res.b_min_bound) < 1e-12);
    Mat W = assemble_witness(spec);
    CHECK((res.A + res.B - W).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("split_non_saturated_examples") {
  DecompositionResult ck = split_ab(cho_kye_spec({1.0, 1.0, 1.0}));
  CHECK(!ck.saturated);
  CHECK(ck.min_eig_A >= -1e-9);
  CHECK(ck.min_eig_B_pt >= -1e-9);
  Mat W = assemble_witness(cho_kye_spec({1.0, 1.0, 1.0}));
  CHECK((ck.A + ck.B - W).cwiseAbs().maxCoeff() < 1e-12);

  DecompositionResult sn = split_ab(sn_spec(3, 0.4));
  CHECK(!sn.saturated);
  CHECK(sn.min_eig_A >= -1e-12);
  CHECK(sn.min_eig_B_pt >= -1e-12);
  CHECK(sn.b_min_bound >= -1e-12);
}

TEST_CASE("split_requires_defined_threshold") {
  // Bell basis with L = 2: the squared 1-norms sum to exactly 1.
  SpectralWitnessSpec spec = flip_spec();
  const double s = 1.0 / std::sqrt(2.0);
  Mat basis = Mat::Zero(4, 4);
  basis(1, 0) = s;
  basis(2, 0) = -s;
  basis(1, 1) = s;
  basis(2, 1) = s;
  basis(0, 2) = s;
  basis(3, 2) = s;
  basis(0, 3) = s;
  basis(3, 3) = -s;
  spec.basis = basis;
  spec.L = 2;
  spec.lambdas = RealVec::Ones(4);
  CHECK_THROWS_AS(split_ab(spec), PreconditionViolation);
}

TEST_CASE("split_random_certified_specs_decompose") {
  for (int dA : {2, 3})
    for (int dB : {2, 3, 4})
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        BipartiteDims dims(dA, dB);
        SpectralWitnessSpec spec =
            random_certified_spec(dims, 1000 + 10 * seed + dA + dB);
        KewCertificate cert = certify(spec, 1);
        REQUIRE(cert.t1_holds.has_value());
        REQUIRE(*cert.t1_holds);
        DecompositionResult res = split_ab(spec);
        double scale = std::max(1.0, spec.lambdas.maxCoeff());
        CHECK(res.min_eig_A >= -1e-9 * scale);
        CHECK(res.min_eig_B_pt >= -1e-9 * scale);
        CHECK(res.b_min_bound >= -1e-9);
        CHECK(res.min_eig_B_pt >= res.b_min_bound - 1e-12);
        Mat W = assemble_witness(spec);
        CHECK((res.A + res.B - W).cwiseAbs().maxCoeff() < 1e-12 * scale);
      }
}

TEST_CASE("projector_pt_spectrum_known_multisets") {
  BipartiteDims d22(2, 2);
  Vec sv = Vec::Zero(4);
  const double s = 1.0 / std::sqrt(2.0);
  sv(1) = s;
  sv(2) = -s;
  RealVec singlet = projector_pt_spectrum(BipartiteVector{d22, sv});
  REQUIRE(singlet.size() == 4);
  CHECK(singlet(0) == doctest::Approx(-0.5).epsilon(1e-12));
  for (int i = 1; i < 4; ++i)
    CHECK(singlet(i) == doctest::Approx(0.5).epsilon(1e-12));

  // Maximally entangled d = 3: six values 1/3, three values -1/3.
  BipartiteDims d33(3, 3);
  Vec mv = Vec::Zero(9);
  for (int j = 0; j < 3; ++j) mv(j * 3 + j) = 1.0 / std::sqrt(3.0);
  RealVec me = projector_pt_spectrum(BipartiteVector{d33, mv});
  REQUIRE(me.size() == 9);
  int negatives = 0;
  for (int i = 0; i < 9; ++i) {
    CHECK(std::abs(me(i)) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    if (me(i) < 0.0) ++negatives;
  }
  CHECK(negatives == 3);  // d(d-1)/2

  Vec prod = Vec::Zero(4);
  prod(0) = 1.0;
  RealVec ps = projector_pt_spectrum(BipartiteVector{d22, prod});
  CHECK(ps(3) == doctest::Approx(1.0).epsilon(1e-12));
  for (int i = 0; i < 3; ++i) CHECK(std::abs(ps(i)) < 1e-12);

  CHECK_THROWS_AS(projector_pt_spectrum(BipartiteVector{d22, Vec(0.5 * prod)}),
                  InvalidInput);
}

TEST_CASE("projector_pt_spectrum_matches_direct_eigendecomposition") {
  for (auto dims : {BipartiteDims(2, 2), BipartiteDims(2, 3),
                    BipartiteDims(3, 3), BipartiteDims(3, 4)}) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      BipartiteVector psi = random_unit(dims, 500 + seed);
      RealVec analytic = projector_pt_spectrum(psi);
      Mat proj = psi.amplitudes * psi.amplitudes.adjoint();
      RealVec direct = hermitian_eig(partial_transpose(proj, dims)).eigenvalues;
      REQUIRE(analytic.size() == direct.size());
      CHECK((analytic - direct).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("positive_map_extraction") {
  for (int d : {2, 3, 4}) {
    PositiveMapRep rep = to_positive_map(reduction_spec(d));
    REQUIRE(rep.kappa.has_value());
    CHECK(*rep.kappa == 1.0 / d);
    REQUIRE(rep.kraus.size() == 1);
    // F_1 of the maximally entangled vector is I/sqrt(d).
    Mat expected = Mat::Identity(d, d) / std::sqrt(static_cast<double>(d));
    CHECK((rep.kraus[0] - expected).cwiseAbs().maxCoeff() == 0.0);
    CHECK(rep.weights[0] == doctest::Approx(d).epsilon(1e-12));
  }
  PositiveMapRep flip = to_positive_map(flip_spec());
  CHECK(*flip.kappa == 0.5);
  CHECK(*flip.kappa == doctest::Approx(flip.mu1 / (flip.mu1 + 1.0))
                           .epsilon(1e-10));
}

TEST_CASE("positive_map_kappa_ratio_identity") {
  // kappa equals mu_1/(mu_1 + lambda_1) for L = 1 specs.
  for (std::uint64_t seed = 600; seed < 610; ++seed) {
    SpectralWitnessSpec spec =
        random_certified_spec(BipartiteDims(3, 3), seed);
    PositiveMapRep rep = to_positive_map(spec);
    REQUIRE(rep.kappa.has_value());
    double lambda1 = spec.lambdas(0);
    CHECK(*rep.kappa ==
          doctest::Approx(rep.mu1 / (rep.mu1 + lambda1)).epsilon(1e-10));
  }
}

TEST_CASE("positive_map_product_negative_part_is_rejected") {
  // A product psi_1 saturates the level-1 norm exactly, so mu_1 is
  // undefined and extraction must refuse.
  SpectralWitnessSpec spec = flip_spec();
  Mat basis = Mat::Zero(4, 4);
  basis(0, 0) = 1.0;  // |00>, a product vector
  basis(1, 1) = 1.0;
  basis(2, 2) = 1.0;
  basis(3, 3) = 1.0;
  spec.basis = basis;
  CHECK_THROWS_AS(to_positive_map(spec), PreconditionViolation);
  CHECK_THROWS_AS(split_ab(spec), PreconditionViolation);

  // A nearby non-product vector is accepted with kappa just below 1.
  const double eps = 1e-3;
  Mat rot = Mat::Identity(4, 4);
  double c = std::cos(eps), s = std::sin(eps);
  rot(0, 0) = c;
  rot(0, 3) = -s;
  rot(3, 0) = s;
  rot(3, 3) = c;
  spec.basis = rot * basis;
  PositiveMapRep rep = to_positive_map(spec);
  REQUIRE(rep.kappa.has_value());
  double s1_sq = k_norm_sq(spec.psi(1), 1);
  CHECK(*rep.kappa == s1_sq);
  CHECK(*rep.kappa < 1.0);
  CHECK(*rep.kappa > 0.99);
}

TEST_CASE("apply_map_matches_defining_contraction_when_saturated") {
  std::vector<SpectralWitnessSpec> specs = {flip_spec(), reduction_spec(2),
                                            reduction_spec(3),
                                            cho_kye_spec({0.0, 1.0, 1.0})};
  for (const auto& spec : specs) {
    REQUIRE(split_ab(spec).saturated);
    PositiveMapRep rep = to_positive_map(spec);
    Mat W = assemble_witness(spec);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      Mat X = hermitian_probe(spec.dims.dA, 700 + seed);
      Mat via_rep = apply_map(rep, X);
      Mat via_w = map_via_trace(W, spec.dims, X);
      CHECK((via_rep - via_w).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("apply_map_matches_negative_block_in_general") {
  // Away from saturation the map encodes only the B block of the split.
  std::vector<SpectralWitnessSpec> specs = {
      sn_spec(3, 0.4), cho_kye_spec({0.5, 1.2, 1.5}),
      random_certified_spec(BipartiteDims(2, 3), 710)};
  for (const auto& spec : specs) {
    PositiveMapRep rep = to_positive_map(spec);
    DecompositionResult res = split_ab(spec);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      Mat X = hermitian_probe(spec.dims.dA, 720 + seed);
      Mat via_rep = apply_map(rep, X);
      Mat via_b = map_via_trace(res.B, spec.dims, X);
      CHECK((via_rep - via_b).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("apply_map_known_values_and_errors") {
  PositiveMapRep rep = to_positive_map(reduction_spec(3));
  // On the identity the induced map acts like Tr X * I - X up to the
  // threshold scale: (mu_1 + lambda_1)/d = 1 here.
  Mat out = apply_map(rep, Mat::Identity(3, 3));
  CHECK((out - 2.0 * Mat::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(apply_map(rep, Mat::Zero(3, 3)).cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(apply_map(rep, Mat::Zero(4, 4)), InvalidInput);
}

TEST_CASE("completely_copositive_checks") {
  BipartiteDims d22(2, 2);
  BipartiteDims d33(3, 3);
  CHECK(is_completely_copositive(assemble_witness(flip_spec()), d22));
  CHECK(is_completely_copositive(assemble_witness(reduction_spec(3)), d33));
  CHECK(is_completely_copositive(assemble_witness(cho_kye_spec({1, 1, 1})),
                                 d33));
  CHECK(!is_completely_copositive(
      assemble_witness(cho_kye_spec({1, 0.6, 0.6})), d33));
  CHECK_THROWS_AS(is_completely_copositive(Mat::Zero(5, 5), d22),
                  InvalidInput);
  Mat NH = Mat::Zero(4, 4);
  NH(0, 1) = 1.0;
  CHECK_THROWS_AS(is_completely_copositive(NH, d22), InvalidInput);
}

TEST_CASE("pt_positivity_predicate_agrees_with_matrix_check") {
  // The predicate bundles class membership with PT positivity, so it is
  // one-sided in general and exact on class members.
  BipartiteDims d33(3, 3);
  for (double a : {0.0, 0.5, 1.0, 1.5})
    for (double b : {0.5, 1.0, 2.0})
      for (double c : {0.5, 1.0, 2.0}) {
        ChoKyeParams p{a, b, c};
        ChoKyeClassification cls = cho_kye_classify(p);
        bool matrix =
            is_completely_copositive(assemble_witness(cho_kye_spec(p)), d33);
        if (cls.pt_positive) CHECK(matrix);
        if (cls.spectral_class_member) CHECK(cls.pt_positive == matrix);
      }
}
