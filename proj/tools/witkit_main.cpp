// Command-line front end: witness construction, certification,
// decomposition, detection, norms, the criteria battery, and seeded random
// generation. Reports are line-oriented "key: value" text on stdout;
// diagnostics go to stderr; exit code 0 means computed, 2 means invalid
// input. Verdicts live in the report body, never in the exit code.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "witkit/criteria.hpp"
#include "witkit/decompose.hpp"
#include "witkit/gallery.hpp"
#include "witkit/io.hpp"
#include "witkit/schmidt.hpp"
#include "witkit/witness.hpp"

namespace {

using namespace witkit;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SpectralWitnessSpec load_spec(const std::string& path) {
  std::istringstream in(slurp(path));
  return read_spec(in);
}

Mat load_matrix(const std::string& path) {
  std::istringstream in(slurp(path));
  return read_matrix(in);
}

BipartiteVector load_vector(const std::string& path) {
  std::istringstream in(slurp(path));
  return read_bipartite_vector(in);
}

DensityMatrix load_state(const std::string& path) {
  std::istringstream in(slurp(path));
  return read_state(in);
}

const char* bool_word(bool b) { return b ? "true" : "false"; }

void print_optional(const std::string& key, const std::optional<double>& v) {
  std::cout << key << ": " << (v ? format_double(*v) : "not_applicable")
            << '\n';
}

void print_optional(const std::string& key, const std::optional<bool>& v) {
  std::cout << key << ": " << (v ? bool_word(*v) : "not_applicable") << '\n';
}

void run_certify(const std::string& spec_path, int k) {
  SpectralWitnessSpec spec = load_spec(spec_path);
  KewCertificate cert = certify(spec, k);
  std::cout << "k: " << cert.k << '\n';
  std::cout << "denom_" << k << ": " << format_double(cert.denom_k) << '\n';
  print_optional("mu_" + std::to_string(k), cert.mu_k);
  print_optional("t1", cert.t1_holds);
  print_optional("denom_" + std::to_string(k + 1), cert.denom_k_plus_1);
  print_optional("mu_" + std::to_string(k + 1), cert.mu_k_plus_1);
  print_optional("t2", cert.t2_holds);
}

void run_decompose(const std::string& spec_path, double tol_eps) {
  SpectralWitnessSpec spec = load_spec(spec_path);
  DecompositionResult res = split_ab(spec, Tolerance{tol_eps});
  std::cout << "min_eig_A: " << format_double(res.min_eig_A) << '\n';
  std::cout << "min_eig_B_pt: " << format_double(res.min_eig_B_pt) << '\n';
  std::cout << "b_min_bound: " << format_double(res.b_min_bound) << '\n';
  std::cout << "saturated: " << bool_word(res.saturated) << '\n';
  std::cout << "A:\n";
  write_matrix(std::cout, res.A);
  std::cout << "B:\n";
  write_matrix(std::cout, res.B);
}

void run_knorm(const std::string& vec_path, int k, bool oracle, int restarts,
               std::uint64_t seed) {
  BipartiteVector v = load_vector(vec_path);
  if (!v.is_normalized())
    throw InvalidInput("knorm: vector must be normalized");
  std::cout << "k: " << k << '\n';
  std::cout << "k_norm_sq: " << format_double(k_norm_sq(v, k)) << '\n';
  if (oracle)
    std::cout << "oracle_k_norm_sq: "
              << format_double(k_norm_sq_oracle(v, k, restarts, seed)) << '\n';
}

void run_detect(const std::string& witness_path, const std::string& state_path) {
  DensityMatrix rho = load_state(state_path);
  std::string raw = slurp(witness_path);
  Mat W;
  if (raw.rfind("dA:", 0) == 0) {
    std::istringstream in(raw);
    W = assemble_witness(read_spec(in));
  } else {
    std::istringstream in(raw);
    W = read_matrix(in);
  }
  double value = detect(W, rho);
  std::cout << "expectation: " << format_double(value) << '\n';
  std::cout << "detected: " << bool_word(value < 0.0) << '\n';
}

void run_tests(const std::string& state_path, double tol_eps) {
  DensityMatrix rho = load_state(state_path);
  CriteriaReport rep = run_criteria(rho, Tolerance{tol_eps});
  std::cout << "ppt: " << bool_word(rep.ppt.pass) << '\n';
  std::cout << "ppt_margin: " << format_double(rep.ppt.margin) << '\n';
  std::cout << "reduction: " << bool_word(rep.reduction.pass) << '\n';
  std::cout << "reduction_margin: " << format_double(rep.reduction.margin)
            << '\n';
  std::cout << "entropic: " << bool_word(rep.entropic.pass) << '\n';
  std::cout << "entropic_margin: " << format_double(rep.entropic.margin)
            << '\n';
  std::cout << "majorization: " << bool_word(rep.majorization.pass) << '\n';
  std::cout << "majorization_margin: "
            << format_double(rep.majorization.margin) << '\n';
}

/// Random spec: Haar basis, magnitudes below the split uniform in [0,1),
/// above the split in [mu_1, 2 mu_1) when mu_1 is defined and positive
/// (which makes the level-1 test hold by construction), else in [0.5, 1.5).
SpectralWitnessSpec random_witness(int dA, int dB, int L, std::uint64_t seed) {
  BipartiteDims dims(dA, dB);
  const int D = dims.D();
  if (L <= 0 || L >= D)
    throw InvalidInput("random-witness: L must satisfy 0 < L < dA*dB");
  SpectralWitnessSpec spec;
  spec.dims = dims;
  spec.basis = haar_unitary(D, seed);
  spec.lambdas = RealVec(D);
  spec.L = L;
  Rng rng(seed + 1);
  for (int a = 0; a < L; ++a) spec.lambdas(a) = rng.uniform();

  std::optional<double> mu1;
  {
    SpectralWitnessSpec probe = spec;
    for (int a = L; a < D; ++a) probe.lambdas(a) = 1.0;
    try {
      mu1 = mu_threshold(probe, 1);
    } catch (const PreconditionViolation&) {
    }
  }
  for (int a = L; a < D; ++a) {
    double u = rng.uniform();
    spec.lambdas(a) =
        (mu1 && *mu1 > 0.0) ? *mu1 * (1.0 + u) : 0.5 + u;
  }
  validate(spec);
  return spec;
}

int dispatch(CLI::App& app, int argc, char** argv) {
  // gallery
  auto* gallery = app.add_subcommand("gallery", "emit a named witness spec");
  gallery->require_subcommand(1);
  auto* g_flip = gallery->add_subcommand("flip", "swap witness on 2x2");
  int g_d = 0;
  auto* g_red =
      gallery->add_subcommand("reduction", "reduction witness on d x d");
  g_red->add_option("--d", g_d, "local dimension")->required();
  double g_p = 0.0;
  auto* g_sn = gallery->add_subcommand(
      "sn", "one-parameter reduction family on d x d");
  g_sn->add_option("--d", g_d, "local dimension")->required();
  g_sn->add_option("--p", g_p, "family parameter")->required();
  ChoKyeParams ck;
  auto* g_ck =
      gallery->add_subcommand("chokye", "three-parameter family on 3x3");
  g_ck->add_option("--a", ck.a, "diagonal parameter a")->required();
  g_ck->add_option("--b", ck.b, "diagonal parameter b")->required();
  g_ck->add_option("--c", ck.c, "diagonal parameter c")->required();

  // certify
  std::string spec_path;
  int k = 1;
  auto* c_cmd = app.add_subcommand("certify", "threshold tests at level k");
  c_cmd->add_option("--spec", spec_path, "witness spec file")->required();
  c_cmd->add_option("--k", k, "level")->required();

  // decompose
  std::string d_spec;
  auto* d_cmd =
      app.add_subcommand("decompose", "explicit split W = A + B");
  d_cmd->add_option("--spec", d_spec, "witness spec file")->required();

  // knorm
  std::string kn_vec;
  int kn_k = 1;
  bool kn_oracle = false;
  int kn_restarts = 64;
  std::uint64_t kn_seed = 0;
  auto* kn_cmd = app.add_subcommand("knorm", "squared k-norm of a vector");
  kn_cmd->add_option("--vec", kn_vec, "bipartite vector file")->required();
  kn_cmd->add_option("--k", kn_k, "level")->required();
  kn_cmd->add_flag("--oracle", kn_oracle, "also run the see-saw oracle");
  kn_cmd->add_option("--restarts", kn_restarts, "oracle restarts");
  kn_cmd->add_option("--seed", kn_seed, "oracle seed");

  // detect
  std::string det_witness, det_state;
  auto* det_cmd =
      app.add_subcommand("detect", "expectation of a witness on a state");
  det_cmd->add_option("--witness", det_witness, "witness spec or matrix file")
      ->required();
  det_cmd->add_option("--state", det_state, "state file")->required();

  // tests
  std::string t_state;
  auto* t_cmd =
      app.add_subcommand("tests", "separability criteria battery");
  t_cmd->add_option("--state", t_state, "state file")->required();

  // random-witness
  int rw_dA = 0, rw_dB = 0, rw_L = 0;
  std::uint64_t rw_seed = 0;
  auto* rw_cmd =
      app.add_subcommand("random-witness", "seeded random witness spec");
  rw_cmd->add_option("--dA", rw_dA, "dimension of the first factor")
      ->required();
  rw_cmd->add_option("--dB", rw_dB, "dimension of the second factor")
      ->required();
  rw_cmd->add_option("--L", rw_L, "split index")->required();
  rw_cmd->add_option("--seed", rw_seed, "seed")->required();

  // random-state
  int rs_dA = 0, rs_dB = 0, rs_terms = 0;
  std::uint64_t rs_seed = 0;
  bool rs_ppt = false, rs_sep = false;
  auto* rs_cmd = app.add_subcommand("random-state", "seeded random state");
  rs_cmd->add_option("--dA", rs_dA, "dimension of the first factor")
      ->required();
  rs_cmd->add_option("--dB", rs_dB, "dimension of the second factor")
      ->required();
  rs_cmd->add_option("--seed", rs_seed, "seed")->required();
  rs_cmd->add_flag("--ppt", rs_ppt, "state with PSD partial transpose");
  rs_cmd->add_flag("--separable", rs_sep, "mixture of product pure states");
  rs_cmd->add_option("--terms", rs_terms, "product terms (with --separable)");

  // map
  std::string m_spec, m_input;
  auto* m_cmd =
      app.add_subcommand("map", "apply the induced positive map");
  m_cmd->add_option("--spec", m_spec, "witness spec file")->required();
  m_cmd->add_option("--input", m_input, "dA x dA matrix file")->required();

  double tol_eps = 1e-9;
  app.add_option("--tol", tol_eps,
                 "tolerance threaded to positivity verdicts");
  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  if (gallery->parsed()) {
    SpectralWitnessSpec spec;
    if (g_flip->parsed()) spec = flip_spec();
    else if (g_red->parsed()) spec = reduction_spec(g_d);
    else if (g_sn->parsed()) spec = sn_spec(g_d, g_p);
    else spec = cho_kye_spec(ck);
    write_spec(std::cout, spec);
  } else if (c_cmd->parsed()) {
    run_certify(spec_path, k);
  } else if (d_cmd->parsed()) {
    run_decompose(d_spec, tol_eps);
  } else if (kn_cmd->parsed()) {
    run_knorm(kn_vec, kn_k, kn_oracle, kn_restarts, kn_seed);
  } else if (det_cmd->parsed()) {
    run_detect(det_witness, det_state);
  } else if (t_cmd->parsed()) {
    run_tests(t_state, tol_eps);
  } else if (rw_cmd->parsed()) {
    write_spec(std::cout, random_witness(rw_dA, rw_dB, rw_L, rw_seed));
  } else if (rs_cmd->parsed()) {
    if (rs_ppt == rs_sep)
      throw InvalidInput("random-state: pass exactly one of --ppt, --separable");
    BipartiteDims dims(rs_dA, rs_dB);
    DensityMatrix rho =
        rs_ppt ? random_ppt_state(dims, rs_seed)
               : random_separable_state(dims, rs_terms, rs_seed);
    write_state(std::cout, rho);
  } else if (m_cmd->parsed()) {
    PositiveMapRep rep = to_positive_map(load_spec(m_spec));
    Mat X = load_matrix(m_input);
    write_matrix(std::cout, apply_map(rep, X));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral entanglement-witness toolkit"};
  try {
    return dispatch(app, argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
