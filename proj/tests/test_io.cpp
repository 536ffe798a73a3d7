#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "witkit/criteria.hpp"
#include "witkit/gallery.hpp"
#include "witkit/io.hpp"
#include "witkit/rng.hpp"
#include "witkit/tensor.hpp"

using namespace witkit;

namespace {

double reparse(double x) {
  std::istringstream is(format_double(x));
  double y = 0.0;
  is >> y;
  return y;
}

}  // namespace

TEST_CASE("format_double_round_trips_bitwise") {
  const double values[] = {0.0,
                           1.0,
                           -1.0,
                           1.0 / 3.0,
                           -2.0 / 3.0,
                           1e-17,
                           -1e300,
                           std::numeric_limits<double>::min(),
                           std::numeric_limits<double>::denorm_min(),
                           std::sqrt(2.0),
                           0.1 + 0.2};
  for (double x : values) CHECK(reparse(x) == x);
}

TEST_CASE("matrix_round_trip_is_exact") {
  Rng rng(5);
  Mat M = gaussian_matrix(3, 5, rng);
  std::stringstream ss;
  write_matrix(ss, M);
  Mat back = read_matrix(ss);
  REQUIRE(back.rows() == 3);
  REQUIRE(back.cols() == 5);
  CHECK((back - M).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("vector_round_trip_is_exact") {
  BipartiteDims dims(2, 3);
  Rng rng(6);
  Vec v = gaussian_vector(6, rng);
  v.normalize();
  BipartiteVector psi{dims, v};
  std::stringstream ss;
  write_bipartite_vector(ss, psi);
  BipartiteVector back = read_bipartite_vector(ss);
  CHECK(back.dims.dA == 2);
  CHECK(back.dims.dB == 3);
  CHECK((back.amplitudes - v).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("spec_round_trip_is_exact") {
  for (const auto& spec :
       {flip_spec(), reduction_spec(3), cho_kye_spec({1.0, 1.0, 0.0})}) {
    std::stringstream ss;
    write_spec(ss, spec);
    SpectralWitnessSpec back = read_spec(ss);
    CHECK(back.dims.dA == spec.dims.dA);
    CHECK(back.dims.dB == spec.dims.dB);
    CHECK(back.L == spec.L);
    CHECK((back.lambdas - spec.lambdas).cwiseAbs().maxCoeff() == 0.0);
    CHECK((back.basis - spec.basis).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("state_round_trip_is_exact") {
  DensityMatrix rho = random_ppt_state(BipartiteDims(2, 3), 9);
  std::stringstream ss;
  write_state(ss, rho);
  DensityMatrix back = read_state(ss);
  CHECK(back.dims.dA == 2);
  CHECK(back.dims.dB == 3);
  CHECK((back.matrix - rho.matrix).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("malformed_matrix_inputs_are_rejected") {
  auto parse = [](const std::string& text) {
    std::istringstream is(text);
    return read_matrix(is);
  };
  CHECK_NOTHROW(parse("rows: 1\ncols: 2\nre: 1 2\nim: 0 0\n"));
  // Misspelled key.
  CHECK_THROWS_AS(parse("rows: 1\ncol: 2\nre: 1 2\nim: 0 0\n"), InvalidInput);
  // Too few entries on a payload line.
  CHECK_THROWS_AS(parse("rows: 1\ncols: 2\nre: 1\nim: 0 0\n"), InvalidInput);
  // Trailing junk on a payload line.
  CHECK_THROWS_AS(parse("rows: 1\ncols: 2\nre: 1 2 3\nim: 0 0\n"),
                  InvalidInput);
  CHECK_THROWS_AS(parse("rows: 1\ncols: 2\nre: 1 2\nim: 0 0 extra\n"),
                  InvalidInput);
  // Non-numeric and non-positive shapes.
  CHECK_THROWS_AS(parse("rows: x\ncols: 2\nre: 1 2\nim: 0 0\n"), InvalidInput);
  CHECK_THROWS_AS(parse("rows: 0\ncols: 2\nre:\nim:\n"), InvalidInput);
  // Truncated file.
  CHECK_THROWS_AS(parse("rows: 1\ncols: 2\nre: 1 2\n"), InvalidInput);
}

TEST_CASE("malformed_vector_and_spec_inputs_are_rejected") {
  auto parse_vec = [](const std::string& text) {
    std::istringstream is(text);
    return read_bipartite_vector(is);
  };
  CHECK_NOTHROW(parse_vec("dA: 2\ndB: 2\nre: 1 0 0 0\nim: 0 0 0 0\n"));
  CHECK_THROWS_AS(parse_vec("dA: -2\ndB: 2\nre: 1 0\nim: 0 0\n"),
                  InvalidInput);
  CHECK_THROWS_AS(parse_vec("dA: 2\ndB: 2\nre: 1 0 0 0\nim: 0 0\n"),
                  InvalidInput);

  std::stringstream good;
  write_spec(good, flip_spec());
  std::string text = good.str();

  // Corrupt one of the interior block markers.
  std::string bad = text;
  auto pos = bad.find("vector:");
  REQUIRE(pos != std::string::npos);
  bad.replace(pos, 7, "vektor:");
  std::istringstream bad_is(bad);
  CHECK_THROWS_AS(read_spec(bad_is), InvalidInput);

  // Drop the final line: the last block is truncated.
  std::string short_text = text.substr(0, text.rfind("im:"));
  std::istringstream short_is(short_text);
  CHECK_THROWS_AS(read_spec(short_is), InvalidInput);

  // An interior block whose dimensions disagree with the header.
  pos = text.find("dA: 2", text.find("vector:"));
  REQUIRE(pos != std::string::npos);
  std::string mismatched = text;
  mismatched.replace(pos, 5, "dA: 4");
  std::istringstream mis_is(mismatched);
  CHECK_THROWS_AS(read_spec(mis_is), InvalidInput);
}

TEST_CASE("state_reader_validates_the_density_matrix") {
  DensityMatrix rho =
      make_density(BipartiteDims(2, 2), Mat(0.25 * Mat::Identity(4, 4)));
  std::stringstream ss;
  write_state(ss, rho);
  std::string text = ss.str();

  // Scaling one diagonal entry breaks the unit trace.
  auto pos = text.find("0.25");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 4, "0.75");
  std::istringstream bad(text);
  CHECK_THROWS_AS(read_state(bad), InvalidInput);

  // A state body must be square.
  std::istringstream nonsquare(
      "dA: 2\ndB: 2\nrows: 4\ncols: 3\n"
      "re: 1 0 0 0 0 0 0 0 0 0 0 0\nim: 0 0 0 0 0 0 0 0 0 0 0 0\n");
  CHECK_THROWS_AS(read_state(nonsquare), InvalidInput);
}
