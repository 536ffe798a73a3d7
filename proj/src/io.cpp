#include "witkit/io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

namespace witkit {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

namespace {

std::string read_line(std::istream& is, const char* context) {
  std::string line;
  if (!std::getline(is, line))
    throw InvalidInput(std::string("unexpected end of input reading ") +
                       context);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

/// Read one "key: payload" line; returns the payload.
std::string expect_key(std::istream& is, const std::string& key) {
  std::string line = read_line(is, key.c_str());
  const std::string prefix = key + ":";
  if (line.compare(0, prefix.size(), prefix) != 0)
    throw InvalidInput("expected '" + key + ":' line, got '" + line + "'");
  return line.substr(prefix.size());
}

std::vector<double> parse_doubles(const std::string& payload, int count,
                                  const std::string& key) {
  std::istringstream ss(payload);
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i)
    if (!(ss >> out[i]))
      throw InvalidInput("field '" + key + "' needs " + std::to_string(count) +
                         " numbers");
  std::string tail;
  if (ss >> tail)
    throw InvalidInput("field '" + key + "' has trailing content");
  return out;
}

int parse_int(const std::string& payload, const std::string& key) {
  std::istringstream ss(payload);
  int v = 0;
  std::string tail;
  if (!(ss >> v) || (ss >> tail))
    throw InvalidInput("field '" + key + "' must be a single integer");
  return v;
}

void write_doubles(std::ostream& os, const char* key, const double* data,
                   int count) {
  os << key << ":";
  for (int i = 0; i < count; ++i) os << ' ' << format_double(data[i]);
  os << '\n';
}

/// Shared body of the matrix-shaped formats: re then im, row-major.
void write_complex_grid(std::ostream& os, const Mat& M) {
  const int n = static_cast<int>(M.size());
  std::vector<double> re(n), im(n);
  int idx = 0;
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j, ++idx) {
      re[idx] = M(i, j).real();
      im[idx] = M(i, j).imag();
    }
  write_doubles(os, "re", re.data(), n);
  write_doubles(os, "im", im.data(), n);
}

Mat read_complex_grid(std::istream& is, int rows, int cols) {
  std::vector<double> re = parse_doubles(expect_key(is, "re"), rows * cols, "re");
  std::vector<double> im = parse_doubles(expect_key(is, "im"), rows * cols, "im");
  Mat M(rows, cols);
  int idx = 0;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j, ++idx) M(i, j) = cplx(re[idx], im[idx]);
  return M;
}

}  // namespace

void write_matrix(std::ostream& os, const Mat& M) {
  os << "rows: " << M.rows() << '\n';
  os << "cols: " << M.cols() << '\n';
  write_complex_grid(os, M);
}

Mat read_matrix(std::istream& is) {
  int rows = parse_int(expect_key(is, "rows"), "rows");
  int cols = parse_int(expect_key(is, "cols"), "cols");
  if (rows < 1 || cols < 1)
    throw InvalidInput("matrix dimensions must be positive");
  return read_complex_grid(is, rows, cols);
}

void write_bipartite_vector(std::ostream& os, const BipartiteVector& v) {
  os << "dA: " << v.dims.dA << '\n';
  os << "dB: " << v.dims.dB << '\n';
  write_complex_grid(os, v.amplitudes);
}

BipartiteVector read_bipartite_vector(std::istream& is) {
  int dA = parse_int(expect_key(is, "dA"), "dA");
  int dB = parse_int(expect_key(is, "dB"), "dB");
  BipartiteDims dims(dA, dB);
  Mat col = read_complex_grid(is, dims.D(), 1);
  return BipartiteVector{dims, Vec(col.col(0))};
}

void write_spec(std::ostream& os, const SpectralWitnessSpec& spec) {
  os << "dA: " << spec.dims.dA << '\n';
  os << "dB: " << spec.dims.dB << '\n';
  os << "L: " << spec.L << '\n';
  write_doubles(os, "lambdas", spec.lambdas.data(),
                static_cast<int>(spec.lambdas.size()));
  for (int a = 1; a <= spec.dims.D(); ++a) {
    os << "vector:\n";
    write_bipartite_vector(os, spec.psi(a));
  }
}

SpectralWitnessSpec read_spec(std::istream& is) {
  int dA = parse_int(expect_key(is, "dA"), "dA");
  int dB = parse_int(expect_key(is, "dB"), "dB");
  BipartiteDims dims(dA, dB);
  const int D = dims.D();
  int L = parse_int(expect_key(is, "L"), "L");
  std::vector<double> lambdas =
      parse_doubles(expect_key(is, "lambdas"), D, "lambdas");

  SpectralWitnessSpec spec;
  spec.dims = dims;
  spec.L = L;
  spec.lambdas = RealVec(D);
  for (int i = 0; i < D; ++i) spec.lambdas(i) = lambdas[i];
  spec.basis = Mat(D, D);
  for (int a = 0; a < D; ++a) {
    std::string marker = read_line(is, "vector marker");
    if (marker != "vector:")
      throw InvalidInput("expected 'vector:' line, got '" + marker + "'");
    BipartiteVector v = read_bipartite_vector(is);
    if (!(v.dims == dims))
      throw InvalidInput("basis vector " + std::to_string(a + 1) +
                         " has mismatched dimensions");
    spec.basis.col(a) = v.amplitudes;
  }
  return spec;
}

void write_state(std::ostream& os, const DensityMatrix& rho) {
  os << "dA: " << rho.dims.dA << '\n';
  os << "dB: " << rho.dims.dB << '\n';
  write_matrix(os, rho.matrix);
}

DensityMatrix read_state(std::istream& is) {
  int dA = parse_int(expect_key(is, "dA"), "dA");
  int dB = parse_int(expect_key(is, "dB"), "dB");
  BipartiteDims dims(dA, dB);
  Mat M = read_matrix(is);
  if (M.rows() != dims.D() || M.cols() != dims.D())
    throw InvalidInput("state matrix must be D x D");
  return make_density(dims, std::move(M));
}

}  // namespace witkit
