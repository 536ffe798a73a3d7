#pragma once

#include <iosfwd>
#include <string>

#include "witkit/criteria.hpp"
#include "witkit/witness.hpp"

namespace witkit {

/// One double with 17 significant digits (%.17g): enough to round-trip the
/// value exactly through strtod.
std::string format_double(double x);

/// Line-oriented text formats, strict field order, one "key: values" line
/// per field. All numbers are printed via format_double.
///
///   matrix:  rows, cols, re (row-major), im (row-major)
///   vector:  dA, dB, re, im (length D each)
///   spec:    dA, dB, L, lambdas (length D), then D blocks, each a literal
///            "vector:" line followed by a vector body
///   state:   dA, dB, rows, cols, re, im
void write_matrix(std::ostream& os, const Mat& M);
Mat read_matrix(std::istream& is);

void write_bipartite_vector(std::ostream& os, const BipartiteVector& v);
BipartiteVector read_bipartite_vector(std::istream& is);

void write_spec(std::ostream& os, const SpectralWitnessSpec& spec);
SpectralWitnessSpec read_spec(std::istream& is);

void write_state(std::ostream& os, const DensityMatrix& rho);
DensityMatrix read_state(std::istream& is);

}  // namespace witkit
