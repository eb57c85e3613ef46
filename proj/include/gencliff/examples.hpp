#pragma once

// Concrete flat structures used by the verification suites.
//
// Quaternion convention on R^4 = (x1, x2, x3, x4):
//   I: (x1,x2,x3,x4) -> (-x2, x1, -x4, x3)
//   J: (x1,x2,x3,x4) -> (-x3, x4, x1, -x2)
//   K = IJ.

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "gencliff/clifford.hpp"

namespace gencliff {

/// I, J, K as 4x4 constant matrices acting on coordinate columns.
std::array<Matrix, 3> quaternion_matrices();

/// [[q, 0], [0, -q^T]], the structure induced by a complex structure q.
Matrix diag_type(const Matrix& q);

/// Block sum of structures on two factors, laid out on the product chart as
/// (vectors of both factors, covectors of both factors). Neither may carry flux.
EndField product_sum(const ChartRef& product_chart, const EndField& a, const EndField& b);

/// [[0, Q_i], [Q_i, 0]] on R^4: the symplectic-type structures of the three
/// Kaehler forms of the flat metric. The induced G is [[0, Id], [Id, 0]].
CliffordTriple hyperkahler_r4();

/// Diag-type triple from anticommuting complex structures on `chart`.
/// Throws PreconditionError unless each squares to -Id and they anticommute.
CliffordTriple clifford_hermitian(const ChartRef& chart, const Matrix& i1, const Matrix& i2, const Matrix& i3);

/// On R^8 = R^4 x R^4: (J_I + J_I, J_J + J_J, J_K + (-J_K)), with J_Q the
/// diag-type structure of Q. Here I3 != I1 I2.
CliffordTriple product_flip();

/// x1 dx3^dx5 + x2 dx4^dx6 on R^8; not closed, and dB has a (3,0) part for I1.
KForm product_flip_bfield(const ChartRef& chart8);

/// product_flip conjugated by e^B, judged by the bracket twisted by dB.
CliffordTriple product_flip_twisted();

struct MetricExamples {
  Matrix g;
  /// Antisymmetric polynomial b used by the variant.
  Matrix b;
  /// g = Id, b = 0.
  EndField flat;
  /// g = Id with b.
  EndField variant;
};

/// For n >= 2 the variant uses b = x1 dx1^dx2; for n = 1 it equals the flat metric.
MetricExamples generalized_metric_example(std::size_t n);

/// Names accepted by builtin().
std::vector<std::string> builtin_names();
/// Throws std::invalid_argument on an unknown name.
CliffordTriple builtin(std::string_view name);

}  // namespace gencliff
