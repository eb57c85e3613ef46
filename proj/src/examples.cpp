#include "gencliff/examples.hpp"

#include <stdexcept>

#include "gencliff/errors.hpp"

namespace gencliff {

namespace {

Matrix int_matrix(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<ScalarField>> out;
  for (const auto& r : rows) {
    std::vector<ScalarField> row;
    for (long v : r) row.emplace_back(v);
    out.push_back(std::move(row));
  }
  return Matrix::from_rows(out);
}

/// Built examples must satisfy the relations; anything else is a bug here.
CliffordTriple verified(CliffordTriple t, const char* name) {
  if (!check_relations(t).ok()) throw std::logic_error(std::string(name) + " fails the Clifford relations");
  return t;
}

}  // namespace

std::array<Matrix, 3> quaternion_matrices() {
  Matrix i = int_matrix({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}});
  Matrix j = int_matrix({{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}});
  return {i, j, i * j};
}

Matrix diag_type(const Matrix& q) {
  return Matrix::from_blocks(q, Matrix(q.rows(), q.rows()), Matrix(q.rows(), q.rows()), -q.transpose());
}

EndField product_sum(const ChartRef& product_chart, const EndField& a, const EndField& b) {
  if (a.flux_ptr() || b.flux_ptr()) throw PreconditionError("product_sum takes untwisted factors");
  const std::size_t m = a.chart()->dim(), k = b.chart()->dim();
  if (product_chart->dim() != m + k) throw std::invalid_argument("product chart dimension mismatch");
  return EndField(product_chart, product_block_sum(a.matrix(), m, b.matrix(), k));
}

CliffordTriple hyperkahler_r4() {
  auto c = standard_chart(4);
  auto q = quaternion_matrices();
  Matrix z(4, 4);
  auto gen = [&](const Matrix& qi) { return EndField(c, Matrix::from_blocks(z, qi, qi, z)); };
  return verified(CliffordTriple(gen(q[0]), gen(q[1]), gen(q[2])), "hyperkahler_r4");
}

CliffordTriple clifford_hermitian(const ChartRef& chart, const Matrix& i1, const Matrix& i2, const Matrix& i3) {
  const std::array<const Matrix*, 3> qs{&i1, &i2, &i3};
  const std::size_t n = chart->dim();
  for (std::size_t a = 0; a < 3; ++a) {
    if (qs[a]->rows() != n || qs[a]->cols() != n) throw std::invalid_argument("complex structure has the wrong size");
    if (!(-(*qs[a] * *qs[a])).is_identity()) throw PreconditionError("complex structure does not square to -Id");
    for (std::size_t b = a + 1; b < 3; ++b)
      if (!(*qs[a] * *qs[b] + *qs[b] * *qs[a]).is_zero())
        throw PreconditionError("complex structures do not anticommute");
  }
  return verified(CliffordTriple(EndField(chart, diag_type(i1)), EndField(chart, diag_type(i2)),
                                 EndField(chart, diag_type(i3))),
                  "clifford_hermitian");
}

CliffordTriple product_flip() {
  auto c4 = standard_chart(4);
  auto c8 = standard_chart(8);
  auto q = quaternion_matrices();
  EndField ji(c4, diag_type(q[0])), jj(c4, diag_type(q[1])), jk(c4, diag_type(q[2]));
  return verified(CliffordTriple(product_sum(c8, ji, ji), product_sum(c8, jj, jj), product_sum(c8, jk, -jk)),
                  "product_flip");
}

KForm product_flip_bfield(const ChartRef& chart8) {
  if (chart8->dim() != 8) throw std::invalid_argument("product_flip_bfield needs an 8-dimensional chart");
  KForm b = ScalarField(Poly::variable(0)) * KForm::basis(chart8, {2, 4});
  b = b + ScalarField(Poly::variable(1)) * KForm::basis(chart8, {3, 5});
  return b;
}

CliffordTriple product_flip_twisted() {
  CliffordTriple base = product_flip();
  KForm b = product_flip_bfield(base.chart());
  return verified(CliffordTriple(bfield_transform(base[0], b), bfield_transform(base[1], b),
                                 bfield_transform(base[2], b)),
                  "product_flip_twisted");
}

MetricExamples generalized_metric_example(std::size_t n) {
  auto c = standard_chart(n);
  Matrix g = Matrix::identity(n);
  Matrix b(n, n);
  if (n >= 2) {
    b(0, 1) = ScalarField(Poly::variable(0));
    b(1, 0) = -b(0, 1);
  }
  return {g, b, generalized_metric(c, g, Matrix(n, n)), generalized_metric(c, g, b)};
}

std::vector<std::string> builtin_names() {
  return {"hyperkahler_r4", "clifford_hermitian_r4", "product_flip", "product_flip_twisted"};
}

CliffordTriple builtin(std::string_view name) {
  if (name == "hyperkahler_r4") return hyperkahler_r4();
  if (name == "clifford_hermitian_r4") {
    auto q = quaternion_matrices();
    return clifford_hermitian(standard_chart(4), q[0], q[1], q[2]);
  }
  if (name == "product_flip") return product_flip();
  if (name == "product_flip_twisted") return product_flip_twisted();
  throw std::invalid_argument("unknown builtin structure '" + std::string(name) + "'");
}

}  // namespace gencliff
