#pragma once

// Exterior calculus on a coordinate chart.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gencliff/scalar.hpp"

namespace gencliff {

class VectorField {
 public:
  VectorField(ChartRef chart, std::vector<ScalarField> components);
  static VectorField zero(ChartRef chart);
  /// The coordinate field d/dx_k.
  static VectorField coordinate(ChartRef chart, std::size_t k);

  const ChartRef& chart() const { return chart_; }
  std::size_t dim() const { return comps_.size(); }
  const ScalarField& operator[](std::size_t k) const { return comps_[k]; }
  const std::vector<ScalarField>& components() const { return comps_; }
  bool is_zero() const;

  /// X(f) = X^j d_j f.
  ScalarField apply(const ScalarField& f) const;

  VectorField& operator+=(const VectorField& o);
  VectorField& operator-=(const VectorField& o);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  VectorField operator-() const;
  friend VectorField operator*(const ScalarField& f, const VectorField& x);

  friend bool operator==(const VectorField& a, const VectorField& b);

  std::string to_string() const;

 private:
  ChartRef chart_;
  std::vector<ScalarField> comps_;
};

/// Strictly increasing coordinate indices of a basis form dx^{i1}^...^dx^{ik}.
using FormIndex = std::vector<std::uint8_t>;

/// Sorts `idx` in place and returns the sign of the sorting permutation, or 0
/// when an index repeats (the wedge vanishes).
int permutation_sign(FormIndex& idx);

/// Forms of degree above the chart dimension exist only as zero.
class KForm {
 public:
  KForm(ChartRef chart, unsigned degree);
  /// Degree-0 embedding of a scalar field.
  static KForm scalar(ChartRef chart, const ScalarField& f);
  /// dx^{i1} ^ ... ^ dx^{ik}; indices in any order (sign applied).
  static KForm basis(ChartRef chart, FormIndex idx);
  static KForm one_form(ChartRef chart, const std::vector<ScalarField>& components);

  const ChartRef& chart() const { return chart_; }
  unsigned degree() const { return degree_; }
  const std::map<FormIndex, ScalarField>& coeffs() const { return coeffs_; }
  /// Coefficient of the basis form with the given increasing index.
  ScalarField coeff(const FormIndex& idx) const;
  bool is_zero() const { return coeffs_.empty(); }

  /// Adds c * dx^{idx}, idx in any order.
  void add_term(FormIndex idx, const ScalarField& c);

  /// Inverse of scalar(); requires degree 0.
  ScalarField as_scalar() const;
  /// Components (xi_1, ..., xi_n); requires degree 1.
  std::vector<ScalarField> as_components() const;

  KForm& operator+=(const KForm& o);
  KForm& operator-=(const KForm& o);
  friend KForm operator+(KForm a, const KForm& b) { return a += b; }
  friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
  KForm operator-() const;
  friend KForm operator*(const ScalarField& f, const KForm& w);

  friend bool operator==(const KForm& a, const KForm& b);

  /// Basis forms print as e<i>, wedges joined with "^".
  std::string to_string() const;

 private:
  ChartRef chart_;
  unsigned degree_;
  std::map<FormIndex, ScalarField> coeffs_;
};

KForm exterior_d(const KForm& w);
/// Throws std::invalid_argument for a degree-0 form.
KForm interior(const VectorField& x, const KForm& w);
KForm wedge(const KForm& a, const KForm& b);
VectorField lie_bracket(const VectorField& x, const VectorField& y);
/// Coordinate formula: X(w_I) dx^I + sum_r w_I dx^{i1}^..^d(X^{i_r})^..
KForm lie_derivative(const VectorField& x, const KForm& w);
/// Cartan formula i_X d w + d i_X w, computed independently of lie_derivative.
KForm lie_derivative_cartan(const VectorField& x, const KForm& w);
bool is_closed(const KForm& w);

}  // namespace gencliff
