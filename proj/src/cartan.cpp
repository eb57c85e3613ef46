#include "gencliff/cartan.hpp"

#include <algorithm>
#include <stdexcept>

#include "format.hpp"

namespace gencliff {

// ---------------------------------------------------------------------------
// VectorField

VectorField::VectorField(ChartRef chart, std::vector<ScalarField> components)
    : chart_(std::move(chart)), comps_(std::move(components)) {
  if (!chart_) throw std::invalid_argument("vector field needs a chart");
  if (comps_.size() != chart_->dim()) throw std::invalid_argument("vector field length differs from chart dimension");
}

VectorField VectorField::zero(ChartRef chart) {
  std::size_t n = chart->dim();
  return VectorField(std::move(chart), std::vector<ScalarField>(n));
}

VectorField VectorField::coordinate(ChartRef chart, std::size_t k) {
  VectorField x = zero(std::move(chart));
  x.comps_.at(k) = ScalarField(1);
  return x;
}

bool VectorField::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const ScalarField& c) { return c.is_zero(); });
}

ScalarField VectorField::apply(const ScalarField& f) const {
  ScalarField out;
  if (f.is_constant()) return out;
  for (std::size_t j = 0; j < comps_.size(); ++j) {
    if (comps_[j].is_zero() || !f.uses_var(j)) continue;
    out += comps_[j] * f.diff(j);
  }
  return out;
}

VectorField& VectorField::operator+=(const VectorField& o) {
  require_same_chart(chart_, o.chart_, "vector field sum");
  for (std::size_t k = 0; k < comps_.size(); ++k) comps_[k] += o.comps_[k];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
  require_same_chart(chart_, o.chart_, "vector field difference");
  for (std::size_t k = 0; k < comps_.size(); ++k) comps_[k] -= o.comps_[k];
  return *this;
}

VectorField VectorField::operator-() const {
  VectorField r = *this;
  for (auto& c : r.comps_) c = -c;
  return r;
}

VectorField operator*(const ScalarField& f, const VectorField& x) {
  VectorField r = x;
  for (auto& c : r.comps_) c = f * c;
  return r;
}

bool operator==(const VectorField& a, const VectorField& b) {
  return same_chart(a.chart_, b.chart_) && a.comps_ == b.comps_;
}

std::string VectorField::to_string() const {
  std::vector<std::pair<ScalarField, std::string>> terms;
  for (std::size_t k = 0; k < comps_.size(); ++k) terms.emplace_back(comps_[k], "d" + std::to_string(k + 1));
  return detail::format_linear(terms, *chart_);
}

// ---------------------------------------------------------------------------
// KForm

int permutation_sign(FormIndex& idx) {
  int sign = 1;
  // Insertion sort counting transpositions; k is small.
  for (std::size_t a = 1; a < idx.size(); ++a) {
    for (std::size_t b = a; b > 0 && idx[b - 1] >= idx[b]; --b) {
      if (idx[b - 1] == idx[b]) return 0;
      std::swap(idx[b - 1], idx[b]);
      sign = -sign;
    }
  }
  return sign;
}

KForm::KForm(ChartRef chart, unsigned degree) : chart_(std::move(chart)), degree_(degree) {
  if (!chart_) throw std::invalid_argument("form needs a chart");
}

KForm KForm::scalar(ChartRef chart, const ScalarField& f) {
  KForm w(std::move(chart), 0);
  w.add_term({}, f);
  return w;
}

KForm KForm::basis(ChartRef chart, FormIndex idx) {
  KForm w(std::move(chart), static_cast<unsigned>(idx.size()));
  w.add_term(std::move(idx), ScalarField(1));
  return w;
}

KForm KForm::one_form(ChartRef chart, const std::vector<ScalarField>& components) {
  if (components.size() != chart->dim()) throw std::invalid_argument("1-form length differs from chart dimension");
  KForm w(std::move(chart), 1);
  for (std::size_t k = 0; k < components.size(); ++k)
    if (!components[k].is_zero()) w.coeffs_.emplace(FormIndex{static_cast<std::uint8_t>(k)}, components[k]);
  return w;
}

ScalarField KForm::coeff(const FormIndex& idx) const {
  auto it = coeffs_.find(idx);
  return it == coeffs_.end() ? ScalarField() : it->second;
}

void KForm::add_term(FormIndex idx, const ScalarField& c) {
  if (idx.size() != degree_) throw std::invalid_argument("basis index length differs from form degree");
  for (auto i : idx)
    if (i >= chart_->dim()) throw std::out_of_range("form index exceeds chart dimension");
  if (c.is_zero()) return;
  int sign = permutation_sign(idx);
  if (sign == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(std::move(idx));
  if (sign > 0) {
    it->second += c;
  } else {
    it->second -= c;
  }
  if (it->second.is_zero()) coeffs_.erase(it);
}

ScalarField KForm::as_scalar() const {
  if (degree_ != 0) throw std::logic_error("form is not of degree 0");
  return coeff({});
}

std::vector<ScalarField> KForm::as_components() const {
  if (degree_ != 1) throw std::logic_error("form is not of degree 1");
  std::vector<ScalarField> out(chart_->dim());
  for (const auto& [idx, c] : coeffs_) out[idx[0]] = c;
  return out;
}

KForm& KForm::operator+=(const KForm& o) {
  require_same_chart(chart_, o.chart_, "form sum");
  if (degree_ != o.degree_) throw std::invalid_argument("sum of forms of different degree");
  for (const auto& [idx, c] : o.coeffs_) add_term(idx, c);
  return *this;
}

KForm& KForm::operator-=(const KForm& o) { return *this += -o; }

KForm KForm::operator-() const {
  KForm r = *this;
  for (auto& [idx, c] : r.coeffs_) c = -c;
  return r;
}

KForm operator*(const ScalarField& f, const KForm& w) {
  KForm r(w.chart_, w.degree_);
  if (f.is_zero()) return r;
  for (const auto& [idx, c] : w.coeffs_) r.coeffs_.emplace(idx, f * c);
  return r;
}

bool operator==(const KForm& a, const KForm& b) {
  return same_chart(a.chart_, b.chart_) && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
}

std::string KForm::to_string() const {
  std::vector<std::pair<ScalarField, std::string>> terms;
  for (const auto& [idx, c] : coeffs_) {
    std::string sym;
    for (auto i : idx) sym += (sym.empty() ? "e" : "^e") + std::to_string(i + 1);
    terms.emplace_back(c, sym);
  }
  if (degree_ == 0) return coeffs_.empty() ? "0" : coeffs_.begin()->second.to_string(*chart_);
  return detail::format_linear(terms, *chart_);
}

// ---------------------------------------------------------------------------
// Operations

KForm exterior_d(const KForm& w) {
  const std::size_t n = w.chart()->dim();
  KForm out(w.chart(), w.degree() + 1);
  for (const auto& [idx, c] : w.coeffs()) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!c.uses_var(j)) continue;
      FormIndex full{static_cast<std::uint8_t>(j)};
      full.insert(full.end(), idx.begin(), idx.end());
      out.add_term(std::move(full), c.diff(j));
    }
  }
  return out;
}

KForm interior(const VectorField& x, const KForm& w) {
  require_same_chart(x.chart(), w.chart(), "interior product");
  if (w.degree() == 0) throw std::invalid_argument("interior product of a degree-0 form");
  KForm out(w.chart(), w.degree() - 1);
  for (const auto& [idx, c] : w.coeffs()) {
    for (std::size_t r = 0; r < idx.size(); ++r) {
      const ScalarField& xr = x[idx[r]];
      if (xr.is_zero()) continue;
      FormIndex rest = idx;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(r));
      out.add_term(std::move(rest), (r % 2 == 0) ? xr * c : -(xr * c));
    }
  }
  return out;
}

KForm wedge(const KForm& a, const KForm& b) {
  require_same_chart(a.chart(), b.chart(), "wedge product");
  KForm out(a.chart(), a.degree() + b.degree());
  for (const auto& [ia, ca] : a.coeffs()) {
    for (const auto& [ib, cb] : b.coeffs()) {
      FormIndex full = ia;
      full.insert(full.end(), ib.begin(), ib.end());
      out.add_term(std::move(full), ca * cb);
    }
  }
  return out;
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  require_same_chart(x.chart(), y.chart(), "Lie bracket");
  std::vector<ScalarField> comps(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) comps[i] = x.apply(y[i]) - y.apply(x[i]);
  return VectorField(x.chart(), std::move(comps));
}

KForm lie_derivative(const VectorField& x, const KForm& w) {
  require_same_chart(x.chart(), w.chart(), "Lie derivative");
  const std::size_t n = w.chart()->dim();
  KForm out(w.chart(), w.degree());
  for (const auto& [idx, c] : w.coeffs()) {
    out.add_term(idx, x.apply(c));
    // L_X dx^i = d(X^i) = d_j X^i dx^j, substituted at each slot.
    for (std::size_t r = 0; r < idx.size(); ++r) {
      const ScalarField& xi = x[idx[r]];
      if (xi.is_constant()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!xi.uses_var(j)) continue;
        FormIndex swapped = idx;
        swapped[r] = static_cast<std::uint8_t>(j);
        out.add_term(std::move(swapped), c * xi.diff(j));
      }
    }
  }
  return out;
}

KForm lie_derivative_cartan(const VectorField& x, const KForm& w) {
  require_same_chart(x.chart(), w.chart(), "Lie derivative");
  KForm dw = exterior_d(w);
  KForm out = interior(x, dw);
  if (w.degree() > 0) out += exterior_d(interior(x, w));
  return out;
}

bool is_closed(const KForm& w) { return exterior_d(w).is_zero(); }

}  // namespace gencliff
