#include "gencliff/courant.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <stdexcept>

#include "format.hpp"
#include "gencliff/errors.hpp"
#include "gencliff/parse.hpp"

namespace gencliff {

// ---------------------------------------------------------------------------
// Section

Section::Section(ChartRef chart, std::vector<ScalarField> flat) : chart_(std::move(chart)), flat_(std::move(flat)) {
  if (!chart_) throw std::invalid_argument("section needs a chart");
  if (flat_.size() != 2 * chart_->dim()) throw std::invalid_argument("section length differs from 2 * chart dimension");
}

Section Section::zero(ChartRef chart) {
  std::size_t n = chart->dim();
  return Section(std::move(chart), std::vector<ScalarField>(2 * n));
}

Section Section::from_parts(const VectorField& x, const KForm& xi) {
  require_same_chart(x.chart(), xi.chart(), "section");
  std::vector<ScalarField> flat = x.components();
  auto cov = xi.as_components();
  flat.insert(flat.end(), cov.begin(), cov.end());
  return Section(x.chart(), std::move(flat));
}

Section Section::frame(ChartRef chart, std::size_t a) {
  Section s = zero(std::move(chart));
  s.flat_.at(a) = ScalarField(1);
  return s;
}

VectorField Section::vec() const {
  return VectorField(chart_, std::vector<ScalarField>(flat_.begin(), flat_.begin() + static_cast<std::ptrdiff_t>(dim())));
}

KForm Section::cov() const {
  return KForm::one_form(chart_, std::vector<ScalarField>(flat_.begin() + static_cast<std::ptrdiff_t>(dim()), flat_.end()));
}

bool Section::is_zero() const {
  return std::all_of(flat_.begin(), flat_.end(), [](const ScalarField& f) { return f.is_zero(); });
}

Section& Section::operator+=(const Section& o) {
  require_same_chart(chart_, o.chart_, "section sum");
  for (std::size_t k = 0; k < flat_.size(); ++k)
    if (!o.flat_[k].is_zero()) flat_[k] += o.flat_[k];
  return *this;
}

Section& Section::operator-=(const Section& o) {
  require_same_chart(chart_, o.chart_, "section difference");
  for (std::size_t k = 0; k < flat_.size(); ++k)
    if (!o.flat_[k].is_zero()) flat_[k] -= o.flat_[k];
  return *this;
}

Section Section::operator-() const {
  Section r = *this;
  for (auto& c : r.flat_) c = -c;
  return r;
}

Section operator*(const ScalarField& f, const Section& s) {
  Section r = s;
  for (auto& c : r.flat_)
    if (!c.is_zero()) c = f * c;
  return r;
}

bool operator==(const Section& a, const Section& b) { return same_chart(a.chart_, b.chart_) && a.flat_ == b.flat_; }

std::string Section::to_string() const {
  std::vector<std::pair<ScalarField, std::string>> terms;
  const std::size_t n = dim();
  for (std::size_t k = 0; k < n; ++k) terms.emplace_back(flat_[k], "d" + std::to_string(k + 1));
  for (std::size_t k = 0; k < n; ++k) terms.emplace_back(flat_[n + k], "e" + std::to_string(k + 1));
  return detail::format_linear(terms, *chart_);
}

// ---------------------------------------------------------------------------
// FluxForm

FluxForm::FluxForm(KForm h) : h_(std::move(h)), closed_(false) {
  if (h_.degree() != 3) throw std::invalid_argument("flux must be a 3-form");
  closed_ = is_closed(h_);
}

// ---------------------------------------------------------------------------
// Pairing and brackets

ScalarField pairing(const Section& a, const Section& b) {
  require_same_chart(a.chart(), b.chart(), "pairing");
  const std::size_t n = a.dim();
  ScalarField s;
  for (std::size_t k = 0; k < n; ++k) {
    if (!a[n + k].is_zero() && !b[k].is_zero()) s += a[n + k] * b[k];
    if (!b[n + k].is_zero() && !a[k].is_zero()) s += b[n + k] * a[k];
  }
  return GaussianRational(Rational(1, 2)) * s;
}

Matrix pairing_matrix(const Chart& chart) {
  const std::size_t n = chart.dim();
  Matrix p(2 * n, 2 * n);
  ScalarField half(GaussianRational(Rational(1, 2)));
  for (std::size_t k = 0; k < n; ++k) {
    p(k, n + k) = half;
    p(n + k, k) = half;
  }
  return p;
}

Section dorfman(const Section& a, const Section& b) {
  require_same_chart(a.chart(), b.chart(), "Dorfman bracket");
  const std::size_t n = a.dim();
  std::vector<ScalarField> out(2 * n);
  // a = X + xi, b = Y + eta.
  auto X = [&](std::size_t k) -> const ScalarField& { return a[k]; };
  auto xi = [&](std::size_t k) -> const ScalarField& { return a[n + k]; };
  auto Y = [&](std::size_t k) -> const ScalarField& { return b[k]; };
  auto eta = [&](std::size_t k) -> const ScalarField& { return b[n + k]; };

  for (std::size_t j = 0; j < n; ++j) {
    const ScalarField& xj = X(j);
    const ScalarField& yj = Y(j);
    for (std::size_t i = 0; i < n; ++i) {
      // [X,Y]^i
      if (!xj.is_zero() && Y(i).uses_var(j)) out[i] += xj * Y(i).diff(j);
      if (!yj.is_zero() && X(i).uses_var(j)) out[i] -= yj * X(i).diff(j);
      // (L_X eta)_i = X^j d_j eta_i + eta_j d_i X^j
      if (!xj.is_zero() && eta(i).uses_var(j)) out[n + i] += xj * eta(i).diff(j);
      if (!eta(j).is_zero() && xj.uses_var(i)) out[n + i] += eta(j) * xj.diff(i);
      // (i_Y d xi)_i = Y^j (d_j xi_i - d_i xi_j)
      if (!yj.is_zero()) {
        if (xi(i).uses_var(j)) out[n + i] -= yj * xi(i).diff(j);
        if (xi(j).uses_var(i)) out[n + i] += yj * xi(j).diff(i);
      }
    }
  }
  return Section(a.chart(), std::move(out));
}

Section dorfman_via_cartan(const Section& a, const Section& b) {
  require_same_chart(a.chart(), b.chart(), "Dorfman bracket");
  VectorField x = a.vec(), y = b.vec();
  KForm xi = a.cov(), eta = b.cov();
  return Section::from_parts(lie_bracket(x, y), lie_derivative(x, eta) - interior(y, exterior_d(xi)));
}

namespace {

// Adds -i_Y i_X H to the covector part of `out`; H = sum over i<j<k of h dx^i^dx^j^dx^k.
void subtract_flux_term(std::vector<ScalarField>& out, const Section& a, const Section& b, const KForm& h) {
  const std::size_t n = a.dim();
  auto minor = [&](std::size_t p, std::size_t q) {
    ScalarField m;
    if (!a[p].is_zero() && !b[q].is_zero()) m += a[p] * b[q];
    if (!a[q].is_zero() && !b[p].is_zero()) m -= a[q] * b[p];
    return m;
  };
  for (const auto& [idx, c] : h.coeffs()) {
    std::size_t i = idx[0], j = idx[1], k = idx[2];
    // (i_Y i_X H)_l = H(X, Y, e_l)
    ScalarField mij = minor(i, j), mik = minor(i, k), mjk = minor(j, k);
    if (!mij.is_zero()) out[n + k] -= c * mij;
    if (!mik.is_zero()) out[n + j] += c * mik;
    if (!mjk.is_zero()) out[n + i] -= c * mjk;
  }
}

}  // namespace

Section dorfman_twisted(const Section& a, const Section& b, const FluxForm& h, FluxPolicy policy) {
  require_same_chart(a.chart(), h.h().chart(), "twisted Dorfman bracket");
  if (!h.closed()) {
    if (policy == FluxPolicy::reject) throw NonClosedFlux("twisted Dorfman bracket needs a closed 3-form");
    if (policy == FluxPolicy::warn)
      std::cerr << "warning: twisted Dorfman bracket with a non-closed 3-form; the Jacobi identity fails\n";
  }
  Section d = dorfman(a, b);
  std::vector<ScalarField> out = d.flat();
  subtract_flux_term(out, a, b, h.h());
  return Section(a.chart(), std::move(out));
}

Section bracket(const Section& a, const Section& b, const FluxForm* h) {
  if (h == nullptr || h->is_zero()) return dorfman(a, b);
  return dorfman_twisted(a, b, *h);
}

VectorField anchor(const Section& a) { return a.vec(); }

namespace {

void monomials_of_degree(const std::vector<std::size_t>& vars, unsigned degree, std::size_t start, Monomial current,
                         std::vector<Monomial>& out) {
  if (degree == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t k = start; k < vars.size(); ++k)
    monomials_of_degree(vars, degree - 1, k, current * Monomial::var(vars[k]), out);
}

}  // namespace

std::vector<Section> probe_sections(const ChartRef& chart, unsigned degree_bound, const std::vector<std::size_t>& vars) {
  std::vector<std::size_t> use = vars;
  if (use.empty())
    for (std::size_t k = 0; k < chart->dim(); ++k) use.push_back(k);
  std::vector<Monomial> monos;
  for (unsigned d = 0; d <= degree_bound; ++d) {
    std::vector<Monomial> level;
    monomials_of_degree(use, d, 0, Monomial{}, level);
    std::sort(level.begin(), level.end(), std::greater<>());
    monos.insert(monos.end(), level.begin(), level.end());
  }
  std::vector<Section> out;
  for (const Monomial& m : monos) {
    ScalarField f(Poly::term(m, 1));
    for (std::size_t a = 0; a < 2 * chart->dim(); ++a) out.push_back(f * Section::frame(chart, a));
  }
  return out;
}

Section algebroid_differential(const ScalarField& f, const ChartRef& chart) {
  return Section::from_parts(VectorField::zero(chart), exterior_d(KForm::scalar(chart, f)));
}

AxiomReport check_courant_axioms(const std::vector<Section>& probes, const FluxForm* h, std::size_t max_failures,
                                 FluxPolicy policy) {
  AxiomReport rep;
  if (h && h->is_zero()) h = nullptr;
  auto bracket = [&](const Section& a, const Section& b) {
    return h ? dorfman_twisted(a, b, *h, policy) : dorfman(a, b);
  };
  const std::size_t n = probes.size();
  auto full = [&] { return rep.failures.size() >= max_failures; };
  for (const Section& a : probes) {
    ++rep.symmetric_checked;
    if (!(bracket(a, a) == algebroid_differential(pairing(a, a), a.chart()))) {
      rep.failures.push_back({"[a,a] = D<a,a>", {a}});
      if (full()) return rep;
    }
  }
  // Inner brackets are shared across triples.
  std::vector<Section> inner;
  inner.reserve(n * n);
  for (const Section& a : probes)
    for (const Section& b : probes) inner.push_back(bracket(a, b));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        ++rep.jacobi_checked;
        Section lhs = bracket(probes[i], inner[j * n + k]);
        Section rhs = bracket(inner[i * n + j], probes[k]) + bracket(probes[j], inner[i * n + k]);
        if (!(lhs == rhs)) {
          rep.failures.push_back({"[a,[b,c]] = [[a,b],c] + [b,[a,c]]", {probes[i], probes[j], probes[k]}});
          if (full()) return rep;
        }
      }
  return rep;
}

Section parse_section(std::string_view text, const ChartRef& chart) {
  std::vector<std::string> names;
  for (std::size_t k = 1; k <= chart->dim(); ++k) names.push_back("d" + std::to_string(k));
  for (std::size_t k = 1; k <= chart->dim(); ++k) names.push_back("e" + std::to_string(k));
  return Section(chart, parse_linear(text, *chart, names));
}

}  // namespace gencliff
