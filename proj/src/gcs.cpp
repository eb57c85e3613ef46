#include "gencliff/gcs.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "gencliff/errors.hpp"

namespace gencliff {

// ---------------------------------------------------------------------------
// EndField

EndField::EndField(ChartRef chart, Matrix m, std::optional<FluxForm> flux)
    : chart_(std::move(chart)), m_(std::move(m)), flux_(std::move(flux)) {
  if (!chart_) throw std::invalid_argument("endomorphism needs a chart");
  if (m_.rows() != 2 * chart_->dim() || m_.cols() != m_.rows())
    throw std::invalid_argument("endomorphism must be a 2n x 2n matrix");
  if (flux_) require_same_chart(chart_, flux_->h().chart(), "endomorphism flux");
}

EndField EndField::identity(ChartRef chart, std::optional<FluxForm> flux) {
  std::size_t n = chart->dim();
  return EndField(std::move(chart), Matrix::identity(2 * n), std::move(flux));
}

Section EndField::operator()(const Section& s) const {
  require_same_chart(chart_, s.chart(), "endomorphism application");
  return Section(chart_, m_.apply(s.flat()));
}

bool same_flux(const std::optional<FluxForm>& a, const std::optional<FluxForm>& b) {
  bool za = !a || a->is_zero();
  bool zb = !b || b->is_zero();
  if (za || zb) return za && zb;
  return *a == *b;
}

Matrix product_block_sum(const Matrix& a, std::size_t m, const Matrix& b, std::size_t k) {
  if (a.rows() != 2 * m || a.cols() != 2 * m || b.rows() != 2 * k || b.cols() != 2 * k)
    throw std::invalid_argument("block sum factor has the wrong size");
  auto blk = [](const Matrix& e, std::size_t n, std::size_t r, std::size_t c) { return e.block(r * n, c * n, n, n); };
  return Matrix::from_blocks(Matrix::direct_sum(blk(a, m, 0, 0), blk(b, k, 0, 0)),
                             Matrix::direct_sum(blk(a, m, 0, 1), blk(b, k, 0, 1)),
                             Matrix::direct_sum(blk(a, m, 1, 0), blk(b, k, 1, 0)),
                             Matrix::direct_sum(blk(a, m, 1, 1), blk(b, k, 1, 1)));
}

void require_same_flux(const EndField& a, const EndField& b, std::string_view where) {
  require_same_chart(a.chart(), b.chart(), where);
  if (!same_flux(a.flux(), b.flux()))
    throw FluxMismatch(std::string(where) + ": structures are judged by different brackets");
}

namespace {

std::optional<FluxForm> common_flux(const EndField& a, const EndField& b) {
  return a.flux_ptr() ? a.flux() : b.flux();
}

}  // namespace

EndField operator*(const EndField& a, const EndField& b) {
  require_same_flux(a, b, "endomorphism product");
  return EndField(a.chart_, a.m_ * b.m_, common_flux(a, b));
}

EndField operator+(const EndField& a, const EndField& b) {
  require_same_flux(a, b, "endomorphism sum");
  return EndField(a.chart_, a.m_ + b.m_, common_flux(a, b));
}

EndField operator-(const EndField& a, const EndField& b) {
  require_same_flux(a, b, "endomorphism difference");
  return EndField(a.chart_, a.m_ - b.m_, common_flux(a, b));
}

EndField operator*(const ScalarField& f, const EndField& e) { return e.with_matrix(f * e.m_); }

bool operator==(const EndField& a, const EndField& b) {
  return same_chart(a.chart_, b.chart_) && a.m_ == b.m_ && same_flux(a.flux_, b.flux_);
}

// ---------------------------------------------------------------------------
// Structure checks

bool is_orthogonal(const EndField& e) {
  Matrix p = pairing_matrix(*e.chart());
  return e.matrix().transpose() * p * e.matrix() == p;
}

bool is_almost_gcs(const EndField& e) {
  const Matrix& m = e.matrix();
  return (-(m * m)).is_identity() && is_orthogonal(e);
}

bool is_almost_real(const EndField& g) {
  const Matrix& m = g.matrix();
  return (m * m).is_identity() && is_orthogonal(g);
}

// ---------------------------------------------------------------------------
// Tensors

Section concomitant(const EndField& i, const EndField& j, const Section& a, const Section& b) {
  require_same_flux(i, j, "concomitant");
  const FluxForm* h = i.flux_ptr() ? i.flux_ptr() : j.flux_ptr();
  Section ia = i(a), ja = j(a), ib = i(b), jb = j(b);
  Section ab = bracket(a, b, h);
  Section sum = bracket(ia, jb, h) + bracket(ja, ib, h);
  sum -= i(bracket(a, jb, h) + bracket(ja, b, h));
  sum -= j(bracket(a, ib, h) + bracket(ia, b, h));
  sum += i(j(ab)) + j(i(ab));
  return ScalarField(GaussianRational(Rational(1, 2))) * sum;
}

Section nijenhuis(const EndField& j, const Section& a, const Section& b) {
  const FluxForm* h = j.flux_ptr();
  Section ja = j(a), jb = j(b);
  return bracket(ja, jb, h) - j(bracket(ja, b, h) + bracket(a, jb, h)) - bracket(a, b, h);
}

namespace {

Section real_nijenhuis_unchecked(const EndField& g, const Section& a, const Section& b) {
  const FluxForm* h = g.flux_ptr();
  Section ga = g(a), gb = g(b);
  return bracket(ga, gb, h) - g(bracket(ga, b, h) + bracket(a, gb, h)) + bracket(a, b, h);
}

}  // namespace

Section real_nijenhuis(const EndField& g, const Section& a, const Section& b) {
  if (!is_almost_real(g)) throw PreconditionError("real Nijenhuis tensor needs an almost real structure");
  return real_nijenhuis_unchecked(g, a, b);
}

BoundTensor bind_nijenhuis(const EndField& j, std::string name) {
  return {std::move(name), j.chart(), [j](const Section& a, const Section& b) { return nijenhuis(j, a, b); }};
}

BoundTensor bind_concomitant(const EndField& i, const EndField& j, std::string name) {
  require_same_flux(i, j, "concomitant");
  return {std::move(name), i.chart(),
          [i, j](const Section& a, const Section& b) { return concomitant(i, j, a, b); }};
}

BoundTensor bind_real_nijenhuis(const EndField& g, std::string name) {
  if (!is_almost_real(g)) throw PreconditionError("real Nijenhuis tensor needs an almost real structure");
  return {std::move(name), g.chart(),
          [g](const Section& a, const Section& b) { return real_nijenhuis_unchecked(g, a, b); }};
}

TensorReport vanishes(const BoundTensor& t, const VanishOptions& opts) {
  TensorReport report;
  report.name = t.name;
  report.degree_bound = opts.degree_bound;
  std::vector<Section> probes = probe_sections(t.chart, opts.degree_bound, opts.vars);
  for (const Section& a : probes) {
    for (const Section& b : probes) {
      Section v = t.eval(a, b);
      ++report.sample_count;
      if (!v.is_zero()) {
        report.witnesses.push_back({a, b, std::move(v)});
        if (report.witnesses.size() >= opts.max_witnesses) {
          report.vanished = false;
          return report;
        }
      }
    }
  }
  report.vanished = report.witnesses.empty();
  return report;
}

TensorReport vanishes(const BoundTensor& t, unsigned degree_bound) {
  VanishOptions opts;
  opts.degree_bound = degree_bound;
  return vanishes(t, opts);
}

// ---------------------------------------------------------------------------
// Constructions

EndField generalized_metric(const ChartRef& chart, const Matrix& g, const Matrix& b) {
  const std::size_t n = chart->dim();
  if (g.rows() != n || g.cols() != n || b.rows() != n || b.cols() != n)
    throw std::invalid_argument("metric and 2-form must be n x n");
  if (g.transpose() != g) throw PreconditionError("metric is not symmetric");
  if (b.transpose() != -b) throw PreconditionError("b is not antisymmetric");
  auto ginv = g.inverse();
  if (!ginv) throw PreconditionError("metric is singular");
  Matrix m = Matrix::from_blocks(-(*ginv * b), *ginv, g - b * *ginv * b, b * *ginv);
  return EndField(chart, std::move(m));
}

Matrix bfield_matrix(const KForm& b) {
  if (b.degree() != 2) throw std::invalid_argument("B-field must be a 2-form");
  const std::size_t n = b.chart()->dim();
  Matrix m = Matrix::identity(2 * n);
  // (i_X B)_j = X^i B_ij
  for (const auto& [idx, c] : b.coeffs()) {
    std::size_t i = idx[0], j = idx[1];
    m(n + j, i) += c;
    m(n + i, j) -= c;
  }
  return m;
}

EndField bfield_transform(const EndField& e, const KForm& b) {
  require_same_chart(e.chart(), b.chart(), "B-field transform");
  Matrix eb = bfield_matrix(b);
  Matrix eb_inv = bfield_matrix(-b);
  KForm h = exterior_d(b);
  if (e.flux()) h += e.flux()->h();
  std::optional<FluxForm> flux;
  if (!h.is_zero()) flux = FluxForm(std::move(h));
  return EndField(e.chart(), eb * e.matrix() * eb_inv, std::move(flux));
}

std::vector<Section> eigen_sections(const EndField& g, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("eigen sign must be +1 or -1");
  if (!is_almost_real(g)) throw PreconditionError("eigen sections need an almost real structure");
  std::vector<Section> out;
  ScalarField s(sign);
  for (std::size_t a = 0; a < g.size(); ++a) {
    Section e = Section::frame(g.chart(), a);
    Section v = e + s * g(e);
    if (g(v) != s * v) throw std::logic_error("internal: eigen section check failed");
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<IdentityCheck> anticommuting_identities(const EndField& i, const EndField& j, const Section& a, const Section& b) {
  require_same_flux(i, j, "anticommuting identities");
  const Matrix& mi = i.matrix();
  const Matrix& mj = j.matrix();
  if (!(-(mi * mi)).is_identity()) throw PreconditionError("anticommuting identities need I^2 = -Id");
  if (!(-(mj * mj)).is_identity()) throw PreconditionError("anticommuting identities need J^2 = -Id");
  if (!(mi * mj + mj * mi).is_zero()) throw PreconditionError("anticommuting identities need IJ + JI = 0");

  EndField ij = i * j;
  ScalarField two(2);
  auto NI = [&](const Section& x, const Section& y) { return nijenhuis(i, x, y); };
  auto NJ = [&](const Section& x, const Section& y) { return nijenhuis(j, x, y); };
  Section ia = i(a), ib = i(b), ja = j(a), jb = j(b);

  std::vector<IdentityCheck> out;
  {
    Section lhs = two * nijenhuis(ij, a, b);
    Section rhs = NI(ja, jb) + NJ(ia, ib) + NI(a, b) + NJ(a, b) - i(NJ(ia, b)) - i(NJ(a, ib)) - j(NI(ja, b)) -
                  j(NI(a, jb));
    bool eq = lhs == rhs;
    out.push_back({"product Nijenhuis expansion", std::move(lhs), std::move(rhs), eq});
  }
  {
    Section lhs = two * concomitant(i, j, a, b);
    Section rhs = -nijenhuis(ij, ja, ib) + ij(NI(a, b) - NJ(a, b));
    bool eq = lhs == rhs;
    out.push_back({"mixed Nijenhuis expansion", std::move(lhs), std::move(rhs), eq});
  }
  {
    Section lhs = two * concomitant(i, ij, a, b);
    Section rhs = NI(ja, b) + NI(a, jb) + two * i(concomitant(i, j, a, b));
    bool eq = lhs == rhs;
    out.push_back({"N(I, IJ) expansion", std::move(lhs), std::move(rhs), eq});
  }
  return out;
}

}  // namespace gencliff
